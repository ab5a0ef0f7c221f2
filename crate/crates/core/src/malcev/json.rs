//! Structure-constant JSON: `{"dim", "labels", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}`.
//! Omitted pairs are zero; `(j, i)` is filled by antisymmetry.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{fmt_q, is_zero_vec, parse_q, qzero_vec, Q};

use super::{MalcevAlgebra, MalcevError, Structure};

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum IndexRef {
    Index(usize),
    Label(String),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BracketEntry {
    pub i: IndexRef,
    pub j: IndexRef,
    pub coeffs: BTreeMap<String, Coeff>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

fn resolve(labels: &[String], r: &IndexRef) -> Result<usize, MalcevError> {
    let n = labels.len();
    let idx = match r {
        IndexRef::Index(i) => Some(*i),
        IndexRef::Label(s) => labels.iter().position(|l| l == s).or_else(|| s.parse().ok()),
    };
    idx.filter(|&i| i < n).ok_or_else(|| MalcevError::Json(format!("unknown basis reference {r:?}")))
}

impl AlgebraJson {
    pub fn to_algebra(&self, check_malcev: bool) -> Result<MalcevAlgebra, MalcevError> {
        let n = self.dim;
        if self.labels.len() != n {
            return Err(MalcevError::Json(format!("{} labels for dim {n}", self.labels.len())));
        }
        let mut s = Structure::zero(n);
        let mut seen: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        for b in &self.brackets {
            let (i, j) = (resolve(&self.labels, &b.i)?, resolve(&self.labels, &b.j)?);
            let mut v = qzero_vec(n);
            for (k, c) in &b.coeffs {
                let k = resolve(&self.labels, &IndexRef::Label(k.clone()))?;
                v[k] = match c {
                    Coeff::Int(x) => crate::exact::qi(*x),
                    Coeff::Text(t) => parse_q(t).map_err(|e| MalcevError::Json(e.to_string()))?,
                };
            }
            if i == j && !is_zero_vec(&v) {
                return Err(MalcevError::NotAntisymmetric);
            }
            if let Some(prev) = seen.get(&(j, i)) {
                if prev.iter().zip(&v).any(|(a, b)| a != &-b) {
                    return Err(MalcevError::NotAntisymmetric);
                }
            }
            if seen.insert((i, j), v.clone()).is_some() {
                return Err(MalcevError::Json(format!("bracket ({i},{j}) given twice")));
            }
            s.set_raw(i, j, v.clone());
            if !seen.contains_key(&(j, i)) {
                s.set_raw(j, i, v.iter().map(|x| -x).collect());
            }
        }
        if check_malcev {
            MalcevAlgebra::new(self.labels.clone(), s)
        } else {
            MalcevAlgebra::unchecked(self.labels.clone(), s)
        }
    }

    pub fn from_algebra(alg: &MalcevAlgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let v = alg.structure().basis_bracket(i, j);
                if is_zero_vec(v) {
                    continue;
                }
                let coeffs = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k.to_string(), Coeff::Text(fmt_q(c))))
                    .collect();
                brackets.push(BracketEntry { i: IndexRef::Index(i), j: IndexRef::Index(j), coeffs });
            }
        }
        AlgebraJson { dim: n, labels: alg.labels().to_vec(), brackets }
    }
}

pub fn algebra_from_json(text: &str) -> Result<MalcevAlgebra, MalcevError> {
    let j: AlgebraJson = serde_json::from_str(text).map_err(|e| MalcevError::Json(e.to_string()))?;
    j.to_algebra(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{o0, sl2};

    #[test]
    fn round_trip() {
        for alg in [sl2(), o0()] {
            let text = serde_json::to_string(&AlgebraJson::from_algebra(&alg)).unwrap();
            assert_eq!(algebra_from_json(&text).unwrap(), alg);
        }
    }

    #[test]
    fn labels_and_antisymmetric_completion() {
        let text = r#"{"dim":3,"labels":["e","f","h"],"brackets":[
            {"i":"e","j":"h","coeffs":{"e":"1"}},
            {"i":"h","j":"f","coeffs":{"f":1}},
            {"i":0,"j":1,"coeffs":{"2":"1/2"}}]}"#;
        assert_eq!(algebra_from_json(text).unwrap(), sl2());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(algebra_from_json("{"), Err(MalcevError::Json(_))));
        let bad = r#"{"dim":2,"labels":["a","b"],"brackets":[
            {"i":0,"j":1,"coeffs":{"0":"1"}},{"i":1,"j":0,"coeffs":{"0":"1"}}]}"#;
        assert!(matches!(algebra_from_json(bad), Err(MalcevError::NotAntisymmetric)));
        let oob = r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":0,"j":5,"coeffs":{}}]}"#;
        assert!(algebra_from_json(oob).is_err());
    }
}
