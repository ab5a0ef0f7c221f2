//! Permutation groups and their representations over F_p.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exact::{check_prime, Field, Fp, Matrix};

use super::finite::FiniteLoop;
use super::LoopError;

pub type FpMatrix = Matrix<Fp>;

/// A finite group realized by permutations of `0..degree`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub name: String,
    pub degree: usize,
    /// `perms[g]` is the permutation of group element `g`.
    pub perms: Vec<Vec<u8>>,
    pub table: Arc<FiniteLoop>,
}

fn cycle_label(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] as usize == s {
            continue;
        }
        let mut c = vec![s + 1];
        seen[s] = true;
        let mut x = p[s] as usize;
        while x != s {
            seen[x] = true;
            c.push(x + 1);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// `(pq)(i) = p(q(i))`.
fn perm_mul(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&i| p[i as usize]).collect()
}

/// Closure of `gens`, elements sorted with the identity first.
pub fn perm_group(name: &str, degree: usize, gens: &[Vec<u8>]) -> PermGroup {
    let id: Vec<u8> = (0..degree as u8).collect();
    let mut seen: BTreeMap<Vec<u8>, ()> = BTreeMap::new();
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = perm_mul(g, &p);
            if seen.insert(q.clone(), ()).is_none() {
                queue.push_back(q);
            }
        }
    }
    let perms: Vec<Vec<u8>> = seen.into_keys().collect();
    let index: HashMap<&Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms.iter().map(|p| perms.iter().map(|q| index[&perm_mul(p, q)]).collect()).collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let table = Arc::new(FiniteLoop::new(labels, table).expect("permutation groups are loops"));
    PermGroup { name: name.into(), degree, perms, table }
}

pub fn cyclic(n: usize) -> PermGroup {
    let gen: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
    perm_group(&format!("c{n}"), n, &[gen])
}

pub fn symmetric3() -> PermGroup {
    perm_group("s3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

pub fn alternating5() -> PermGroup {
    perm_group("a5", 5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]])
}

fn sign(p: &[u8]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut s = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut x = i;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Group homomorphism `G -> GL_d(F_p)`, one matrix per element.
#[derive(Clone, Debug)]
pub struct GroupRep {
    group: Arc<FiniteLoop>,
    p: u64,
    dim: usize,
    mats: Vec<FpMatrix>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub group: String,
    pub p: u64,
    pub dim: usize,
    /// Images of some elements, by label; they must generate the group.
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

impl GroupRep {
    /// Checked: `ρ(e) = 1` and `ρ(ab) = ρ(a)ρ(b)` on all pairs.
    pub fn new(group: Arc<FiniteLoop>, p: u64, dim: usize, mats: Vec<FpMatrix>) -> Result<Self, LoopError> {
        check_prime(p).map_err(LoopError::Exact)?;
        if mats.len() != group.order() || mats.iter().any(|m| m.rows() != dim || m.cols() != dim || m.ctx() != p) {
            return Err(LoopError::Shape("one d×d matrix over F_p per group element expected".into()));
        }
        let rep = GroupRep { group, p, dim, mats };
        if let Some(w) = rep.homomorphism_witness() {
            return Err(LoopError::NotRepresentation(w));
        }
        Ok(rep)
    }

    fn homomorphism_witness(&self) -> Option<String> {
        let g = &self.group;
        if !self.mats[g.identity()].is_identity() {
            return Some("identity not sent to 1".into());
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if self.mats[g.mul(a, b)] != &self.mats[a] * &self.mats[b] {
                    return Some(format!("ρ({}{}) ≠ ρ({})ρ({})", g.label(a), g.label(b), g.label(a), g.label(b)));
                }
            }
        }
        None
    }

    /// Extend images of generators to the whole group, then check.
    pub fn from_generators(group: Arc<FiniteLoop>, p: u64, dim: usize, gens: &[(usize, FpMatrix)]) -> Result<Self, LoopError> {
        check_prime(p).map_err(LoopError::Exact)?;
        let n = group.order();
        let mut mats: Vec<Option<FpMatrix>> = vec![None; n];
        mats[group.identity()] = Some(Matrix::identity(dim, p));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in gens {
                if m.rows() != dim || m.cols() != dim {
                    return Err(LoopError::Shape(format!("matrix for {} is not {dim}×{dim}", group.label(*g))));
                }
                let y = group.mul(*g, x);
                let img = m * mats[x].as_ref().expect("visited");
                match &mats[y] {
                    None => {
                        mats[y] = Some(img);
                        queue.push_back(y);
                    }
                    Some(old) if *old != img => {
                        return Err(LoopError::NotRepresentation(format!("inconsistent image for {}", group.label(y))))
                    }
                    _ => {}
                }
            }
        }
        if let Some(i) = mats.iter().position(Option::is_none) {
            return Err(LoopError::NotRepresentation(format!("generators miss {}", group.label(i))));
        }
        Self::new(group, p, dim, mats.into_iter().map(Option::unwrap).collect())
    }

    pub fn from_json(group: Arc<FiniteLoop>, j: &RepJson) -> Result<Self, LoopError> {
        let p = check_prime(j.p).map_err(LoopError::Exact)?;
        let mut gens = Vec::new();
        for (label, rows) in &j.matrices {
            let g = group.index_of(label).ok_or_else(|| LoopError::UnknownLabel(label.clone()))?;
            let rows = rows.iter().map(|r| r.iter().map(|&v| Fp::new(v, p)).collect()).collect();
            gens.push((g, Matrix::from_rows(p, j.dim, rows).map_err(LoopError::Exact)?));
        }
        Self::from_generators(group, p, j.dim, &gens)
    }

    pub fn group(&self) -> &Arc<FiniteLoop> {
        &self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn of(&self, g: usize) -> &FpMatrix {
        &self.mats[g]
    }

    pub fn is_faithful(&self) -> bool {
        let one = Matrix::identity(self.dim, self.p);
        (0..self.group.order()).filter(|&g| self.mats[g] == one).count() == 1
    }

    pub fn trivial(group: &PermGroup, dim: usize, p: u64) -> Result<Self, LoopError> {
        let one = Matrix::identity(dim, p);
        Self::new(group.table.clone(), p, dim, vec![one; group.perms.len()])
    }

    pub fn sign(group: &PermGroup, p: u64) -> Result<Self, LoopError> {
        let mats = group.perms.iter().map(|g| Matrix::from_rows(p, 1, vec![vec![Fp::new(sign(g), p)]]).expect("1x1")).collect();
        Self::new(group.table.clone(), p, 1, mats)
    }

    pub fn permutation(group: &PermGroup, p: u64) -> Result<Self, LoopError> {
        let m = group.degree;
        let mats = group
            .perms
            .iter()
            .map(|g| {
                let mut a = Matrix::zeros(m, m, p);
                for (i, &gi) in g.iter().enumerate() {
                    a.set(gi as usize, i, Fp::one_in(p));
                }
                a
            })
            .collect();
        Self::new(group.table.clone(), p, m, mats)
    }

    /// Sum-zero submodule of the permutation module, basis `v_i = e_i - e_m` for `i < m`.
    pub fn deleted_permutation(group: &PermGroup, p: u64) -> Result<Self, LoopError> {
        let m = group.degree - 1;
        let mats = group
            .perms
            .iter()
            .map(|g| {
                // g v_i = e_{g(i)} - e_{g(m)} = v_{g(i)} - v_{g(m)}, with v_m = 0
                let mut a: FpMatrix = Matrix::zeros(m, m, p);
                for i in 0..m {
                    let (gi, gm) = (g[i] as usize, g[m] as usize);
                    if gi < m {
                        let v = a.get(gi, i).add_elem(&Fp::one_in(p));
                        a.set(gi, i, v);
                    }
                    if gm < m {
                        let v = a.get(gm, i).sub_elem(&Fp::one_in(p));
                        a.set(gm, i, v);
                    }
                }
                a
            })
            .collect();
        Self::new(group.table.clone(), p, m, mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_labels() {
        assert_eq!(symmetric3().perms.len(), 6);
        assert_eq!(alternating5().perms.len(), 60);
        assert_eq!(cyclic(4).table.order(), 4);
        let s3 = symmetric3();
        assert_eq!(s3.table.label(s3.table.identity()), "e");
        assert!(s3.table.index_of("(1 2 3)").is_some());
        assert!(s3.table.is_group());
    }

    #[test]
    fn standard_reps_are_homomorphisms() {
        let s3 = symmetric3();
        assert!(GroupRep::sign(&s3, 3).is_ok());
        assert!(GroupRep::deleted_permutation(&s3, 5).unwrap().is_faithful());
        let a5 = alternating5();
        let v = GroupRep::deleted_permutation(&a5, 2).unwrap();
        assert_eq!(v.dim(), 4);
        assert!(v.is_faithful());
    }

    #[test]
    fn generators_extend_and_inconsistency_is_caught() {
        let s3 = symmetric3();
        let g = &s3.table;
        let t = g.index_of("(1 2)").unwrap();
        let c = g.index_of("(1 2 3)").unwrap();
        let minus = Matrix::from_rows(3, 1, vec![vec![Fp::new(-1, 3)]]).unwrap();
        let one = Matrix::identity(1, 3);
        let sgn = GroupRep::from_generators(g.clone(), 3, 1, &[(t, minus.clone()), (c, one)]).unwrap();
        assert_eq!(sgn.of(g.index_of("(1 3)").unwrap()), &minus);
        assert!(GroupRep::from_generators(g.clone(), 3, 1, &[(t, minus.clone()), (c, minus)]).is_err());
    }
}
