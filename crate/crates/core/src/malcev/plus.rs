//! Concrete models of the Lie algebra Lie(m)+ generated by symbols ad_a, D_{a,b}.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::exact::{axpy, q, qi, qzero_vec, unit_vec, QMatrix, Q};
use crate::report::IdentityRecord;

use super::span::{Echelon, SpanCoords};
use super::{MalcevAlgebra, MalcevError, RelativeRep, Structure};

pub const RELATION_B_ANCHOR: &str = "[[ad_a,ad_b],ad_c] + [ad_[a,b],ad_c] - ad_([[a,b],c] + [[a,c],b] + [a,[b,c]]) = 0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlusMode {
    /// `m x m` via `ad_a -> (-2a, a)`; requires a Lie algebra with zero center and `[m,m] = m`.
    SemisimpleLie,
    /// Lie algebra of operators on m generated by the adjoint maps.
    MultiplicationAlgebra,
}

impl FromStr for PlusMode {
    type Err = MalcevError;
    fn from_str(s: &str) -> Result<Self, MalcevError> {
        match s {
            "semisimple-lie" => Ok(PlusMode::SemisimpleLie),
            "multiplication-algebra" => Ok(PlusMode::MultiplicationAlgebra),
            _ => Err(MalcevError::ModeMismatch(format!("unknown mode {s}"))),
        }
    }
}

impl fmt::Display for PlusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlusMode::SemisimpleLie => "semisimple-lie",
            PlusMode::MultiplicationAlgebra => "multiplication-algebra",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Faithfulness {
    Faithful,
    PossiblyProperQuotient,
}

/// How a model basis element was produced from the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Word {
    Gen(usize),
    /// `[ad_a, basis_j]`
    Bracket(usize, usize),
}

#[derive(Clone, Debug)]
pub struct LiePlusModel {
    algebra: Arc<MalcevAlgebra>,
    mode: PlusMode,
    faithfulness: Faithfulness,
    lie: Structure,
    words: Vec<Word>,
    ambient: Vec<QMatrix>,
    ad: Vec<Vec<Q>>,
    t_action: Vec<QMatrix>,
}

fn flatten(m: &QMatrix) -> Vec<Q> {
    m.entries().to_vec()
}

/// Basis matrices of the Lie algebra generated by `gens`, with the word producing each.
fn lie_closure(gens: &[QMatrix]) -> (Vec<QMatrix>, Vec<Word>) {
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let mut words = Vec::new();
    for (a, g) in gens.iter().enumerate() {
        if ech.insert(&flatten(g)) {
            basis.push(g.clone());
            words.push(Word::Gen(a));
        }
    }
    let mut idx = 0;
    while idx < basis.len() {
        for (a, g) in gens.iter().enumerate() {
            let c = g.commutator(&basis[idx]).expect("square");
            if ech.insert(&flatten(&c)) {
                basis.push(c);
                words.push(Word::Bracket(a, idx));
            }
        }
        idx += 1;
    }
    (basis, words)
}

/// Dimension of the unital associative algebra generated by the adjoint maps.
pub fn associative_envelope_dim(alg: &MalcevAlgebra) -> usize {
    let n = alg.dim();
    let gens: Vec<QMatrix> = (0..n).map(|i| alg.ad(&alg.e(i))).collect();
    let mut ech = Echelon::new();
    let mut basis = vec![QMatrix::identity(n, ())];
    ech.insert(&flatten(&basis[0]));
    let mut idx = 0;
    while idx < basis.len() {
        for g in &gens {
            let p = g * &basis[idx];
            if ech.insert(&flatten(&p)) {
                basis.push(p);
            }
        }
        idx += 1;
    }
    ech.rank()
}

/// Non-abelian and the adjoint maps generate all of `End(m)`: simple and central.
pub fn is_absolutely_simple(alg: &MalcevAlgebra) -> bool {
    let n = alg.dim();
    n > 0 && !alg.structure().is_abelian() && associative_envelope_dim(alg) == n * n
}

impl LiePlusModel {
    pub fn build(alg: &Arc<MalcevAlgebra>, mode: PlusMode) -> Result<Self, MalcevError> {
        let n = alg.dim();
        let ads: Vec<QMatrix> = (0..n).map(|i| alg.ad(&alg.e(i))).collect();
        let (gens, faithfulness) = match mode {
            PlusMode::SemisimpleLie => {
                if let Some((i, j, k)) = alg.structure().jacobi_failure() {
                    let l = alg.labels();
                    return Err(MalcevError::ModeMismatch(format!(
                        "Jacobi fails on ({}, {}, {})",
                        l[i], l[j], l[k]
                    )));
                }
                if !alg.structure().center().is_empty() {
                    return Err(MalcevError::ModeMismatch("nonzero center".into()));
                }
                if alg.structure().derived_dim() != n {
                    return Err(MalcevError::ModeMismatch("[m,m] is a proper subspace".into()));
                }
                let gens = ads.iter().map(|a| a.scale(&qi(-2)).direct_sum(a)).collect::<Vec<_>>();
                (gens, Faithfulness::Faithful)
            }
            PlusMode::MultiplicationAlgebra => {
                let f = if !alg.is_lie() && is_absolutely_simple(alg) {
                    Faithfulness::Faithful
                } else {
                    Faithfulness::PossiblyProperQuotient
                };
                (ads.clone(), f)
            }
        };
        let (ambient, words) = lie_closure(&gens);
        let p = ambient.len();
        let coords = SpanCoords::new(ambient.iter().map(flatten).collect());
        let mut lie = Structure::zero(p);
        for i in 0..p {
            for j in (i + 1)..p {
                let c = ambient[i].commutator(&ambient[j]).expect("square");
                let v = coords.coords(&flatten(&c)).ok_or(MalcevError::Internal("closure not closed"))?;
                lie.set(i, j, v);
            }
        }
        let ad = gens
            .iter()
            .map(|g| coords.coords(&flatten(g)).ok_or(MalcevError::Internal("generator outside closure")))
            .collect::<Result<Vec<_>, _>>()?;
        let t_action = eval_words(&words, &ads);
        Ok(LiePlusModel { algebra: alg.clone(), mode, faithfulness, lie, words, ambient, ad, t_action })
    }

    pub fn algebra(&self) -> &Arc<MalcevAlgebra> {
        &self.algebra
    }

    pub fn mode(&self) -> PlusMode {
        self.mode
    }

    pub fn faithfulness(&self) -> Faithfulness {
        self.faithfulness
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn structure(&self) -> &Structure {
        &self.lie
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn ambient(&self) -> &[QMatrix] {
        &self.ambient
    }

    /// Coordinates of `ad_x`.
    pub fn ad(&self, x: &[Q]) -> Vec<Q> {
        let mut v = qzero_vec(self.dim());
        for (i, c) in x.iter().enumerate() {
            axpy(&mut v, c, &self.ad[i]);
        }
        v
    }

    pub fn ad_basis(&self, i: usize) -> &[Q] {
        &self.ad[i]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.lie.bracket(x, y)
    }

    /// `D_{a,b} = 1/2(ad_[a,b] + [ad_a, ad_b])` inside the model.
    pub fn d(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let x = self.ad(&self.algebra.bracket(a, b));
        let y = self.bracket(&self.ad(a), &self.ad(b));
        x.iter().zip(&y).map(|(u, v)| (u + v) * q(1, 2)).collect()
    }

    /// Action of a model element on m (the adjoint relative representation pushed through the model).
    pub fn t_action(&self, x: &[Q]) -> QMatrix {
        let n = self.algebra.dim();
        let mut m = QMatrix::zeros(n, n, ());
        for (i, c) in x.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                m = &m + &self.t_action[i].scale(c);
            }
        }
        m
    }

    pub fn t_action_basis(&self, i: usize) -> &QMatrix {
        &self.t_action[i]
    }

    /// Images of the model basis under a relative representation, checked to be a Lie homomorphism.
    pub fn represent(&self, rep: &RelativeRep) -> Result<Vec<QMatrix>, MalcevError> {
        if rep.algebra() != &self.algebra {
            return Err(MalcevError::Incompatible);
        }
        let imgs = eval_words(&self.words, rep.mats());
        let p = self.dim();
        let d = rep.dim();
        for i in 0..p {
            for j in (i + 1)..p {
                let lhs = imgs[i].commutator(&imgs[j]).expect("square");
                let mut rhs = QMatrix::zeros(d, d, ());
                for (k, c) in self.lie.basis_bracket(i, j).iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        rhs = &rhs + &imgs[k].scale(c);
                    }
                }
                if lhs != rhs {
                    return Err(MalcevError::NotFactoring(format!("basis pair ({i},{j})")));
                }
            }
        }
        Ok(imgs)
    }

    pub fn jacobi_check(&self) -> IdentityRecord {
        IdentityRecord::single(
            "model-jacobi",
            "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
            self.lie.jacobi_failure().map(|t| format!("{t:?}")),
        )
    }

    /// Relation (b) of the presentation on all basis triples.
    pub fn relation_b_check(&self) -> IdentityRecord {
        let alg = self.algebra.clone();
        let n = alg.dim();
        let triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
        IdentityRecord::sweep("relation-b", RELATION_B_ANCHOR, &triples, |&(a, b, c)| {
            let (ea, eb, ec) = (alg.e(a), alg.e(b), alg.e(c));
            let ab = alg.bracket(&ea, &eb);
            let t1 = self.bracket(&self.bracket(&self.ad(&ea), &self.ad(&eb)), &self.ad(&ec));
            let t2 = self.bracket(&self.ad(&ab), &self.ad(&ec));
            let j: Vec<Q> = alg
                .bracket(&ab, &ec)
                .iter()
                .zip(alg.bracket(&alg.bracket(&ea, &ec), &eb))
                .zip(alg.bracket(&ea, &alg.bracket(&eb, &ec)))
                .map(|((x, y), z)| x + y + z)
                .collect();
            let t3 = self.ad(&j);
            let ok = t1.iter().zip(&t2).zip(&t3).all(|((x, y), z)| num_traits::Zero::is_zero(&(x + y - z)));
            (!ok).then(|| format!("a={} b={} c={}", alg.labels()[a], alg.labels()[b], alg.labels()[c]))
        })
    }

    /// The D-map commutation law inside the model, all basis quadruples.
    pub fn dd_check(&self) -> IdentityRecord {
        let alg = self.algebra.clone();
        let n = alg.dim();
        let d: Vec<Vec<Vec<Q>>> = (0..n).map(|a| (0..n).map(|b| self.d(&alg.e(a), &alg.e(b))).collect()).collect();
        let quads: Vec<[usize; 4]> = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |x| (0..n).map(move |y| [a, b, x, y]))))
            .collect();
        IdentityRecord::sweep("model-d-commutation", super::algebra::DD_ANCHOR, &quads, |&[a, b, x, y]| {
            let lhs = self.bracket(&d[a][b], &d[x][y]);
            let dop = alg.d_map(&alg.e(a), &alg.e(b));
            let dx = dop.apply(&alg.e(x)).expect("dim");
            let dy = dop.apply(&alg.e(y)).expect("dim");
            let r1 = self.d(&dx, &alg.e(y));
            let r2 = self.d(&alg.e(x), &dy);
            let ok = lhs.iter().zip(&r1).zip(&r2).all(|((l, u), v)| l == &(u + v));
            (!ok).then(|| {
                let l = alg.labels();
                format!("a={} b={} x={} y={}", l[a], l[b], l[x], l[y])
            })
        })
    }

    /// `a -> ad_a` has zero kernel.
    pub fn injective_on_ad(&self) -> bool {
        let n = self.algebra.dim();
        n == 0 || QMatrix::from_rows((), self.dim(), self.ad.clone()).map(|m| m.rank() == n).unwrap_or(false)
    }
}

fn eval_words(words: &[Word], gens: &[QMatrix]) -> Vec<QMatrix> {
    let mut out: Vec<QMatrix> = Vec::with_capacity(words.len());
    for w in words {
        let m = match *w {
            Word::Gen(a) => gens[a].clone(),
            Word::Bracket(a, j) => gens[a].commutator(&out[j]).expect("square"),
        };
        out.push(m);
    }
    out
}

pub fn build_lie_plus(alg: &Arc<MalcevAlgebra>, mode: PlusMode) -> Result<LiePlusModel, MalcevError> {
    LiePlusModel::build(alg, mode)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub dim_ad_minus_d: usize,
    pub dim_ad_plus_2d: usize,
    pub records: Vec<IdentityRecord>,
}

/// The spans of `ad_[a,b] - D_{a,b}` and `ad_[a,b] + 2D_{a,b}` are commuting ideals.
pub fn ideal_decomposition_check(plus: &LiePlusModel) -> Result<IdealReport, MalcevError> {
    let alg = plus.algebra().clone();
    if !alg.is_lie() {
        return Err(MalcevError::ModeMismatch("ideal decomposition needs a Lie algebra".into()));
    }
    let n = alg.dim();
    let p = plus.dim();
    let xi = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let a = plus.ad(&alg.bracket(x, y));
        a.iter().zip(plus.d(x, y)).map(|(u, v)| u - v).collect()
    };
    let xi2 = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let a = plus.ad(&alg.bracket(x, y));
        a.iter().zip(plus.d(x, y)).map(|(u, v)| u + v * qi(2)).collect()
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let gen1: Vec<Vec<Q>> = pairs.iter().map(|&(a, b)| xi(&alg.e(a), &alg.e(b))).collect();
    let gen2: Vec<Vec<Q>> = pairs.iter().map(|&(a, b)| xi2(&alg.e(a), &alg.e(b))).collect();
    let mut e1 = Echelon::new();
    let mut e2 = Echelon::new();
    for v in &gen1 {
        e1.insert(v);
    }
    for v in &gen2 {
        e2.insert(v);
    }
    let mut records = Vec::new();
    let ideal = |name: &str, gens: &[Vec<Q>], ech: &Echelon| {
        let items: Vec<(usize, usize)> = (0..gens.len()).flat_map(|g| (0..p).map(move |k| (g, k))).collect();
        IdentityRecord::sweep(name, "[span, Lie(m)+] is contained in span", &items, |&(g, k)| {
            (!ech.contains(&plus.bracket(&gens[g], &unit_vec(p, k)))).then(|| format!("generator {g}, basis {k}"))
        })
    };
    records.push(ideal("ideal-ad-minus-d", &gen1, &e1));
    records.push(ideal("ideal-ad-plus-2d", &gen2, &e2));
    let cross: Vec<(usize, usize)> = (0..gen1.len()).flat_map(|i| (0..gen2.len()).map(move |j| (i, j))).collect();
    records.push(IdentityRecord::sweep(
        "ideals-commute",
        "[ad_[a,b] - D_{a,b}, ad_[c,d] + 2D_{c,d}] = 0",
        &cross,
        |&(i, j)| (!crate::exact::is_zero_vec(&plus.bracket(&gen1[i], &gen2[j]))).then(|| format!("{i},{j}")),
    ));
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
    records.push(IdentityRecord::sweep(
        "xi-ad-bracket",
        "[xi_{a,b}, ad_c] = -2 xi_{[a,b],c}, xi_{a,b} = ad_[a,b] - D_{a,b}",
        &triples,
        |&(a, b, c)| {
            let lhs = plus.bracket(&xi(&alg.e(a), &alg.e(b)), &plus.ad(&alg.e(c)));
            let rhs: Vec<Q> = xi(&alg.bracket(&alg.e(a), &alg.e(b)), &alg.e(c)).iter().map(|x| x * qi(-2)).collect();
            (lhs != rhs).then(|| format!("a={a} b={b} c={c}"))
        },
    ));
    Ok(IdealReport { dim_ad_minus_d: e1.rank(), dim_ad_plus_2d: e2.rank(), records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{abelian, adjoint, m2_table, o0, sl2, so3};

    #[test]
    fn sl2_semisimple_model() {
        let alg = Arc::new(sl2());
        let m = build_lie_plus(&alg, PlusMode::SemisimpleLie).unwrap();
        assert_eq!(m.dim(), 6);
        assert!(m.injective_on_ad());
        assert!(m.relation_b_check().passed());
        assert!(m.jacobi_check().passed());
        // T-action equals the lower-right block of the ambient matrices.
        for (i, a) in m.ambient().iter().enumerate() {
            assert_eq!(&a.block(3, 6, 3, 6), m.t_action_basis(i));
        }
        let r = ideal_decomposition_check(&m).unwrap();
        assert_eq!((r.dim_ad_minus_d, r.dim_ad_plus_2d), (3, 3));
        assert!(r.records.iter().all(IdentityRecord::passed));
        assert!(m.represent(&m2_table(&alg).unwrap()).is_ok());
    }

    #[test]
    fn mode_mismatch_errors() {
        let o = Arc::new(o0());
        assert!(matches!(build_lie_plus(&o, PlusMode::SemisimpleLie), Err(MalcevError::ModeMismatch(_))));
        let ab = Arc::new(abelian(2));
        assert!(build_lie_plus(&ab, PlusMode::SemisimpleLie).is_err());
        assert_eq!(build_lie_plus(&ab, PlusMode::MultiplicationAlgebra).unwrap().dim(), 0);
        let r = ideal_decomposition_check(&build_lie_plus(&ab, PlusMode::MultiplicationAlgebra).unwrap()).unwrap();
        assert_eq!((r.dim_ad_minus_d, r.dim_ad_plus_2d), (0, 0));
    }

    #[test]
    fn faithfulness_flags() {
        let s = Arc::new(so3());
        let m = build_lie_plus(&s, PlusMode::MultiplicationAlgebra).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.faithfulness(), Faithfulness::PossiblyProperQuotient);
        assert!(m.represent(&adjoint(&s)).is_ok());
        assert!(is_absolutely_simple(&sl2()));
    }

    #[test]
    fn o0_multiplication_model() {
        let alg = Arc::new(o0());
        let m = build_lie_plus(&alg, PlusMode::MultiplicationAlgebra).unwrap();
        assert_eq!(m.dim(), 21);
        assert_eq!(m.faithfulness(), Faithfulness::Faithful);
        assert!(m.structure().center().is_empty());
        assert_eq!(m.structure().derived_dim(), 21);
    }
}
