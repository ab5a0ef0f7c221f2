//! Relative representations and Lie-algebra modules.

use std::sync::Arc;

use crate::exact::{q, qi, QMatrix, Q};
use crate::report::IdentityRecord;

use super::{MalcevAlgebra, MalcevError};

pub const RELATIVE_ANCHOR: &str = "[[l_a,l_b],l_c] = -[l_[a,b],l_c] + l_([[a,b],c] + [[a,c],b] + [a,[b,c]])";
pub const MODULE_ANCHOR: &str = "[l_a,l_b] = l_[a,b]";

/// One `d x d` operator per basis element, extended linearly.
#[derive(Clone, Debug)]
pub struct Action {
    pub algebra: Arc<MalcevAlgebra>,
    pub dim: usize,
    pub mats: Vec<QMatrix>,
}

impl Action {
    pub fn new(algebra: Arc<MalcevAlgebra>, mats: Vec<QMatrix>) -> Result<Self, MalcevError> {
        if mats.len() != algebra.dim() {
            return Err(MalcevError::Shape(format!("{} operators for dimension {}", mats.len(), algebra.dim())));
        }
        let dim = mats.first().map_or(0, QMatrix::rows);
        if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(MalcevError::Shape("operators must be square of one size".into()));
        }
        Ok(Action { algebra, dim, mats })
    }

    /// Operator of a general element.
    pub fn of(&self, x: &[Q]) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim, ());
        for (i, c) in x.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                m = &m + &self.mats[i].scale(c);
            }
        }
        m
    }
}

/// `l : m -> gl(V)` satisfying the relative-representation identity.
#[derive(Clone, Debug)]
pub struct RelativeRep(pub Action);

/// Module over a Lie algebra: `[l_a, l_b] = l_[a,b]`.
#[derive(Clone, Debug)]
pub struct LieModule(pub Action);

impl RelativeRep {
    /// Checked constructor.
    pub fn new(algebra: Arc<MalcevAlgebra>, mats: Vec<QMatrix>) -> Result<Self, MalcevError> {
        let rep = RelativeRep(Action::new(algebra, mats)?);
        let rec = relative_rep_check(&rep);
        if let Some(w) = rec.failures.first() {
            return Err(MalcevError::NotRelative(w.clone()));
        }
        Ok(rep)
    }

    pub fn unchecked(algebra: Arc<MalcevAlgebra>, mats: Vec<QMatrix>) -> Result<Self, MalcevError> {
        Ok(RelativeRep(Action::new(algebra, mats)?))
    }

    pub fn algebra(&self) -> &Arc<MalcevAlgebra> {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn l(&self, x: &[Q]) -> QMatrix {
        self.0.of(x)
    }

    pub fn mats(&self) -> &[QMatrix] {
        &self.0.mats
    }
}

impl LieModule {
    pub fn new(algebra: Arc<MalcevAlgebra>, mats: Vec<QMatrix>) -> Result<Self, MalcevError> {
        let m = LieModule(Action::new(algebra, mats)?);
        let rec = lie_module_check(&m);
        if let Some(w) = rec.failures.first() {
            return Err(MalcevError::NotModule(w.clone()));
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Every Lie module is a relative representation.
    pub fn as_relative(&self) -> RelativeRep {
        RelativeRep(self.0.clone())
    }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect()
}

pub fn relative_rep_check(rep: &RelativeRep) -> IdentityRecord {
    let alg = rep.algebra().clone();
    let n = alg.dim();
    IdentityRecord::sweep("relative-representation", RELATIVE_ANCHOR, &triples(n), |&(a, b, c)| {
        let (ea, eb, ec) = (alg.e(a), alg.e(b), alg.e(c));
        let (la, lb, lc) = (&rep.mats()[a], &rep.mats()[b], &rep.mats()[c]);
        let lhs = la.commutator(lb).and_then(|m| m.commutator(lc)).expect("square");
        let ab = alg.bracket(&ea, &eb);
        let j1 = alg.bracket(&ab, &ec);
        let j2 = alg.bracket(&alg.bracket(&ea, &ec), &eb);
        let j3 = alg.bracket(&ea, &alg.bracket(&eb, &ec));
        let j: Vec<Q> = j1.iter().zip(&j2).zip(&j3).map(|((x, y), z)| x + y + z).collect();
        let rhs = &rep.l(&j) - &rep.l(&ab).commutator(lc).expect("square");
        (lhs != rhs).then(|| {
            let l = alg.labels();
            format!("a={} b={} c={}", l[a], l[b], l[c])
        })
    })
}

pub fn lie_module_check(m: &LieModule) -> IdentityRecord {
    let alg = m.0.algebra.clone();
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    IdentityRecord::sweep("lie-module", MODULE_ANCHOR, &pairs, |&(a, b)| {
        let lhs = m.0.mats[a].commutator(&m.0.mats[b]).expect("square");
        let rhs = m.0.of(&alg.bracket(&alg.e(a), &alg.e(b)));
        (lhs != rhs).then(|| format!("a={} b={}", alg.labels()[a], alg.labels()[b]))
    })
}

/// Adjoint relative representation `l_a = ad_a`.
pub fn adjoint(alg: &Arc<MalcevAlgebra>) -> RelativeRep {
    let mats = (0..alg.dim()).map(|i| alg.ad(&alg.e(i))).collect();
    RelativeRep(Action::new(alg.clone(), mats).expect("shape"))
}

/// Module given by a right-action table `v.x`; the left operators are `l_x(v) = -(v.x)`.
/// `table[x][j]` is the image `e_j . x` as a coordinate vector.
pub fn from_right_action_table(alg: Arc<MalcevAlgebra>, table: &[Vec<Vec<Q>>]) -> Result<RelativeRep, MalcevError> {
    let mats = table
        .iter()
        .map(|cols| {
            let d = cols.len();
            -&QMatrix::from_columns((), d, cols)
        })
        .collect();
    RelativeRep::new(alg, mats)
}

/// sl2 basis `e, f, h` as trace-zero 2x2 matrices.
pub fn sl2_matrices() -> Vec<QMatrix> {
    let m = |a: Q, b: Q, c: Q, d: Q| QMatrix::from_rows((), 2, vec![vec![a, b], vec![c, d]]).expect("2x2");
    vec![
        m(qi(0), qi(1), qi(0), qi(0)),
        m(qi(0), qi(0), q(-1, 4), qi(0)),
        m(q(-1, 2), qi(0), qi(0), q(1, 2)),
    ]
}

fn ensure_sl2(alg: &Arc<MalcevAlgebra>) -> Result<(), MalcevError> {
    if alg.dim() != 3 {
        return Err(MalcevError::NotSl2);
    }
    let mats = sl2_matrices();
    let act = Action { algebra: alg.clone(), dim: 2, mats };
    if lie_module_check(&LieModule(act)).passed() {
        Ok(())
    } else {
        Err(MalcevError::NotSl2)
    }
}

/// Natural 2-dimensional module of sl2.
pub fn sl2_natural(alg: &Arc<MalcevAlgebra>) -> Result<LieModule, MalcevError> {
    ensure_sl2(alg)?;
    LieModule::new(alg.clone(), sl2_matrices())
}

/// The non-Lie module of sl2 given by its right-action table on `v, w`:
/// `v.h = v, w.h = -w, v.e = w, v.f = 0, w.e = 0, w.f = -v`.
pub fn m2_table(alg: &Arc<MalcevAlgebra>) -> Result<RelativeRep, MalcevError> {
    ensure_sl2(alg)?;
    let v = |a: i64, b: i64| vec![qi(a), qi(b)];
    let table = vec![
        vec![v(0, 1), v(0, 0)],  // e: v.e = w, w.e = 0
        vec![v(0, 0), v(-1, 0)], // f: v.f = 0, w.f = -v
        vec![v(1, 0), v(0, -1)], // h: v.h = v, w.h = -w
    ];
    from_right_action_table(alg.clone(), &table)
}

/// Matrix form of the same module: `l_x = -2x` for the 2x2 realization of sl2.
pub fn m2_matrix_form(alg: &Arc<MalcevAlgebra>) -> Result<RelativeRep, MalcevError> {
    ensure_sl2(alg)?;
    let mats = sl2_matrices().iter().map(minus_two).collect();
    RelativeRep::new(alg.clone(), mats)
}

pub fn minus_two(x: &QMatrix) -> QMatrix {
    x.scale(&qi(-2))
}

pub fn trivial_module(alg: &Arc<MalcevAlgebra>, dim: usize) -> LieModule {
    let mats = (0..alg.dim()).map(|_| QMatrix::zeros(dim, dim, ())).collect();
    LieModule(Action::new(alg.clone(), mats).expect("shape"))
}

/// `a * (v_M ⊗ v_L) = -2 (a v_M) ⊗ v_L + v_M ⊗ (a v_L)`.
pub fn tensor_relative_module(vm: &LieModule, vl: &LieModule) -> Result<RelativeRep, MalcevError> {
    if vm.0.algebra != vl.0.algebra {
        return Err(MalcevError::Incompatible);
    }
    for m in [vm, vl] {
        if let Some(w) = lie_module_check(m).failures.first() {
            return Err(MalcevError::NotModule(w.clone()));
        }
    }
    let (im, il) = (QMatrix::identity(vm.dim(), ()), QMatrix::identity(vl.dim(), ()));
    let mats = vm
        .0
        .mats
        .iter()
        .zip(&vl.0.mats)
        .map(|(a, b)| &minus_two(a).kron(&il) + &im.kron(b))
        .collect();
    RelativeRep::new(vm.0.algebra.clone(), mats)
}

/// Invertible `X` with `X l1_a = l2_a X` for every basis `a`, if one is found.
/// Searches the solution space along a fixed list of integer combinations.
pub fn intertwiner(l1: &RelativeRep, l2: &RelativeRep) -> Option<QMatrix> {
    let d = l1.dim();
    if d != l2.dim() || l1.algebra() != l2.algebra() {
        return None;
    }
    if d == 0 {
        return Some(QMatrix::identity(0, ()));
    }
    let n = l1.algebra().dim();
    let mut sys = QMatrix::zeros(n * d * d, d * d, ());
    for a in 0..n {
        let (x, y) = (&l1.mats()[a], &l2.mats()[a]);
        for i in 0..d {
            for j in 0..d {
                let row = a * d * d + i * d + j;
                // (X x)_{ij} - (y X)_{ij}
                for k in 0..d {
                    let c = sys.get(row, i * d + k) + x.get(k, j);
                    sys.set(row, i * d + k, c);
                    let c = sys.get(row, k * d + j) - y.get(i, k);
                    sys.set(row, k * d + j, c);
                }
            }
        }
    }
    let ker = sys.kernel_basis();
    let to_mat = |v: &[Q]| QMatrix::from_rows((), d, v.chunks(d).map(<[Q]>::to_vec).collect()).expect("square");
    let mut candidates: Vec<Vec<Q>> = ker.clone();
    for scale in 1..=4i64 {
        let mut v = crate::exact::qzero_vec(d * d);
        for (k, b) in ker.iter().enumerate() {
            crate::exact::axpy(&mut v, &qi(scale.pow(k as u32) + k as i64), b);
        }
        candidates.push(v);
    }
    candidates.into_iter().map(|v| to_mat(&v)).find(|m| m.inverse().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{o0, sl2};

    #[test]
    fn adjoint_is_relative() {
        for alg in [sl2(), o0()] {
            assert!(relative_rep_check(&adjoint(&Arc::new(alg))).passed());
        }
    }

    #[test]
    fn carlsson_table_is_relative_and_matches_matrix_form() {
        let alg = Arc::new(sl2());
        let table = m2_table(&alg).unwrap();
        let mat = m2_matrix_form(&alg).unwrap();
        assert!(relative_rep_check(&table).passed());
        let x = intertwiner(&table, &mat).expect("isomorphic");
        for a in 0..3 {
            assert_eq!(&x * &table.mats()[a], &mat.mats()[a] * &x);
        }
        // Not a Lie module.
        assert!(LieModule::new(alg.clone(), table.mats().to_vec()).is_err());
    }

    #[test]
    fn table_read_as_left_maps_is_not_relative() {
        let alg = Arc::new(sl2());
        let negated: Vec<QMatrix> = m2_table(&alg).unwrap().mats().iter().map(|m| -m).collect();
        assert!(RelativeRep::new(alg, negated).is_err());
    }

    #[test]
    fn minus_two_scales() {
        let h = QMatrix::from_rows((), 2, vec![vec![qi(1), qi(0)], vec![qi(0), qi(-1)]]).unwrap();
        let want = QMatrix::from_rows((), 2, vec![vec![qi(-2), qi(0)], vec![qi(0), qi(2)]]).unwrap();
        assert_eq!(minus_two(&h), want);
    }

    #[test]
    fn tensor_modules() {
        let alg = Arc::new(sl2());
        let nat = sl2_natural(&alg).unwrap();
        let triv = trivial_module(&alg, 1);
        let m2 = tensor_relative_module(&nat, &triv).unwrap();
        assert!(intertwiner(&m2, &m2_table(&alg).unwrap()).is_some());
        let t = tensor_relative_module(&triv, &nat).unwrap();
        assert!(intertwiner(&t, &nat.as_relative()).is_some());
        let four = tensor_relative_module(&nat, &nat).unwrap();
        assert_eq!(four.dim(), 4);
        assert!(relative_rep_check(&four).passed());
    }

    #[test]
    fn sl2_recognition() {
        assert!(m2_matrix_form(&Arc::new(crate::malcev::so3())).is_err());
    }
}
