//! Malcev algebras by structure constants, the Malcev identity and the D-map.

use std::sync::Arc;

use crate::exact::{is_zero_vec, q, qi, unit_vec, QMatrix, Q};
use crate::report::IdentityRecord;

use super::{MalcevError, Structure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalcevAlgebra {
    labels: Vec<String>,
    s: Structure,
}

pub const MALCEV_ANCHOR: &str = "[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]";
pub const DERIVATION_ANCHOR: &str = "D_{a,b}[x,y] = [D_{a,b}x,y] + [x,D_{a,b}y], D_{a,b} = 1/2(ad_[a,b] + [ad_a,ad_b])";
pub const DD_ANCHOR: &str = "[D_{a,b},D_{x,y}] = D_{D_{a,b}x,y} + D_{x,D_{a,b}y}";

impl MalcevAlgebra {
    /// Wrap structure constants after checking antisymmetry and the Malcev identity.
    pub fn new(labels: Vec<String>, s: Structure) -> Result<Self, MalcevError> {
        let alg = Self::unchecked(labels, s)?;
        let rec = malcev_check(&alg);
        if let Some(w) = rec.failures.first() {
            return Err(MalcevError::NotMalcev(w.clone()));
        }
        Ok(alg)
    }

    /// Antisymmetric algebra whose Malcev identity has not been checked.
    pub fn unchecked(labels: Vec<String>, s: Structure) -> Result<Self, MalcevError> {
        if labels.len() != s.dim() {
            return Err(MalcevError::Shape(format!("{} labels for dimension {}", labels.len(), s.dim())));
        }
        if !s.is_antisymmetric() {
            return Err(MalcevError::NotAntisymmetric);
        }
        Ok(MalcevAlgebra { labels, s })
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &Structure {
        &self.s
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        unit_vec(self.dim(), i)
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.s.bracket(x, y)
    }

    pub fn ad(&self, x: &[Q]) -> QMatrix {
        self.s.ad(x)
    }

    pub fn is_lie(&self) -> bool {
        self.s.is_lie()
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    /// `D_{a,b} = 1/2(ad_[a,b] + [ad_a, ad_b])` as an operator on the algebra.
    pub fn d_map(&self, a: &[Q], b: &[Q]) -> QMatrix {
        let ab = self.ad(&self.bracket(a, b));
        let comm = self.ad(a).commutator(&self.ad(b)).expect("square");
        (&ab + &comm).scale(&q(1, 2))
    }
}

/// Linearized Malcev identity over all basis quadruples `(x, w, y, z)`:
/// the polarization in the repeated slot of the Sagle form.
pub fn malcev_check(alg: &MalcevAlgebra) -> IdentityRecord {
    let n = alg.dim();
    let quads: Vec<[usize; 4]> = (0..n)
        .flat_map(|x| (x..n).flat_map(move |w| (0..n).flat_map(move |y| (0..n).map(move |z| [x, w, y, z]))))
        .collect();
    IdentityRecord::sweep("malcev-identity", MALCEV_ANCHOR, &quads, |&[x, w, y, z]| {
        let b = |u: &[Q], v: &[Q]| alg.bracket(u, v);
        let (ex, ew, ey, ez) = (alg.e(x), alg.e(w), alg.e(y), alg.e(z));
        let xy = b(&ex, &ey);
        let wy = b(&ew, &ey);
        let yz = b(&ey, &ez);
        let zx = b(&ez, &ex);
        let zw = b(&ez, &ew);
        let mut acc = b(&xy, &b(&ew, &ez));
        let plus = b(&wy, &b(&ex, &ez));
        let minus = [
            b(&b(&xy, &ez), &ew),
            b(&b(&wy, &ez), &ex),
            b(&b(&yz, &ex), &ew),
            b(&b(&yz, &ew), &ex),
            b(&b(&zx, &ew), &ey),
            b(&b(&zw, &ex), &ey),
        ];
        for (k, a) in acc.iter_mut().enumerate() {
            *a += &plus[k];
            for m in &minus {
                *a -= &m[k];
            }
        }
        (!is_zero_vec(&acc)).then(|| {
            let l = alg.labels();
            format!("x={} w={} y={} z={}", l[x], l[w], l[y], l[z])
        })
    })
}

/// `D_{a,b}` is a derivation, for all basis pairs `(a,b)` and `(x,y)`.
pub fn derivation_check(alg: &MalcevAlgebra) -> IdentityRecord {
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let mut rec = IdentityRecord::new("d-map-derivation", DERIVATION_ANCHOR);
    let recs: Vec<IdentityRecord> = crate::par::map(&pairs, |&(a, b)| {
        let d = alg.d_map(&alg.e(a), &alg.e(b));
        let inner: Vec<(usize, usize)> = pairs.clone();
        let mut r = IdentityRecord::new("", "");
        r.instances_checked = inner.len() as u64;
        for (x, y) in inner {
            let lhs = d.apply(&alg.bracket(&alg.e(x), &alg.e(y))).expect("dim");
            let dx = d.apply(&alg.e(x)).expect("dim");
            let dy = d.apply(&alg.e(y)).expect("dim");
            let rhs: Vec<Q> =
                alg.bracket(&dx, &alg.e(y)).iter().zip(alg.bracket(&alg.e(x), &dy)).map(|(u, v)| u + v).collect();
            if lhs != rhs {
                r.failure_count += 1;
                let l = alg.labels();
                r.failures.push(format!("a={} b={} x={} y={}", l[a], l[b], l[x], l[y]));
            }
        }
        r
    });
    for r in recs {
        rec.absorb(r);
    }
    rec
}

/// The D-map commutation law as operators on the algebra, all basis quadruples.
pub fn dd_check(alg: &MalcevAlgebra) -> IdentityRecord {
    let n = alg.dim();
    let d: Vec<Vec<QMatrix>> = (0..n).map(|a| (0..n).map(|b| alg.d_map(&alg.e(a), &alg.e(b))).collect()).collect();
    let quads: Vec<[usize; 4]> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |x| (0..n).map(move |y| [a, b, x, y]))))
        .collect();
    IdentityRecord::sweep("d-map-commutation", DD_ANCHOR, &quads, |&[a, b, x, y]| {
        let dab = &d[a][b];
        let lhs = dab.commutator(&d[x][y]).expect("square");
        let dx = dab.apply(&alg.e(x)).expect("dim");
        let dy = dab.apply(&alg.e(y)).expect("dim");
        let rhs = &alg.d_map(&dx, &alg.e(y)) + &alg.d_map(&alg.e(x), &dy);
        (lhs != rhs).then(|| {
            let l = alg.labels();
            format!("a={} b={} x={} y={}", l[a], l[b], l[x], l[y])
        })
    })
}

/// For Lie input, `D_{a,b} = ad_[a,b]` on all basis pairs.
pub fn d_map_collapse_check(alg: &MalcevAlgebra) -> IdentityRecord {
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    IdentityRecord::sweep("d-map-lie-collapse", "D_{a,b} = ad_[a,b] when the Jacobi identity holds", &pairs, |&(a, b)| {
        let d = alg.d_map(&alg.e(a), &alg.e(b));
        (d != alg.ad(&alg.bracket(&alg.e(a), &alg.e(b)))).then(|| format!("a={} b={}", alg.labels[a], alg.labels[b]))
    })
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn vec_of(n: usize, terms: &[(usize, Q)]) -> Vec<Q> {
    let mut v = crate::exact::qzero_vec(n);
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

/// sl2 in the basis `e, f, h` with `[e,h] = e`, `[f,h] = -f`, `[e,f] = h/2`.
pub fn sl2() -> MalcevAlgebra {
    let mut s = Structure::zero(3);
    s.set(0, 2, vec_of(3, &[(0, qi(1))]));
    s.set(1, 2, vec_of(3, &[(1, qi(-1))]));
    s.set(0, 1, vec_of(3, &[(2, q(1, 2))]));
    MalcevAlgebra::new(labels(&["e", "f", "h"]), s).expect("sl2 is Lie")
}

/// so3: `[x,y] = z`, `[y,z] = x`, `[z,x] = y`.
pub fn so3() -> MalcevAlgebra {
    let mut s = Structure::zero(3);
    s.set(0, 1, vec_of(3, &[(2, qi(1))]));
    s.set(1, 2, vec_of(3, &[(0, qi(1))]));
    s.set(2, 0, vec_of(3, &[(1, qi(1))]));
    MalcevAlgebra::new(labels(&["x", "y", "z"]), s).expect("so3 is Lie")
}

pub fn abelian(n: usize) -> MalcevAlgebra {
    let ls = (1..=n).map(|i| format!("a{i}")).collect();
    MalcevAlgebra::new(ls, Structure::zero(n)).expect("abelian")
}

/// Anticommutative 3-dimensional algebra failing the Malcev identity:
/// `[e1,e2] = e1`, `[e2,e3] = e3`, `[e1,e3] = e2 + e3`.
pub fn non_malcev_3d() -> MalcevAlgebra {
    let mut s = Structure::zero(3);
    s.set(0, 1, vec_of(3, &[(0, qi(1))]));
    s.set(1, 2, vec_of(3, &[(2, qi(1))]));
    s.set(0, 2, vec_of(3, &[(1, qi(1)), (2, qi(1))]));
    MalcevAlgebra::unchecked(labels(&["e1", "e2", "e3"]), s).expect("antisymmetric")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_fixtures_are_malcev() {
        for alg in [sl2(), so3(), abelian(2)] {
            assert!(malcev_check(&alg).passed());
            assert!(d_map_collapse_check(&alg).passed());
        }
    }

    #[test]
    fn mutated_algebra_fails_with_witness() {
        let rec = malcev_check(&non_malcev_3d());
        assert!(!rec.passed());
        // First failing quadruple in sweep order, as found by the reference evaluation.
        assert_eq!(rec.failures[0], "x=e1 w=e1 y=e2 z=e3");
        assert!(MalcevAlgebra::new(non_malcev_3d().labels.clone(), non_malcev_3d().s.clone()).is_err());
    }

    #[test]
    fn unmutated_three_dim_example_is_lie() {
        // [e1,e2] = e1, [e2,e3] = e3, [e1,e3] = e2 satisfies Jacobi.
        let mut s = Structure::zero(3);
        s.set(0, 1, vec_of(3, &[(0, qi(1))]));
        s.set(1, 2, vec_of(3, &[(2, qi(1))]));
        s.set(0, 2, vec_of(3, &[(1, qi(1))]));
        assert!(s.is_lie());
    }

    #[test]
    fn d_map_diagonal_vanishes() {
        let alg = sl2();
        for a in 0..3 {
            assert!(alg.d_map(&alg.e(a), &alg.e(a)).is_zero());
        }
        assert!(derivation_check(&alg).passed());
        assert!(dd_check(&alg).passed());
    }
}
