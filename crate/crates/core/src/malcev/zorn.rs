//! Split octonions in Zorn's vector-matrix form and the traceless part O₀.

use crate::exact::{qi, qzero_vec, Q};

use super::{MalcevAlgebra, Structure};

/// Zorn vector matrix `[[alpha, u], [v, beta]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zorn {
    pub alpha: Q,
    pub u: [Q; 3],
    pub v: [Q; 3],
    pub beta: Q,
}

fn dot(a: &[Q; 3], b: &[Q; 3]) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &[Q; 3], b: &[Q; 3]) -> [Q; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn lin(terms: &[(&Q, &[Q; 3])]) -> [Q; 3] {
    let mut out = [qi(0), qi(0), qi(0)];
    for (c, v) in terms {
        for k in 0..3 {
            out[k] += *c * &v[k];
        }
    }
    out
}

fn add3(a: [Q; 3], b: [Q; 3]) -> [Q; 3] {
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    [a0 + b0, a1 + b1, a2 + b2]
}

fn sub3(a: [Q; 3], b: [Q; 3]) -> [Q; 3] {
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    [a0 - b0, a1 - b1, a2 - b2]
}

impl Zorn {
    /// Coordinates `(alpha, u1, u2, u3, v1, v2, v3, beta)`.
    pub fn from_coords(c: &[Q]) -> Self {
        assert_eq!(c.len(), 8);
        Zorn {
            alpha: c[0].clone(),
            u: [c[1].clone(), c[2].clone(), c[3].clone()],
            v: [c[4].clone(), c[5].clone(), c[6].clone()],
            beta: c[7].clone(),
        }
    }

    pub fn coords(&self) -> Vec<Q> {
        let mut out = vec![self.alpha.clone()];
        out.extend(self.u.iter().cloned());
        out.extend(self.v.iter().cloned());
        out.push(self.beta.clone());
        out
    }

    pub fn basis(i: usize) -> Self {
        let mut c = qzero_vec(8);
        c[i] = qi(1);
        Self::from_coords(&c)
    }

    pub fn mul(&self, o: &Zorn) -> Zorn {
        Zorn {
            alpha: &self.alpha * &o.alpha + dot(&self.u, &o.v),
            u: sub3(lin(&[(&self.alpha, &o.u), (&o.beta, &self.u)]), cross(&self.v, &o.v)),
            v: add3(lin(&[(&o.alpha, &self.v), (&self.beta, &o.v)]), cross(&self.u, &o.u)),
            beta: &self.beta * &o.beta + dot(&self.v, &o.u),
        }
    }

    pub fn sub(&self, o: &Zorn) -> Zorn {
        let d: Vec<Q> = self.coords().iter().zip(o.coords()).map(|(a, b)| a - b).collect();
        Zorn::from_coords(&d)
    }

    pub fn trace(&self) -> Q {
        &self.alpha + &self.beta
    }
}

/// Traceless split octonions with the commutator product, basis
/// `h = diag(1,-1)`, `e1..e3` (u-part), `f1..f3` (v-part).
pub fn o0() -> MalcevAlgebra {
    let embed = |i: usize| -> Zorn {
        if i == 0 {
            let mut c = qzero_vec(8);
            c[0] = qi(1);
            c[7] = qi(-1);
            Zorn::from_coords(&c)
        } else {
            Zorn::basis(i)
        }
    };
    let project = |z: &Zorn| -> Vec<Q> {
        assert_eq!(z.trace(), qi(0), "commutators are traceless");
        let c = z.coords();
        let mut out = vec![c[0].clone()];
        out.extend(c[1..7].iter().cloned());
        out
    };
    let mut s = Structure::zero(7);
    for i in 0..7 {
        for j in (i + 1)..7 {
            let (x, y) = (embed(i), embed(j));
            s.set(i, j, project(&x.mul(&y).sub(&y.mul(&x))));
        }
    }
    let labels = ["h", "e1", "e2", "e3", "f1", "f2", "f3"].iter().map(|s| s.to_string()).collect();
    MalcevAlgebra::new(labels, s).expect("traceless octonions form a Malcev algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(seed: i64) -> Zorn {
        let c: Vec<Q> = (0..8).map(|k| qi((seed * 7 + k * 3) % 5 - 2)).collect();
        Zorn::from_coords(&c)
    }

    #[test]
    fn zorn_product_is_alternative_not_associative() {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Zorn::basis(i), Zorn::basis(j));
                assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
                assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
            }
        }
        let (x, y) = (sample(1), sample(2));
        assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
        let (a, b, c) = (Zorn::basis(1), Zorn::basis(2), Zorn::basis(3));
        assert_ne!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn o0_is_malcev_not_lie() {
        let alg = o0();
        assert_eq!(alg.dim(), 7);
        assert!(!alg.is_lie());
    }
}
