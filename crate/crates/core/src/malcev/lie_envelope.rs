//! Lie(m) = Lie(m)+ ⊕ T_m with explicit structure constants.
//!
//! Conventions: `ad_a = λ_a - ρ_a` and `T_a = λ_a + ρ_a`, so `λ_a = (ad_a + T_a)/2`
//! and `ρ_a = (T_a - ad_a)/2`. With these the three λ/ρ relations hold exactly and
//! `ad_a` kills the unit of the induced module.

use std::sync::Arc;

use crate::exact::{q, qi, qzero_vec, unit_vec, Q};
use crate::report::IdentityRecord;

use super::{LiePlusModel, MalcevError, Structure};

pub const LAMBDA_RHO_ANCHORS: [&str; 3] = [
    "[λ_a,λ_b] = λ_[a,b] - 2[λ_a,ρ_b]",
    "[ρ_a,ρ_b] = -ρ_[a,b] - 2[λ_a,ρ_b]",
    "[λ_a,ρ_b] = [ρ_a,λ_b]",
];

#[derive(Clone, Debug)]
pub struct LieEnvelope {
    plus: Arc<LiePlusModel>,
    lie: Structure,
    lambda: Vec<Vec<Q>>,
    rho: Vec<Vec<Q>>,
}

impl LieEnvelope {
    /// Basis: the model basis (indices `0..p`), then `T_0..T_{n-1}` (indices `p..p+n`).
    pub fn build(plus: Arc<LiePlusModel>) -> Result<Self, MalcevError> {
        let p = plus.dim();
        let n = plus.algebra().dim();
        let alg = plus.algebra().clone();
        let dim = p + n;
        let embed = |v: &[Q]| -> Vec<Q> {
            let mut out = qzero_vec(dim);
            out[..p].clone_from_slice(v);
            out
        };
        let mut s = Structure::zero(dim);
        for i in 0..p {
            for j in (i + 1)..p {
                s.set(i, j, embed(plus.structure().basis_bracket(i, j)));
            }
            // [X_i, T_x] = T_{X_i . x}
            let m = plus.t_action_basis(i);
            for x in 0..n {
                let mut v = qzero_vec(dim);
                for k in 0..n {
                    v[p + k] = m.get(k, x).clone();
                }
                s.set(i, p + x, v);
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                // [T_a, T_b] = (2 ad_[a,b] + [ad_a, ad_b]) / 3
                let ab = plus.ad(&alg.bracket(&alg.e(a), &alg.e(b)));
                let comm = plus.bracket(plus.ad_basis(a), plus.ad_basis(b));
                let v: Vec<Q> = ab.iter().zip(&comm).map(|(x, y)| (x * qi(2) + y) * q(1, 3)).collect();
                s.set(p + a, p + b, embed(&v));
            }
        }
        if let Some(t) = s.jacobi_failure() {
            return Err(MalcevError::Jacobi(format!("{t:?}")));
        }
        let half = q(1, 2);
        let lambda = (0..n)
            .map(|a| {
                let mut v = embed(plus.ad_basis(a));
                v[p + a] += qi(1);
                v.iter().map(|x| x * &half).collect()
            })
            .collect();
        let rho = (0..n)
            .map(|a| {
                let mut v: Vec<Q> = embed(plus.ad_basis(a)).iter().map(|x| -x).collect();
                v[p + a] += qi(1);
                v.iter().map(|x| x * &half).collect()
            })
            .collect();
        Ok(LieEnvelope { plus, lie: s, lambda, rho })
    }

    pub fn plus(&self) -> &Arc<LiePlusModel> {
        &self.plus
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn plus_dim(&self) -> usize {
        self.plus.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.plus.algebra().dim()
    }

    pub fn structure(&self) -> &Structure {
        &self.lie
    }

    pub fn lambda(&self, a: usize) -> &[Q] {
        &self.lambda[a]
    }

    pub fn rho(&self, a: usize) -> &[Q] {
        &self.rho[a]
    }

    pub fn t(&self, a: usize) -> Vec<Q> {
        unit_vec(self.dim(), self.plus_dim() + a)
    }

    /// Embedding of a model vector.
    pub fn from_plus(&self, v: &[Q]) -> Vec<Q> {
        let mut out = qzero_vec(self.dim());
        out[..v.len()].clone_from_slice(v);
        out
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.lie.bracket(x, y)
    }

    pub fn jacobi_check(&self) -> IdentityRecord {
        IdentityRecord::single(
            "envelope-jacobi",
            "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
            self.lie.jacobi_failure().map(|t| format!("{t:?}")),
        )
    }

    /// `[T_a, T_a] = 0` and `[T_a, T_b] = -[T_b, T_a]`.
    pub fn t_antisymmetry(&self) -> bool {
        let n = self.m_dim();
        (0..n).all(|a| (0..n).all(|b| {
            let x = self.bracket(&self.t(a), &self.t(b));
            let y = self.bracket(&self.t(b), &self.t(a));
            x.iter().zip(&y).all(|(u, v)| u == &-v.clone())
        }))
    }

    pub fn lambda_rho_check(&self) -> Vec<IdentityRecord> {
        lambda_rho_relations(self, &self.lambda, &self.rho)
    }
}

/// The three λ/ρ relations for arbitrary candidate coordinate vectors.
pub fn lambda_rho_relations(env: &LieEnvelope, lambda: &[Vec<Q>], rho: &[Vec<Q>]) -> Vec<IdentityRecord> {
    let alg = env.plus().algebra().clone();
    let n = alg.dim();
    let lin = |vs: &[Vec<Q>], x: &[Q]| -> Vec<Q> {
        let mut out = qzero_vec(env.dim());
        for (i, c) in x.iter().enumerate() {
            crate::exact::axpy(&mut out, c, &vs[i]);
        }
        out
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let label = |a: usize, b: usize| format!("a={} b={}", alg.labels()[a], alg.labels()[b]);
    let br = |x: &[Q], y: &[Q]| env.bracket(x, y);
    let r1 = IdentityRecord::sweep("lambda-lambda", LAMBDA_RHO_ANCHORS[0], &pairs, |&(a, b)| {
        let lhs = br(&lambda[a], &lambda[b]);
        let ab = alg.bracket(&alg.e(a), &alg.e(b));
        let lr = br(&lambda[a], &rho[b]);
        let rhs: Vec<Q> = lin(lambda, &ab).iter().zip(&lr).map(|(x, y)| x - y * qi(2)).collect();
        (lhs != rhs).then(|| label(a, b))
    });
    let r2 = IdentityRecord::sweep("rho-rho", LAMBDA_RHO_ANCHORS[1], &pairs, |&(a, b)| {
        let lhs = br(&rho[a], &rho[b]);
        let ab = alg.bracket(&alg.e(a), &alg.e(b));
        let lr = br(&lambda[a], &rho[b]);
        let rhs: Vec<Q> = lin(rho, &ab).iter().zip(&lr).map(|(x, y)| -x - y * qi(2)).collect();
        (lhs != rhs).then(|| label(a, b))
    });
    let r3 = IdentityRecord::sweep("lambda-rho-symmetry", LAMBDA_RHO_ANCHORS[2], &pairs, |&(a, b)| {
        (br(&lambda[a], &rho[b]) != br(&rho[a], &lambda[b])).then(|| label(a, b))
    });
    vec![r1, r2, r3]
}

pub fn build_lie_envelope(plus: Arc<LiePlusModel>) -> Result<LieEnvelope, MalcevError> {
    LieEnvelope::build(plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{build_lie_plus, o0, sl2, PlusMode};

    fn sl2_env() -> LieEnvelope {
        let alg = Arc::new(sl2());
        LieEnvelope::build(Arc::new(build_lie_plus(&alg, PlusMode::SemisimpleLie).unwrap())).unwrap()
    }

    #[test]
    fn sl2_envelope_relations() {
        let env = sl2_env();
        assert_eq!(env.dim(), 9);
        assert!(env.t_antisymmetry());
        assert!(env.lambda_rho_check().iter().all(IdentityRecord::passed));
    }

    #[test]
    fn literal_rho_sign_breaks_relations() {
        // ρ_a = (ad_a - T_a)/2 together with λ_a = (ad_a + T_a)/2.
        let env = sl2_env();
        let n = env.m_dim();
        let rho_alt: Vec<Vec<Q>> = (0..n).map(|a| env.rho(a).iter().map(|x| -x).collect()).collect();
        let lambda: Vec<Vec<Q>> = (0..n).map(|a| env.lambda(a).to_vec()).collect();
        let recs = lambda_rho_relations(&env, &lambda, &rho_alt);
        assert!(!recs[0].passed());
    }

    #[test]
    fn o0_envelope_dimension() {
        let alg = Arc::new(o0());
        let plus = Arc::new(build_lie_plus(&alg, PlusMode::MultiplicationAlgebra).unwrap());
        let env = LieEnvelope::build(plus).unwrap();
        assert_eq!(env.dim(), 28);
        assert!(env.lambda_rho_check().iter().all(IdentityRecord::passed));
    }
}
