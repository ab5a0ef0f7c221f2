//! Truncated universal enveloping algebra of Lie(m) with PBW straightening.
//!
//! Letters `0..p` are the Lie(m)+ basis, `p..p+n` are the T basis, so a sorted
//! monomial lists plus letters before T letters.

use std::sync::Arc;

use dashmap::DashMap;
use num_traits::{One, Zero};

use crate::exact::{qi, Q};
use crate::malcev::LieEnvelope;
use crate::sparse::{Lin, Monomial};

use super::EnvError;

/// Element of U(Lie(m)).
pub type Op = Lin<Monomial>;
/// Element of U(Lie(m)) ⊗ U(Lie(m)).
pub type OpTensor = Lin<(Monomial, Monomial)>;

pub struct ULie {
    env: Arc<LieEnvelope>,
    budget: usize,
    consts: Vec<Vec<Vec<(u16, Q)>>>,
    cache: DashMap<(Monomial, u16), Op>,
}

impl ULie {
    pub fn new(env: Arc<LieEnvelope>, budget: usize) -> Self {
        let d = env.dim();
        let consts = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        env.structure()
                            .basis_bracket(i, j)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k as u16, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ULie { env, budget, consts, cache: DashMap::new() }
    }

    pub fn envelope(&self) -> &Arc<LieEnvelope> {
        &self.env
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn plus_dim(&self) -> usize {
        self.env.plus_dim()
    }

    fn check(&self, deg: usize) -> Result<(), EnvError> {
        if deg > self.budget {
            return Err(EnvError::Budget { needed: deg, budget: self.budget });
        }
        Ok(())
    }

    /// Degree-one element with the given Lie(m) coordinates.
    pub fn from_vec(&self, v: &[Q]) -> Op {
        v.iter().enumerate().map(|(i, c)| (Monomial::letter(i), c.clone())).collect()
    }

    pub fn letter(&self, i: usize) -> Op {
        Op::basis(Monomial::letter(i))
    }

    /// `m * x` for a PBW monomial `m` and a letter `x`.
    pub fn right_mul_letter(&self, m: &Monomial, x: u16) -> Result<Op, EnvError> {
        self.check(m.degree() + 1)?;
        if m.last().map_or(true, |y| y <= x) {
            return Ok(Op::basis(m.push(x)));
        }
        if let Some(hit) = self.cache.get(&(m.clone(), x)) {
            return Ok(hit.clone());
        }
        // m' y x = (m' x) y + m' [y, x]
        let y = m.last().expect("nonempty");
        let head = m.init();
        let mut out = Op::zero();
        for (t, c) in self.right_mul_letter(&head, x)?.iter() {
            out.add_scaled(&self.right_mul_letter(t, y)?, c);
        }
        for (z, c) in &self.consts[y as usize][x as usize] {
            out.add_scaled(&self.right_mul_letter(&head, *z)?, c);
        }
        self.cache.insert((m.clone(), x), out.clone());
        Ok(out)
    }

    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Result<Op, EnvError> {
        self.check(a.degree() + b.degree())?;
        let mut cur = Op::basis(a.clone());
        for &x in b.letters() {
            let mut next = Op::zero();
            for (t, c) in cur.iter() {
                next.add_scaled(&self.right_mul_letter(t, x)?, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn mul(&self, a: &Op, b: &Op) -> Result<Op, EnvError> {
        self.check(a.max_degree() + b.max_degree())?;
        let mut out = Op::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                out.add_scaled(&self.mul_mono(ma, mb)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, a: &Op, b: &Op) -> Result<Op, EnvError> {
        Ok(self.mul(a, b)?.minus(&self.mul(b, a)?))
    }

    /// `S(x_1...x_k) = (-1)^k x_k ... x_1`.
    pub fn antipode(&self, a: &Op) -> Result<Op, EnvError> {
        a.try_map_linear(|m| {
            let mut cur = Op::one();
            for &x in m.letters().iter().rev() {
                let mut next = Op::zero();
                for (t, c) in cur.iter() {
                    next.add_scaled(&self.right_mul_letter(t, x)?, c);
                }
                cur = next;
            }
            let sign = if m.degree() % 2 == 0 { Q::one() } else { -Q::one() };
            Ok(cur.scaled(&sign))
        })
    }

    /// Letters are primitive, so Δ of a monomial sums over ordered sub-sequences.
    pub fn coproduct(&self, a: &Op) -> OpTensor {
        let mut out = OpTensor::zero();
        for (m, c) in a.iter() {
            for (x, y) in m.splits() {
                out.add_term((x, y), c.clone());
            }
        }
        out
    }

    pub fn counit(&self, a: &Op) -> Q {
        a.constant()
    }

    /// No monomial contains a T letter.
    pub fn is_plus_only(&self, a: &Op) -> bool {
        let p = self.plus_dim() as u16;
        a.keys().all(|m| m.letters().iter().all(|&x| x < p))
    }

    pub fn tensor_mul(&self, a: &OpTensor, b: &OpTensor) -> Result<OpTensor, EnvError> {
        let mut out = OpTensor::zero();
        for ((a1, a2), ca) in a.iter() {
            for ((b1, b2), cb) in b.iter() {
                let l = self.mul_mono(a1, b1)?;
                let r = self.mul_mono(a2, b2)?;
                let c = ca * cb;
                for (x, cx) in l.iter() {
                    for (y, cy) in r.iter() {
                        out.add_term((x.clone(), y.clone()), &c * cx * cy);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The automorphism fixing Lie(m)+ and negating T (it swaps λ_a with -ρ_a).
    pub fn sigma(&self, a: &Op) -> Op {
        let p = self.plus_dim() as u16;
        a.iter()
            .map(|(m, c)| {
                let t = m.letters().iter().filter(|&&x| x >= p).count();
                let s = if t % 2 == 0 { c.clone() } else { -c.clone() };
                (m.clone(), s)
            })
            .collect()
    }

    pub fn scalar(&self, c: i64) -> Op {
        Op::term(Monomial::one(), qi(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::malcev::{build_lie_envelope, build_lie_plus, sl2, PlusMode};
    use crate::sparse::monomials_up_to;

    fn ulie(budget: usize) -> ULie {
        let alg = Arc::new(sl2());
        let plus = Arc::new(build_lie_plus(&alg, PlusMode::SemisimpleLie).unwrap());
        ULie::new(Arc::new(build_lie_envelope(plus).unwrap()), budget)
    }

    #[test]
    fn straightening_one_step() {
        let u = ulie(3);
        // e_j e_i = e_i e_j - [e_i, e_j]
        for i in 0..9u16 {
            for j in (i + 1)..9u16 {
                let got = u.mul_mono(&Monomial::letter(j as usize), &Monomial::letter(i as usize)).unwrap();
                let mut want = Op::basis(Monomial::from_slice(&[i, j]));
                let br = u.from_vec(u.envelope().structure().basis_bracket(i as usize, j as usize));
                want.sub_assign(&br);
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn associative_on_small_triples() {
        let u = ulie(3);
        let ms: Vec<Monomial> = monomials_up_to(9, 1);
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    let l = u.mul(&u.mul(&Op::basis(a.clone()), &Op::basis(b.clone())).unwrap(), &Op::basis(c.clone()));
                    let r = u.mul(&Op::basis(a.clone()), &u.mul(&Op::basis(b.clone()), &Op::basis(c.clone())).unwrap());
                    assert_eq!(l.unwrap(), r.unwrap());
                }
            }
        }
    }

    #[test]
    fn budget_refused() {
        let u = ulie(2);
        let x = Monomial::from_slice(&[0, 1]);
        assert!(matches!(u.mul_mono(&x, &Monomial::letter(2)), Err(EnvError::Budget { needed: 3, budget: 2 })));
        assert_eq!(u.mul_mono(&x, &Monomial::one()).unwrap(), Op::basis(x));
    }

    #[test]
    fn antipode_involutive() {
        let u = ulie(3);
        for m in monomials_up_to(9, 2) {
            let a = Op::basis(m);
            assert_eq!(u.antipode(&u.antipode(&a).unwrap()).unwrap(), a);
        }
    }
}
