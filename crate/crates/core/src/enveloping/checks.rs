//! Identity sweeps over U(Lie(m)) and U(m).

use std::fmt::Display;

use crate::report::IdentityRecord;
use crate::sparse::{Lin, Monomial};

use super::{Elem, EnvError, Envelope, Op, OpTensor, Tensor, ULie};

pub const MOUFANG_HOPF_ANCHORS: [&str; 2] =
    ["Σ z1(u(z2 v)) = Σ ((z1 u)z2)v", "Σ ((v z1)u)z2 = Σ v(z1(u z2))"];
pub const NALT_ANCHOR: &str = "(a,y,z) = -(y,a,z) = (y,z,a)";
pub const LAMBDA_RECURSION_ANCHORS: [&str; 4] = [
    "λ_{za} = λ_z λ_a + [λ_z, ρ_a]",
    "ρ_{za} = ρ_a ρ_z + [λ_a, ρ_z]",
    "λ_{az} = λ_a λ_z + [ρ_a, λ_z]",
    "ρ_{az} = ρ_z ρ_a + [ρ_z, λ_a]",
];

/// `Ok(true)` passes; `Ok(false)` or an error becomes a witness.
fn verdict<E: Display>(r: Result<bool, E>, witness: impl FnOnce() -> String) -> Option<String> {
    match r {
        Ok(true) => None,
        Ok(false) => Some(witness()),
        Err(e) => Some(format!("{}: {e}", witness())),
    }
}

fn basis(m: &Monomial) -> Elem {
    Elem::basis(m.clone())
}

fn pairs(ms: &[Monomial], max_total: usize) -> Vec<(Monomial, Monomial)> {
    let mut out = Vec::new();
    for a in ms {
        for b in ms {
            if a.degree() + b.degree() <= max_total {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn triples(ms: &[Monomial], max_total: usize) -> Vec<(Monomial, Monomial, Monomial)> {
    let mut out = Vec::new();
    for a in ms {
        for b in ms {
            for c in ms {
                if a.degree() + b.degree() + c.degree() <= max_total {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}

/// PBW straightening is confluent on all letter-monomial triples within budget.
pub fn ulie_associativity_check(u: &ULie, max_deg: usize) -> IdentityRecord {
    let d = u.envelope().dim();
    let ms = crate::sparse::monomials_up_to(d, max_deg);
    let items = triples(&ms, max_deg);
    IdentityRecord::sweep("ulie-associativity", "(xy)z = x(yz) in U(Lie(m))", &items, |(a, b, c)| {
        let (a, b, c) = (Op::basis(a.clone()), Op::basis(b.clone()), Op::basis(c.clone()));
        let r = (|| -> Result<bool, EnvError> { Ok(u.mul(&u.mul(&a, &b)?, &c)? == u.mul(&a, &u.mul(&b, &c)?)?) })();
        verdict(r, || format!("{a:?} {b:?} {c:?}"))
    })
}

impl Envelope {
    fn show(&self, m: &Monomial) -> String {
        m.render(self.labels())
    }

    fn show3(&self, a: &Monomial, b: &Monomial, c: &Monomial) -> String {
        format!("{} | {} | {}", self.show(a), self.show(b), self.show(c))
    }

    fn show2(&self, a: &Monomial, b: &Monomial) -> String {
        format!("{} | {}", self.show(a), self.show(b))
    }

    /// Factorwise product of two tensors.
    pub fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Result<Tensor, EnvError> {
        let mut out = Tensor::zero();
        for ((a1, a2), ca) in x.iter() {
            for ((b1, b2), cb) in y.iter() {
                let l = self.mul_mono(a1, b1)?;
                let r = self.mul_mono(a2, b2)?;
                let c = ca * cb;
                for (m, cm) in l.iter() {
                    for (n, cn) in r.iter() {
                        out.add_term((m.clone(), n.clone()), &c * cm * cn);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `1·z = z = z·1` on every basis monomial.
    pub fn unit_check(&self) -> IdentityRecord {
        let ms = self.basis().to_vec();
        IdentityRecord::sweep("unit", "1·z = z = z·1", &ms, |m| {
            let z = basis(m);
            let one = Elem::one();
            let r = (|| -> Result<bool, EnvError> { Ok(self.mul(&one, &z)? == z && self.mul(&z, &one)? == z) })();
            verdict(r, || self.show(m))
        })
    }

    /// Products `a·b` with `a ≤ b` are PBW monomials.
    pub fn ordered_product_check(&self) -> IdentityRecord {
        let n = self.dim();
        let items: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        IdentityRecord::sweep("ordered-product", "a·b = ab for a ≤ b", &items, |&(a, b)| {
            let m = Monomial::from_slice(&[a as u16, b as u16]);
            verdict(self.mul(&self.prim(a), &self.prim(b)).map(|p| p == basis(&m)), || self.show(&m))
        })
    }

    /// `a·b - b·a = [a,b]` for primitives.
    pub fn commutator_check(&self) -> IdentityRecord {
        let n = self.dim();
        let items: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let alg = self.algebra().clone();
        IdentityRecord::sweep("primitive-commutator", "a·b - b·a = [a,b]", &items, |&(a, b)| {
            let r = (|| -> Result<bool, EnvError> {
                let (x, y) = (self.prim(a), self.prim(b));
                let lhs = self.mul(&x, &y)?.minus(&self.mul(&y, &x)?);
                let br = alg.bracket(&alg.e(a), &alg.e(b));
                let rhs: Elem = br.iter().enumerate().map(|(k, c)| (Monomial::letter(k), c.clone())).collect();
                Ok(lhs == rhs)
            })();
            verdict(r, || format!("{} {}", alg.labels()[a], alg.labels()[b]))
        })
    }

    /// Brute-force associativity on basis triples with total degree ≤ `max_deg`.
    pub fn associativity_check(&self, max_deg: usize) -> IdentityRecord {
        let items = triples(&self.basis_up_to(max_deg), max_deg);
        IdentityRecord::sweep("associativity", "(xy)z = x(yz)", &items, |(a, b, c)| {
            let r = (|| -> Result<bool, EnvError> {
                let (x, y, z) = (basis(a), basis(b), basis(c));
                Ok(self.mul(&self.mul(&x, &y)?, &z)? == self.mul(&x, &self.mul(&y, &z)?)?)
            })();
            verdict(r, || self.show3(a, b, c))
        })
    }

    /// Counit, coassociativity, cocommutativity on every basis monomial.
    pub fn coalgebra_checks(&self) -> Vec<IdentityRecord> {
        let ms = self.basis().to_vec();
        let counit = IdentityRecord::sweep("counit", "(ε⊗id)Δ(z) = z = (id⊗ε)Δ(z)", &ms, |m| {
            let r = self.coproduct_mono(m).map(|d| {
                let mut left = Elem::zero();
                let mut right = Elem::zero();
                for ((x, y), c) in d.iter() {
                    if x.is_one() {
                        left.add_term(y.clone(), c.clone());
                    }
                    if y.is_one() {
                        right.add_term(x.clone(), c.clone());
                    }
                }
                left == basis(m) && right == basis(m)
            });
            verdict(r, || self.show(m))
        });
        let coassoc = IdentityRecord::sweep("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                let d = self.coproduct_mono(m)?;
                let mut l: Lin<(Monomial, Monomial, Monomial)> = Lin::zero();
                let mut rr: Lin<(Monomial, Monomial, Monomial)> = Lin::zero();
                for ((x, y), c) in d.iter() {
                    for ((x1, x2), c1) in self.coproduct_mono(x)?.iter() {
                        l.add_term((x1.clone(), x2.clone(), y.clone()), c * c1);
                    }
                    for ((y1, y2), c1) in self.coproduct_mono(y)?.iter() {
                        rr.add_term((x.clone(), y1.clone(), y2.clone()), c * c1);
                    }
                }
                Ok(l == rr)
            })();
            verdict(r, || self.show(m))
        });
        let cocomm = IdentityRecord::sweep("cocommutativity", "τΔ = Δ", &ms, |m| {
            let r = self.coproduct_mono(m).map(|d| {
                let flipped: Tensor = d.iter().map(|((x, y), c)| ((y.clone(), x.clone()), c.clone())).collect();
                flipped == d
            });
            verdict(r, || self.show(m))
        });
        vec![counit, coassoc, cocomm]
    }

    /// `Δ(zw) = Δ(z)Δ(w)` and `ε(zw) = ε(z)ε(w)` for `deg z + deg w ≤ budget`.
    pub fn bialgebra_check(&self) -> IdentityRecord {
        let items = pairs(self.basis(), self.budget());
        IdentityRecord::sweep("coproduct-multiplicative", "Δ(zw) = Δ(z)Δ(w), ε(zw) = ε(z)ε(w)", &items, |(a, b)| {
            let r = (|| -> Result<bool, EnvError> {
                let zw = self.mul_mono(a, b)?;
                let lhs = self.coproduct(&zw)?;
                let rhs = self.tensor_mul(&self.coproduct_mono(a)?, &self.coproduct_mono(b)?)?;
                let eps = self.counit(&zw) == self.counit(&basis(a)) * self.counit(&basis(b));
                Ok(lhs == rhs && eps)
            })();
            verdict(r, || self.show2(a, b))
        })
    }

    /// S involutive, `ΣS(z1)z2 = ε(z)1 = Σz1S(z2)`, and `S(zw) = S(w)S(z)`.
    pub fn antipode_checks(&self) -> Vec<IdentityRecord> {
        let ms = self.basis().to_vec();
        let inv = IdentityRecord::sweep("antipode-involutive", "S(S(z)) = z", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> { Ok(self.antipode(&self.antipode_mono(m)?)? == basis(m)) })();
            verdict(r, || self.show(m))
        });
        let law = IdentityRecord::sweep("antipode-law", "Σ S(z1)z2 = ε(z)1 = Σ z1 S(z2)", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                let mut l = Elem::zero();
                let mut rr = Elem::zero();
                for ((x, y), c) in self.coproduct_mono(m)?.iter() {
                    l.add_scaled(&self.mul(&self.antipode_mono(x)?, &basis(y))?, c);
                    rr.add_scaled(&self.mul(&basis(x), &self.antipode_mono(y)?)?, c);
                }
                let eps = Elem::one().scaled(&self.counit(&basis(m)));
                Ok(l == eps && rr == eps)
            })();
            verdict(r, || self.show(m))
        });
        let items = pairs(self.basis(), self.budget());
        let anti = IdentityRecord::sweep("antipode-anti-automorphism", "S(zw) = S(w)S(z)", &items, |(a, b)| {
            let r = (|| -> Result<bool, EnvError> {
                let lhs = self.antipode(&self.mul_mono(a, b)?)?;
                let rhs = self.mul(&self.antipode_mono(b)?, &self.antipode_mono(a)?)?;
                Ok(lhs == rhs)
            })();
            verdict(r, || self.show2(a, b))
        });
        vec![inv, law, anti]
    }

    /// `S(λ_z) = λ_{S(z)}`, `S(ρ_z) = ρ_{S(z)}` and `σS(λ_z) = ρ_z`.
    pub fn antipode_lambda_checks(&self) -> Vec<IdentityRecord> {
        let ms = self.basis().to_vec();
        let u = self.ulie();
        let lam = IdentityRecord::sweep("antipode-lambda", "S(λ_z) = λ_{S(z)}", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                Ok(u.antipode(&self.lambda_mono(m)?)? == self.lambda_of(&self.antipode_mono(m)?)?)
            })();
            verdict(r, || self.show(m))
        });
        let rho = IdentityRecord::sweep("antipode-rho", "S(ρ_z) = ρ_{S(z)}", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                Ok(u.antipode(&self.rho_mono(m)?)? == self.rho_of(&self.antipode_mono(m)?)?)
            })();
            verdict(r, || self.show(m))
        });
        let sigma = IdentityRecord::sweep("sigma-antipode", "σS(λ_z) = ρ_z", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> { Ok(u.sigma(&u.antipode(&self.lambda_mono(m)?)?) == self.rho_mono(m)?) })();
            verdict(r, || self.show(m))
        });
        vec![lam, rho, sigma]
    }

    /// `Δ(λ_z) = Σ λ_{z1} ⊗ λ_{z2}` (and the same for ρ).
    pub fn delta_lambda_check(&self) -> IdentityRecord {
        let ms = self.basis().to_vec();
        IdentityRecord::sweep("delta-lambda", "Δ(λ_z) = Σ λ_{z1} ⊗ λ_{z2}", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                let d = self.coproduct_mono(m)?;
                let mut lam = OpTensor::zero();
                let mut rho = OpTensor::zero();
                for ((x, y), c) in d.iter() {
                    lam.add_scaled(&op_tensor(&self.lambda_mono(x)?, &self.lambda_mono(y)?), c);
                    rho.add_scaled(&op_tensor(&self.rho_mono(x)?, &self.rho_mono(y)?), c);
                }
                Ok(self.op_coproduct(&self.lambda_mono(m)?) == lam && self.op_coproduct(&self.rho_mono(m)?) == rho)
            })();
            verdict(r, || self.show(m))
        })
    }

    /// The four recursions for `λ`/`ρ` of `za` and `az`, all monomials `z` with `deg z < budget`.
    pub fn lambda_recursion_checks(&self) -> Vec<IdentityRecord> {
        let u = self.ulie();
        let n = self.dim();
        let items: Vec<(Monomial, usize)> = self
            .basis_up_to(self.budget().saturating_sub(1))
            .into_iter()
            .flat_map(|m| (0..n).map(move |a| (m.clone(), a)))
            .collect();
        let run = |k: usize| {
            IdentityRecord::sweep(&format!("lambda-recursion-{}", k + 1), LAMBDA_RECURSION_ANCHORS[k], &items, |(m, a)| {
                let r = (|| -> Result<bool, EnvError> {
                    let z = basis(m);
                    let pa = self.prim(*a);
                    let (lz, rz) = (self.lambda_mono(m)?, self.rho_mono(m)?);
                    let (la, ra) = (self.lambda_of(&pa)?, self.rho_of(&pa)?);
                    Ok(match k {
                        0 => self.lambda_of(&self.mul(&z, &pa)?)? == u.mul(&lz, &la)?.plus(&u.commutator(&lz, &ra)?),
                        1 => self.rho_of(&self.mul(&z, &pa)?)? == u.mul(&ra, &rz)?.plus(&u.commutator(&la, &rz)?),
                        2 => self.lambda_of(&self.mul(&pa, &z)?)? == u.mul(&la, &lz)?.plus(&u.commutator(&ra, &lz)?),
                        _ => self.rho_of(&self.mul(&pa, &z)?)? == u.mul(&rz, &ra)?.plus(&u.commutator(&rz, &la)?),
                    })
                })();
                verdict(r, || format!("z={} a={}", self.show(m), self.labels()[*a]))
            })
        };
        (0..4).map(run).collect()
    }

    /// Both division laws, and agreement of the antipode formulas with the recursive ones.
    pub fn division_checks(&self) -> Vec<IdentityRecord> {
        let items = pairs(self.basis(), self.budget());
        let left = IdentityRecord::sweep("left-division", "Σ z1\\(z2 v) = ε(z)v, z\\v = S(z)v", &items, |(a, v)| {
            let r = (|| -> Result<bool, EnvError> {
                let (z, v) = (basis(a), basis(v));
                let mut sum = Elem::zero();
                for ((x, y), c) in self.coproduct_mono(a)?.iter() {
                    sum.add_scaled(&self.left_divide(&basis(x), &self.mul(&basis(y), &v)?)?, c);
                }
                let law = sum == v.scaled(&self.counit(&z));
                Ok(law && self.left_divide(&z, &v)? == self.left_divide_recursive(&z, &v)?)
            })();
            verdict(r, || self.show2(a, v))
        });
        let right = IdentityRecord::sweep("right-division", "Σ (v z1)/z2 = ε(z)v, v/z = vS(z)", &items, |(a, v)| {
            let r = (|| -> Result<bool, EnvError> {
                let (z, v) = (basis(a), basis(v));
                let mut sum = Elem::zero();
                for ((x, y), c) in self.coproduct_mono(a)?.iter() {
                    sum.add_scaled(&self.right_divide(&self.mul(&v, &basis(x))?, &basis(y))?, c);
                }
                let law = sum == v.scaled(&self.counit(&z));
                Ok(law && self.right_divide(&v, &z)? == self.right_divide_recursive(&v, &z)?)
            })();
            verdict(r, || self.show2(a, v))
        });
        vec![left, right]
    }

    /// Both formal Moufang identities on basis triples of total degree ≤ `max_deg`.
    pub fn moufang_hopf_check(&self, max_deg: usize) -> Vec<IdentityRecord> {
        let items = triples(&self.basis_up_to(max_deg), max_deg);
        let first = IdentityRecord::sweep("moufang-hopf-left", MOUFANG_HOPF_ANCHORS[0], &items, |(zm, um, vm)| {
            let r = (|| -> Result<bool, EnvError> {
                let (u, v) = (basis(um), basis(vm));
                let mut l = Elem::zero();
                let mut rr = Elem::zero();
                for ((x, y), c) in self.coproduct_mono(zm)?.iter() {
                    let (z1, z2) = (basis(x), basis(y));
                    l.add_scaled(&self.mul(&z1, &self.mul(&u, &self.mul(&z2, &v)?)?)?, c);
                    rr.add_scaled(&self.mul(&self.mul(&self.mul(&z1, &u)?, &z2)?, &v)?, c);
                }
                Ok(l == rr)
            })();
            verdict(r, || self.show3(zm, um, vm))
        });
        let second = IdentityRecord::sweep("moufang-hopf-right", MOUFANG_HOPF_ANCHORS[1], &items, |(zm, um, vm)| {
            let r = (|| -> Result<bool, EnvError> {
                let (u, v) = (basis(um), basis(vm));
                let mut l = Elem::zero();
                let mut rr = Elem::zero();
                for ((x, y), c) in self.coproduct_mono(zm)?.iter() {
                    let (z1, z2) = (basis(x), basis(y));
                    l.add_scaled(&self.mul(&self.mul(&self.mul(&v, &z1)?, &u)?, &z2)?, c);
                    rr.add_scaled(&self.mul(&v, &self.mul(&z1, &self.mul(&u, &z2)?)?)?, c);
                }
                Ok(l == rr)
            })();
            verdict(r, || self.show3(zm, um, vm))
        });
        vec![first, second]
    }

    /// `r(z,w)`, `s(z,w)` have no T letters for all pairs of total degree ≤ `max_total`.
    pub fn rs_plus_only_check(&self, max_total: usize) -> Vec<IdentityRecord> {
        let items = pairs(self.basis(), max_total);
        let u = self.ulie();
        let results: Vec<Result<(Op, Op), EnvError>> = crate::par::map(&items, |(a, b)| self.rs_mono(a, b));
        let mut r_rec = IdentityRecord::new("r-plus-only", "r(z,w) ∈ U(Lie(m)+)");
        let mut s_rec = IdentityRecord::new("s-plus-only", "s(z,w) ∈ U(Lie(m)+)");
        for ((a, b), res) in items.iter().zip(results) {
            let w = || self.show2(a, b);
            let (rv, sv) = match res {
                Ok((r, s)) => (Ok(u.is_plus_only(&r)), Ok(u.is_plus_only(&s))),
                Err(e) => (Err(e.clone()), Err(e)),
            };
            r_rec.absorb(IdentityRecord::single("", "", verdict(rv, w)));
            s_rec.absorb(IdentityRecord::single("", "", verdict(sv, w)));
        }
        vec![r_rec, s_rec]
    }

    /// `r(1,z) = r(z,1) = s(1,z) = ε(z)1`.
    pub fn rs_unit_check(&self) -> IdentityRecord {
        let ms = self.basis().to_vec();
        IdentityRecord::sweep("rs-unit", "r(1,z) = r(z,1) = s(1,z) = ε(z)1", &ms, |m| {
            let r = (|| -> Result<bool, EnvError> {
                let want = Op::one().scaled(&self.counit(&basis(m)));
                let one = Monomial::one();
                Ok(self.rs_mono(&one, m)?.0 == want && self.rs_mono(m, &one)?.0 == want && self.rs_mono(&one, m)?.1 == want)
            })();
            verdict(r, || self.show(m))
        })
    }

    /// Primitives of m inside Nalt(U(m)), tested against basis pairs of total degree ≤ budget - 1.
    pub fn nalt_primitives_check(&self) -> IdentityRecord {
        let gens: Vec<(String, Elem)> = (0..self.dim()).map(|a| (self.labels()[a].clone(), self.prim(a))).collect();
        let others: Vec<(String, Elem)> =
            self.basis_up_to(self.budget().saturating_sub(1)).iter().map(|m| (self.show(m), basis(m))).collect();
        nalt_check(self, &gens, &others)
    }
}

fn op_tensor(a: &Op, b: &Op) -> OpTensor {
    let mut out = OpTensor::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term((x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

/// An algebra with a bilinear product on sparse combinations of some basis.
pub trait ProductAlgebra: Sync {
    type Key: Ord + Clone + Send + Sync;
    type Error: Display;
    fn product(&self, x: &Lin<Self::Key>, y: &Lin<Self::Key>) -> Result<Lin<Self::Key>, Self::Error>;
    /// Whether every product among `xs` stays within the truncation.
    fn fits(&self, xs: &[&Lin<Self::Key>]) -> bool;
}

impl ProductAlgebra for Envelope {
    type Key = Monomial;
    type Error = EnvError;
    fn product(&self, x: &Elem, y: &Elem) -> Result<Elem, EnvError> {
        self.mul(x, y)
    }
    fn fits(&self, xs: &[&Elem]) -> bool {
        xs.iter().map(|x| x.max_degree()).sum::<usize>() <= self.budget()
    }
}

pub fn associator<A: ProductAlgebra>(
    alg: &A,
    x: &Lin<A::Key>,
    y: &Lin<A::Key>,
    z: &Lin<A::Key>,
) -> Result<Lin<A::Key>, A::Error> {
    Ok(alg.product(&alg.product(x, y)?, z)?.minus(&alg.product(x, &alg.product(y, z)?)?))
}

/// Each generator `a` satisfies `(a,y,z) = -(y,a,z) = (y,z,a)` for all `y,z` in `others`
/// whose combination with `a` fits the truncation.
pub fn nalt_check<A: ProductAlgebra>(
    alg: &A,
    gens: &[(String, Lin<A::Key>)],
    others: &[(String, Lin<A::Key>)],
) -> IdentityRecord {
    let mut items = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for (yi, y) in others.iter().enumerate() {
            for (zi, z) in others.iter().enumerate() {
                if alg.fits(&[&g.1, &y.1, &z.1]) {
                    items.push((gi, yi, zi));
                }
            }
        }
    }
    IdentityRecord::sweep("nalt", NALT_ANCHOR, &items, |&(gi, yi, zi)| {
        let (a, y, z) = (&gens[gi].1, &others[yi].1, &others[zi].1);
        let r = (|| -> Result<bool, A::Error> {
            let ayz = associator(alg, a, y, z)?;
            let yaz = associator(alg, y, a, z)?;
            let yza = associator(alg, y, z, a)?;
            Ok(ayz == yaz.neg() && ayz == yza)
        })();
        verdict(r, || format!("a={} y={} z={}", gens[gi].0, others[yi].0, others[zi].0))
    })
}
