//! Verification sweeps for the smash algebra.

use std::fmt::Display;

use num_traits::Zero;

use crate::enveloping::{associator, nalt_check, Elem, Envelope, Op, ProductAlgebra};
use crate::exact::{QMatrix, Q};
use crate::report::IdentityRecord;
use crate::sparse::Monomial;

use super::algebra::{IsoMap, Key, SElem, STensor, SmashAlgebra};
use super::poly::{poly_mul, Poly};
use super::SmashError;

pub const PRODUCT_ANCHOR: &str = "xb·x'b' = Σ (r(b1,b'1)x · s(b2,b'2)x')·b3 b'3";
pub const PRODUCT_LEFT_ANCHOR: &str = "bx·b'x' = Σ b1 b'1·(s̄(b2,b'2)x · l(b3,b'3)x')";
pub const S1_ANCHOR: &str =
    "r(ab',b'') + r(b'a,b'') - r(b',ab'') + Σ r(b'1,b'')s(a,b'2) - Σ s(a,b'1 b''1)r(b'2,b''2) + Σ r(b'1,b'')r(b'2,a) = 0";
pub const S2_ANCHOR: &str =
    "s(ab',b'') + s(b'a,b'') - s(b',ab'') - Σ s(a,b'1 b''1)s(b'2,b''2) - Σ s(b',b''1)s(a,b''2) = 0";
pub const RELATIVE_ANCHORS: [&str; 2] = ["Σ b1(u(b2 v)) = Σ ((b1 u)b2)v", "Σ ((v b1)u)b2 = Σ v(b1(u b2))"];

fn verdict<E: Display>(r: Result<bool, E>, witness: impl FnOnce() -> String) -> Option<String> {
    match r {
        Ok(true) => None,
        Ok(false) => Some(witness()),
        Err(e) => Some(format!("{}: {e}", witness())),
    }
}

fn key(x: &Monomial, b: &Monomial) -> SElem {
    SElem::basis((x.clone(), b.clone()))
}

fn u_elem(b: &Monomial) -> SElem {
    key(&Monomial::one(), b)
}

fn v_elem(x: &Monomial) -> SElem {
    key(x, &Monomial::one())
}

fn in_fiber(u: &SElem) -> bool {
    u.keys().all(|(_, b)| b.is_one())
}

impl ProductAlgebra for SmashAlgebra {
    type Key = Key;
    type Error = SmashError;
    fn product(&self, x: &SElem, y: &SElem) -> Result<SElem, SmashError> {
        self.mul(x, y)
    }
    fn fits(&self, xs: &[&SElem]) -> bool {
        let (mut dv, mut du) = (0, 0);
        for x in xs {
            dv += x.keys().map(|k| k.0.degree()).max().unwrap_or(0);
            du += x.keys().map(|k| k.1.degree()).max().unwrap_or(0);
        }
        dv <= self.deg_v() && du <= self.deg_env()
    }
}

impl SmashAlgebra {
    fn show(&self, k: &Key) -> String {
        self.render(&SElem::basis(k.clone()))
    }

    fn basis_pairs(&self) -> Vec<(Key, Key)> {
        let mut out = Vec::new();
        for a in self.basis() {
            for b in self.basis() {
                if a.0.degree() + b.0.degree() <= self.deg_v() && a.1.degree() + b.1.degree() <= self.deg_env() {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn poly_basis(&self) -> Vec<Monomial> {
        self.action().basis().to_vec()
    }

    fn env_basis(&self, max: usize) -> Vec<Monomial> {
        self.envelope().basis_up_to(max)
    }

    /// The product recomputed from scratch: fresh r/s elements acting on k[V] monomial by monomial.
    pub fn mul_basis_reference(&self, u: &Key, v: &Key) -> Result<SElem, SmashError> {
        let env = self.envelope();
        let ((x, b), (x2, b2)) = (u, v);
        let mut out = SElem::zero();
        for ((p1, p2, p3), cp) in self.delta2(b)?.iter() {
            for ((q1, q2, q3), cq) in self.delta2(b2)?.iter() {
                let (r, _) = env.rs_elements(&Elem::basis(p1.clone()), &Elem::basis(q1.clone())).map_err(SmashError::Env)?;
                let (_, s) = env.rs_elements(&Elem::basis(p2.clone()), &Elem::basis(q2.clone())).map_err(SmashError::Env)?;
                let rx = self.action().act(&r, &Poly::basis(x.clone()))?;
                let sx = self.action().act(&s, &Poly::basis(x2.clone()))?;
                let bb = env.mul_mono(p3, q3).map_err(SmashError::Env)?;
                for (m, cm) in poly_mul(&rx, &sx).iter() {
                    for (n, cn) in bb.iter() {
                        out.add_term((m.clone(), n.clone()), cp * cq * cm * cn);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Unit, restrictions to k[V] and U(m), `x·b = x⊗b`, the r/s operator path, agreement of
    /// the isotropy maps r,s with the operators r,s on F(A), and the second product formula.
    pub fn product_paths_check(&self) -> Vec<IdentityRecord> {
        let one = Self::one();
        let basis = self.basis().to_vec();
        let unit = IdentityRecord::sweep("smash-unit", "1·u = u = u·1", &basis, |k| {
            let u = SElem::basis(k.clone());
            let r = (|| -> Result<bool, SmashError> { Ok(self.mul(&one, &u)? == u && self.mul(&u, &one)? == u) })();
            verdict(r, || self.show(k))
        });
        let split = IdentityRecord::sweep("split-product", "(x⊗1)(1⊗b) = x⊗b", &basis, |(x, b)| {
            verdict(self.mul(&v_elem(x), &u_elem(b)).map(|p| p == key(x, b)), || self.show(&(x.clone(), b.clone())))
        });
        let pairs = self.basis_pairs();
        let restrict = IdentityRecord::sweep(
            "restrictions",
            "(x⊗1)(x'⊗1) = xx'⊗1, (1⊗b)(1⊗b') = 1⊗bb'",
            &pairs,
            |(a, b)| {
                let r = (|| -> Result<bool, SmashError> {
                    let v = self.mul(&v_elem(&a.0), &v_elem(&b.0))? == key(&a.0.merge(&b.0), &Monomial::one());
                    let bb = self.envelope().mul_mono(&a.1, &b.1).map_err(SmashError::Env)?;
                    let u = self.mul(&u_elem(&a.1), &u_elem(&b.1))? == Self::zero_section(&bb);
                    Ok(v && u)
                })();
                verdict(r, || format!("{} | {}", self.show(a), self.show(b)))
            },
        );
        let reference = IdentityRecord::sweep("product-operator-path", PRODUCT_ANCHOR, &pairs, |(a, b)| {
            let r = (|| -> Result<bool, SmashError> { Ok(self.mul_basis(a, b)? == self.mul_basis_reference(a, b)?) })();
            verdict(r, || format!("{} | {}", self.show(a), self.show(b)))
        });
        let agree_items: Vec<(Monomial, Monomial, Monomial)> = self.iso_items(self.deg_env());
        let agree = IdentityRecord::sweep(
            "isotropy-matches-operators",
            "r(b,b'), s(b,b') computed in A agree with the operators r, s on F(A)",
            &agree_items,
            |(b, b2, x)| {
                let r = (|| -> Result<bool, SmashError> {
                    let maps = self.rs_maps(b, b2)?;
                    let px = Poly::basis(x.clone());
                    let want_r = Self::from_poly(&super::poly::apply_map(&maps.0, &px));
                    let want_s = Self::from_poly(&super::poly::apply_map(&maps.1, &px));
                    Ok(self.isotropy(IsoMap::R, b, b2, &v_elem(x))? == want_r
                        && self.isotropy(IsoMap::S, b, b2, &v_elem(x))? == want_s)
                })();
                verdict(r, || format!("b={:?} b'={:?} x={:?}", b, b2, x))
            },
        );
        let left_items = self.left_formula_items();
        let left = IdentityRecord::sweep("product-left-formula", PRODUCT_LEFT_ANCHOR, &left_items, |(b, x, b2, x2)| {
            let r = (|| -> Result<bool, SmashError> {
                let lhs = self.mul(&self.mul(&u_elem(b), &v_elem(x))?, &self.mul(&u_elem(b2), &v_elem(x2))?)?;
                let mut rhs = SElem::zero();
                for ((p1, p2, p3), cp) in self.delta2(b)?.iter() {
                    for ((q1, q2, q3), cq) in self.delta2(b2)?.iter() {
                        let sx = self.isotropy(IsoMap::SBar, p2, q2, &v_elem(x))?;
                        let lx = self.isotropy(IsoMap::L, p3, q3, &v_elem(x2))?;
                        let pre = Self::zero_section(&self.envelope().mul_mono(p1, q1).map_err(SmashError::Env)?);
                        rhs.add_scaled(&self.mul(&pre, &self.mul(&sx, &lx)?)?, &(cp * cq));
                    }
                }
                Ok(lhs == rhs)
            })();
            verdict(r, || format!("b={b:?} x={x:?} b'={b2:?} x'={x2:?}"))
        });
        vec![unit, split, restrict, reference, agree, left]
    }

    /// `(b, b', x)` with `deg b + deg b' ≤ max_u`, x over k[V].
    fn iso_items(&self, max_u: usize) -> Vec<(Monomial, Monomial, Monomial)> {
        let mut out = Vec::new();
        let eb = self.env_basis(max_u);
        for b in &eb {
            for b2 in &eb {
                if b.degree() + b2.degree() > max_u {
                    continue;
                }
                for x in self.poly_basis() {
                    out.push((b.clone(), b2.clone(), x));
                }
            }
        }
        out
    }

    fn left_formula_items(&self) -> Vec<(Monomial, Monomial, Monomial, Monomial)> {
        let mut out = Vec::new();
        let eb = self.env_basis(self.deg_env());
        let pb = self.poly_basis();
        for b in &eb {
            for b2 in &eb {
                if b.degree() + b2.degree() > self.deg_env() {
                    continue;
                }
                for x in &pb {
                    for x2 in &pb {
                        if x.degree() + x2.degree() <= self.deg_v() && x.degree() <= 1 && x2.degree() <= 1 {
                            out.push((b.clone(), x.clone(), b2.clone(), x2.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    /// `Δ(uv) = Δ(u)Δ(v)` and `ε(uv) = ε(u)ε(v)`.
    pub fn bialgebra_check(&self) -> IdentityRecord {
        let pairs = self.basis_pairs();
        IdentityRecord::sweep("smash-bialgebra", "Δ(uv) = Δ(u)Δ(v), ε(uv) = ε(u)ε(v)", &pairs, |(a, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let uv = self.mul_basis(a, b)?;
                let lhs = self.coproduct(&uv)?;
                let rhs = self.tensor_mul(&self.coproduct_basis(a)?, &self.coproduct_basis(b)?)?;
                let ua = SElem::basis(a.clone());
                let ub = SElem::basis(b.clone());
                Ok(lhs == rhs && Self::counit(&uv) == Self::counit(&ua) * Self::counit(&ub))
            })();
            verdict(r, || format!("{} | {}", self.show(a), self.show(b)))
        })
    }

    /// `x(x'b) = (xx')b`, `(bx)x' = b(xx')`, `(xb)x' = x(bx')`.
    pub fn mixed_associativity_check(&self) -> IdentityRecord {
        let mut items = Vec::new();
        for x in self.poly_basis() {
            for x2 in self.poly_basis() {
                if x.degree() + x2.degree() > self.deg_v() {
                    continue;
                }
                for b in self.envelope().basis() {
                    items.push((x.clone(), x2.clone(), b.clone()));
                }
            }
        }
        IdentityRecord::sweep("mixed-associativity", "x(x'b) = (xx')b, (bx)x' = b(xx'), (xb)x' = x(bx')", &items, |(x, x2, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let (vx, vx2, ub) = (v_elem(x), v_elem(x2), u_elem(b));
                let xx = self.mul(&vx, &vx2)?;
                let a = self.mul(&vx, &self.mul(&vx2, &ub)?)? == self.mul(&xx, &ub)?;
                let c = self.mul(&self.mul(&ub, &vx)?, &vx2)? == self.mul(&ub, &xx)?;
                let d = self.mul(&self.mul(&vx, &ub)?, &vx2)? == self.mul(&vx, &self.mul(&ub, &vx2)?)?;
                Ok(a && c && d)
            })();
            verdict(r, || format!("x={x:?} x'={x2:?} b={b:?}"))
        })
    }

    /// The abelian group object (π, ⊞, ⊟, 0) over U(m).
    pub fn comma_abelian_group_check(&self) -> Vec<IdentityRecord> {
        let mut out = Vec::new();
        let eb = self.envelope().basis().to_vec();
        out.push(IdentityRecord::sweep("projection-zero-section", "π(0(b)) = b", &eb, |b| {
            let e = Elem::basis(b.clone());
            (Self::project(&Self::zero_section(&e)) != e).then(|| format!("{b:?}"))
        }));
        let pairs: Vec<(Monomial, Monomial)> = eb
            .iter()
            .flat_map(|a| eb.iter().filter(move |b| a.degree() + b.degree() <= self.deg_env()).map(move |b| (a.clone(), b.clone())))
            .collect();
        out.push(IdentityRecord::sweep("zero-section-multiplicative", "0(b)0(b') = 0(bb')", &pairs, |(a, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let bb = self.envelope().mul_mono(a, b).map_err(SmashError::Env)?;
                Ok(self.mul(&u_elem(a), &u_elem(b))? == Self::zero_section(&bb))
            })();
            verdict(r, || format!("{a:?} {b:?}"))
        }));
        let basis = self.basis().to_vec();
        out.push(IdentityRecord::sweep(
            "boxplus-zero",
            "⊞(Σ x⊗b1 ⊗ 1⊗b2) = x⊗b = ⊞(Σ 1⊗b1 ⊗ x⊗b2)",
            &basis,
            |(x, b)| {
                let r = (|| -> Result<bool, SmashError> {
                    let one = Monomial::one();
                    Ok(self.boxplus(&self.fibered(x, &one, b)?) == key(x, b) && self.boxplus(&self.fibered(&one, x, b)?) == key(x, b))
                })();
                verdict(r, || self.show(&(x.clone(), b.clone())))
            },
        ));
        out.push(IdentityRecord::sweep("boxminus-inverse", "⊞(Σ ⊟(u1) ⊗ u2) = ε(x)·0(b)", &basis, |(x, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let d = self.coproduct_basis(&(x.clone(), b.clone()))?;
                let mut w = STensor::zero();
                for ((u1, u2), c) in d.iter() {
                    for (k, ck) in Self::boxminus(&SElem::basis(u1.clone())).iter() {
                        w.add_term((k.clone(), u2.clone()), c * ck);
                    }
                }
                let eps = if x.is_one() { Q::from_integer(1.into()) } else { Q::zero() };
                Ok(self.boxplus(&w) == u_elem(b).scaled(&eps))
            })();
            verdict(r, || self.show(&(x.clone(), b.clone())))
        }));
        let fib = self.fibered_items();
        out.push(IdentityRecord::sweep("boxplus-commutative", "⊞∘τ = ⊞", &fib, |(x, x2, b)| {
            let r = (|| -> Result<bool, SmashError> {
                Ok(self.boxplus(&self.fibered(x, x2, b)?) == self.boxplus(&self.fibered(x2, x, b)?))
            })();
            verdict(r, || format!("x={x:?} x'={x2:?} b={b:?}"))
        }));
        out.push(IdentityRecord::sweep("boxplus-associative", "⊞(⊞⊗id) = ⊞(id⊗⊞)", &fib, |(x, x2, b)| {
            // x ⊞ (x' ⊞ 1) against (x ⊞ x') ⊞ 1 through the iterated coproduct.
            let r = (|| -> Result<bool, SmashError> {
                let one = Monomial::one();
                let mut left = SElem::zero();
                let mut right = SElem::zero();
                for ((p1, p2, p3), c) in self.delta2(b)?.iter() {
                    let inner_r = self.boxplus(&self.fibered_pair((x2, p2), (&one, p3))?);
                    let inner_l = self.boxplus(&self.fibered_pair((x, p1), (x2, p2))?);
                    left.add_scaled(&self.boxplus_elems(&inner_l, &key(&one, p3))?, c);
                    right.add_scaled(&self.boxplus_elems(&key(x, p1), &inner_r)?, c);
                }
                Ok(left == right)
            })();
            verdict(r, || format!("x={x:?} x'={x2:?} b={b:?}"))
        }));
        let vv: Vec<(Monomial, Monomial)> = fib.iter().filter(|f| f.2.is_one()).map(|f| (f.0.clone(), f.1.clone())).collect();
        out.push(IdentityRecord::sweep("fiber-product-is-boxplus", "xx' = x ⊞ x' in F(A)", &vv, |(x, x2)| {
            let r = (|| -> Result<bool, SmashError> {
                Ok(self.mul(&v_elem(x), &v_elem(x2))? == self.boxplus(&self.fibered(x, x2, &Monomial::one())?))
            })();
            verdict(r, || format!("x={x:?} x'={x2:?}"))
        }));
        out.push(IdentityRecord::sweep(
            "distributive",
            "(xx')b = ⊞(Σ xb1 ⊗ x'b2), b(xx') = ⊞(Σ b1x ⊗ b2x')",
            &fib,
            |(x, x2, b)| {
                let r = (|| -> Result<bool, SmashError> {
                    let xx = self.mul(&v_elem(x), &v_elem(x2))?;
                    let mut w1 = STensor::zero();
                    let mut w2 = STensor::zero();
                    for ((b1, b2), c) in self.envelope().coproduct_mono(b).map_err(SmashError::Env)?.iter() {
                        let l1 = self.mul(&v_elem(x), &u_elem(b1))?;
                        let r1 = self.mul(&v_elem(x2), &u_elem(b2))?;
                        let l2 = self.mul(&u_elem(b1), &v_elem(x))?;
                        let r2 = self.mul(&u_elem(b2), &v_elem(x2))?;
                        w1.add_scaled(&outer(&l1, &r1), c);
                        w2.add_scaled(&outer(&l2, &r2), c);
                    }
                    Ok(self.mul(&xx, &u_elem(b))? == self.boxplus(&w1) && self.mul(&u_elem(b), &xx)? == self.boxplus(&w2))
                })();
                verdict(r, || format!("x={x:?} x'={x2:?} b={b:?}"))
            },
        ));
        let hom_items = self.boxplus_hom_items();
        out.push(IdentityRecord::sweep("boxplus-multiplicative", "⊞(XY) = ⊞(X)⊞(Y)", &hom_items, |(p, q)| {
            let r = (|| -> Result<bool, SmashError> {
                let x = self.fibered(&p.0, &p.1, &p.2)?;
                let y = self.fibered(&q.0, &q.1, &q.2)?;
                Ok(self.boxplus(&self.tensor_mul(&x, &y)?) == self.mul(&self.boxplus(&x), &self.boxplus(&y))?)
            })();
            verdict(r, || format!("{p:?} {q:?}"))
        }));
        out.push(IdentityRecord::sweep("boxplus-comultiplicative", "Δ(⊞X) = (⊞⊗⊞)Δ(X)", &fib, |(x, x2, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let w = self.fibered(x, x2, b)?;
                let lhs = self.coproduct(&self.boxplus(&w))?;
                // Δ on A ⊗ A is (id⊗τ⊗id)(Δ⊗Δ); regroup and apply ⊞ to each side.
                let mut rhs = STensor::zero();
                for ((u, v), c) in w.iter() {
                    for ((u1, u2), c1) in self.coproduct_basis(u)?.iter() {
                        for ((v1, v2), c2) in self.coproduct_basis(v)?.iter() {
                            let l = self.boxplus(&STensor::basis((u1.clone(), v1.clone())));
                            let rr = self.boxplus(&STensor::basis((u2.clone(), v2.clone())));
                            rhs.add_scaled(&outer(&l, &rr), &(c * c1 * c2));
                        }
                    }
                }
                Ok(lhs == rhs)
            })();
            verdict(r, || format!("x={x:?} x'={x2:?} b={b:?}"))
        }));
        let pairs = self.basis_pairs();
        out.push(IdentityRecord::sweep("boxminus-morphism", "⊟(uv) = ⊟(u)⊟(v), Δ⊟ = (⊟⊗⊟)Δ", &pairs, |(a, b)| {
            let r = (|| -> Result<bool, SmashError> {
                let (ua, ub) = (SElem::basis(a.clone()), SElem::basis(b.clone()));
                let alg = Self::boxminus(&self.mul(&ua, &ub)?) == self.mul(&Self::boxminus(&ua), &Self::boxminus(&ub))?;
                let lhs = self.coproduct(&Self::boxminus(&ua))?;
                let mut rhs = STensor::zero();
                for ((u1, u2), c) in self.coproduct_basis(a)?.iter() {
                    let l = Self::boxminus(&SElem::basis(u1.clone()));
                    let rr = Self::boxminus(&SElem::basis(u2.clone()));
                    rhs.add_scaled(&outer(&l, &rr), c);
                }
                Ok(alg && lhs == rhs)
            })();
            verdict(r, || format!("{} | {}", self.show(a), self.show(b)))
        }));
        out
    }

    fn fibered_pair(&self, a: (&Monomial, &Monomial), b: (&Monomial, &Monomial)) -> Result<STensor, SmashError> {
        Ok(STensor::basis(((a.0.clone(), a.1.clone()), (b.0.clone(), b.1.clone()))))
    }

    /// `u ⊞ v` for `u, v` whose U(m)-parts pair up as a coproduct term.
    fn boxplus_elems(&self, u: &SElem, v: &SElem) -> Result<SElem, SmashError> {
        Ok(self.boxplus(&outer(u, v)))
    }

    fn fibered_items(&self) -> Vec<(Monomial, Monomial, Monomial)> {
        let mut out = Vec::new();
        for x in self.poly_basis() {
            for x2 in self.poly_basis() {
                if x.degree() + x2.degree() > self.deg_v() {
                    continue;
                }
                for b in self.envelope().basis() {
                    out.push((x.clone(), x2.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn boxplus_hom_items(&self) -> Vec<((Monomial, Monomial, Monomial), (Monomial, Monomial, Monomial))> {
        let fib: Vec<(Monomial, Monomial, Monomial)> = self
            .fibered_items()
            .into_iter()
            .filter(|(x, x2, _)| x.degree() + x2.degree() <= self.deg_v() / 2 + self.deg_v() % 2)
            .collect();
        let mut out = Vec::new();
        for p in &fib {
            for q in &fib {
                let dv = p.0.degree() + p.1.degree() + q.0.degree() + q.1.degree();
                let du = p.2.degree() + q.2.degree();
                let each = p.0.degree() + q.0.degree() <= self.deg_v() && p.1.degree() + q.1.degree() <= self.deg_v();
                if dv <= self.deg_v() && du <= self.deg_env() && each {
                    out.push((p.clone(), q.clone()));
                }
            }
        }
        out
    }

    /// F(A) = k[V]⊗1: the quotient formula, isotropy invariance, module-algebra rule and factorization.
    pub fn fiber_kernel_check(&self) -> Vec<IdentityRecord> {
        let basis = self.basis().to_vec();
        let quotient = IdentityRecord::sweep(
            "fiber-quotient",
            "Σ u1/π(u2) ∈ F(A), and = u for u ∈ F(A)",
            &basis,
            |k| {
                let r = (|| -> Result<bool, SmashError> {
                    let mut acc = SElem::zero();
                    for ((u1, u2), c) in self.coproduct_basis(k)?.iter() {
                        let p = Self::zero_section(&Self::project(&SElem::basis(u2.clone())));
                        acc.add_scaled(&self.right_divide(&SElem::basis(u1.clone()), &p)?, c);
                    }
                    let want_self = !k.1.is_one() || acc == SElem::basis(k.clone());
                    Ok(in_fiber(&acc) && want_self)
                })();
                verdict(r, || self.show(k))
            },
        );
        let items = self.iso_items(self.deg_env());
        let invariance = IdentityRecord::sweep(
            "isotropy-invariance",
            "F(A) and Prim F(A) are invariant under l, r, t, s, s̄, t̄",
            &items,
            |(b, b2, x)| {
                let r = (|| -> Result<bool, SmashError> {
                    for m in IsoMap::ALL {
                        if !m.binary() && !b2.is_one() {
                            continue;
                        }
                        let img = self.isotropy(m, b, b2, &v_elem(x))?;
                        if !in_fiber(&img) || (x.degree() == 1 && img.keys().any(|k| k.0.degree() != 1)) {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })();
                verdict(r, || format!("b={b:?} b'={b2:?} x={x:?}"))
            },
        );
        let id_items = self.poly_basis();
        let identity = IdentityRecord::sweep("isotropy-unit", "l(1,1) = r(1,1) = s(1,1) = s̄(1,1) = t(1) = t̄(1) = id", &id_items, |x| {
            let one = Monomial::one();
            let r = (|| -> Result<bool, SmashError> {
                for m in IsoMap::ALL {
                    if self.isotropy(m, &one, &one, &v_elem(x))? != v_elem(x) {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            verdict(r, || format!("x={x:?}"))
        });
        let ma_items = self.module_algebra_items();
        let module_algebra = IdentityRecord::sweep(
            "isotropy-module-algebra",
            "φ(b,b')(xx') = Σ φ(b1,b'1)x · φ(b2,b'2)x'",
            &ma_items,
            |(b, b2, x, x2)| {
                let r = (|| -> Result<bool, SmashError> {
                    let env = self.envelope();
                    let xx = self.mul(&v_elem(x), &v_elem(x2))?;
                    for m in IsoMap::ALL {
                        if !m.binary() && !b2.is_one() {
                            continue;
                        }
                        let lhs = self.isotropy(m, b, b2, &xx)?;
                        let mut rhs = SElem::zero();
                        for ((p1, p2), c1) in env.coproduct_mono(b).map_err(SmashError::Env)?.iter() {
                            for ((q1, q2), c2) in env.coproduct_mono(b2).map_err(SmashError::Env)?.iter() {
                                let l = self.isotropy(m, p1, q1, &v_elem(x))?;
                                let rr = self.isotropy(m, p2, q2, &v_elem(x2))?;
                                rhs.add_scaled(&self.mul(&l, &rr)?, &(c1 * c2));
                            }
                        }
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })();
                verdict(r, || format!("b={b:?} b'={b2:?} x={x:?} x'={x2:?}"))
            },
        );
        vec![quotient, invariance, identity, module_algebra, self.factorization_check()]
    }

    fn module_algebra_items(&self) -> Vec<(Monomial, Monomial, Monomial, Monomial)> {
        let mut out = Vec::new();
        let lin: Vec<Monomial> = self.poly_basis().into_iter().filter(|m| m.degree() == 1).collect();
        if self.deg_v() < 2 {
            return out;
        }
        for (b, b2, _) in self.iso_items(self.deg_env()).into_iter().filter(|t| t.2.is_one()) {
            for x in &lin {
                for x2 in &lin {
                    out.push((b.clone(), b2.clone(), x.clone(), x2.clone()));
                }
            }
        }
        out
    }

    /// `F(A) ⊗ B → A`, `x⊗b ↦ xb` and `x⊗b ↦ bx` are bijective on each truncation.
    pub fn factorization_check(&self) -> IdentityRecord {
        let basis = self.basis().to_vec();
        let index: std::collections::HashMap<Key, usize> = basis.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let rows = |left: bool| -> Result<Vec<Vec<Q>>, SmashError> {
            basis
                .iter()
                .map(|(x, b)| {
                    let p = if left { self.mul(&v_elem(x), &u_elem(b))? } else { self.mul(&u_elem(b), &v_elem(x))? };
                    let mut row = vec![Q::zero(); basis.len()];
                    for (k, c) in p.iter() {
                        row[index[k]] = c.clone();
                    }
                    Ok(row)
                })
                .collect()
        };
        let r = (|| -> Result<bool, SmashError> {
            let rank = |r: Vec<Vec<Q>>| QMatrix::from_rows((), basis.len(), r).map(|m| m.rank()).unwrap_or(0);
            Ok(rank(rows(true)?) == basis.len() && rank(rows(false)?) == basis.len())
        })();
        let mut rec = IdentityRecord::single(
            "factorization",
            "x⊗b ↦ xb and x⊗b ↦ bx are linear isomorphisms F(A)⊗B → A",
            verdict(r, || format!("basis size {}", basis.len())),
        );
        rec.instances_checked = basis.len() as u64;
        rec
    }

    /// 1⊗m ⊆ Nalt(A) and the two relative identities for primitive b.
    pub fn relative_module_check(&self) -> Vec<IdentityRecord> {
        let env = self.envelope();
        let gens: Vec<(String, SElem)> =
            (0..env.dim()).map(|a| (env.labels()[a].clone(), u_elem(&Monomial::letter(a)))).collect();
        let others: Vec<(String, SElem)> = self
            .basis()
            .iter()
            .filter(|k| k.1.degree() < self.deg_env())
            .map(|k| (self.show(k), SElem::basis(k.clone())))
            .collect();
        let nalt = nalt_check(self, &gens, &others);
        let mut triples = Vec::new();
        for a in 0..env.dim() {
            for (i, u) in others.iter().enumerate() {
                for (j, v) in others.iter().enumerate() {
                    if self.fits(&[&gens[a].1, &u.1, &v.1]) {
                        triples.push((a, i, j));
                    }
                }
            }
        }
        let rel = |k: usize| {
            IdentityRecord::sweep(&format!("relative-{}", k + 1), RELATIVE_ANCHORS[k], &triples, |&(a, i, j)| {
                let (b, u, v) = (&gens[a].1, &others[i].1, &others[j].1);
                let one = Self::one();
                let r = (|| -> Result<bool, SmashError> {
                    // Δ(a) = a⊗1 + 1⊗a
                    let terms = [(b, &one), (&one, b)];
                    let mut l = SElem::zero();
                    let mut rr = SElem::zero();
                    for (b1, b2) in terms {
                        if k == 0 {
                            l.add_assign(&self.mul(b1, &self.mul(u, &self.mul(b2, v)?)?)?);
                            rr.add_assign(&self.mul(&self.mul(&self.mul(b1, u)?, b2)?, v)?);
                        } else {
                            l.add_assign(&self.mul(&self.mul(&self.mul(v, b1)?, u)?, b2)?);
                            rr.add_assign(&self.mul(v, &self.mul(b1, &self.mul(u, b2)?)?)?);
                        }
                    }
                    Ok(l == rr)
                })();
                verdict(r, || format!("a={} u={} v={}", gens[a].0, others[i].0, others[j].0))
            })
        };
        vec![nalt, rel(0), rel(1)]
    }

    /// Associator `(a, u, v)` for a primitive `a` of U(m).
    pub fn associator_with(&self, a: usize, u: &SElem, v: &SElem) -> Result<SElem, SmashError> {
        associator(self, &u_elem(&Monomial::letter(a)), u, v)
    }
}

fn outer(a: &SElem, b: &SElem) -> STensor {
    let mut out = STensor::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term((x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

/// The operator identities S₁ = 0 and S₂ = 0 in U(Lie(m)) for primitive `a` and
/// monomials `b', b''` with `deg b' + deg b'' + 1 ≤ budget`.
pub fn s1_s2_check(env: &Envelope, max_pair: usize) -> Vec<IdentityRecord> {
    let items = s_items(env, max_pair);
    let res: Vec<Result<(Op, Op), crate::enveloping::EnvError>> =
        crate::par::map(&items, |(a, b1, b2)| s1_s2(env, *a, b1, b2, false));
    let mut r1 = IdentityRecord::new("s1-vanishes", S1_ANCHOR);
    let mut r2 = IdentityRecord::new("s2-vanishes", S2_ANCHOR);
    for ((a, b1, b2), r) in items.iter().zip(res) {
        let w = || format!("a={} b'={} b''={}", env.labels()[*a], b1.render(env.labels()), b2.render(env.labels()));
        let (v1, v2) = match r {
            Ok((s1, s2)) => (Ok(s1.is_zero()), Ok(s2.is_zero())),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        r1.absorb(IdentityRecord::single("", "", verdict(v1, w)));
        r2.absorb(IdentityRecord::single("", "", verdict(v2, w)));
    }
    vec![r1, r2]
}

fn s_items(env: &Envelope, max_pair: usize) -> Vec<(usize, Monomial, Monomial)> {
    let ms = env.basis_up_to(max_pair);
    let mut out = Vec::new();
    for a in 0..env.dim() {
        for b1 in &ms {
            for b2 in &ms {
                if b1.degree() + b2.degree() <= max_pair && b1.degree() + b2.degree() < env.budget() {
                    out.push((a, b1.clone(), b2.clone()));
                }
            }
        }
    }
    out
}

/// `(S₁, S₂)`; `literal_s2` uses `+Σ s(b',b''1)s(a,b''2)` for the last term instead of `-`.
pub fn s1_s2(
    env: &Envelope,
    a: usize,
    b1: &Monomial,
    b2: &Monomial,
    literal_s2: bool,
) -> Result<(Op, Op), crate::enveloping::EnvError> {
    let u = env.ulie();
    let e = |m: &Monomial| Elem::basis(m.clone());
    let pa = env.prim(a);
    let am = Monomial::letter(a);
    let ab = env.mul(&pa, &e(b1))?;
    let ba = env.mul(&e(b1), &pa)?;
    let ab2 = env.mul(&pa, &e(b2))?;
    let (r_ab, s_ab) = env.rs_elements(&ab, &e(b2))?;
    let (r_ba, s_ba) = env.rs_elements(&ba, &e(b2))?;
    let (r_b_ab, s_b_ab) = env.rs_elements(&e(b1), &ab2)?;
    let mut s1 = r_ab.plus(&r_ba).minus(&r_b_ab);
    let mut s2 = s_ab.plus(&s_ba).minus(&s_b_ab);
    let d1 = env.coproduct_mono(b1)?;
    let d2 = env.coproduct_mono(b2)?;
    for ((x, y), c) in d1.iter() {
        let r_x = env.rs_mono(x, b2)?.0;
        s1.add_scaled(&u.mul(&r_x, &env.rs_mono(&am, y)?.1)?, c);
        s1.add_scaled(&u.mul(&r_x, &env.rs_mono(y, &am)?.0)?, c);
        for ((p, q), c2) in d2.iter() {
            let s_axp = env.rs_elements(&pa, &env.mul_mono(x, p)?)?.1;
            let (r_yq, s_yq) = env.rs_mono(y, q)?;
            let c = -(c * c2);
            s1.add_scaled(&u.mul(&s_axp, &r_yq)?, &c);
            s2.add_scaled(&u.mul(&s_axp, &s_yq)?, &c);
        }
    }
    for ((p, q), c) in d2.iter() {
        let t = u.mul(&env.rs_mono(b1, p)?.1, &env.rs_mono(&am, q)?.1)?;
        let c: Q = if literal_s2 { c.clone() } else { -c.clone() };
        s2.add_scaled(&t, &c);
    }
    Ok((s1, s2))
}
