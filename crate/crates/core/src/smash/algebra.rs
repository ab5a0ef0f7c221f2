//! A = k[V] ⊗ U(m) with `(x⊗b)(x'⊗b') = Σ (r(b1,b'1)x)(s(b2,b'2)x') ⊗ b3 b'3`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use dashmap::DashMap;
use serde::Serialize;

use crate::enveloping::{Elem, Envelope};
use crate::exact::Q;
use crate::malcev::RelativeRep;
use crate::sparse::{Lin, Monomial};

use super::poly::{apply_map, poly_antipode, poly_mul, Poly, PolyAction, PolyMap};
use super::SmashError;

/// Basis key `(x, b)` with `x` a k[V] monomial and `b` a PBW monomial of U(m).
pub type Key = (Monomial, Monomial);
pub type SElem = Lin<Key>;
/// Elements of A ⊗ A.
pub type STensor = Lin<(Key, Key)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMap {
    L,
    R,
    T,
    S,
    SBar,
    TBar,
}

impl IsoMap {
    pub const ALL: [IsoMap; 6] = [IsoMap::L, IsoMap::R, IsoMap::T, IsoMap::S, IsoMap::SBar, IsoMap::TBar];

    /// `t` and `t̄` take a single argument.
    pub fn binary(self) -> bool {
        !matches!(self, IsoMap::T | IsoMap::TBar)
    }

    pub fn formula(self) -> &'static str {
        match self {
            IsoMap::L => "l(b,b')u = Σ (b1 b'1)\\(b2·b'2 u)",
            IsoMap::R => "r(b,b')u = Σ (u b1·b'1)/(b2 b'2)",
            IsoMap::T => "t(b)u = Σ b1\\(u b2)",
            IsoMap::S => "s(b,b')u = Σ (b1·u b'1)/(b2 b'2)",
            IsoMap::SBar => "s̄(b,b')u = Σ (b1 b'1)\\(b2 u·b'2)",
            IsoMap::TBar => "t̄(b)u = Σ (b1 u)/b2",
        }
    }
}

impl FromStr for IsoMap {
    type Err = SmashError;
    fn from_str(s: &str) -> Result<Self, SmashError> {
        Ok(match s {
            "l" => IsoMap::L,
            "r" => IsoMap::R,
            "t" => IsoMap::T,
            "s" => IsoMap::S,
            "sbar" => IsoMap::SBar,
            "tbar" => IsoMap::TBar,
            _ => return Err(SmashError::Usage(format!("unknown isotropy map `{s}`"))),
        })
    }
}

impl fmt::Display for IsoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsoMap::L => "l",
            IsoMap::R => "r",
            IsoMap::T => "t",
            IsoMap::S => "s",
            IsoMap::SBar => "sbar",
            IsoMap::TBar => "tbar",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SmashSummary {
    pub module_dim: usize,
    pub deg_env: usize,
    pub deg_v: usize,
    pub poly_monomials: usize,
    pub env_monomials: usize,
    pub basis_size: usize,
}

type Triple = (Monomial, Monomial, Monomial);

pub struct SmashAlgebra {
    env: Arc<Envelope>,
    action: PolyAction,
    deg_env: usize,
    deg_v: usize,
    basis: Vec<Key>,
    rs_maps: DashMap<(Monomial, Monomial), Arc<(PolyMap, PolyMap)>>,
    delta2: DashMap<Monomial, Arc<Vec<(Triple, Q)>>>,
    prod: DashMap<(Key, Key), SElem>,
    ldiv: DashMap<(Key, Key), SElem>,
    rdiv: DashMap<(Key, Key), SElem>,
}

impl SmashAlgebra {
    /// The envelope's budget is the U(m) truncation degree.
    pub fn build(env: Arc<Envelope>, rep: &RelativeRep, deg_v: usize) -> Result<Self, SmashError> {
        if rep.algebra().structure() != env.algebra().structure() {
            return Err(SmashError::Incompatible);
        }
        let mats = env.lie().plus().represent(rep).map_err(SmashError::Model)?;
        let action = PolyAction::new(&mats, rep.dim(), deg_v);
        let deg_env = env.budget();
        let mut basis = Vec::new();
        for x in action.basis() {
            for b in env.basis() {
                basis.push((x.clone(), b.clone()));
            }
        }
        Ok(SmashAlgebra {
            env,
            action,
            deg_env,
            deg_v,
            basis,
            rs_maps: DashMap::new(),
            delta2: DashMap::new(),
            prod: DashMap::new(),
            ldiv: DashMap::new(),
            rdiv: DashMap::new(),
        })
    }

    pub fn envelope(&self) -> &Arc<Envelope> {
        &self.env
    }

    pub fn action(&self) -> &PolyAction {
        &self.action
    }

    pub fn deg_env(&self) -> usize {
        self.deg_env
    }

    pub fn deg_v(&self) -> usize {
        self.deg_v
    }

    pub fn basis(&self) -> &[Key] {
        &self.basis
    }

    pub fn summary(&self) -> SmashSummary {
        SmashSummary {
            module_dim: self.action.dim(),
            deg_env: self.deg_env,
            deg_v: self.deg_v,
            poly_monomials: self.action.basis().len(),
            env_monomials: self.env.basis().len(),
            basis_size: self.basis.len(),
        }
    }

    pub fn render(&self, u: &SElem) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let vl: Vec<String> = (0..self.action.dim()).map(|i| format!("v{i}")).collect();
        u.iter()
            .map(|((x, b), c)| format!("{}·{}⊗{}", crate::exact::fmt_q(c), x.render(&vl), b.render(self.env.labels())))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn check(&self, dv: usize, du: usize) -> Result<(), SmashError> {
        if dv > self.deg_v {
            return Err(SmashError::Budget { what: "k[V]", needed: dv, budget: self.deg_v });
        }
        if du > self.deg_env {
            return Err(SmashError::Budget { what: "U(m)", needed: du, budget: self.deg_env });
        }
        Ok(())
    }

    fn degrees(u: &SElem) -> (usize, usize) {
        u.keys().fold((0, 0), |(a, b), (x, y)| (a.max(x.degree()), b.max(y.degree())))
    }

    pub fn one() -> SElem {
        SElem::basis((Monomial::one(), Monomial::one()))
    }

    /// `x ⊗ 1`.
    pub fn from_poly(p: &Poly) -> SElem {
        p.iter().map(|(m, c)| ((m.clone(), Monomial::one()), c.clone())).collect()
    }

    /// The zero section `b ↦ 1 ⊗ b`.
    pub fn zero_section(b: &Elem) -> SElem {
        b.iter().map(|(m, c)| ((Monomial::one(), m.clone()), c.clone())).collect()
    }

    /// `π(x ⊗ b) = ε(x) b`.
    pub fn project(u: &SElem) -> Elem {
        u.iter().filter(|((x, _), _)| x.is_one()).map(|((_, b), c)| (b.clone(), c.clone())).collect()
    }

    /// `r(b,b')` and `s(b,b')` as maps on k[V].
    pub fn rs_maps(&self, b: &Monomial, b2: &Monomial) -> Result<Arc<(PolyMap, PolyMap)>, SmashError> {
        let key = (b.clone(), b2.clone());
        if let Some(hit) = self.rs_maps.get(&key) {
            return Ok(hit.clone());
        }
        let (r, s) = self.env.rs_mono(b, b2).map_err(SmashError::Env)?;
        let out = Arc::new((self.action.tabulate(&r)?, self.action.tabulate(&s)?));
        self.rs_maps.insert(key, out.clone());
        Ok(out)
    }

    /// `Σ b1 ⊗ b2 ⊗ b3`.
    pub fn delta2(&self, b: &Monomial) -> Result<Arc<Vec<(Triple, Q)>>, SmashError> {
        if let Some(hit) = self.delta2.get(b) {
            return Ok(hit.clone());
        }
        let mut acc: Lin<Triple> = Lin::zero();
        for ((x, y), c) in self.env.coproduct_mono(b).map_err(SmashError::Env)?.iter() {
            for ((x1, x2), c2) in self.env.coproduct_mono(x).map_err(SmashError::Env)?.iter() {
                acc.add_term((x1.clone(), x2.clone(), y.clone()), c * c2);
            }
        }
        let out = Arc::new(acc.iter().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>());
        self.delta2.insert(b.clone(), out.clone());
        Ok(out)
    }

    pub fn mul_basis(&self, u: &Key, v: &Key) -> Result<SElem, SmashError> {
        let ((x, b), (x2, b2)) = (u, v);
        self.check(x.degree() + x2.degree(), b.degree() + b2.degree())?;
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.prod.get(&key) {
            return Ok(hit.clone());
        }
        let (px, px2) = (Poly::basis(x.clone()), Poly::basis(x2.clone()));
        let mut out = SElem::zero();
        for ((p1, p2, p3), cp) in self.delta2(b)?.iter() {
            for ((q1, q2, q3), cq) in self.delta2(b2)?.iter() {
                let rx = apply_map(&self.rs_maps(p1, q1)?.0, &px);
                if rx.is_zero() {
                    continue;
                }
                let sx = apply_map(&self.rs_maps(p2, q2)?.1, &px2);
                let f = poly_mul(&rx, &sx);
                if f.is_zero() {
                    continue;
                }
                let bb = self.env.mul_mono(p3, q3).map_err(SmashError::Env)?;
                let c = cp * cq;
                for (m, cm) in f.iter() {
                    for (n, cn) in bb.iter() {
                        out.add_term((m.clone(), n.clone()), &c * cm * cn);
                    }
                }
            }
        }
        self.prod.insert(key, out.clone());
        Ok(out)
    }

    pub fn mul(&self, u: &SElem, v: &SElem) -> Result<SElem, SmashError> {
        let (du, eu) = Self::degrees(u);
        let (dv, ev) = Self::degrees(v);
        self.check(du + dv, eu + ev)?;
        let mut out = SElem::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.mul_basis(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Tensor coalgebra structure of k[V] ⊗ U(m).
    pub fn coproduct_basis(&self, u: &Key) -> Result<STensor, SmashError> {
        let (x, b) = u;
        let mut out = STensor::zero();
        let db = self.env.coproduct_mono(b).map_err(SmashError::Env)?;
        for (x1, x2) in x.splits() {
            for ((b1, b2), c) in db.iter() {
                out.add_term(((x1.clone(), b1.clone()), (x2.clone(), b2.clone())), c.clone());
            }
        }
        Ok(out)
    }

    pub fn coproduct(&self, u: &SElem) -> Result<STensor, SmashError> {
        let mut out = STensor::zero();
        for (k, c) in u.iter() {
            out.add_scaled(&self.coproduct_basis(k)?, c);
        }
        Ok(out)
    }

    pub fn counit(u: &SElem) -> Q {
        u.coeff(&(Monomial::one(), Monomial::one()))
    }

    /// `u\v` from `Σ u1\(u2 v) = ε(u)v`.
    pub fn left_divide(&self, u: &SElem, v: &SElem) -> Result<SElem, SmashError> {
        let mut out = SElem::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.left_divide_basis(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    fn left_divide_basis(&self, u: &Key, v: &Key) -> Result<SElem, SmashError> {
        let vv = SElem::basis(v.clone());
        if u.0.is_one() && u.1.is_one() {
            return Ok(vv);
        }
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.ldiv.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = SElem::zero();
        for ((u1, u2), c) in self.coproduct_basis(u)?.iter() {
            if u2.0.is_one() && u2.1.is_one() {
                continue;
            }
            let inner = self.mul(&SElem::basis(u2.clone()), &vv)?;
            out.add_scaled(&self.left_divide(&SElem::basis(u1.clone()), &inner)?, &-c.clone());
        }
        self.ldiv.insert(key, out.clone());
        Ok(out)
    }

    /// `v/u` from `Σ (v u1)/u2 = ε(u)v`.
    pub fn right_divide(&self, v: &SElem, u: &SElem) -> Result<SElem, SmashError> {
        let mut out = SElem::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in v.iter() {
                out.add_scaled(&self.right_divide_basis(b, a)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    fn right_divide_basis(&self, v: &Key, u: &Key) -> Result<SElem, SmashError> {
        let vv = SElem::basis(v.clone());
        if u.0.is_one() && u.1.is_one() {
            return Ok(vv);
        }
        let key = (v.clone(), u.clone());
        if let Some(hit) = self.rdiv.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = SElem::zero();
        for ((u1, u2), c) in self.coproduct_basis(u)?.iter() {
            if u1.0.is_one() && u1.1.is_one() {
                continue;
            }
            let inner = self.mul(&vv, &SElem::basis(u1.clone()))?;
            out.add_scaled(&self.right_divide(&inner, &SElem::basis(u2.clone()))?, &-c.clone());
        }
        self.rdiv.insert(key, out.clone());
        Ok(out)
    }

    /// One of the six isotropy maps evaluated through products and divisions of A.
    pub fn isotropy(&self, which: IsoMap, b: &Monomial, b2: &Monomial, u: &SElem) -> Result<SElem, SmashError> {
        let e = |m: &Monomial| SElem::basis((Monomial::one(), m.clone()));
        let db = self.env.coproduct_mono(b).map_err(SmashError::Env)?;
        let mut out = SElem::zero();
        if !which.binary() {
            for ((p, q), c) in db.iter() {
                let t = match which {
                    IsoMap::T => self.left_divide(&e(p), &self.mul(u, &e(q))?)?,
                    _ => self.right_divide(&self.mul(&e(p), u)?, &e(q))?,
                };
                out.add_scaled(&t, c);
            }
            return Ok(out);
        }
        let db2 = self.env.coproduct_mono(b2).map_err(SmashError::Env)?;
        for ((p1, p2), c1) in db.iter() {
            for ((q1, q2), c2) in db2.iter() {
                let t = match which {
                    IsoMap::L => {
                        let d = Self::zero_section(&self.env.mul_mono(p1, q1).map_err(SmashError::Env)?);
                        self.left_divide(&d, &self.mul(&e(p2), &self.mul(&e(q2), u)?)?)?
                    }
                    IsoMap::R => {
                        let d = Self::zero_section(&self.env.mul_mono(p2, q2).map_err(SmashError::Env)?);
                        self.right_divide(&self.mul(&self.mul(u, &e(p1))?, &e(q1))?, &d)?
                    }
                    IsoMap::S => {
                        let d = Self::zero_section(&self.env.mul_mono(p2, q2).map_err(SmashError::Env)?);
                        self.right_divide(&self.mul(&e(p1), &self.mul(u, &e(q1))?)?, &d)?
                    }
                    _ => {
                        let d = Self::zero_section(&self.env.mul_mono(p1, q1).map_err(SmashError::Env)?);
                        self.left_divide(&d, &self.mul(&self.mul(&e(p2), u)?, &e(q2))?)?
                    }
                };
                out.add_scaled(&t, &(c1 * c2));
            }
        }
        Ok(out)
    }

    /// `⊞` on A ×_B A: keep the terms whose second U(m)-part is 1, multiply fibers.
    pub fn boxplus(&self, w: &STensor) -> SElem {
        let mut out = SElem::zero();
        for (((x, b), (x2, b2)), c) in w.iter() {
            if b2.is_one() {
                out.add_term((x.merge(x2), b.clone()), c.clone());
            }
        }
        out
    }

    /// `⊟(x ⊗ b) = S(x) ⊗ b`.
    pub fn boxminus(u: &SElem) -> SElem {
        let mut out = SElem::zero();
        for ((x, b), c) in u.iter() {
            for (m, cm) in poly_antipode(&Poly::basis(x.clone())).iter() {
                out.add_term((m.clone(), b.clone()), c * cm);
            }
        }
        out
    }

    /// `Σ x b1 ⊗ x' b2` style elements: `(x⊗b1) ⊗ (x'⊗b2)` over Δ(b).
    pub fn fibered(&self, x: &Monomial, x2: &Monomial, b: &Monomial) -> Result<STensor, SmashError> {
        let mut out = STensor::zero();
        for ((b1, b2), c) in self.env.coproduct_mono(b).map_err(SmashError::Env)?.iter() {
            out.add_term(((x.clone(), b1.clone()), (x2.clone(), b2.clone())), c.clone());
        }
        Ok(out)
    }

    /// Factorwise product in A ⊗ A.
    pub fn tensor_mul(&self, a: &STensor, b: &STensor) -> Result<STensor, SmashError> {
        let mut out = STensor::zero();
        for ((a1, a2), ca) in a.iter() {
            for ((b1, b2), cb) in b.iter() {
                let l = self.mul_basis(a1, b1)?;
                let r = self.mul_basis(a2, b2)?;
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
}
