//! The nonassociative enveloping bialgebra U(m), realized inside the induced module.
//!
//! A PBW monomial `((a_1 a_2)...)a_k` of U(m) maps to `ρ_{a_k}...ρ_{a_1}·1`; the
//! top-degree part of that vector is `2^{-k} T_{a_1}...T_{a_k}`, which makes the map
//! invertible by leading-term reduction.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use serde::Serialize;

use crate::exact::Q;
use crate::malcev::{build_lie_envelope, build_lie_plus, Faithfulness, LieEnvelope, MalcevAlgebra, PlusMode};
use crate::par;
use crate::sparse::{monomials_up_to, Lin, Monomial};

use super::module::{InducedModule, Vector};
use super::ulie::{Op, OpTensor, ULie};
use super::EnvError;

/// Element of U(m).
pub type Elem = Lin<Monomial>;
/// Element of U(m) ⊗ U(m).
pub type Tensor = Lin<(Monomial, Monomial)>;

#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeSummary {
    pub algebra_dim: usize,
    pub degree: usize,
    pub plus_dim: usize,
    pub lie_dim: usize,
    pub monomials: usize,
    pub slice_dims: Vec<usize>,
    pub model: String,
    pub faithfulness: Faithfulness,
}

pub struct Envelope {
    algebra: Arc<MalcevAlgebra>,
    lie: Arc<LieEnvelope>,
    ulie: ULie,
    module: InducedModule,
    budget: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    phi: DashMap<Monomial, Vector>,
    lambda: DashMap<Monomial, Op>,
    rho: DashMap<Monomial, Op>,
    prod: DashMap<(Monomial, Monomial), Elem>,
    delta: DashMap<Monomial, Tensor>,
    anti: DashMap<Monomial, Elem>,
    rs: DashMap<(Monomial, Monomial), (Op, Op)>,
}

impl Envelope {
    pub fn new(lie: Arc<LieEnvelope>, budget: usize) -> Self {
        let algebra = lie.plus().algebra().clone();
        let ulie = ULie::new(lie.clone(), budget);
        let module = InducedModule::new(&ulie);
        let basis = monomials_up_to(algebra.dim(), budget);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Envelope {
            algebra,
            lie,
            ulie,
            module,
            budget,
            basis,
            index,
            phi: DashMap::new(),
            lambda: DashMap::new(),
            rho: DashMap::new(),
            prod: DashMap::new(),
            delta: DashMap::new(),
            anti: DashMap::new(),
            rs: DashMap::new(),
        }
    }

    pub fn build(algebra: &Arc<MalcevAlgebra>, mode: PlusMode, budget: usize) -> Result<Self, EnvError> {
        let plus = build_lie_plus(algebra, mode).map_err(EnvError::Model)?;
        let lie = build_lie_envelope(Arc::new(plus)).map_err(EnvError::Model)?;
        Ok(Envelope::new(Arc::new(lie), budget))
    }

    pub fn algebra(&self) -> &Arc<MalcevAlgebra> {
        &self.algebra
    }

    pub fn lie(&self) -> &Arc<LieEnvelope> {
        &self.lie
    }

    pub fn ulie(&self) -> &ULie {
        &self.ulie
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// PBW monomials of degree ≤ budget.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_up_to(&self, d: usize) -> Vec<Monomial> {
        self.basis.iter().filter(|m| m.degree() <= d).cloned().collect()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn summary(&self) -> EnvelopeSummary {
        let mut slice_dims = vec![0; self.budget + 1];
        for m in &self.basis {
            for s in slice_dims.iter_mut().skip(m.degree()) {
                *s += 1;
            }
        }
        EnvelopeSummary {
            algebra_dim: self.dim(),
            degree: self.budget,
            plus_dim: self.lie.plus_dim(),
            lie_dim: self.lie.dim(),
            monomials: self.basis.len(),
            slice_dims,
            model: self.lie.plus().mode().to_string(),
            faithfulness: self.lie.plus().faithfulness(),
        }
    }

    fn check(&self, deg: usize) -> Result<(), EnvError> {
        if deg > self.budget {
            return Err(EnvError::Budget { needed: deg, budget: self.budget });
        }
        Ok(())
    }

    pub fn one(&self) -> Elem {
        Elem::one()
    }

    pub fn prim(&self, a: usize) -> Elem {
        Elem::basis(Monomial::letter(a))
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    /// Labels of the Lie(m) letters: model basis words, then T's.
    pub fn op_labels(&self) -> Vec<String> {
        use crate::malcev::Word;
        let l = self.algebra.labels();
        let mut out: Vec<String> = Vec::new();
        for w in self.lie.plus().words() {
            let s = match *w {
                Word::Gen(a) => format!("ad_{}", l[a]),
                Word::Bracket(a, j) => format!("[ad_{},{}]", l[a], out[j]),
            };
            out.push(s);
        }
        out.extend(l.iter().map(|x| format!("T_{x}")));
        out
    }

    /// Parses `1`, `e`, `e*h*h` (labels separated by `*`); letters must be weakly increasing.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial, EnvError> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let mut idx = Vec::new();
        for part in s.split('*') {
            let i = self.algebra.index_of(part.trim()).ok_or_else(|| EnvError::BadMonomial(s.to_string()))?;
            idx.push(i as u16);
        }
        let m = Monomial::from_slice(&idx);
        if !m.is_sorted() {
            return Err(EnvError::BadMonomial(s.to_string()));
        }
        self.check(m.degree())?;
        Ok(m)
    }

    pub fn render(&self, z: &Elem) -> String {
        z.render(self.labels())
    }

    pub fn render_op(&self, z: &Op) -> String {
        z.render(&self.op_labels())
    }

    fn lambda_prim(&self, a: u16) -> Op {
        self.ulie.from_vec(self.lie.lambda(a as usize))
    }

    fn rho_prim(&self, a: u16) -> Op {
        self.ulie.from_vec(self.lie.rho(a as usize))
    }

    /// Image of a PBW monomial in the induced module.
    pub fn phi_mono(&self, m: &Monomial) -> Result<Vector, EnvError> {
        self.check(m.degree())?;
        if m.is_one() {
            return Ok(Vector::one());
        }
        if let Some(hit) = self.phi.get(m) {
            return Ok(hit.clone());
        }
        let prev = self.phi_mono(&m.init())?;
        let v = self.module.act(&self.rho_prim(m.last().expect("nonempty")), &prev)?;
        self.phi.insert(m.clone(), v.clone());
        Ok(v)
    }

    pub fn phi(&self, z: &Elem) -> Result<Vector, EnvError> {
        let mut out = Vector::zero();
        for (m, c) in z.iter() {
            out.add_scaled(&self.phi_mono(m)?, c);
        }
        Ok(out)
    }

    pub fn phi_inv(&self, v: &Vector) -> Result<Elem, EnvError> {
        let mut rest = v.clone();
        let mut out = Elem::zero();
        while let Some(d) = rest.keys().map(Monomial::degree).max() {
            let top: Vec<(Monomial, Q)> =
                rest.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect();
            let scale = Q::from_integer((1i64 << d).into());
            for (m, c) in top {
                let c = c * &scale;
                rest.add_scaled(&self.phi_mono(&m)?, &-c.clone());
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// `λ_z` as an element of U(Lie(m)).
    pub fn lambda_mono(&self, m: &Monomial) -> Result<Op, EnvError> {
        self.check(m.degree())?;
        if m.is_one() {
            return Ok(Op::one());
        }
        if let Some(hit) = self.lambda.get(m) {
            return Ok(hit.clone());
        }
        let a = m.last().expect("nonempty");
        let head = m.init();
        let out = if head.is_one() {
            self.lambda_prim(a)
        } else {
            // λ_{m'a} = λ_{m'}λ_a + [λ_{m'}, ρ_a]
            let lz = self.lambda_mono(&head)?;
            let (la, ra) = (self.lambda_prim(a), self.rho_prim(a));
            let mut o = self.ulie.mul(&lz, &la)?;
            o.add_assign(&self.ulie.commutator(&lz, &ra)?);
            o
        };
        self.lambda.insert(m.clone(), out.clone());
        Ok(out)
    }

    pub fn rho_mono(&self, m: &Monomial) -> Result<Op, EnvError> {
        self.check(m.degree())?;
        if m.is_one() {
            return Ok(Op::one());
        }
        if let Some(hit) = self.rho.get(m) {
            return Ok(hit.clone());
        }
        let a = m.last().expect("nonempty");
        let head = m.init();
        let out = if head.is_one() {
            self.rho_prim(a)
        } else {
            // ρ_{m'a} = ρ_aρ_{m'} + [λ_a, ρ_{m'}]
            let rz = self.rho_mono(&head)?;
            let (la, ra) = (self.lambda_prim(a), self.rho_prim(a));
            let mut o = self.ulie.mul(&ra, &rz)?;
            o.add_assign(&self.ulie.commutator(&la, &rz)?);
            o
        };
        self.rho.insert(m.clone(), out.clone());
        Ok(out)
    }

    pub fn lambda_of(&self, z: &Elem) -> Result<Op, EnvError> {
        let mut out = Op::zero();
        for (m, c) in z.iter() {
            out.add_scaled(&self.lambda_mono(m)?, c);
        }
        Ok(out)
    }

    pub fn rho_of(&self, z: &Elem) -> Result<Op, EnvError> {
        let mut out = Op::zero();
        for (m, c) in z.iter() {
            out.add_scaled(&self.rho_mono(m)?, c);
        }
        Ok(out)
    }

    /// Applies an operator to an element of U(m).
    pub fn apply(&self, op: &Op, z: &Elem) -> Result<Elem, EnvError> {
        let v = self.module.act(op, &self.phi(z)?)?;
        self.phi_inv(&v)
    }

    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Result<Elem, EnvError> {
        self.check(a.degree() + b.degree())?;
        if a.is_one() {
            return Ok(Elem::basis(b.clone()));
        }
        if b.is_one() {
            return Ok(Elem::basis(a.clone()));
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.prod.get(&key) {
            return Ok(hit.clone());
        }
        let out = self.apply(&self.lambda_mono(a)?, &Elem::basis(b.clone()))?;
        self.prod.insert(key, out.clone());
        Ok(out)
    }

    pub fn mul(&self, z: &Elem, w: &Elem) -> Result<Elem, EnvError> {
        self.check(z.max_degree() + w.max_degree())?;
        let mut out = Elem::zero();
        for (a, ca) in z.iter() {
            for (b, cb) in w.iter() {
                out.add_scaled(&self.mul_mono(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Fills the product table for all monomial pairs within budget.
    pub fn precompute(&self) -> Result<(), EnvError> {
        let pairs: Vec<(Monomial, Monomial)> = self
            .basis
            .iter()
            .flat_map(|a| self.basis.iter().filter(move |b| a.degree() + b.degree() <= self.budget).map(move |b| (a.clone(), b.clone())))
            .collect();
        for m in &self.basis {
            self.lambda_mono(m)?;
        }
        par::map(&pairs, |(a, b)| self.mul_mono(a, b)).into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(())
    }

    pub fn counit(&self, z: &Elem) -> Q {
        z.constant()
    }

    pub fn coproduct_mono(&self, m: &Monomial) -> Result<Tensor, EnvError> {
        if m.is_one() {
            return Ok(Tensor::basis((Monomial::one(), Monomial::one())));
        }
        if let Some(hit) = self.delta.get(m) {
            return Ok(hit.clone());
        }
        // Δ(m'a) = Σ x·a ⊗ y + x ⊗ y·a
        let a = Elem::basis(Monomial::letter(m.last().expect("nonempty") as usize));
        let prev = self.coproduct_mono(&m.init())?;
        let mut out = Tensor::zero();
        for ((x, y), c) in prev.iter() {
            for (xa, c2) in self.mul(&Elem::basis(x.clone()), &a)?.iter() {
                out.add_term((xa.clone(), y.clone()), c * c2);
            }
            for (ya, c2) in self.mul(&Elem::basis(y.clone()), &a)?.iter() {
                out.add_term((x.clone(), ya.clone()), c * c2);
            }
        }
        self.delta.insert(m.clone(), out.clone());
        Ok(out)
    }

    pub fn coproduct(&self, z: &Elem) -> Result<Tensor, EnvError> {
        let mut out = Tensor::zero();
        for (m, c) in z.iter() {
            out.add_scaled(&self.coproduct_mono(m)?, c);
        }
        Ok(out)
    }

    /// `S(z) = ε(z)1 - Σ_{z_(2) ≠ 1} S(z_(1)) z_(2)`.
    pub fn antipode_mono(&self, m: &Monomial) -> Result<Elem, EnvError> {
        if m.is_one() {
            return Ok(Elem::one());
        }
        if let Some(hit) = self.anti.get(m) {
            return Ok(hit.clone());
        }
        let mut out = Elem::zero();
        for ((x, y), c) in self.coproduct_mono(m)?.iter() {
            if y.is_one() {
                continue;
            }
            let t = self.mul(&self.antipode_mono(x)?, &Elem::basis(y.clone()))?;
            out.add_scaled(&t, &-c.clone());
        }
        self.anti.insert(m.clone(), out.clone());
        Ok(out)
    }

    pub fn antipode(&self, z: &Elem) -> Result<Elem, EnvError> {
        let mut out = Elem::zero();
        for (m, c) in z.iter() {
            out.add_scaled(&self.antipode_mono(m)?, c);
        }
        Ok(out)
    }

    /// `z\v = S(z)v`.
    pub fn left_divide(&self, z: &Elem, v: &Elem) -> Result<Elem, EnvError> {
        self.mul(&self.antipode(z)?, v)
    }

    /// `v/z = vS(z)`.
    pub fn right_divide(&self, v: &Elem, z: &Elem) -> Result<Elem, EnvError> {
        self.mul(v, &self.antipode(z)?)
    }

    /// `z\v` from the division law alone: `z\v = ε(z)v - Σ_{z_(2) ≠ 1} z_(1)\(z_(2)v)`.
    pub fn left_divide_recursive(&self, z: &Elem, v: &Elem) -> Result<Elem, EnvError> {
        let mut out = v.scaled(&z.constant());
        for (m, c) in z.iter() {
            if m.is_one() {
                continue;
            }
            for ((x, y), c2) in self.coproduct_mono(m)?.iter() {
                if y.is_one() {
                    continue;
                }
                let inner = self.mul(&Elem::basis(y.clone()), v)?;
                let t = self.left_divide_recursive(&Elem::basis(x.clone()), &inner)?;
                out.add_scaled(&t, &-(c * c2));
            }
        }
        Ok(out)
    }

    /// `v/z = ε(z)v - Σ_{z_(1) ≠ 1} (vz_(1))/z_(2)`.
    pub fn right_divide_recursive(&self, v: &Elem, z: &Elem) -> Result<Elem, EnvError> {
        let mut out = v.scaled(&z.constant());
        for (m, c) in z.iter() {
            if m.is_one() {
                continue;
            }
            for ((x, y), c2) in self.coproduct_mono(m)?.iter() {
                if x.is_one() {
                    continue;
                }
                let inner = self.mul(v, &Elem::basis(x.clone()))?;
                let t = self.right_divide_recursive(&inner, &Elem::basis(y.clone()))?;
                out.add_scaled(&t, &-(c * c2));
            }
        }
        Ok(out)
    }

    /// `r(z,w) = Σ S(ρ_{z_(1)w_(1)}) ρ_{w_(2)} ρ_{z_(2)}`, `s(z,w) = Σ S(ρ_{z_(1)w_(1)}) λ_{z_(2)} ρ_{w_(2)}`.
    pub fn rs_mono(&self, z: &Monomial, w: &Monomial) -> Result<(Op, Op), EnvError> {
        self.check(z.degree() + w.degree())?;
        let key = (z.clone(), w.clone());
        if let Some(hit) = self.rs.get(&key) {
            return Ok(hit.clone());
        }
        let mut r = Op::zero();
        let mut s = Op::zero();
        for ((z1, z2), cz) in self.coproduct_mono(z)?.iter() {
            for ((w1, w2), cw) in self.coproduct_mono(w)?.iter() {
                let c = cz * cw;
                let head = self.ulie.antipode(&self.rho_of(&self.mul_mono(z1, w1)?)?)?;
                let rw = self.rho_mono(w2)?;
                let r_tail = self.ulie.mul(&rw, &self.rho_mono(z2)?)?;
                let s_tail = self.ulie.mul(&self.lambda_mono(z2)?, &rw)?;
                r.add_scaled(&self.ulie.mul(&head, &r_tail)?, &c);
                s.add_scaled(&self.ulie.mul(&head, &s_tail)?, &c);
            }
        }
        self.rs.insert(key, (r.clone(), s.clone()));
        Ok((r, s))
    }

    pub fn rs_elements(&self, z: &Elem, w: &Elem) -> Result<(Op, Op), EnvError> {
        let mut r = Op::zero();
        let mut s = Op::zero();
        for (a, ca) in z.iter() {
            for (b, cb) in w.iter() {
                let (x, y) = self.rs_mono(a, b)?;
                let c = ca * cb;
                r.add_scaled(&x, &c);
                s.add_scaled(&y, &c);
            }
        }
        Ok((r, s))
    }

    /// Δ on U(Lie(m)) applied to an operator.
    pub fn op_coproduct(&self, op: &Op) -> OpTensor {
        self.ulie.coproduct(op)
    }
}
