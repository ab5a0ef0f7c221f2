//! The induced module U(Lie(m)) ⊗_{U(Lie(m)+)} k with basis the sorted T-monomials.
//!
//! Monomials here use local T indices `0..n`; operator letters use Lie(m) indices.

use dashmap::DashMap;
use num_traits::Zero;

use crate::exact::Q;
use crate::sparse::{Lin, Monomial};

use super::ulie::{Op, ULie};
use super::EnvError;

pub type Vector = Lin<Monomial>;

pub struct InducedModule {
    p: usize,
    n: usize,
    budget: usize,
    /// `[X_i, T_x]` as T coordinates.
    plus_on_t: Vec<Vec<Vec<(u16, Q)>>>,
    /// `[T_x, T_y]` as plus coordinates.
    t_on_t: Vec<Vec<Vec<(u16, Q)>>>,
    cache: DashMap<(u16, Monomial), Vector>,
}

impl InducedModule {
    pub fn new(u: &ULie) -> Self {
        let env = u.envelope();
        let p = env.plus_dim();
        let n = env.m_dim();
        let s = env.structure();
        let sparse = |v: &[Q], lo: usize, hi: usize| -> Vec<(u16, Q)> {
            (lo..hi).filter(|&k| !v[k].is_zero()).map(|k| ((k - lo) as u16, v[k].clone())).collect()
        };
        let plus_on_t = (0..p)
            .map(|i| (0..n).map(|x| sparse(s.basis_bracket(i, p + x), p, p + n)).collect())
            .collect();
        let t_on_t = (0..n)
            .map(|x| (0..n).map(|y| sparse(s.basis_bracket(p + x, p + y), 0, p)).collect())
            .collect();
        InducedModule { p, n, budget: u.budget(), plus_on_t, t_on_t, cache: DashMap::new() }
    }

    pub fn m_dim(&self) -> usize {
        self.n
    }

    fn act_t(&self, i: u16, t: &Monomial) -> Result<Vector, EnvError> {
        if t.degree() + 1 > self.budget {
            return Err(EnvError::Budget { needed: t.degree() + 1, budget: self.budget });
        }
        match t.first() {
            None => return Ok(Vector::basis(Monomial::from_slice(&[i]))),
            Some(j) if i <= j => return Ok(Vector::basis(t.prepend(i))),
            _ => {}
        }
        let key = (self.p as u16 + i, t.clone());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        // T_i T_j R = T_j (T_i R) + [T_i, T_j] R
        let j = t.first().expect("nonempty");
        let rest = t.tail();
        let mut out = Vector::zero();
        for (m, c) in self.act_t(i, &rest)?.iter() {
            out.add_scaled(&self.act_t(j, m)?, c);
        }
        for (k, c) in &self.t_on_t[i as usize][j as usize] {
            out.add_scaled(&self.act_plus(*k, &rest)?, c);
        }
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    fn act_plus(&self, k: u16, t: &Monomial) -> Result<Vector, EnvError> {
        let Some(j) = t.first() else { return Ok(Vector::zero()) };
        let key = (k, t.clone());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        // X T_j R = T_j (X R) + [X, T_j] R
        let rest = t.tail();
        let mut out = Vector::zero();
        for (m, c) in self.act_plus(k, &rest)?.iter() {
            out.add_scaled(&self.act_t(j, m)?, c);
        }
        for (x, c) in &self.plus_on_t[k as usize][j as usize] {
            out.add_scaled(&self.act_t(*x, &rest)?, c);
        }
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    /// Action of one Lie(m) basis letter.
    pub fn act_letter(&self, x: u16, v: &Vector) -> Result<Vector, EnvError> {
        let p = self.p as u16;
        let mut out = Vector::zero();
        for (t, c) in v.iter() {
            let r = if x < p { self.act_plus(x, t)? } else { self.act_t(x - p, t)? };
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    pub fn act(&self, op: &Op, v: &Vector) -> Result<Vector, EnvError> {
        let mut out = Vector::zero();
        for (m, c) in op.iter() {
            let mut cur = v.clone();
            for &x in m.letters().iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = self.act_letter(x, &cur)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }
}
