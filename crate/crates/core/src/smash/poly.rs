//! k[V] as a coalgebra with an action of U(Lie(m)+) by derivations.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::{QMatrix, Q};
use crate::enveloping::Op;
use crate::sparse::{monomials_up_to, Lin, Monomial};

use super::SmashError;

pub type Poly = Lin<Monomial>;

/// Linear map on the truncated k[V], stored column by column.
pub type PolyMap = HashMap<Monomial, Poly>;

pub struct PolyAction {
    dim: usize,
    degree: usize,
    plus_dim: usize,
    /// Sparse columns of each generator's matrix: `gens[i][j] = l_i(v_j)`.
    gens: Vec<Vec<Vec<(u16, Q)>>>,
    basis: Vec<Monomial>,
}

impl PolyAction {
    /// `mats[i]` is the image of the i-th Lie(m)+ basis element on V.
    pub fn new(mats: &[QMatrix], dim: usize, degree: usize) -> Self {
        let gens = mats
            .iter()
            .map(|m| {
                (0..dim)
                    .map(|j| (0..dim).filter(|&k| !m.get(k, j).is_zero()).map(|k| (k as u16, m.get(k, j).clone())).collect())
                    .collect()
            })
            .collect();
        PolyAction { dim, degree, plus_dim: mats.len(), gens, basis: monomials_up_to(dim, degree) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Monomials of k[V] up to the truncation degree.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// One generator acting as a derivation on a monomial.
    fn derive(&self, i: usize, m: &Monomial) -> Poly {
        let mut out = Poly::zero();
        let letters = m.letters();
        for (t, &j) in letters.iter().enumerate() {
            let mut rest: Vec<usize> = letters.iter().map(|&x| x as usize).collect();
            rest.remove(t);
            for (k, c) in &self.gens[i][j as usize] {
                let mut idx = rest.clone();
                idx.push(*k as usize);
                out.add_term(Monomial::sorted(idx), c.clone());
            }
        }
        out
    }

    fn act_letter(&self, i: u16, p: &Poly) -> Result<Poly, SmashError> {
        if i as usize >= self.plus_dim {
            return Err(SmashError::NotPlusOnly);
        }
        let mut out = Poly::zero();
        for (m, c) in p.iter() {
            out.add_scaled(&self.derive(i as usize, m), c);
        }
        Ok(out)
    }

    /// `φ·p` for a plus-only operator; `φ·1 = ε(φ)`.
    pub fn act(&self, op: &Op, p: &Poly) -> Result<Poly, SmashError> {
        let mut out = Poly::zero();
        for (m, c) in op.iter() {
            let mut cur = p.clone();
            for &x in m.letters().iter().rev() {
                cur = self.act_letter(x, &cur)?;
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// The operator as a map on the truncated k[V].
    pub fn tabulate(&self, op: &Op) -> Result<PolyMap, SmashError> {
        self.basis.iter().map(|m| Ok((m.clone(), self.act(op, &Poly::basis(m.clone()))?))).collect()
    }
}

pub fn apply_map(map: &PolyMap, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.iter() {
        if let Some(col) = map.get(m) {
            out.add_scaled(col, c);
        }
    }
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(x.merge(y), cx * cy);
        }
    }
    out
}

/// Antipode of k[V]: `x ↦ (-1)^deg x`.
pub fn poly_antipode(p: &Poly) -> Poly {
    p.iter()
        .map(|(m, c)| (m.clone(), if m.degree() % 2 == 0 { c.clone() } else { -c.clone() }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    fn action() -> PolyAction {
        // one generator acting on V = k^2 by [[0,1],[2,0]]
        let m = QMatrix::from_rows((), 2, vec![vec![qi(0), qi(1)], vec![qi(2), qi(0)]]).unwrap();
        PolyAction::new(&[m], 2, 2)
    }

    #[test]
    fn acts_on_one_by_counit() {
        let a = action();
        let one = Poly::basis(Monomial::one());
        assert!(a.act(&Op::basis(Monomial::letter(0)), &one).unwrap().is_zero());
        assert_eq!(a.act(&Op::basis(Monomial::one()), &one).unwrap(), one);
    }

    #[test]
    fn generator_is_the_matrix_on_degree_one() {
        let a = action();
        let img = a.act(&Op::basis(Monomial::letter(0)), &Poly::basis(Monomial::letter(0))).unwrap();
        assert_eq!(img, Poly::term(Monomial::letter(1), qi(2)));
    }

    #[test]
    fn leibniz_on_a_product() {
        let a = action();
        let x0x1 = Poly::basis(Monomial::sorted(vec![0, 1]));
        let img = a.act(&Op::basis(Monomial::letter(0)), &x0x1).unwrap();
        let mut want = Poly::term(Monomial::sorted(vec![1, 1]), qi(2));
        want.add_term(Monomial::sorted(vec![0, 0]), qi(1));
        assert_eq!(img, want);
    }

    #[test]
    fn t_letters_do_not_act() {
        let a = action();
        assert_eq!(a.act(&Op::basis(Monomial::letter(1)), &Poly::basis(Monomial::letter(0))), Err(SmashError::NotPlusOnly));
    }
}
