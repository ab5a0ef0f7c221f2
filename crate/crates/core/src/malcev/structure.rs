//! Anticommutative structure constants `[e_i, e_j] = Σ_k c^k_ij e_k`.

use num_traits::Zero;

use crate::exact::{axpy, is_zero_vec, qzero_vec, Matrix, QMatrix, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    n: usize,
    c: Vec<Vec<Q>>,
}

impl Structure {
    pub fn zero(n: usize) -> Self {
        Structure { n, c: vec![qzero_vec(n); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Set `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Vec<Q>) {
        assert_eq!(v.len(), self.n);
        self.c[j * self.n + i] = v.iter().map(|x| -x).collect();
        self.c[i * self.n + j] = v;
    }

    /// Raw entry, without enforcing antisymmetry (used by JSON loading).
    pub(crate) fn set_raw(&mut self, i: usize, j: usize, v: Vec<Q>) {
        self.c[i * self.n + j] = v;
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Q] {
        &self.c[i * self.n + j]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| {
            is_zero_vec(self.basis_bracket(i, i))
                && (0..i).all(|j| {
                    self.basis_bracket(i, j).iter().zip(self.basis_bracket(j, i)).all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|v| is_zero_vec(v))
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = qzero_vec(self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, -]`; column j is `[x, e_j]`.
    pub fn ad(&self, x: &[Q]) -> QMatrix {
        let cols: Vec<Vec<Q>> = (0..self.n).map(|j| self.bracket(x, &crate::exact::unit_vec(self.n, j))).collect();
        Matrix::from_columns((), self.n, &cols)
    }

    /// First basis triple violating the Jacobi identity.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let e = |i| crate::exact::unit_vec(n, i);
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut s = self.bracket(&self.bracket(&e(i), &e(j)), &e(k));
                    let t = self.bracket(&self.bracket(&e(j), &e(k)), &e(i));
                    let u = self.bracket(&self.bracket(&e(k), &e(i)), &e(j));
                    for ((a, b), c) in s.iter_mut().zip(&t).zip(&u) {
                        *a += b + c;
                    }
                    if !is_zero_vec(&s) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_failure().is_none()
    }

    /// Dimension of `[g, g]`.
    pub fn derived_dim(&self) -> usize {
        let rows: Vec<Vec<Q>> = self.c.clone();
        Matrix::from_rows((), self.n, rows).expect("rows").rank()
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<Q>> {
        // x central iff [x, e_j] = 0 for all j: stack the linear maps x -> [x, e_j].
        let n = self.n;
        let mut big = QMatrix::zeros(n * n, n, ());
        for j in 0..n {
            for i in 0..n {
                for k in 0..n {
                    big.set(j * n + k, i, self.basis_bracket(i, j)[k].clone());
                }
            }
        }
        big.kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    #[test]
    fn heisenberg_center() {
        let mut s = Structure::zero(3);
        s.set(0, 1, vec![qi(0), qi(0), qi(1)]);
        assert!(s.is_antisymmetric());
        assert!(s.is_lie());
        assert_eq!(s.center().len(), 1);
        assert_eq!(s.derived_dim(), 1);
        let x = vec![qi(1), qi(2), qi(0)];
        let y = vec![qi(3), q(1, 2), qi(5)];
        assert_eq!(s.bracket(&x, &y), vec![qi(0), qi(0), q(1, 2) - qi(6)]);
    }
}
