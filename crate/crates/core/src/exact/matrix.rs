//! Dense matrices over a [`Field`] with exact row reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactError, Field};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

/// Outcome of [`Matrix::solve_exact`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solution<F> {
    /// A solution (free variables set to zero when the system is underdetermined).
    Consistent(Vec<F>),
    Inconsistent,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, ctx: F::Ctx) -> Self {
        Matrix { rows, cols, ctx, data: vec![F::zero_in(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: F::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.data[i * n + i] = F::one_in(ctx);
        }
        m
    }

    /// Build from row vectors. All rows must have `cols` entries in the context `ctx`.
    pub fn from_rows(ctx: F::Ctx, cols: usize, rows: Vec<Vec<F>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::DimensionMismatch {
                    op: "from_rows",
                    left: (r, cols),
                    right: (1, row.len()),
                });
            }
            for x in row {
                if x.ctx() != ctx {
                    return Err(ExactError::ScalarKindMismatch);
                }
                data.push(x);
            }
        }
        Ok(Matrix { rows: r, cols, ctx, data })
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(ctx: F::Ctx, rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len(), ctx);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero_elem)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows, self.ctx) && self.is_square()
    }

    fn same_shape(&self, o: &Self, op: &'static str) -> Result<(), ExactError> {
        if self.ctx != o.ctx {
            return Err(ExactError::ScalarKindMismatch);
        }
        if self.rows != o.rows || self.cols != o.cols {
            return Err(ExactError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (o.rows, o.cols),
            });
        }
        Ok(())
    }

    pub fn mat_mul(&self, o: &Self) -> Result<Self, ExactError> {
        if self.ctx != o.ctx {
            return Err(ExactError::ScalarKindMismatch);
        }
        if self.cols != o.rows {
            return Err(ExactError::DimensionMismatch {
                op: "mat_mul",
                left: (self.rows, self.cols),
                right: (o.rows, o.cols),
            });
        }
        let mut out = Self::zeros(self.rows, o.cols, self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_elem(&a.mul_elem(b));
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ExactError> {
        self.same_shape(o, "add")?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_elem(b)).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ExactError> {
        self.same_shape(o, "sub")?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_elem(b)).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> Self {
        Matrix { rows: self.rows, cols: self.cols, ctx: self.ctx, data: Vec::new() }
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|a| a.mul_elem(c)).collect();
        Matrix { data, ..self.clone_shape() }
    }

    /// `self*o - o*self`.
    pub fn commutator(&self, o: &Self) -> Result<Self, ExactError> {
        self.mat_mul(o)?.try_sub(&o.mat_mul(self)?)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Self::zeros(r, c, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero_elem() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.data[(i * o.rows + k) * c + j * o.cols + l] = a.mul_elem(o.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Block diagonal matrix `diag(self, o)`.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows + o.rows, self.cols + o.cols, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        out
    }

    /// Submatrix of the given row and column ranges.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut out = Self::zeros(r1 - r0, c1 - c0, self.ctx);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                op: "apply",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero_in(self.ctx);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elem() && !b.is_zero_elem() {
                        acc = acc.add_elem(&a.mul_elem(b));
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv_elem().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul_elem(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero_elem() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub_elem(&f.mul_elem(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero_in(self.ctx); self.cols];
                v[f] = F::one_in(self.ctx);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg_elem();
                }
                v
            })
            .collect()
    }

    /// Solve `self x = b` exactly.
    pub fn solve_exact(&self, b: &[F]) -> Result<Solution<F>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::DimensionMismatch {
                op: "solve_exact",
                left: (self.rows, self.cols),
                right: (b.len(), 1),
            });
        }
        if b.iter().any(|x| x.ctx() != self.ctx) {
            return Err(ExactError::ScalarKindMismatch);
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = vec![F::zero_in(self.ctx); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(Solution::Consistent(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, self.ctx);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one_in(self.ctx));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// Operator forms panic on shape errors; use the `try_*`/`mat_mul` methods for checked access.
impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, o: &Matrix<F>) -> Matrix<F> {
        self.mat_mul(o).expect("matrix product shape")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, o: &Matrix<F>) -> Matrix<F> {
        self.try_add(o).expect("matrix sum shape")
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, o: &Matrix<F>) -> Matrix<F> {
        self.try_sub(o).expect("matrix difference shape")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        let data = self.data.iter().map(F::neg_elem).collect();
        Matrix { data, ..self.clone_shape() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qi, Fp, Q};

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows((), cols, rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn product_by_hand() {
        let a = qm(&[&[1, 2], &[3, 4]]);
        let b = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mat_mul(&b).unwrap(), qm(&[&[2, 1], &[4, 3]]));
        let id = Matrix::<Q>::identity(2, ());
        assert_eq!(id.mat_mul(&a).unwrap(), a);
    }

    #[test]
    fn shape_errors() {
        let a = qm(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = qm(&[&[1, 2], &[3, 4]]);
        assert!(matches!(a.mat_mul(&b), Err(ExactError::DimensionMismatch { .. })));
        let x = Matrix::<Fp>::identity(2, 3);
        let y = Matrix::<Fp>::identity(2, 5);
        assert_eq!(x.mat_mul(&y), Err(ExactError::ScalarKindMismatch));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::<Q>::zeros(2, 2, ()).kernel_basis().len(), 2);
        assert!(Matrix::<Q>::identity(4, ()).kernel_basis().is_empty());
        let k = qm(&[&[1, 1], &[2, 2]]).kernel_basis();
        assert_eq!(k, vec![vec![qi(-1), qi(1)]]);
    }

    #[test]
    fn solving() {
        let two = qm(&[&[2, 0], &[0, 2]]);
        let s = two.solve_exact(&[qi(1), qi(1)]).unwrap();
        assert_eq!(s, Solution::Consistent(vec![crate::exact::q(1, 2), crate::exact::q(1, 2)]));
        let ones = qm(&[&[1, 1], &[1, 1]]);
        assert_eq!(ones.solve_exact(&[qi(0), qi(1)]).unwrap(), Solution::Inconsistent);
        let id = Matrix::<Q>::identity(3, ());
        let b = vec![qi(4), qi(-1), qi(7)];
        assert_eq!(id.solve_exact(&b).unwrap(), Solution::Consistent(b));
    }

    #[test]
    fn inverse_and_kron() {
        let a = qm(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mat_mul(&inv).unwrap().is_identity());
        assert!(qm(&[&[1, 1], &[1, 1]]).inverse().is_none());
        let k = a.kron(&Matrix::identity(2, ()));
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(2, 0), qi(3));
        assert_eq!(*k.get(3, 1), qi(3));
    }
}
