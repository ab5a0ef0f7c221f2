//! Exact scalars and dense linear algebra.

mod field;
mod matrix;

pub use field::{check_prime, fmt_q, is_neg, parse_q, q, qi, Field, Fp, Q};
pub use matrix::{Matrix, Solution};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("scalars from different fields mixed in one computation")]
    ScalarKindMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// Rational matrix shorthand.
pub type QMatrix = Matrix<Q>;

/// Zero vector over Q.
pub fn qzero_vec(n: usize) -> Vec<Q> {
    vec![qi(0); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = qzero_vec(n);
    v[i] = qi(1);
    v
}

/// `a + c*b` in place.
pub fn axpy(a: &mut [Q], c: &Q, b: &[Q]) {
    use num_traits::Zero;
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    use num_traits::Zero;
    v.iter().all(Zero::is_zero)
}
