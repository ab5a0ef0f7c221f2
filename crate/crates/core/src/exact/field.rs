//! Scalar fields: exact rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Exact rational scalar. `num_rational` keeps it reduced with a positive denominator.
pub type Q = BigRational;

/// A commutative field with a runtime context (`()` for Q, the prime for F_p).
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Copy + Eq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn from_i64_in(v: i64, ctx: Self::Ctx) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn mul_elem(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv_elem(&self) -> Option<Self>;
}

impl Field for Q {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        Q::zero()
    }
    fn one_in(_: ()) -> Self {
        Q::one()
    }
    fn from_i64_in(v: i64, _: ()) -> Self {
        Q::from_integer(BigInt::from(v))
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_elem(&self) -> Self {
        -self
    }
    fn inv_elem(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Result<Q, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Render as `"p/q"` (or `"p"` for integers).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when the rational is strictly negative.
pub fn is_neg(x: &Q) -> bool {
    x.is_negative()
}

/// Element of the prime field F_p, residue kept in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// Build a residue; `p` must already be validated with [`check_prime`].
    pub fn new(v: i64, p: u64) -> Self {
        let m = p as i64;
        Fp { value: v.rem_euclid(m) as u64, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut e: u64) -> Fp {
        let mut base = self.value as u128;
        let m = self.p as u128;
        let mut acc: u128 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp { value: acc as u64, p: self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Reject non-primes; F_p arithmetic is only meaningful for prime moduli.
pub fn check_prime(p: u64) -> Result<u64, ExactError> {
    if p < 2 || p > u32::MAX as u64 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(ExactError::NotPrime(p));
    }
    Ok(p)
}

impl Field for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }
    fn zero_in(p: u64) -> Self {
        Fp { value: 0, p }
    }
    fn one_in(p: u64) -> Self {
        Fp { value: 1 % p, p }
    }
    fn from_i64_in(v: i64, p: u64) -> Self {
        Fp::new(v, p)
    }
    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }
    fn add_elem(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp { value: (self.value + o.value) % self.p, p: self.p }
    }
    fn sub_elem(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp { value: (self.value + self.p - o.value) % self.p, p: self.p }
    }
    fn mul_elem(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp { value: ((self.value as u128 * o.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg_elem(&self) -> Self {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }
    fn inv_elem(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let x = q(6, -4);
        assert_eq!(fmt_q(&x), "-3/2");
        assert_eq!(parse_q("-3/2").unwrap(), x);
        assert_eq!(parse_q(" 7 ").unwrap(), qi(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn fp_inverse() {
        let p = check_prime(7).unwrap();
        for v in 1..7 {
            let x = Fp::new(v, p);
            assert_eq!(x.mul_elem(&x.inv_elem().unwrap()), Fp::one_in(p));
        }
        assert!(Fp::new(0, p).inv_elem().is_none());
        assert_eq!(Fp::new(-1, p).value(), 6);
    }

    #[test]
    fn primes_checked() {
        assert!(check_prime(4).is_err());
        assert!(check_prime(1).is_err());
        assert!(check_prime(2).is_ok());
        assert!(check_prime(101).is_ok());
    }
}
