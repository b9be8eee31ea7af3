//! Arbitrary-precision rational scalars.
//!
//! The coefficient field is fixed to the rationals. `num-rational` keeps
//! every value reduced with a positive denominator, which is exactly the
//! canonical form the rest of the crate relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/q`; panics on `q = 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` for signed exponents; panics on `0^negative`.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "zero base with negative exponent");
        num_traits::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn rat_signum(v: &Rational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}
