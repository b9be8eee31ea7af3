//! Rational functions in `n`, kept in a canonical form so that equality is
//! component comparison: numerator and denominator are coprime, and the
//! denominator is an integer-primitive polynomial with positive leading
//! coefficient (any rational content is carried by the numerator).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::coeffring::poly::PolyN;
use crate::error::Error;
use crate::number::{rat_signum, Rational};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: PolyN,
    den: PolyN,
}

impl RatFunc {
    pub fn new(num: PolyN, den: PolyN) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyN, den: PolyN) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: PolyN::zero(),
                den: PolyN::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let (c, den) = den.content_primitive();
        let num = num.scale(&c.recip());
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: PolyN::zero(),
            den: PolyN::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: PolyN::one(),
            den: PolyN::one(),
        }
    }

    pub fn from_poly(p: PolyN) -> Self {
        RatFunc {
            num: p,
            den: PolyN::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc::from_poly(PolyN::constant(c))
    }

    /// `1 / (a*n + b)^c`.
    pub fn inverse_linear_power(a: i64, b: i64, c: u32) -> Self {
        let base = PolyN::linear(a, b);
        let mut den = PolyN::one();
        for _ in 0..c {
            den = &den * &base;
        }
        Self::normalized(PolyN::one(), den)
    }

    pub fn num(&self) -> &PolyN {
        &self.num
    }

    pub fn den(&self) -> &PolyN {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if this is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(if self.num.is_zero() {
                Rational::zero()
            } else {
                self.num.coeffs()[0].clone() / self.den.coeffs()[0].clone()
            })
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Substitute `n -> n + k`. Shifting preserves the canonical form, so
    /// the components are shifted directly.
    pub fn shift(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.shift(k),
        }
    }

    /// Exact evaluation at `n = k`; `None` at poles.
    pub fn eval_checked(&self, k: i64) -> Option<Rational> {
        let d = self.den.eval_int(k);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_int(k) / d)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = RatFunc::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Splits off the sign: `(negative?, |self|)`.
    pub fn sign_split(&self) -> (bool, RatFunc) {
        let (c, _) = self.num.content_primitive();
        if rat_signum(&c) < 0 {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    /// Writes this value as a factor inside a product, i.e. the output can
    /// be followed by `*...` without changing how it parses.
    pub fn fmt_as_factor(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (cn, prim) = self.num.content_primitive();
        let p = cn.numer();
        let q = cn.denom();
        let mut out = String::new();
        // numerator: p * prim
        if prim.is_one() {
            out.push_str(&p.to_string());
        } else {
            if !p.magnitude().is_one() {
                out.push_str(&format!("{p}*"));
            } else if p.is_negative() {
                out.push('-');
            }
            out.push_str(&paren_poly(&prim));
        }
        // denominator: q * den
        if self.den.is_one() {
            if !q.is_one() {
                out.push_str(&format!("/{q}"));
            }
        } else if q.is_one() {
            out.push_str(&format!("/{}", paren_poly(&self.den)));
        } else {
            out.push_str(&format!("/({}*{})", q, paren_poly(&self.den)));
        }
        out
    }
}

/// A polynomial rendered so it can participate in a product: multi-term
/// polynomials get parentheses, pure powers of `n` do not.
fn paren_poly(p: &PolyN) -> String {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    let s = p.to_string();
    if nonzero > 1 || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            let (cn, prim) = self.num.content_primitive();
            if prim.is_one() || cn.is_one() {
                // standalone polynomials read better without parentheses
                return write!(f, "{}", self.num);
            }
        }
        write!(f, "{}", self.fmt_as_factor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(
            PolyN::new(num.iter().map(|&c| rat_int(c)).collect()),
            PolyN::new(den.iter().map(|&c| rat_int(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn normalization_cancels_common_factors() {
        // (n^2-1)/(n-1) = n+1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn normalization_is_scaling_invariant() {
        // scaling num and den by the same polynomial keeps the canonical pair
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[3, 3], &[3, 6, 3]); // 3(n+1) / 3(n+1)^2
        assert_eq!(a, b);
    }

    #[test]
    fn denominator_is_primitive_positive() {
        // 1/(-2n-4) -> (-1/2)/(n+2)
        let r = rf(&[1], &[-4, -2]);
        assert_eq!(r.den(), &PolyN::linear(1, 2));
        assert_eq!(r.num(), &PolyN::constant(rat(-1, 2)));
    }

    #[test]
    fn shift_examples() {
        // n/(n+1) shifted by 1 is (n+1)/(n+2)
        assert_eq!(rf(&[0, 1], &[1, 1]).shift(1), rf(&[1, 1], &[2, 1]));
        // 1/n shifted by 0 is unchanged
        assert_eq!(rf(&[1], &[0, 1]).shift(0), rf(&[1], &[0, 1]));
        // 1/(2n+3) shifted by -1 is 1/(2n+1)
        assert_eq!(rf(&[1], &[3, 2]).shift(-1), rf(&[1], &[1, 2]));
    }

    #[test]
    fn shift_composes() {
        let r = rf(&[1, 2], &[3, 0, 1]);
        assert_eq!(r.shift(2).shift(-3), r.shift(-1));
        assert_eq!(r.shift(4).shift(-4), r);
    }

    #[test]
    fn eval_and_poles() {
        let r = rf(&[1, 1], &[-3, 1]); // (n+1)/(n-3)
        assert_eq!(r.eval_checked(3), None);
        assert_eq!(r.eval_checked(4), Some(rat_int(5)));
    }

    #[test]
    fn factor_form_strings() {
        assert_eq!(rf(&[1], &[1, 1]).fmt_as_factor(), "1/(n + 1)");
        assert_eq!(rf(&[1], &[2]).fmt_as_factor(), "1/2");
        assert_eq!(rf(&[1, 1], &[2, 1]).fmt_as_factor(), "(n + 1)/(n + 2)");
        assert_eq!(rf(&[3, 3], &[2]).fmt_as_factor(), "3*(n + 1)/2");
        assert_eq!(rf(&[1], &[0, 0, 1]).fmt_as_factor(), "1/n^2");
        assert_eq!(rf(&[1], &[2, 0, 2]).fmt_as_factor(), "1/(2*(n^2 + 1))");
        assert_eq!(rf(&[-1, -1], &[1]).fmt_as_factor(), "-(n + 1)");
    }
}
