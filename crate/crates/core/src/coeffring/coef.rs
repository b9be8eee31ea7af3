//! The coefficient ring `K(n)[x]` with `x^2 = 1` and `sigma(x) = -x`,
//! where `x` models the sign sequence `(-1)^n`.
//!
//! Since `x^2 = 1`, every element is `f0 + f1*x` with rational functions
//! `f0`, `f1`; this two-component form is canonical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::coeffring::ratfunc::RatFunc;
use crate::number::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoefElem {
    f0: RatFunc,
    f1: RatFunc,
}

impl CoefElem {
    pub fn new(f0: RatFunc, f1: RatFunc) -> Self {
        CoefElem { f0, f1 }
    }

    pub fn zero() -> Self {
        CoefElem::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn one() -> Self {
        CoefElem::new(RatFunc::one(), RatFunc::zero())
    }

    /// The involution `x`, i.e. `(-1)^n`.
    pub fn x() -> Self {
        CoefElem::new(RatFunc::zero(), RatFunc::one())
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        CoefElem::new(f, RatFunc::zero())
    }

    pub fn from_rational(c: Rational) -> Self {
        CoefElem::from_ratfunc(RatFunc::from_rational(c))
    }

    pub fn part0(&self) -> &RatFunc {
        &self.f0
    }

    pub fn part1(&self) -> &RatFunc {
        &self.f1
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.f0.is_one() && self.f1.is_zero()
    }

    /// The constant rational value, if the element is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.f1.is_zero() {
            self.f0.as_rational()
        } else {
            None
        }
    }

    /// Multiplicative inverse: `(f0 - f1*x) / (f0^2 - f1^2)` when the norm
    /// `f0^2 - f1^2` is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let norm = &(&self.f0 * &self.f0) - &(&self.f1 * &self.f1);
        if norm.is_zero() {
            return None;
        }
        Some(CoefElem::new(&self.f0 / &norm, &(-&self.f1) / &norm))
    }

    /// The shift `sigma^k`: both parts get `n -> n+k`, and the `x` part
    /// picks up `(-1)^k`.
    pub fn sigma(&self, k: i64) -> Self {
        let f1 = self.f1.shift(k);
        let f1 = if k.rem_euclid(2) == 1 { -&f1 } else { f1 };
        CoefElem::new(self.f0.shift(k), f1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = CoefElem::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `(negative?, |self|)` for printing; the sign is taken from the
    /// rational-function part that is present.
    pub fn sign_split(&self) -> (bool, CoefElem) {
        let probe = if self.f0.is_zero() { &self.f1 } else { &self.f0 };
        let (neg, _) = probe.sign_split();
        if neg {
            (true, -self)
        } else {
            (false, self.clone())
        }
    }

    /// Renders the element so it can be followed by `*...` in a product.
    /// Elements with both components need parentheses.
    pub fn fmt_as_factor(&self) -> String {
        if self.f0.is_zero() || self.f1.is_zero() {
            self.fmt_single()
        } else {
            format!("({})", self.fmt_single())
        }
    }

    fn fmt_single(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        if !self.f0.is_zero() {
            out.push_str(&self.f0.fmt_as_factor());
        }
        if !self.f1.is_zero() {
            let (neg, a) = self.f1.sign_split();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str("(-1)^n");
            if !a.is_one() {
                out.push('*');
                out.push_str(&a.fmt_as_factor());
            }
        }
        out
    }
}

impl Add for &CoefElem {
    type Output = CoefElem;
    fn add(self, rhs: &CoefElem) -> CoefElem {
        CoefElem::new(&self.f0 + &rhs.f0, &self.f1 + &rhs.f1)
    }
}

impl Sub for &CoefElem {
    type Output = CoefElem;
    fn sub(self, rhs: &CoefElem) -> CoefElem {
        CoefElem::new(&self.f0 - &rhs.f0, &self.f1 - &rhs.f1)
    }
}

impl Neg for &CoefElem {
    type Output = CoefElem;
    fn neg(self) -> CoefElem {
        CoefElem::new(-&self.f0, -&self.f1)
    }
}

impl Mul for &CoefElem {
    type Output = CoefElem;
    fn mul(self, rhs: &CoefElem) -> CoefElem {
        // (f0 + f1 x)(g0 + g1 x) = f0 g0 + f1 g1 + (f0 g1 + f1 g0) x
        CoefElem::new(
            &(&self.f0 * &rhs.f0) + &(&self.f1 * &rhs.f1),
            &(&self.f0 * &rhs.f1) + &(&self.f1 * &rhs.f0),
        )
    }
}

impl Mul<&Rational> for &CoefElem {
    type Output = CoefElem;
    fn mul(self, rhs: &Rational) -> CoefElem {
        if rhs.is_one() {
            return self.clone();
        }
        let c = RatFunc::from_rational(rhs.clone());
        CoefElem::new(&self.f0 * &c, &self.f1 * &c)
    }
}

impl fmt::Display for CoefElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f0.is_zero() || self.f1.is_zero() {
            if self.f1.is_zero() {
                // plain rational function: reuse its nicer standalone form
                return write!(f, "{}", self.f0);
            }
        }
        write!(f, "{}", self.fmt_single())
    }
}
