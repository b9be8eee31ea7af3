//! Dense univariate polynomials in `n` over the rationals.
//!
//! Degrees stay tiny in this crate (denominators are products of linear
//! forms), so a dense coefficient vector is the right representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::number::{rat_signum, Rational};

/// Polynomial in `n`; `coeffs[i]` is the coefficient of `n^i`.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyN {
    coeffs: Vec<Rational>,
}

impl PolyN {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyN { coeffs }
    }

    pub fn zero() -> Self {
        PolyN { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyN::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        PolyN::new(vec![c])
    }

    /// The monomial `c * n^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return PolyN::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PolyN { coeffs }
    }

    /// The linear form `a*n + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        PolyN::new(vec![
            Rational::from_integer(BigInt::from(b)),
            Rational::from_integer(BigInt::from(a)),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, k: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(k)))
    }

    /// Substitute `n -> n + k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.is_constant() {
            return self.clone();
        }
        let d = self.coeffs.len() - 1;
        let kq = Rational::from_integer(BigInt::from(k));
        let mut out = vec![Rational::zero(); d + 1];
        // q_j = sum_{i >= j} p_i * C(i, j) * k^(i-j)
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let mut kpow = Rational::one();
            for j in (0..=i).rev() {
                let b = crate::number::binomial(i as u64, j as u64);
                out[j] += p * Rational::from_integer(b) * &kpow;
                kpow *= &kq;
            }
        }
        PolyN::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PolyN::zero();
        }
        PolyN {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Quotient and remainder with `deg rem < deg div`; panics on zero divisor.
    pub fn divrem(&self, div: &PolyN) -> (PolyN, PolyN) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &lead;
            if !f.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let v = &f * c;
                    rem[k + i] -= v;
                }
                quo[k] = f;
            }
            rem.pop();
        }
        (PolyN::new(quo), PolyN::new(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &PolyN) -> PolyN {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Whether `div` divides `self` exactly.
    pub fn divisible_by(&self, div: &PolyN) -> bool {
        self.divrem(div).1.is_zero()
    }

    /// Content/primitive decomposition: `self = content * primitive` where
    /// the primitive part has coprime integer coefficients and a positive
    /// leading coefficient. The zero polynomial yields `(0, 0)`.
    pub fn content_primitive(&self) -> (Rational, PolyN) {
        if self.is_zero() {
            return (Rational::zero(), PolyN::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * &den_lcm / c.denom();
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if rat_signum(&self.leading_coeff()) < 0 {
            content = -content;
        }
        let prim = PolyN {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        (content, prim)
    }

    /// Primitive part (integer coefficients, gcd 1, positive leading coeff).
    pub fn primitive(&self) -> PolyN {
        self.content_primitive().1
    }

    /// Monic gcd normalized to the primitive form; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyN) -> PolyN {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            // keep coefficients small between steps
            b = r.primitive();
        }
        a.primitive()
    }

    /// Resultant of `self` and `other` via the Sylvester determinant.
    /// Follows the convention `Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)`
    /// over the roots of `f`; only the root set of the resultant matters to
    /// the callers here.
    pub fn resultant(&self, other: &PolyN) -> Rational {
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        let m = self.degree().unwrap();
        let n = other.degree().unwrap();
        if m == 0 {
            return crate::number::rat_pow(&self.coeffs[0], n as i64);
        }
        if n == 0 {
            return crate::number::rat_pow(&other.coeffs[0], m as i64);
        }
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for (row, rowvec) in mat.iter_mut().enumerate().take(n) {
            for (i, c) in self.coeffs.iter().rev().enumerate() {
                rowvec[row + i] = c.clone();
            }
        }
        for (row, rowvec) in mat.iter_mut().enumerate().skip(n) {
            let row = row - n;
            for (i, c) in other.coeffs.iter().rev().enumerate() {
                rowvec[row + i] = c.clone();
            }
        }
        determinant(mat)
    }

    /// All integer roots, ascending. Scans the Cauchy root bound, which is
    /// small for the linear-form denominators appearing in this crate.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        if self.is_zero() || self.is_constant() {
            return Vec::new();
        }
        let prim = self.primitive();
        let lead = prim.leading_coeff();
        let mut bound = Rational::zero();
        for c in prim.coeffs() {
            let q = (c / &lead).abs();
            if q > bound {
                bound = q;
            }
        }
        let bound = (bound.numer() / bound.denom()) + BigInt::from(2);
        let mut roots = Vec::new();
        let mut k = -bound.clone();
        while k <= bound {
            if prim.eval(&Rational::from_integer(k.clone())).is_zero() {
                roots.push(k.clone());
            }
            k += 1;
        }
        roots
    }
}

fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let size = mat.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let p = mat[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let f = &mat[r][col] / &p;
            for c in col..size {
                let v = &f * &mat[col][c];
                mat[r][c] -= v;
            }
        }
    }
    det
}

impl Add for &PolyN {
    type Output = PolyN;
    fn add(self, rhs: &PolyN) -> PolyN {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        PolyN::new(out)
    }
}

impl Sub for &PolyN {
    type Output = PolyN;
    fn sub(self, rhs: &PolyN) -> PolyN {
        self + &(-rhs)
    }
}

impl Neg for &PolyN {
    type Output = PolyN;
    fn neg(self) -> PolyN {
        PolyN {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyN {
    type Output = PolyN;
    fn mul(self, rhs: &PolyN) -> PolyN {
        if self.is_zero() || rhs.is_zero() {
            return PolyN::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyN::new(out)
    }
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = rat_signum(c) < 0;
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if i == 1 {
                    write!(f, "n")?;
                } else {
                    write!(f, "n^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    fn p(coeffs: &[i64]) -> PolyN {
        PolyN::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        let q = PolyN::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(q.degree(), Some(0));
    }

    #[test]
    fn shift_linear_form() {
        // (2n+3) shifted by -1 is 2n+1
        assert_eq!(PolyN::linear(2, 3).shift(-1), PolyN::linear(2, 1));
        assert_eq!(PolyN::linear(1, 0).shift(2), PolyN::linear(1, 2));
    }

    #[test]
    fn shift_composes() {
        let q = p(&[5, -3, 0, 2]);
        assert_eq!(q.shift(3).shift(-5), q.shift(-2));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[-1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let a = &p(&[1, 1]) * &p(&[3, 1]); // (n+1)(n+3)
        let b = &p(&[1, 1]) * &p(&[5, 2]); // (n+1)(2n+5)
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert!(p(&[1, 1]).gcd(&p(&[3, 2])).is_one());
    }

    #[test]
    fn content_primitive_normalizes() {
        let q = PolyN::new(vec![rat(2, 3), rat(4, 3)]); // (2/3)(2n+1)
        let (c, prim) = q.content_primitive();
        assert_eq!(c, rat(2, 3));
        assert_eq!(prim, p(&[1, 2]));
        let neg = PolyN::new(vec![rat_int(2), rat_int(-4)]);
        let (c, prim) = neg.content_primitive();
        assert_eq!(c, rat_int(-2));
        assert_eq!(prim, p(&[-1, 2]));
    }

    #[test]
    fn resultant_shares_root_iff_zero() {
        // (n-1)(n-2) and (n-2)(n-5) share n=2
        let a = &p(&[-1, 1]) * &p(&[-2, 1]);
        let b = &p(&[-2, 1]) * &p(&[-5, 1]);
        assert!(a.resultant(&b).is_zero());
        let c = p(&[-7, 1]);
        assert!(!a.resultant(&c).is_zero());
    }

    #[test]
    fn resultant_of_linear_pair() {
        // Res(an+b, cn+d) = +-(ad - bc); roots are what matters
        let r = PolyN::linear(2, 3).resultant(&PolyN::linear(1, 1));
        assert_eq!(r.abs(), rat_int(1).abs());
    }

    #[test]
    fn integer_roots_found() {
        let q = &p(&[-1, 1]) * &p(&[5, 1]); // roots 1, -5
        assert_eq!(
            q.integer_roots(),
            vec![BigInt::from(-5), BigInt::from(1)]
        );
        assert!(p(&[1, 2]).integer_roots().is_empty()); // root -1/2
    }

    #[test]
    fn display_readable() {
        assert_eq!(p(&[1, -2, 3]).to_string(), "3*n^2 - 2*n + 1");
        assert_eq!(p(&[0, 1]).to_string(), "n");
        assert_eq!(PolyN::zero().to_string(), "0");
        assert_eq!(PolyN::new(vec![rat(1, 2), rat_int(1)]).to_string(), "n + 1/2");
    }
}
