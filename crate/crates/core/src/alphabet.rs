//! The graded alphabet of sum letters.
//!
//! A letter `(a,b,c,z)` indexes the summand `z^i / (a*i + b)^c`. Letters
//! are totally ordered and graded by `c`. Products of two summands always
//! reduce to a rational linear combination of single summands: same base
//! forms merge by adding exponents, distinct base forms split by partial
//! fractions over the two coprime linear factors.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::coeffring::{CoefElem, RatFunc};
use crate::error::Error;
use crate::number::{rat_pow, Rational};
use crate::Result;

/// Sign factor `z` of a letter; only `+1` and `-1` occur in the alphabets
/// handled here. `Minus < Plus`, matching the integer order on `{-1, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `z^i`.
    fn pow_parity(self, i: u64) -> Rational {
        match (self, i % 2) {
            (Sign::Minus, 1) => -Rational::one(),
            _ => Rational::one(),
        }
    }
}

/// One alphabet symbol `(a, b, c, z)` of degree `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    a: u32,
    b: u32,
    c: u32,
    z: Sign,
}

impl Letter {
    /// Validates `a >= 1`, `c >= 1`, `gcd(a,b) = 1`, and `b < a` (with
    /// `b = 0` forcing `a = 1`, since `gcd(a, 0) = a`).
    pub fn new(a: u32, b: u32, c: u32, z: Sign) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidLetter {
            a,
            b,
            c,
            z: z.as_i8(),
            reason: reason.to_string(),
        };
        if a < 1 {
            return Err(fail("a must be positive"));
        }
        if c < 1 {
            return Err(fail("the degree c must be positive"));
        }
        if a.gcd(&b) != 1 {
            return Err(fail("a and b must be coprime"));
        }
        if b >= a && !(b == 0 && a == 1) {
            return Err(fail("b must be smaller than a"));
        }
        Ok(Letter { a, b, c, z })
    }

    /// The harmonic-style letter `(1, 0, c, z)`.
    pub fn basic(c: u32, z: Sign) -> Self {
        Letter::new(1, 0, c, z).expect("basic letters are always valid")
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// The degree `|letter| = c`.
    pub fn degree(&self) -> u32 {
        self.c
    }

    pub fn z(&self) -> Sign {
        self.z
    }

    /// `(a, b)` — the linear form `a*n + b` underlying the summand.
    pub fn base(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// Same letter with a different degree.
    fn with_degree(&self, c: u32) -> Self {
        Letter { c, ..*self }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.c, self.a, self.b, self.z).cmp(&(other.c, other.a, other.b, other.z))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.z.as_i8())
    }
}

/// Total order on letters, lexicographic on `(c, a, b, z)`.
pub fn letter_cmp(l1: &Letter, l2: &Letter) -> Ordering {
    l1.cmp(l2)
}

/// The summand value `z^i / (a*i + b)^c` at a concrete index `i >= 1`.
pub fn lambda_eval(l: &Letter, i: u64) -> Rational {
    let den = Rational::from_integer(BigInt::from(u64::from(l.a) * i + u64::from(l.b)));
    l.z.pow_parity(i) * rat_pow(&den, -(i64::from(l.c)))
}

/// The symbolic summand `x^((z-1)/2) / (a*n + b)^c` in `K(n)[x]`.
pub fn lambda_bar(l: &Letter) -> CoefElem {
    let body = RatFunc::inverse_linear_power(i64::from(l.a), i64::from(l.b), l.c);
    match l.z {
        Sign::Plus => CoefElem::from_ratfunc(body),
        Sign::Minus => CoefElem::new(RatFunc::zero(), body),
    }
}

/// Expands the product of two summands as a rational combination of single
/// summands: `lambda(l1, i) * lambda(l2, i) = sum r_j * lambda(m_j, i)` for
/// all `i >= 1`. Every output letter has sign `z1*z2` and degree at most
/// `c1 + c2`; the result is sorted with no duplicate letters.
pub fn letter_product(l1: &Letter, l2: &Letter) -> Vec<(Rational, Letter)> {
    let z = l1.z.mul(l2.z);
    if l1.base() == l2.base() {
        let merged = Letter {
            a: l1.a,
            b: l1.b,
            c: l1.c + l2.c,
            z,
        };
        return vec![(Rational::one(), merged)];
    }
    // distinct coprime bases u = a1*i + b1, v = a2*i + b2:
    // 1/(u^p v^q) = sum_j A_j/u^j + sum_j B_j/v^j with
    //   A_{p-m} = a1^q (-1)^m C(q-1+m, m) a2^m / D^(q+m)
    //   B_{q-m} = a2^p (-1)^p C(p-1+m, m) a1^m / D^(p+m)
    // where D = a1*b2 - a2*b1 != 0 (the Heaviside expansion of one factor
    // around the root of the other).
    let p = u64::from(l1.c);
    let q = u64::from(l2.c);
    let a1 = Rational::from_integer(BigInt::from(l1.a));
    let a2 = Rational::from_integer(BigInt::from(l2.a));
    let d = Rational::from_integer(
        BigInt::from(l1.a) * BigInt::from(l2.b) - BigInt::from(l2.a) * BigInt::from(l1.b),
    );
    let mut out: Vec<(Rational, Letter)> = Vec::with_capacity((p + q) as usize);
    for m in 0..p {
        let coeff = rat_pow(&a1, q as i64)
            * Rational::from_integer(crate::number::binomial(q - 1 + m, m))
            * rat_pow(&a2, m as i64)
            * rat_pow(&d, -((q + m) as i64))
            * if m % 2 == 1 { -Rational::one() } else { Rational::one() };
        out.push((coeff, l1.with_degree((p - m) as u32).with_sign(z)));
    }
    for m in 0..q {
        let coeff = rat_pow(&a2, p as i64)
            * Rational::from_integer(crate::number::binomial(p - 1 + m, m))
            * rat_pow(&a1, m as i64)
            * rat_pow(&d, -((p + m) as i64))
            * if p % 2 == 1 { -Rational::one() } else { Rational::one() };
        out.push((coeff, l2.with_degree((q - m) as u32).with_sign(z)));
    }
    out.sort_by(|(_, x), (_, y)| x.cmp(y));
    out
}

impl Letter {
    fn with_sign(&self, z: Sign) -> Self {
        Letter { z, ..*self }
    }
}

/// Which sub-alphabet is in play. The predicates nest:
/// harmonic < alternating < cyclotomic(M); for the nesting to hold the
/// modulus 1 is always part of a cyclotomic modulus set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetSpec {
    Harmonic,
    Alternating,
    Cyclotomic(BTreeSet<u32>),
}

impl AlphabetSpec {
    /// Cyclotomic alphabet over the moduli `M`; 1 is inserted so the
    /// harmonic letters are always included.
    pub fn cyclotomic<I: IntoIterator<Item = u32>>(moduli: I) -> Result<Self> {
        let mut m: BTreeSet<u32> = moduli.into_iter().collect();
        if m.iter().any(|&a| a == 0) {
            return Err(Error::InvalidLetter {
                a: 0,
                b: 0,
                c: 1,
                z: 1,
                reason: "moduli must be positive".to_string(),
            });
        }
        if m.is_empty() {
            return Err(Error::InvalidLetter {
                a: 0,
                b: 0,
                c: 1,
                z: 1,
                reason: "cyclotomic modulus set must be nonempty".to_string(),
            });
        }
        m.insert(1);
        Ok(AlphabetSpec::Cyclotomic(m))
    }

    pub fn contains(&self, l: &Letter) -> bool {
        match self {
            AlphabetSpec::Harmonic => l.a == 1 && l.b == 0 && l.z == Sign::Plus,
            AlphabetSpec::Alternating => l.a == 1 && l.b == 0,
            AlphabetSpec::Cyclotomic(m) => m.contains(&l.a),
        }
    }

    /// All letters of the given degree, ascending in the letter order.
    pub fn letters_of_degree(&self, c: u32) -> Vec<Letter> {
        let mut out = Vec::new();
        match self {
            AlphabetSpec::Harmonic => out.push(Letter::basic(c, Sign::Plus)),
            AlphabetSpec::Alternating => {
                out.push(Letter::basic(c, Sign::Minus));
                out.push(Letter::basic(c, Sign::Plus));
            }
            AlphabetSpec::Cyclotomic(m) => {
                for &a in m {
                    let bs: Vec<u32> = if a == 1 {
                        vec![0]
                    } else {
                        (1..a).filter(|b| a.gcd(b) == 1).collect()
                    };
                    for b in bs {
                        for z in [Sign::Minus, Sign::Plus] {
                            out.push(Letter::new(a, b, c, z).expect("constructed valid"));
                        }
                    }
                }
                out.sort();
            }
        }
        out
    }

    /// Whether every letter of `self` is a letter of `other`.
    pub fn is_sub_alphabet_of(&self, other: &AlphabetSpec) -> bool {
        use AlphabetSpec::*;
        match (self, other) {
            (Harmonic, _) => true,
            (Alternating, Harmonic) => false,
            (Alternating, _) => true,
            (Cyclotomic(m1), Cyclotomic(m2)) => m1.is_subset(m2),
            (Cyclotomic(m1), Alternating) => m1.iter().all(|&a| a == 1),
            (Cyclotomic(_), Harmonic) => false,
        }
    }
}

impl fmt::Display for AlphabetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetSpec::Harmonic => write!(f, "harmonic"),
            AlphabetSpec::Alternating => write!(f, "alternating"),
            AlphabetSpec::Cyclotomic(m) => {
                write!(f, "cyclotomic{{")?;
                for (i, a) in m.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl std::str::FromStr for AlphabetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "harmonic" => return Ok(AlphabetSpec::Harmonic),
            "alternating" => return Ok(AlphabetSpec::Alternating),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("cyclotomic{").and_then(|r| r.strip_suffix('}')) {
            let mut moduli = Vec::new();
            for part in rest.split(',') {
                let part = part.trim();
                let a: u32 = part.parse().map_err(|_| Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("invalid modulus '{part}'"),
                })?;
                moduli.push(a);
            }
            return AlphabetSpec::cyclotomic(moduli);
        }
        Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!(
                "unknown alphabet '{s}' (expected harmonic, alternating, or cyclotomic{{..}})"
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat, rat_int};

    fn l(a: u32, b: u32, c: u32, z: i8) -> Letter {
        Letter::new(a, b, c, Sign::from_i8(z).unwrap()).unwrap()
    }

    #[test]
    fn letter_validation() {
        assert!(Letter::new(2, 0, 1, Sign::Plus).is_err()); // gcd(2,0)=2
        assert!(Letter::new(2, 2, 1, Sign::Plus).is_err()); // b >= a
        assert!(Letter::new(4, 2, 1, Sign::Plus).is_err()); // gcd 2
        assert!(Letter::new(1, 0, 0, Sign::Plus).is_err()); // degree 0
        assert!(Letter::new(3, 2, 5, Sign::Minus).is_ok());
    }

    #[test]
    fn order_follows_grading_then_base_then_sign() {
        assert!(l(1, 0, 1, 1) < l(1, 0, 2, 1)); // c first
        assert!(l(1, 0, 2, 1) < l(2, 1, 2, 1)); // then a
        assert!(l(1, 0, 1, -1) < l(1, 0, 1, 1)); // then z
        assert!(l(3, 1, 2, 1) < l(3, 2, 2, -1)); // b before z
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_eval(&l(1, 0, 2, 1), 3), rat(1, 9));
        assert_eq!(lambda_eval(&l(1, 0, 1, -1), 3), rat(-1, 3));
        assert_eq!(lambda_eval(&l(2, 1, 1, 1), 2), rat(1, 5));
    }

    #[test]
    fn lambda_bar_components() {
        let plain = lambda_bar(&l(1, 0, 1, 1));
        assert_eq!(plain.part0(), &RatFunc::inverse_linear_power(1, 0, 1));
        assert!(plain.part1().is_zero());
        let signed = lambda_bar(&l(1, 0, 2, -1));
        assert!(signed.part0().is_zero());
        assert_eq!(signed.part1(), &RatFunc::inverse_linear_power(1, 0, 2));
        let cyc = lambda_bar(&l(2, 1, 1, 1));
        assert_eq!(cyc.part0(), &RatFunc::inverse_linear_power(2, 1, 1));
    }

    #[test]
    fn product_merges_equal_bases() {
        assert_eq!(
            letter_product(&l(1, 0, 1, 1), &l(1, 0, 2, 1)),
            vec![(rat_int(1), l(1, 0, 3, 1))]
        );
        assert_eq!(
            letter_product(&l(1, 0, 1, -1), &l(1, 0, 1, -1)),
            vec![(rat_int(1), l(1, 0, 2, 1))]
        );
    }

    #[test]
    fn product_splits_distinct_bases() {
        // 1/(i(2i+1)) = 1/i - 2/(2i+1)
        assert_eq!(
            letter_product(&l(1, 0, 1, 1), &l(2, 1, 1, 1)),
            vec![(rat_int(1), l(1, 0, 1, 1)), (rat_int(-2), l(2, 1, 1, 1))]
        );
    }

    #[test]
    fn product_is_numerically_exact() {
        let letters = [
            l(1, 0, 1, 1),
            l(1, 0, 2, -1),
            l(2, 1, 1, 1),
            l(2, 1, 3, -1),
            l(3, 1, 2, 1),
            l(3, 2, 1, -1),
        ];
        for l1 in &letters {
            for l2 in &letters {
                let expansion = letter_product(l1, l2);
                for (r, m) in &expansion {
                    assert!(m.degree() <= l1.degree() + l2.degree());
                    assert_eq!(m.z(), l1.z().mul(l2.z()));
                    assert!(!r.is_zero());
                }
                for i in 1..=40u64 {
                    let direct = lambda_eval(l1, i) * lambda_eval(l2, i);
                    let split: Rational = expansion
                        .iter()
                        .map(|(r, m)| r * lambda_eval(m, i))
                        .sum();
                    assert_eq!(direct, split, "mismatch at i={i} for {l1} * {l2}");
                }
            }
        }
    }

    #[test]
    fn product_commutes() {
        let x = l(2, 1, 2, -1);
        let y = l(3, 2, 1, 1);
        assert_eq!(letter_product(&x, &y), letter_product(&y, &x));
    }

    #[test]
    fn letters_per_degree() {
        assert_eq!(AlphabetSpec::Harmonic.letters_of_degree(3).len(), 1);
        assert_eq!(AlphabetSpec::Alternating.letters_of_degree(3).len(), 2);
        let cyc = AlphabetSpec::cyclotomic([1, 2]).unwrap();
        assert_eq!(cyc.letters_of_degree(1).len(), 4);
        let cyc3 = AlphabetSpec::cyclotomic([3]).unwrap();
        // a=1: b=0; a=3: b in {1,2}; two signs each
        assert_eq!(cyc3.letters_of_degree(1).len(), 6);
    }

    #[test]
    fn alphabet_nesting() {
        let h = AlphabetSpec::Harmonic;
        let a = AlphabetSpec::Alternating;
        let c12 = AlphabetSpec::cyclotomic([1, 2]).unwrap();
        let c123 = AlphabetSpec::cyclotomic([1, 2, 3]).unwrap();
        assert!(h.is_sub_alphabet_of(&a));
        assert!(a.is_sub_alphabet_of(&c12));
        assert!(c12.is_sub_alphabet_of(&c123));
        assert!(!c123.is_sub_alphabet_of(&c12));
        assert!(!a.is_sub_alphabet_of(&h));
        for spec in [&h, &a, &c12] {
            for letter in spec.letters_of_degree(2) {
                assert!(c123.contains(&letter));
            }
        }
    }

    #[test]
    fn spec_round_trips_through_strings() {
        for s in ["harmonic", "alternating", "cyclotomic{1,2,5}"] {
            let spec: AlphabetSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("cyclotomic{}".parse::<AlphabetSpec>().is_err());
        assert!("fourier".parse::<AlphabetSpec>().is_err());
    }
}
