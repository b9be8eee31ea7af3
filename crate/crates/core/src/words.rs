//! Words over the alphabet and the expression ring they span.
//!
//! A word names one nested sum; the weight of a word is the total degree
//! of its letters. [`SumExpr`] is the free commutative polynomial ring in
//! sum symbols over the coefficient ring `K(n)[x]`, stored as a canonical
//! map from monomials (multisets of words) to coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::alphabet::{AlphabetSpec, Letter, Sign};
use crate::coeffring::CoefElem;
use crate::error::Error;
use crate::number::Rational;
use crate::Result;

/// A nonempty sequence of letters; the index list of one nested sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    /// Harmonic/alternating shorthand: entry `c` means `(1,0,|c|,sign c)`.
    pub fn from_signed_degrees(entries: &[i32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(entries.len());
        for &e in entries {
            if e == 0 {
                return Err(Error::InvalidLetter {
                    a: 1,
                    b: 0,
                    c: 0,
                    z: 1,
                    reason: "degree entry must be nonzero".to_string(),
                });
            }
            let z = if e < 0 { Sign::Minus } else { Sign::Plus };
            letters.push(Letter::basic(e.unsigned_abs(), z));
        }
        Word::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn head(&self) -> &Letter {
        &self.0[0]
    }

    /// The word without its first letter; `None` for single letters.
    pub fn tail(&self) -> Option<Word> {
        if self.0.len() > 1 {
            Some(Word(self.0[1..].to_vec()))
        } else {
            None
        }
    }

    /// Sum of the letter degrees.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(Letter::degree).sum()
    }

    pub fn prepend(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if l.base() == (1, 0) {
                let c = i64::from(l.degree());
                write!(f, "{}", c * i64::from(l.z().as_i8()))?;
            } else {
                write!(f, "{l}")?;
            }
        }
        write!(f, "]")
    }
}

/// Weight of a word (sum of letter degrees).
pub fn word_weight(w: &Word) -> u32 {
    w.weight()
}

/// A multiset of words: one commutative product of sum symbols. The empty
/// monomial is the scalar term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<Word, u32>);

impl Monomial {
    pub fn scalar() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn word(w: Word) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, 1);
        Monomial(m)
    }

    pub fn is_scalar(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Word, u32)> {
        self.0.iter().map(|(w, &e)| (w, e))
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(w, e)| w.weight() * e).sum()
    }

    /// Total number of word factors counted with multiplicity.
    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (w, e) in &other.0 {
            *out.entry(w.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "1");
        }
        for (i, (w, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{w}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of the expression ring: a finite sum of monomials with
/// coefficients in `K(n)[x]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SumExpr {
    terms: BTreeMap<Monomial, CoefElem>,
}

impl SumExpr {
    pub fn zero() -> Self {
        SumExpr::default()
    }

    pub fn one() -> Self {
        SumExpr::scalar(CoefElem::one())
    }

    pub fn scalar(c: CoefElem) -> Self {
        let mut e = SumExpr::zero();
        e.add_term(Monomial::scalar(), c);
        e
    }

    pub fn from_rational(c: Rational) -> Self {
        SumExpr::scalar(CoefElem::from_rational(c))
    }

    /// The sum symbol for a word.
    pub fn word(w: Word) -> Self {
        let mut e = SumExpr::zero();
        e.add_term(Monomial::word(w), CoefElem::one());
        e
    }

    pub fn monomial(m: Monomial, c: CoefElem) -> Self {
        let mut e = SumExpr::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CoefElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> CoefElem {
        self.terms.get(m).cloned().unwrap_or_else(CoefElem::zero)
    }

    /// If the expression is a pure scalar, its coefficient.
    pub fn as_scalar(&self) -> Option<CoefElem> {
        match self.terms.len() {
            0 => Some(CoefElem::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_scalar().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Every monomial is linear (at most one word, exponent one).
    pub fn is_linear(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() <= 1)
    }

    /// Maximum monomial weight; zero for scalars and the zero expression.
    pub fn weight(&self) -> u32 {
        self.terms.keys().map(Monomial::weight).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: CoefElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &CoefElem) -> SumExpr {
        if c.is_zero() {
            return SumExpr::zero();
        }
        let mut out = SumExpr::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> SumExpr {
        self.scale(&CoefElem::from_rational(c.clone()))
    }

    pub fn pow(&self, e: u32) -> SumExpr {
        let mut out = SumExpr::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse for invertible scalars.
    pub fn invert(&self) -> Result<SumExpr> {
        let c = self.as_scalar().ok_or(Error::NonInvertibleDivisor)?;
        let inv = c.inverse().ok_or(Error::NonInvertibleDivisor)?;
        Ok(SumExpr::scalar(inv))
    }
}

/// Maximum weight over the monomials of an expression.
pub fn expr_weight(e: &SumExpr) -> u32 {
    e.weight()
}

impl Add for &SumExpr {
    type Output = SumExpr;
    fn add(self, rhs: &SumExpr) -> SumExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SumExpr {
    type Output = SumExpr;
    fn sub(self, rhs: &SumExpr) -> SumExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SumExpr {
    type Output = SumExpr;
    fn neg(self) -> SumExpr {
        let mut out = SumExpr::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &SumExpr {
    type Output = SumExpr;
    fn mul(self, rhs: &SumExpr) -> SumExpr {
        let mut out = SumExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SumExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = c.sign_split();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_scalar() {
                write!(f, "{}", abs.fmt_as_factor())?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", abs.fmt_as_factor())?;
            }
        }
        Ok(())
    }
}

/// Column/elimination order for the words of one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordOrder {
    /// Longer words first; among equal lengths, lexicographic in the letter
    /// order, first letter most significant.
    Default,
    /// Explicit per-weight lists. Weights without a list fall back to the
    /// default order.
    Explicit(BTreeMap<u32, Vec<Word>>),
}

impl WordOrder {
    pub fn mode_name(&self) -> &'static str {
        match self {
            WordOrder::Default => "default",
            WordOrder::Explicit(_) => "explicit",
        }
    }
}

fn default_order_key(w: &Word) -> (std::cmp::Reverse<usize>, Vec<Letter>) {
    (std::cmp::Reverse(w.len()), w.letters().to_vec())
}

/// All words of weight exactly `d` over the alphabet, each once, in the
/// requested order.
pub fn enumerate_words(spec: &AlphabetSpec, d: u32, order: &WordOrder) -> Result<Vec<Word>> {
    let mut words = generate_words(spec, d);
    words.sort_by_key(default_order_key);
    match order {
        WordOrder::Default => Ok(words),
        WordOrder::Explicit(lists) => match lists.get(&d) {
            None => Ok(words),
            Some(list) => {
                let mut sorted = list.clone();
                sorted.sort_by_key(default_order_key);
                if sorted != words {
                    return Err(Error::ExplicitOrderMismatch {
                        weight: d,
                        detail: format!(
                            "list has {} words, alphabet has {}",
                            list.len(),
                            words.len()
                        ),
                    });
                }
                Ok(list.clone())
            }
        },
    }
}

fn generate_words(spec: &AlphabetSpec, d: u32) -> Vec<Word> {
    fn go(spec: &AlphabetSpec, d: u32, memo: &mut HashMap<u32, Vec<Word>>) -> Vec<Word> {
        if let Some(v) = memo.get(&d) {
            return v.clone();
        }
        let mut out = Vec::new();
        for c in 1..=d {
            for letter in spec.letters_of_degree(c) {
                if c == d {
                    out.push(Word::single(letter));
                } else {
                    for rest in go(spec, d - c, memo) {
                        out.push(rest.prepend(letter));
                    }
                }
            }
        }
        memo.insert(d, out.clone());
        out
    }
    go(spec, d, &mut HashMap::new())
}
