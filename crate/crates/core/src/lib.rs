//! Exact computer algebra for (cyclotomic) harmonic sums.
//!
//! The crate represents nested harmonic-type sums as formal variables over
//! the coefficient ring `Q(n)[x]` with `x^2 = 1` (the sign sequence
//! `(-1)^n`), equips them with the quasi-shuffle product, and eliminates all
//! algebraic relations the product induces by exact linear algebra over the
//! rationals. What survives elimination is a list of basis sums per weight
//! together with substitution rules rewriting every other sum as a
//! polynomial in basis sums. A shift automorphism acts on both the raw and
//! the reduced ring, and every produced identity can be certified
//! numerically by exact sequence evaluation.
//!
//! Module map:
//! - [`coeffring`]: rationals, polynomials and rational functions in `n`,
//!   the coefficient ring with the adjoined involution `x`, dispersion.
//! - [`alphabet`]: graded letters `(a,b,c,z)`, the summand map `lambda`,
//!   and the closure of summand products under partial fractions.
//! - [`words`]: words (sum indices), word enumeration and orders, and the
//!   polynomial expression type [`words::SumExpr`].
//! - [`quasishuffle`]: the quasi-shuffle product and the linearization
//!   operator `L`.
//! - [`diffring`]: the shift automorphism on expressions.
//! - [`basis`]: relation matrices, exact RREF, basis extraction,
//!   substitution tables, and the reduced shift.
//! - [`sequences`]: exact sequence evaluation and verification of
//!   identities.
//! - [`parse`]: the expression grammar shared by the CLI and the table
//!   files.

pub mod alphabet;
pub mod basis;
pub mod coeffring;
pub mod diffring;
pub mod error;
pub mod number;
pub mod parse;
pub mod quasishuffle;
pub mod sequences;
pub mod words;

pub use error::Error;
pub use number::Rational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
