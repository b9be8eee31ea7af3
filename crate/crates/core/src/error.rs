//! Crate error type.

use thiserror::Error;

/// All failure modes of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial is not a valid argument here")]
    ZeroPolynomial,

    #[error("invalid letter ({a},{b},{c},{z}): {reason}")]
    InvalidLetter { a: u32, b: u32, c: u32, z: i8, reason: String },

    #[error("a word must contain at least one letter")]
    EmptyWord,

    #[error("letter {letter} does not belong to the {spec} alphabet")]
    LetterOutsideAlphabet { letter: String, spec: String },

    #[error("explicit order for weight {weight} is not a permutation of the word set ({detail})")]
    ExplicitOrderMismatch { weight: u32, detail: String },

    #[error("substitution table covers weights up to {have} but weight {need} is required")]
    MissingLowerTable { have: u32, need: u32 },

    #[error("expression of weight {weight} exceeds the table's maximum weight {max}")]
    WeightExceeded { weight: u32, max: u32 },

    #[error("{small} is not a sub-alphabet of {big}")]
    NotASubAlphabet { small: String, big: String },

    #[error("division by an expression that is not an invertible scalar")]
    NonInvertibleDivisor,

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("table file, line {line}: {msg}")]
    TableFormat { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
