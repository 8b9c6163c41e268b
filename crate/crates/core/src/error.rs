use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A textual literal could not be parsed. `column` is 1-based.
    #[error("invalid {kind} literal {input:?} at column {column}: {message}")]
    Parse {
        kind: &'static str,
        input: String,
        column: usize,
        message: String,
    },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid color word: {0}")]
    InvalidColors(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),

    #[error("non-integral coefficient {0} where an integer was required")]
    NonIntegral(String),

    #[error("oracle: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
