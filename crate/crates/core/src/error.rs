use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance has no airplanes")]
    EmptyInstance,

    #[error("airplane {id}: {field} must be strictly positive")]
    NonPositiveValue { id: usize, field: &'static str },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("operation requires a {expected} instance, got {got}")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error("consumption rates must be strictly positive")]
    NonPositiveRate,

    #[error("suffix consumption must be non-negative")]
    NegativeSuffix,

    #[error("instance size {n} exceeds the brute-force cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("instance generation failed: {0}")]
    GenerationFailed(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("need rows for at least two consecutive fleet sizes")]
    InsufficientData,

    #[error("time budget exhausted")]
    Timeout,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
