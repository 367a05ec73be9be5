use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lower index {k} exceeds upper index {n}")]
    IndexOutOfRange { n: u64, k: u64 },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term is not invertible in the coefficient ring")]
    NotInvertible,

    #[error("expected a rational integer, got {0}")]
    NonIntegral(String),

    #[error("internal routes disagree in {what}: {left} vs {right}")]
    Inconsistent {
        what: &'static str,
        left: String,
        right: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
