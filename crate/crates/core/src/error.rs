use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
    #[error("inconsistent linear system (residual row {row})")]
    Inconsistent { row: usize },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
