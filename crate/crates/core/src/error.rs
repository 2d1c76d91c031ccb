use thiserror::Error;

use crate::arith::Integer;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(Integer),
    #[error("{0} is not a prime")]
    NotPrime(Integer),
    #[error("{a} and {n} are not coprime")]
    NotCoprime { a: String, n: String },
    #[error("modulus {0} must be at least 2")]
    ModulusTooSmall(Integer),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different rings: {0} and {1}")]
    RingMismatch(String, String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A runtime-checked postcondition failed. Indicates a bug.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
