use thiserror::Error;

/// Errors raised by the exact arithmetic and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter k must be positive, got {0}")]
    NonPositiveK(String),
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(String),
    #[error("mismatched radicands: {0} vs {1}")]
    RadicandMismatch(String, String),
    #[error("value {0} is not rational")]
    NotRational(String),
    #[error("divisor has a zero complex part and is not invertible")]
    NonInvertible,
    #[error("malformed rational {0:?}")]
    ParseRational(String),
    #[error("malformed dual-complex value: {0}")]
    ParseDualComplex(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown sequence family {0:?}")]
    UnknownFamily(String),
    #[error("identity {id} requires binding {param}")]
    MissingBinding { id: String, param: char },
    #[error("identity {id} does not take binding {param}")]
    UnexpectedBinding { id: String, param: char },
    #[error("identity {id}: {reason}")]
    OutOfRange { id: String, reason: String },
    #[error("negative index {0} not allowed here")]
    NegativeIndex(i64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
