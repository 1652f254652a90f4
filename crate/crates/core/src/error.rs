use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inadmissible algebra specification.
    #[error("invalid algebra spec: {0}")]
    Spec(String),
    /// Caller passed something that does not belong to this algebra.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("gate exceeded: {what} is {actual}, limit is {limit}")]
    GateExceeded { what: String, actual: usize, limit: usize },
    /// A property that the theory guarantees failed to hold.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
