use thiserror::Error;

/// Errors raised by graph construction, divisor calculus and the derived
/// computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad graph structure, unknown names, unparsable values.
    #[error("validation error: {0}")]
    Validation(String),
    /// An operation was called outside of its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The input is well formed but the quantity is not defined for it.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two independent computations that must agree did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
