use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input. `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An argument violates a precondition (wrong field, wrong length, f(0) = 0, ...).
    #[error("{0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A configured cap (trial division, oracle state count, integer width) was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceCap(String),

    #[error("not found: {0}")]
    NotFound(String),

    /// A mathematical invariant failed. Seeing this means a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
