use thiserror::Error;

/// Errors shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index, vertex or parameter lies outside its admissible range.
    #[error("range error: {0}")]
    Range(String),
    /// The input is outside the domain of the operation (void complex, non-face, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A search bound (facet count, vertex count) was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// A hypothesis of a theorem-level check is not met.
    #[error("precondition failed: {hypothesis}")]
    Precondition { hypothesis: String },
    /// Malformed complex document.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn range<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Range(msg.into()))
}
