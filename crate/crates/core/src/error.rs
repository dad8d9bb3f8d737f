use thiserror::Error;

/// Engine errors. Check failures are reported as results, never as errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ill-formed input: mismatched spaces, bad dimensions, malformed tensors.
    #[error("structural error: {0}")]
    Structural(String),
    /// Arithmetic outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A linear map that must be invertible is singular.
    #[error("singular map: {0} is not invertible")]
    Singular(String),
    /// Invalid configuration or command-line input.
    #[error("usage error: {0}")]
    Usage(String),
    /// Expression syntax error at a byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A well-definedness certificate failed; carries the check name and witness summary.
    #[error("certificate {name} failed: {detail}")]
    Certificate { name: String, detail: String },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
