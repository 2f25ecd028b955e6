use thiserror::Error;

/// Errors raised by the library.
///
/// `Usage` covers contract violations by the caller (mismatched variable
/// tables, unknown variables, invalid valences); `Domain` covers inputs that
/// are well formed but mathematically outside an operation's domain, such as
/// projecting a tensor that is not a Killing tensor.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
