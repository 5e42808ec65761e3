//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by lattice, series and audit operations.
///
/// `Input` covers malformed data (wrong dimensions, violated invariants,
/// unparseable files); `Domain` covers mathematically inadmissible arguments
/// (norm-zero reflection vectors, indefinite lattices passed to enumeration).
/// The CLI maps both to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown catalog name: {0}")]
    UnknownName(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
