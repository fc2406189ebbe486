//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by code construction, analysis, and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An alist file could not be parsed; `line` is 1-based.
    #[error("alist parse error at line {line}: {msg}")]
    AlistParse { line: usize, msg: String },

    /// A graph failed the regularity requirements of this crate.
    #[error("graph is not regular: {0}")]
    IrregularGraph(String),

    /// An exhaustive computation would exceed its enumeration budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A problem instance is too large for the exact algorithm requested.
    #[error("problem too large for exact computation: {0}")]
    TooLarge(String),

    /// A table-driven failure model has no entry for an observed gate state.
    #[error("gate state not covered by failure table: {0}")]
    UncoveredGateState(String),

    /// Underlying I/O failure (file read/write).
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand used internally for domain violations.
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
