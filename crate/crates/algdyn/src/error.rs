//! Error type shared by every module of the library.

use thiserror::Error;

/// Errors produced by exact-arithmetic and map-construction operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Matrix or element dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A rational map could not be formed (e.g. identically singular denominator).
    #[error("map undefined: {0}")]
    MapUndefined(String),

    /// Substitution produced an identically-zero denominator.
    #[error("indeterminacy collapse at iterate {iterate}: {detail}")]
    IndeterminacyCollapse { iterate: usize, detail: String },

    /// All homogeneous components vanished.
    #[error("degenerate map: {0}")]
    Degenerate(String),

    /// A numeric routine failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// An internal consistency check failed; indicates a bug or bad input data.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
