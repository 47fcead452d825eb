//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable `{var}` is outside the {dim} allowed coordinates")]
    VariableOutOfRange { var: char, dim: usize },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("invalid context: dimension {dim}, order {order}: {msg}")]
    InvalidContext { dim: usize, order: usize, msg: String },
    #[error("expected {expected} arguments, got {got}")]
    ArgumentCount { expected: usize, got: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0}")]
    Domain(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("i/o: {0}")]
    Io(String),
}

/// Result alias using [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
