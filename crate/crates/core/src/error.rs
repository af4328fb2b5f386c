use thiserror::Error;

use crate::combinatorics::ParamsViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Params(#[from] ParamsViolation),

    #[error("invalid multipartition: {0}")]
    Multipartition(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("expected {expected} components, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("the pair does not admit a diagonal cut at x = {0}")]
    NoCut(String),

    #[error("coincident endpoints in strand diagram: {0}")]
    CoincidentEndpoints(String),

    #[error("tableau precondition violated: {0}")]
    Tableau(String),

    #[error("{path}: {message}")]
    Problem { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
