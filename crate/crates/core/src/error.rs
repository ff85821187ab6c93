use thiserror::Error;

/// Errors produced by game construction and analysis.
#[derive(Debug, Error)]
pub enum GameError {
    /// The payoff table violates the ordering `t > r > p > s`.
    #[error("invalid payoff table: {0}")]
    InvalidTable(String),

    /// An input value lies outside its admissible range.
    #[error("out of domain: {0}")]
    Domain(String),

    /// A structural validation (unitarity, normalization, unit norm) failed.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A strategy vector does not match the tensor dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, GameError>;
