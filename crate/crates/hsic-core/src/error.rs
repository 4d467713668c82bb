//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by grids, kernels, tests, generators and I/O.
#[derive(Debug, Error)]
pub enum HsicError {
    /// Grid construction failed (too few points, unordered points, bad endpoints).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Operands do not conform (curve/grid length, sample sizes, matrix shapes).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A parameter or option is outside its admissible range.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The sample cannot support the requested computation
    /// (e.g. all observations identical, so no positive bandwidth exists).
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// Malformed or non-numeric input data; carries row/column location when known.
    #[error("data error: {0}")]
    Data(String),

    /// A numerical routine failed beyond recovery (e.g. covariance factorization).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The sample is too short for the requested operation (e.g. lag >= n).
    #[error("insufficient sample: {0}")]
    InsufficientSample(String),

    /// An embedding with zero anchors was requested.
    #[error("empty embedding: {0}")]
    EmptyEmbedding(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, HsicError>;
