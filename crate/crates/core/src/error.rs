//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix/vector dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two PCE objects refer to different bases.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// A coefficient or block index is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Recorded data is not persistently exciting of the required order.
    #[error("persistency of excitation failure: required order {required_order}, {detail}")]
    ExcitationFailure {
        required_order: usize,
        detail: String,
    },

    /// A matrix that must have full row rank does not.
    #[error("rank deficient: {0}")]
    RankDeficient(String),

    /// A linear system has no solution within tolerance.
    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),

    /// The requested estimator cannot handle the supplied density.
    #[error("unsupported density: {0}")]
    UnsupportedDensity(String),

    /// Conic solve did not reach an optimal certificate.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// A record or trajectory is empty where data is required.
    #[error("empty record: {0}")]
    EmptyRecord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
