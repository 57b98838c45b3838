use thiserror::Error;

/// Errors reported by the geometry, sweep and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrechetError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("curve has no vertices")]
    EmptyCurve,

    #[error("non-finite coordinate {value} at vertex {vertex}")]
    NonFinite { vertex: usize, value: f64 },

    #[error("parameter {value} outside [0, {max}]")]
    OutOfRange { value: f64, max: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported configuration: {0}")]
    Config(String),

    #[error("minimum query on an empty envelope")]
    EmptyEnvelope,

    #[error("contract violation: {0}")]
    ContractViolation(String),
}

impl FrechetError {
    /// True for errors caused by the shape of the input (as opposed to its values).
    pub fn is_dimension_mismatch(&self) -> bool {
        matches!(self, FrechetError::DimensionMismatch { .. })
    }
}

pub type Result<T, E = FrechetError> = std::result::Result<T, E>;
