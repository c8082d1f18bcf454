use thiserror::Error;

/// Errors raised by field construction, geometry evaluation, and the solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch between operands")]
    GridMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("band cutoff {cutoff} exceeds N/4 = {limit}")]
    CutoffTooLarge { cutoff: usize, limit: usize },

    #[error("field is not unitary per site (max defect {defect:e})")]
    NotUnitary { defect: f64 },

    #[error("field is not anti-Hermitian per site (max defect {defect:e})")]
    NotAntiHermitian { defect: f64 },

    #[error("spectral parameter must have unit modulus, got |lambda| = {modulus}")]
    LambdaNotUnit { modulus: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("conjugate gradient did not converge in {iterations} iterations (relative residual {residual:e})")]
    CgNotConverged { iterations: usize, residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
