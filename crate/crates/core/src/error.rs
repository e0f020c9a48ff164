use thiserror::Error;

/// Errors produced by the numerical core.
///
/// Validation failures carry the measured violation so callers can report
/// how far off an input was, not just that it was rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (max |M[a][b] - conj(M[b][a])| = {0:e})")]
    NotHermitian(f64),

    #[error("trace differs from one by {0:e}")]
    TraceNotOne(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("expected dimension {expected}, got {got}")]
    WrongDim { expected: usize, got: usize },

    #[error("entry buffer has length {got}, expected {expected}")]
    BadShape { expected: usize, got: usize },

    #[error("state has {got} qubits, operation needs {expected}")]
    WrongArity { expected: usize, got: usize },

    #[error("invalid party subset: {0}")]
    BadSubset(String),

    #[error("invalid reduction label {label:?}; valid labels: {valid}")]
    BadLabel { label: String, valid: String },

    #[error("state vector is not normalized (norm^2 - 1 = {0:e})")]
    NotNormalized(f64),

    #[error("parameter {name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("embedding way must be 1..=6, got {0}")]
    BadWay(u8),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("coherence factor |gamma| = {0} exceeds 1")]
    BadGamma(f64),

    #[error("invalid sweep range: {0}")]
    BadRange(String),

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
