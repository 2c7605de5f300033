use thiserror::Error;

use crate::qla::Qubit;
use crate::sdp::SolveStatus;

/// Errors raised by the numerical kernels and model builders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("qubit {0} is not part of the register")]
    UnknownQubit(Qubit),

    #[error("qubit {0} appears more than once")]
    DuplicateQubit(Qubit),

    #[error("regions overlap on qubit {0}")]
    OverlappingRegions(Qubit),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("at least {min} qubits required, got {found}")]
    TooFewQubits { min: usize, found: usize },

    #[error("measurement is not projective: {0}")]
    NonProjective(String),

    #[error("{outcomes}^{settings} deterministic strategies exceeds the enumeration limit")]
    TooManyStrategies { settings: usize, outcomes: usize },

    #[error("steering-weight solver stopped with status {status:?} after {iterations} iterations (gap {gap:.3e})")]
    Solver {
        status: SolveStatus,
        iterations: usize,
        gap: f64,
    },

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
