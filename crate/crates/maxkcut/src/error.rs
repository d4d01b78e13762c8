//! Crate-wide error type.

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The request exceeds a resource budget (qubits, enumeration size).
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A graph file could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The objective returned a non-finite value during optimization.
    #[error("optimization failed: non-finite objective at {point:?}")]
    NonFiniteObjective { point: Vec<f64> },

    /// A compiled circuit did not reproduce its target unitary.
    #[error("circuit verification failed at basis state {index}: {msg}")]
    Verification { index: usize, msg: String },

    /// The operation is outside the supported range (e.g. control arity).
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
