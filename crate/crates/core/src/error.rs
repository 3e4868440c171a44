use thiserror::Error;

/// Errors raised by lattice construction, kernel evaluation and the operator checks.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A configuration field failed validation. `field` names the offending key.
    #[error("invalid `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("kernel {kind} is undefined at t = 0 (step-function boundary)")]
    EqualTime { kind: &'static str },

    #[error("momentum grid is not closed under k -> -k: {0}")]
    NotNegationClosed(String),

    #[error("mode index {0} is not part of the mode set")]
    UnknownMode(i64),

    #[error("time ordering undefined for equal times t = {0}")]
    EqualTimeOrdering(f64),

    #[error("quadrature did not converge: estimated error {error:.3e} > tolerance {tolerance:.3e}")]
    NoConvergence { error: f64, tolerance: f64 },

    #[error("Dirac null space has dimension {found}, expected {expected}")]
    Degeneracy { found: usize, expected: usize },

    #[error("truncated space too large to materialize: dimension {0}")]
    SpaceTooLarge(u128),

    #[error("current distributions live on different lattices")]
    LatticeMismatch,

    #[error("current sample at ({t_index}, {x_index}) has nonzero imaginary part {imag:e}")]
    ComplexCurrent { t_index: usize, x_index: usize, imag: f64 },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Io(err.to_string())
    }
}
