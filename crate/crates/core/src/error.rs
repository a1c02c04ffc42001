use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("partition {partition} has weight {actual}, expected {expected}")]
    WeightMismatch {
        partition: String,
        expected: usize,
        actual: usize,
    },

    #[error("partition {0} has an even part")]
    NotOdd(String),

    #[error("partition {0} has a repeated part")]
    NotStrict(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} outside {lo}..={hi}")]
    OutOfRange { index: usize, lo: usize, hi: usize },

    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),

    #[error("operator does not stabilize the subspace")]
    NotInvariant,

    #[error("expected {expected} coordinates, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is singular")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
