use thiserror::Error;

use crate::scalar::ScalarParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular map (rank {rank} of {dim})")]
    Singular { rank: usize, dim: usize },
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("braiding not invertible: {0}")]
    BraidingNotInvertible(String),
    #[error("missing half-braiding component for the regular module H_{0}")]
    MissingComponent(usize),
    #[error("no half-braiding component for the module {0}")]
    MissingModule(String),
    #[error("not a 3-cocycle at ({0}, {1}, {2}, {3})")]
    NotACocycle(usize, usize, usize, usize),
    #[error("cocycle not normalized at ({0}, {1})")]
    NotNormalized(usize, usize),
    #[error("cocycle not invariant under conjugation at ({0}, {1}, {2})")]
    NotConjInvariant(usize, usize, usize),
    #[error("no diagonal antipode data satisfies the axioms: {0}")]
    AntipodeSolveFailed(String),
    #[error("builder produced an instance failing validation: {0}")]
    BuilderValidation(String),
    #[error("{location}: {source}")]
    Scalar { location: String, source: ScalarParseError },
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("shape error in {block} at {index}: expected {expected}, got {got}")]
    Shape { block: String, index: String, expected: String, got: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
