//! Error types shared across the library.

use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("universe too large: {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("diagonal mismatch between density matrices")]
    DiagonalMismatch,
    #[error("matrix is not Hermitian within tolerance")]
    NonHermitian,
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("coordinate frame mismatch: {left} vs {right}")]
    FrameMismatch { left: String, right: String },
    #[error("vectors are dependent: {0}")]
    SingularBasis(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty state cannot be measured")]
    EmptyState,
    #[error("outcome {0} has zero probability")]
    ZeroProbabilityOutcome(String),
    #[error("attribute is not total: missing value for {0}")]
    PartialAttribute(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("attribute does not commute with the representation: it is not constant on the orbit {{{orbit}}} (values {values})")]
    NonConstantOrbit { orbit: String, values: String },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group closure exceeded the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("not a valid group table: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
