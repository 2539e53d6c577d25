use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is outside the vertex set")]
    InvalidVertex(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("{0} is not a free face of the complex")]
    NotFreeFace(Simplex),
    #[error("join requires disjoint vertex sets (shared: {0})")]
    OverlappingVertexSets(Simplex),
    #[error("ground set must be nonempty")]
    EmptyGround,
    #[error("dimension {dim} out of range (complex dimension {max})")]
    DimensionOutOfRange { dim: isize, max: isize },
    #[error("reduced homology is undefined for the void complex")]
    VoidComplex,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{0} is not a subset of the ground set")]
    NotASubset(Simplex),
    #[error("tolerance {t} out of range 0..={rank}")]
    ToleranceOutOfRange { t: usize, rank: usize },
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("complex is not {0}-Leray")]
    NotDLeray(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("input too small: {0}")]
    InputTooSmall(String),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
