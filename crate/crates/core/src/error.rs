use thiserror::Error;

/// Every failure surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axis {axis} out of range for rank-{rank} tensor")]
    AxisOutOfRange { axis: usize, rank: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("contraction pairs overlap on axis {0}")]
    OverlappingPairs(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("no stored standard r-matrix for algebra `{0}`")]
    NoStandardR(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("chart has no inverse symplectic matrix (omega_lower)")]
    MissingOmegaLower,
    #[error("cubic Casimir needs sl_n with n >= 3, got {0}")]
    NoCubicCasimir(String),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("unknown sl2 basis element `{0}`")]
    UnknownBasisElement(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
