use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("convention mismatch: {left} vs {right}")]
    ConventionMismatch { left: String, right: String },
    #[error("invalid partition {parts:?} of {n}")]
    InvalidPartition { parts: Vec<u32>, n: usize },
    #[error("{what} = {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("floating-point input rejected: {0:?}")]
    FloatRejected(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension {dim} exceeds configured maximum {max}")]
    UnsupportedDimension { dim: usize, max: usize },
    #[error("assumption {tag:?} is not valid in dimension {dim}")]
    InvalidAssumption { tag: String, dim: usize },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
