use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotPartition(Vec<i64>),

    #[error("weight {0:?} does not correspond to a Young diagram in the standard region")]
    NonStandardWeight(Vec<i64>),

    #[error("partition size {found} does not match total degree {expected}")]
    SizeMismatch { expected: u64, found: u64 },

    #[error("partition has {rows} nonzero rows, at most {max} allowed")]
    TooManyRows { rows: usize, max: usize },

    #[error("partition {shape} does not fit in the ({m},{n})-hook")]
    NotInHook { shape: String, m: usize, n: usize },

    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("polynomial arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("invalid truncation bound: {0}")]
    InvalidTruncation(String),

    #[error("invalid spin configuration: {0}")]
    InvalidSpins(String),

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("root subset is not closed: {0}")]
    NotClosed(String),

    #[error("weight does not match subalgebra: {0}")]
    WeightMismatch(String),

    #[error("hook-Schur decomposition did not terminate: {0}")]
    NonTerminating(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
