use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    NotInBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("invalid Grassmannian factor G({k},{n})")]
    InvalidFactor { k: usize, n: usize },

    #[error("expected {expected} partitions (one per factor), got {got}")]
    KeyArity { expected: usize, got: usize },

    #[error("classes live on different spaces")]
    SpaceMismatch,

    #[error("factor index {index} out of range for a space with {count} factors")]
    FactorIndex { index: usize, count: usize },

    #[error("projective bundle of a rank 0 bundle")]
    ZeroRank,

    #[error("degree-0 part of a Chern character must be a nonnegative integer, got {0}")]
    NonIntegralRank(String),

    #[error("total Chern class must start with 1, got degree-0 term {0}")]
    BadTotalChern(String),

    #[error("class is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("non-integral characteristic class produced by {0}")]
    NonIntegral(&'static str),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("matrix must be square lower-triangular with unit diagonal: {0}")]
    NotUnitTriangular(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("LR cache line {line}: {message}")]
    CacheParse { line: usize, message: String },

    #[error("unsupported LR cache header {0:?}, expected \"LRCACHE v1\"")]
    CacheVersion(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by caller input rather than a failed internal check.
    pub fn is_user_error(&self) -> bool {
        !matches!(
            self,
            Error::Internal(_) | Error::NonIntegral(_) | Error::Io(_)
        )
    }
}
