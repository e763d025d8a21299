use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scale factor must be nonnegative, got {0}")]
    NegativeFactor(String),
    #[error("radicand must be nonnegative, got {0}")]
    NegativeRadicand(String),
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("root closure exceeded {limit} roots; Cartan data is corrupt")]
    NonTerminating { limit: usize },
    #[error("operation requires a reduced root system, got {0}")]
    NonReducedInput(String),
    #[error("invalid parameters for {series}: {reason}")]
    InvalidParams { series: String, reason: String },
    #[error("no Satake data recorded for {0}")]
    MissingSatakeData(String),
    #[error("no canonical metric is defined for {0}")]
    NoCanonicalMetric(String),
    #[error("product of zero factors")]
    EmptyProduct,
    #[error("matrix is ill-conditioned (condition estimate {0:.3e})")]
    IllConditioned(f64),
    #[error("parse error: {0}")]
    Parse(String),
}
