use thiserror::Error;

/// Errors surfaced by constructors and certifiers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not hermitian")]
    NotHermitian,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid map specification: {0}")]
    InvalidMap(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),

    #[error("zero vector")]
    ZeroVector,

    #[error("eigensolver did not converge within the sweep cap (residual {residual:.3e})")]
    NonConvergence { residual: f64 },

    #[error("normalized mixing requires a witness with nonzero trace")]
    ZeroTrace,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
