use qyoung_field::FieldError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unsupported rank {0}")]
    UnsupportedRank(usize),
    #[error("element is not in the Hecke subalgebra; residual {residual}")]
    NotInSubalgebra { residual: String },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("degenerate parameter choice: {0}")]
    Degenerate(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
