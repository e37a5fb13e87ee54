use qyoung_core::CoreError;
use qyoung_field::FieldError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    Unsupported(String),
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Core(CoreError::Field(e))
    }
}

impl CliError {
    /// Errors caused by a bad sample point rather than a wrong identity.
    pub fn is_singular(&self) -> bool {
        matches!(
            self,
            CliError::Core(
                CoreError::Field(FieldError::DivisionByZero | FieldError::Pole { .. } | FieldError::NotInvertible)
                    | CoreError::NotInvertible
                    | CoreError::NoSolution
                    | CoreError::Degenerate(_)
            )
        )
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
