use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator factor ({factor}) vanishes under the binding")]
    Pole { factor: String },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("expression is not a polynomial")]
    NotPolynomial,
    #[error("unbound variable `{0}`")]
    Unbound(String),
}
