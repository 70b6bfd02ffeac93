use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("non-generic parameters: {0}")]
    NonGenericParameters(String),
    #[error("Casorati shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("indeterminate evaluation: {0}")]
    IndeterminateEvaluation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero(_) => "DivisionByZero",
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::Domain(_) => "DomainError",
            Error::NonGenericParameters(_) => "NonGenericParameters",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::IndeterminateEvaluation(_) => "IndeterminateEvaluation",
            Error::Parse(_) => "ParseError",
        }
    }
}
