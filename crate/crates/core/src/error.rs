use thiserror::Error;

use crate::polyring::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field configuration: {0}")]
    InvalidField(String),
    #[error("not a quadratic: leading coefficient is zero")]
    NotQuadratic,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable set mismatch: {0}")]
    VariableMismatch(String),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("ideal is the unit ideal (empty variety)")]
    UnitIdeal,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown claim `{id}`; valid ids: {valid}")]
    UnknownClaim { id: String, valid: String },
    #[error("scenario error at line {line}: {message}")]
    Scenario { line: usize, message: String },
    #[error("scenario is missing entry `{0}`")]
    MissingEntry(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
