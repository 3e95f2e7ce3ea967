use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty group")]
    EmptyGroup,

    #[error("a link has at least one component")]
    NoComponents,

    #[error("expected {expected} Alexander gradings, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("component index {index} out of range for a {n}-component link")]
    ComponentOutOfRange { index: usize, n: usize },

    #[error("invalid grading {0:?}")]
    InvalidGrading(String),

    #[error("invalid Alexander polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("not an L-space-knot polynomial: {0}")]
    NotLSpacePolynomial(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
