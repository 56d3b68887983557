use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error{}: {message}", .line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("matrix is not unitary: {0}")]
    NotUnitary(String),

    #[error("determinant {det} is not +1 or -1")]
    BadDeterminant { det: String },

    #[error("matrix is not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("covering map expects det = +1 input, got det = -1 (use big_pi)")]
    WrongSheet,

    #[error("expected a matrix with det = {expected}, got det = {actual}")]
    DeterminantMismatch { expected: i8, actual: i8 },

    #[error("domain not closed: missing event {0}")]
    DomainNotClosed(String),

    #[error("zero spinor has no ray")]
    ZeroSpinor,

    #[error("group closure exceeded the maximum order {limit}")]
    MaxOrderExceeded { limit: usize },

    #[error("separation audit failed: minimum pairwise distance {min_distance:e} <= {threshold:e}")]
    SeparationAuditFailed { min_distance: f64, threshold: f64 },

    #[error("group order {order} exceeds the isomorphism search limit {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("singular matrix")]
    Singular,
}

impl Error {
    pub fn parse(message: impl Into<String>) -> Self {
        Error::Parse { line: None, message: message.into() }
    }

    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { message, .. } => Error::Parse { line: Some(line), message },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
