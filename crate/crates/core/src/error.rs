use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("bilinear form is not symmetric")]
    NotSymmetric,

    #[error("scalar parse error: {0}")]
    ScalarParse(String),

    #[error("catalog parameter out of domain: {0}")]
    OutOfDomain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
