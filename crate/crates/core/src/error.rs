use thiserror::Error;

/// Failure modes shared by every verification stage.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("undecidable: {what} (precision cap {cap_bits} bits reached)")]
    Undecidable { what: String, cap_bits: u32 },
    #[error("degenerate homographic state: AD - BC = 0")]
    DegenerateState,
    #[error("{0} is not a perfect square")]
    NotASquare(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent tuple: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, VerifyError>;
