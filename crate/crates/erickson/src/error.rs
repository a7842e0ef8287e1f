use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EricksonError {
    #[error("index {index} out of range for dimension {n}")]
    Index { index: u32, n: usize },
    #[error("matrix must be square and non-empty")]
    Shape,
    #[error("unsupported request {0}")]
    Request(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, EricksonError>;
