use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StriError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range for {n} vertices")]
    Vertex { vertex: u32, n: usize },
    #[error("unsupported request {0}")]
    Request(String),
}

pub type Result<T> = std::result::Result<T, StriError>;
