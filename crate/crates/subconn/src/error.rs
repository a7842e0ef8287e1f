use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubConnError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    Vertex { vertex: u32, n: usize },
    #[error("vertex {0} is already in S")]
    Present(u32),
    #[error("vertex {0} is not in S")]
    Absent(u32),
    #[error("promise broken at level {d}")]
    PromiseBroken { d: usize },
    #[error("unsupported request {0}")]
    Request(String),
}

pub type Result<T> = std::result::Result<T, SubConnError>;
