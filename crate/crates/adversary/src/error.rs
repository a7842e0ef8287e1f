use thiserror::Error;

/// Errors raised by the generators and workload I/O.
#[derive(Debug, Error)]
pub enum AdvError {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("oracle replay failed at t = {t}: {msg}")]
    Replay { t: usize, msg: String },
    #[error("workload check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Core(#[from] core_predictions::Error),
    #[error(transparent)]
    Omv(#[from] omv::OmvError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

pub type Result<T> = std::result::Result<T, AdvError>;
