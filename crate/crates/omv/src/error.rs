use thiserror::Error;

/// Errors raised by the matrix-vector kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OmvError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix dimensions must be positive")]
    Empty,
    #[error("round index {index} out of range for {rounds} rounds")]
    Round { index: usize, rounds: usize },
    #[error("exponent {0} not in (0, 1]")]
    Exponent(f64),
    #[error("online fill contradicts fixed bit at round {round}, position {pos}")]
    Contradiction { round: usize, pos: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, OmvError>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(OmvError::Dimension { expected, got })
    }
}
