use thiserror::Error;

/// Errors raised by the prediction calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence too long for exhaustive search: T = {0} > 8")]
    TooLarge(usize),
    #[error("list prediction slot {0} is empty")]
    EmptySlot(usize),
    #[error("cannot parse request `{0}`")]
    Parse(String),
    #[error("invalid bit character `{0}`")]
    BadBit(char),
    #[error("certificate invalid: {0}")]
    Certificate(String),
    #[error("no copy produced an answer for the query at t = {0}")]
    Protocol(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
