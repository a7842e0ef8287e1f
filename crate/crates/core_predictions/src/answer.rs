//! Query answers, per-request work counters and the replay interface.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::request::Request;

/// Answer to a query of any supported problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Answer {
    Int(i64),
    Bool(bool),
    /// Distance; `None` is unreachable.
    Dist(Option<u64>),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Int(x) => write!(f, "{x}"),
            Answer::Bool(b) => write!(f, "{b}"),
            Answer::Dist(Some(x)) => write!(f, "d{x}"),
            Answer::Dist(None) => write!(f, "inf"),
        }
    }
}

impl FromStr for Answer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s {
            "true" => Ok(Answer::Bool(true)),
            "false" => Ok(Answer::Bool(false)),
            "inf" => Ok(Answer::Dist(None)),
            _ => {
                if let Some(rest) = s.strip_prefix('d') {
                    rest.parse().map(|x| Answer::Dist(Some(x))).map_err(|_| Error::Parse(s.into()))
                } else {
                    s.parse().map(Answer::Int).map_err(|_| Error::Parse(s.into()))
                }
            }
        }
    }
}

/// Work counters of the most recent request.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepStats {
    /// Scanned vertices, pairs or matrix probes.
    pub probes: u64,
    /// Heap key updates and extractions.
    pub heap_ops: u64,
    /// Chosen doubling level, when the algorithm has one.
    pub dstar: Option<usize>,
    /// Size of the error set consulted by the step.
    pub errset: usize,
}

/// An online algorithm that consumes requests one at a time.
pub trait Replay {
    type Error: std::error::Error + Send + Sync + 'static;

    /// Processes the next request; returns the answer for queries.
    fn process(&mut self, request: &Request) -> Result<Option<Answer>, Self::Error>;

    /// Counters of the most recent `process` call.
    fn stats(&self) -> StepStats;
}
