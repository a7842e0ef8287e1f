//! Counting triangles through a distinguished vertex `s` under edge flips:
//! a brute-force oracle, two prediction-free baselines, and two variants that
//! exploit a delayed prediction of the flip sequence.

pub mod baseline;
pub mod delayed;
pub mod error;
pub mod graph;
pub mod timeline;

pub use baseline::{QueryOptBaseline, UpdateOptBaseline};
pub use delayed::{QueryOptimized, Tracked, UpdateOptimized};
pub use error::{Result, StriError};
pub use graph::{count_striangles, flip_of, validate, FlipGraph};
pub use timeline::{predicted_replay, SensitivityTimeline};
