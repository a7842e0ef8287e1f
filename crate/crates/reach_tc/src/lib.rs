//! Fully dynamic pairwise reachability under directed edge flips, driven by
//! a delayed prediction of the flip sequence. The window-level engine is
//! weight-generic and also serves the shortest-path structure.

pub mod engine;
pub mod error;
pub mod graph;
pub mod tc;

pub use engine::{default_ladder, predicted_touches, preprocess, Elem, Engine, Level, LevelBuilder, Op, Qualification};
pub use error::{GraphError, Result};
pub use graph::{adjacency, sssp, DiGraph, Dist, Edge};
pub use tc::{decode, digraph, Tc, TcCopy, TcOracle};
