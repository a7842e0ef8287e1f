//! Connectivity queries on the subgraph induced by a changing vertex set of a
//! fixed graph, using per-level permanent sets derived from a predicted
//! request sequence and a doubling search over the delay radius.

pub mod error;
pub mod graph;
pub mod state;
pub mod timeline;

pub use error::{Result, SubConnError};
pub use graph::Graph;
pub use state::{Qualification, SubConn, SubConnOracle};
pub use timeline::{agnostic_preprocess, decode, promise_preprocess, Op, LevelTables, SubConnTimeline};
