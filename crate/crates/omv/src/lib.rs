//! Online Boolean matrix-vector kernels: naive products, a prediction-driven
//! round solver with extended-Hamming corrections, a column-partition solver
//! and a solver for partially known query vectors.

pub mod bitacc;
pub mod eh;
pub mod error;
pub mod instance;
pub mod matrix;
pub mod partition;

pub use bitacc::{bit_accurate_solve, BitAccurateReport, Partial, Tri};
pub use eh::{eh_preprocess, eh_preprocess_with, eh_query, EhAnswer, EhState, IntMultiplier, NaiveMultiplier};
pub use error::{OmvError, Result};
pub use instance::OuMvInstance;
pub use matrix::{bool_mv, int_mv, oumv_round, BoolMatrix};
pub use partition::{group_count, group_size, sparse_partition_solve};

/// Probe constant `c` in the bound `probes ≤ c·n·(1 + corrections)`.
pub const EH_PROBE_CONSTANT: u64 = 2;
