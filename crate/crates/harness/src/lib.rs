//! Workload generation, replay against oracles, and counter reports.

pub mod bench;
pub mod generate;
pub mod report;
pub mod variant;

pub use bench::{bench, BenchRow, BenchSpec};
pub use generate::{generate, mix_seed, write_generated, GenKind, GenSpec, Generated};
pub use report::{run, CheckMode, Row, RunConfig, RunReport, Totals};
pub use variant::{build, DynReplay, Variant};

/// Environment variable holding the default seed.
pub const SEED_ENV: &str = "HARNESS_SEED";
