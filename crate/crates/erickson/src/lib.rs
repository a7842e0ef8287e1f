//! Maximum entry of an `n × n` matrix under row and column increments.
//!
//! [`QueryOptimized`] answers in constant time and corrects one heap per update.
//! [`UpdateOptimized`] keeps signed window bounds per doubling level and corrects
//! only the non-permanent rows and columns at query time.

pub mod base;
pub mod error;
pub mod heap;
pub mod ledger;
pub mod qopt;
pub mod store;
pub mod uopt;

pub use base::{decode, erickson_oracle, EricksonBase, EricksonOracle, Line, Matrix};
pub use error::{EricksonError, Result};
pub use heap::MaxHeap;
pub use ledger::Ledger;
pub use qopt::QueryOptimized;
pub use store::{HeapMode, HeapStore};
pub use uopt::{Bounds, UoptLevel, UpdateOptimized};
