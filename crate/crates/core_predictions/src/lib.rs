//! Request sequences, prediction-quality metrics, conversions between
//! prediction models, sliding-window permanence, and the alternating
//! parallel simulation scheduler.

pub mod answer;
pub mod bits;
pub mod delay;
pub mod error;
pub mod list;
pub mod request;
pub mod sim;
pub mod symdiff;
pub mod window;

pub use answer::{Answer, Replay, StepStats};
pub use bits::{eh_blocks, extended_hamming, format_bits, hamming, parse_bits, Block};
pub use delay::{
    containment_check, min_delay, min_delay_bruteforce, occurrence_matching, total_delay,
    total_delay_bruteforce, DelayCertificate,
};
pub use error::{Error, Result};
pub use list::{delay_to_list, list_to_point_sample, ListPrediction};
pub use request::{Kind, Payload, Request, RequestSequence};
pub use sim::{
    parallel_simulation, standalone_work, CopyReport, ResumableAlgorithm, SimulationReport, StepOutcome,
};
pub use symdiff::{CountChange, SymDiffTracker};
pub use window::{levels, window, window_sets_bruteforce, Touch, WindowCursor, WindowLevel};
