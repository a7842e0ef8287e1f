//! Workload generators for the dynamic problems: OuMv encodings, universal
//! blocks with cyclic padding, two-list junk predictions, query amplification
//! and random certified perturbations, with a directory format for the pairs.

pub mod amplify;
pub mod error;
pub mod instance;
pub mod perturb;
pub mod reduction;
pub mod universal;
pub mod workload;

pub use amplify::{amplification_factor, eps_amplify, is_subsequence};
pub use error::{AdvError, Result};
pub use instance::{Instance, Problem, MAX_WEIGHT};
pub use perturb::{certified_workload, perturb, perturb_for, perturb_with};
pub use reduction::{
    decode_bits, gen_2list_striangle, gen_striangle_oumv, random_oumv, rho_star_delay_bound, striangle_block,
    striangle_instance, striangle_rho_star, striangle_subsets, RhoStarWorkload, TwoListWorkload, FLIP_ORDER,
};
pub use universal::{check_rho_star, pad_locally_reducible, universal_prediction, PaddedSequence, UniversalBlock};
pub use workload::{answers_from_text, answers_to_text, WorkloadPair};
