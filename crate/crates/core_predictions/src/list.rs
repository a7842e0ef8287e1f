//! List predictions and conversions from delayed predictions.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::request::{Request, RequestSequence};

/// Per-step candidate sets, each of size at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListPrediction {
    pub slots: Vec<BTreeSet<Request>>,
    pub bound: usize,
}

impl ListPrediction {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Slot at 1-based position `t`.
    pub fn slot(&self, t: usize) -> Option<&BTreeSet<Request>> {
        t.checked_sub(1).and_then(|i| self.slots.get(i))
    }

    /// Whether `rho_t` lies in slot `t` for every `t`.
    pub fn covers(&self, rho: &RequestSequence) -> bool {
        rho.len() == self.slots.len()
            && rho.iter().zip(&self.slots).all(|(r, s)| s.contains(r))
    }

    /// Total number of stored candidates.
    pub fn total_size(&self) -> usize {
        self.slots.iter().map(BTreeSet::len).sum()
    }
}

/// Slot `t` holds the distinct requests of `rhohat` in `[max(1,t−d), min(T,t+d)]`.
pub fn delay_to_list(rhohat: &RequestSequence, d: usize) -> ListPrediction {
    let t_max = rhohat.len();
    let slots = (1..=t_max)
        .map(|t| rhohat.range(t.saturating_sub(d).max(1), (t + d).min(t_max)).iter().copied().collect())
        .collect();
    ListPrediction { slots, bound: 2 * d + 1 }
}

/// Draws one element per slot uniformly at random.
pub fn list_to_point_sample<R: Rng + ?Sized>(lp: &ListPrediction, rng: &mut R) -> Result<RequestSequence> {
    lp.slots
        .iter()
        .enumerate()
        .map(|(i, slot)| {
            if slot.is_empty() {
                return Err(Error::EmptySlot(i + 1));
            }
            let k = rng.gen_range(0..slot.len());
            Ok(*slot.iter().nth(k).expect("index within slot"))
        })
        .collect()
}
