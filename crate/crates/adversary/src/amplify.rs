//! Request amplification against pointwise-accurate predictions.

use core_predictions::Request;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{AdvError, Result};

/// `a = ⌈1/(1−ε)⌉` for `ε ∈ (0, 1)`.
pub fn amplification_factor(eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(AdvError::Argument(format!("eps = {eps} not in (0, 1)")));
    }
    Ok((1.0 / (1.0 - eps)).ceil() as usize)
}

/// Uniformly random interleaving of `rho` with `a·T` copies of the query `qstar`.
pub fn eps_amplify<R: Rng + ?Sized>(rho: &[Request], qstar: Request, eps: f64, rng: &mut R) -> Result<Vec<Request>> {
    if !qstar.is_query() {
        return Err(AdvError::Argument(format!("{qstar} is not a query")));
    }
    let a = amplification_factor(eps)?;
    let t = rho.len();
    let mut slots: Vec<bool> = vec![true; t];
    slots.resize(t * (a + 1), false);
    slots.shuffle(rng);
    let mut next = rho.iter();
    Ok(slots
        .into_iter()
        .map(|original| if original { *next.next().expect("T original slots") } else { qstar })
        .collect())
}

/// Greedy check that `sub` is a subsequence of `seq`.
pub fn is_subsequence(sub: &[Request], seq: &[Request]) -> bool {
    let mut it = seq.iter();
    sub.iter().all(|x| it.any(|y| y == x))
}
