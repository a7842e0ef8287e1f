//! Delay metrics, sub-sequence containment and delay certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::request::{Request, RequestSequence};

/// Occurrence-order matching: entry `t − 1` is the 1-based position in `rho`
/// of the request matched to `rhohat_t`. `None` when the multisets differ.
pub fn occurrence_matching(rho: &RequestSequence, rhohat: &RequestSequence) -> Option<Vec<usize>> {
    if rho.len() != rhohat.len() {
        return None;
    }
    let mut positions: BTreeMap<&Request, Vec<usize>> = BTreeMap::new();
    for (i, r) in rho.iter().enumerate() {
        positions.entry(r).or_default().push(i + 1);
    }
    let mut cursor: BTreeMap<&Request, usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(rho.len());
    for r in rhohat.iter() {
        let list = positions.get(r)?;
        let c = cursor.entry(r).or_insert(0);
        let p = *list.get(*c)?;
        *c += 1;
        out.push(p);
    }
    Some(out)
}

/// Smallest `d` such that some permutation maps `rho` onto `rhohat` with
/// every element displaced by at most `d`.
pub fn min_delay(rho: &RequestSequence, rhohat: &RequestSequence) -> Option<usize> {
    let m = occurrence_matching(rho, rhohat)?;
    Some(m.iter().enumerate().map(|(i, &p)| (i + 1).abs_diff(p)).max().unwrap_or(0))
}

/// Smallest total displacement over permutations mapping `rho` onto `rhohat`.
pub fn total_delay(rho: &RequestSequence, rhohat: &RequestSequence) -> Option<usize> {
    let m = occurrence_matching(rho, rhohat)?;
    Some(m.iter().enumerate().map(|(i, &p)| (i + 1).abs_diff(p)).sum())
}

fn exhaustive(
    rho: &RequestSequence,
    rhohat: &RequestSequence,
    score: fn(usize, usize) -> usize,
) -> Result<Option<usize>> {
    let t = rho.len();
    if t != rhohat.len() {
        return Ok(None);
    }
    if t > 8 {
        return Err(Error::TooLarge(t));
    }
    fn rec(
        j: usize,
        acc: usize,
        used: &mut [bool],
        rho: &[Request],
        rhohat: &[Request],
        score: fn(usize, usize) -> usize,
        best: &mut Option<usize>,
    ) {
        if j == rhohat.len() {
            *best = Some(best.map_or(acc, |b| b.min(acc)));
            return;
        }
        for p in 0..rho.len() {
            if !used[p] && rho[p] == rhohat[j] {
                used[p] = true;
                rec(j + 1, score(acc, j.abs_diff(p)), used, rho, rhohat, score, best);
                used[p] = false;
            }
        }
    }
    let mut best = None;
    let mut used = vec![false; t];
    rec(0, 0, &mut used, rho.items(), rhohat.items(), score, &mut best);
    Ok(best)
}

/// Exhaustive minimum of the maximum displacement; refuses `T > 8`.
pub fn min_delay_bruteforce(rho: &RequestSequence, rhohat: &RequestSequence) -> Result<Option<usize>> {
    exhaustive(rho, rhohat, |acc, x| acc.max(x))
}

/// Exhaustive minimum of the total displacement; refuses `T > 8`.
pub fn total_delay_bruteforce(rho: &RequestSequence, rhohat: &RequestSequence) -> Result<Option<usize>> {
    exhaustive(rho, rhohat, |acc, x| acc + x)
}

/// Checks `ρ̂_{≤t−d} ⊆ ρ_{≤t} ⊆ ρ̂_{≤t+d}` as multisets for every `t ∈ [T]`.
pub fn containment_check(rho: &RequestSequence, rhohat: &RequestSequence, d: usize) -> Result<bool> {
    if rho.len() != rhohat.len() {
        return Err(Error::LengthMismatch { left: rho.len(), right: rhohat.len() });
    }
    let t_max = rho.len();
    // balance[x] = count in ρ_{≤t} minus count in ρ̂_{≤t−d}; must stay ≥ 0.
    // slack[x] = count in ρ̂_{≤t+d} minus count in ρ_{≤t}; must stay ≥ 0.
    let mut balance: BTreeMap<Request, i64> = BTreeMap::new();
    let mut slack: BTreeMap<Request, i64> = BTreeMap::new();
    let mut neg_balance = 0usize;
    let mut neg_slack = 0usize;
    fn bump(map: &mut BTreeMap<Request, i64>, neg: &mut usize, r: Request, delta: i64) {
        let e = map.entry(r).or_insert(0);
        let before = *e < 0;
        *e += delta;
        let after = *e < 0;
        match (before, after) {
            (false, true) => *neg += 1,
            (true, false) => *neg -= 1,
            _ => {}
        }
    }
    for tau in 1..=d.min(t_max) {
        bump(&mut slack, &mut neg_slack, *rhohat.at(tau), 1);
    }
    for t in 1..=t_max {
        let r = *rho.at(t);
        bump(&mut balance, &mut neg_balance, r, 1);
        bump(&mut slack, &mut neg_slack, r, -1);
        if t > d {
            bump(&mut balance, &mut neg_balance, *rhohat.at(t - d), -1);
        }
        if t + d <= t_max {
            bump(&mut slack, &mut neg_slack, *rhohat.at(t + d), 1);
        }
        if neg_balance > 0 || neg_slack > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Witness that `rhohat` is `d`-delayed with `k` outliers for `rho`.
///
/// `rhohat` restricted to `ihat` at position `j` equals `rho` restricted to
/// `i` at position `pi[j]`. All indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelayCertificate {
    pub pi: Vec<usize>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "Ihat")]
    pub ihat: Vec<usize>,
    pub d: usize,
    pub k: usize,
}

impl DelayCertificate {
    /// Certificate from occurrence matching with no outliers.
    pub fn from_matching(rho: &RequestSequence, rhohat: &RequestSequence) -> Option<Self> {
        let pi = occurrence_matching(rho, rhohat)?;
        let d = pi.iter().enumerate().map(|(j, &p)| (j + 1).abs_diff(p)).max().unwrap_or(0);
        let all: Vec<usize> = (1..=rho.len()).collect();
        Some(DelayCertificate { pi, i: all.clone(), ihat: all, d, k: 0 })
    }

    /// Largest displacement `|pi[j] − j|`.
    pub fn displacement(&self) -> usize {
        self.pi.iter().enumerate().map(|(j, &p)| (j + 1).abs_diff(p)).max().unwrap_or(0)
    }

    /// Verifies every invariant against the two sequences.
    pub fn verify(&self, rho: &RequestSequence, rhohat: &RequestSequence) -> Result<()> {
        let fail = |m: String| Err(Error::Certificate(m));
        let t = rho.len();
        if rhohat.len() != t {
            return fail(format!("sequence lengths differ: {} vs {}", t, rhohat.len()));
        }
        let tp = self.pi.len();
        if self.i.len() != tp || self.ihat.len() != tp {
            return fail("index sets and permutation differ in length".into());
        }
        if tp + self.k < t {
            return fail(format!("T' = {tp} < T − k = {} − {}", t, self.k));
        }
        for set in [&self.i, &self.ihat] {
            if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&x| x == 0 || x > t) {
                return fail("index set not strictly increasing within [1, T]".into());
            }
        }
        let mut seen = vec![false; tp];
        for &p in &self.pi {
            if p == 0 || p > tp || seen[p - 1] {
                return fail("pi is not a permutation".into());
            }
            seen[p - 1] = true;
        }
        if self.displacement() > self.d {
            return fail(format!("displacement {} exceeds d = {}", self.displacement(), self.d));
        }
        for (j, &p) in self.pi.iter().enumerate() {
            if rhohat.at(self.ihat[j]) != rho.at(self.i[p - 1]) {
                return fail(format!("element mismatch at restricted position {}", j + 1));
            }
        }
        Ok(())
    }
}
