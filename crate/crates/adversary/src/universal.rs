//! Universal request blocks and the cyclic padding that makes a reduction's
//! sequence a bounded-delay permutation of the repeated block.

use std::collections::BTreeMap;

use core_predictions::Request;
use serde::{Deserialize, Serialize};

use crate::error::{AdvError, Result};

/// Ordered block `B` with multiplicities `M(x)` and cyclic orders `ord(x)` for updates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalBlock {
    items: Vec<Request>,
    ord: BTreeMap<Request, usize>,
}

fn counts<'a>(it: impl IntoIterator<Item = &'a Request>) -> BTreeMap<Request, usize> {
    let mut m = BTreeMap::new();
    for r in it {
        *m.entry(*r).or_insert(0) += 1;
    }
    m
}

impl UniversalBlock {
    pub fn new(items: Vec<Request>, ord: BTreeMap<Request, usize>) -> Result<Self> {
        for r in items.iter().filter(|r| r.is_update()) {
            if ord.get(r).copied().unwrap_or(0) == 0 {
                return Err(AdvError::Argument(format!("update {r} has no positive cyclic order")));
            }
        }
        Ok(UniversalBlock { items, ord })
    }

    pub fn items(&self) -> &[Request] {
        &self.items
    }

    /// `M(x)`.
    pub fn multiplicity(&self, x: &Request) -> usize {
        self.items.iter().filter(|r| *r == x).count()
    }

    /// `ord(x)` for updates in the block.
    pub fn order(&self, x: &Request) -> Option<usize> {
        self.ord.get(x).copied()
    }

    /// Largest cyclic order `C`.
    pub fn max_order(&self) -> usize {
        self.items.iter().filter_map(|r| self.order(r)).max().unwrap_or(0)
    }

    /// `u`, the number of updates in the block.
    pub fn updates(&self) -> usize {
        self.items.iter().filter(|r| r.is_update()).count()
    }

    /// `q`, the number of queries in the block.
    pub fn queries(&self) -> usize {
        self.items.len() - self.updates()
    }

    /// Distinct requests in order of first appearance.
    pub fn distinct(&self) -> Vec<Request> {
        let mut seen = std::collections::BTreeSet::new();
        self.items.iter().copied().filter(|r| seen.insert(*r)).collect()
    }
}

/// `n3` concatenated copies of the block.
pub fn universal_prediction(block: &UniversalBlock, n3: usize) -> Vec<Request> {
    block.items.repeat(n3)
}

/// Padded sequence with the end offset of each augmented block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedSequence {
    pub rho: Vec<Request>,
    /// `block_ends[k − 1]` is the length of the first `k` augmented blocks.
    pub block_ends: Vec<usize>,
}

/// Appends each `B'_k`, pads every update to within its cyclic order of
/// `k·M(x)` using whole multiples of the order, tops queries up to `k·M(q)`,
/// and finally appends every request still missing from `n3` copies of `B`.
pub fn pad_locally_reducible(block: &UniversalBlock, subsets: &[Vec<Request>]) -> Result<PaddedSequence> {
    let mult = counts(&block.items);
    let distinct = block.distinct();
    let mut n: BTreeMap<Request, usize> = BTreeMap::new();
    let mut rho = Vec::new();
    let mut block_ends = Vec::with_capacity(subsets.len());
    for (idx, sub) in subsets.iter().enumerate() {
        let k = idx + 1;
        for (x, c) in counts(sub) {
            if c > mult.get(&x).copied().unwrap_or(0) {
                return Err(AdvError::Argument(format!("block {k} uses {x} {c} times, more than the universal block")));
            }
        }
        for r in sub {
            rho.push(*r);
            *n.entry(*r).or_insert(0) += 1;
        }
        for x in distinct.iter().filter(|x| x.is_update()) {
            let target = k * mult[x];
            let have = n.get(x).copied().unwrap_or(0);
            let ord = block.order(x).expect("validated order");
            if have + ord <= target {
                let extra = (target - have) / ord * ord;
                rho.extend(std::iter::repeat_n(*x, extra));
                *n.entry(*x).or_insert(0) += extra;
            }
        }
        for x in distinct.iter().filter(|x| x.is_query()) {
            let target = k * mult[x];
            let have = n.get(x).copied().unwrap_or(0);
            if have < target {
                rho.extend(std::iter::repeat_n(*x, target - have));
                n.insert(*x, target);
            }
        }
        block_ends.push(rho.len());
    }
    let mut used: BTreeMap<Request, usize> = BTreeMap::new();
    for r in universal_prediction(block, subsets.len()) {
        let u = used.entry(r).or_insert(0);
        *u += 1;
        if *u > n.get(&r).copied().unwrap_or(0) {
            rho.push(r);
        }
    }
    Ok(PaddedSequence { rho, block_ends })
}

/// Checks `k·M(x) − ord(x) < N(x, k) ≤ k·M(x)` for updates, `N(q, k) = k·M(q)`
/// for queries, and that the whole sequence holds exactly `n3` copies of `B`.
pub fn check_rho_star(block: &UniversalBlock, padded: &PaddedSequence) -> Result<()> {
    let mult = counts(&block.items);
    let n3 = padded.block_ends.len();
    for (idx, &end) in padded.block_ends.iter().enumerate() {
        let k = idx + 1;
        let n = counts(&padded.rho[..end]);
        for (x, &m) in &mult {
            let have = n.get(x).copied().unwrap_or(0);
            let ok = match block.order(x) {
                Some(ord) if x.is_update() => k * m < have + ord && have <= k * m,
                _ => have == k * m,
            };
            if !ok {
                return Err(AdvError::Check(format!("N({x}, {k}) = {have} violates the bounds for M = {m}")));
            }
        }
        if n.keys().any(|x| !mult.contains_key(x)) {
            return Err(AdvError::Check(format!("block {k} holds a request outside the universal block")));
        }
    }
    let total = counts(&padded.rho);
    let expect: BTreeMap<Request, usize> = mult.iter().map(|(x, &m)| (*x, m * n3)).collect();
    if total != expect {
        return Err(AdvError::Check("sequence is not a permutation of the universal prediction".into()));
    }
    Ok(())
}
