//! Round solver driven by predicted query vectors and extended-Hamming corrections.

use core_predictions::eh_blocks;
use serde::{Deserialize, Serialize};

use crate::error::{check_len, OmvError, Result};
use crate::matrix::{int_mv, BoolMatrix};

/// Source of the batched integer products `M·v̂_i`.
pub trait IntMultiplier {
    fn products(&self, m: &BoolMatrix, vs: &[Vec<bool>]) -> Result<Vec<Vec<i64>>>;
}

/// Row-by-row integer products.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaiveMultiplier;

impl IntMultiplier for NaiveMultiplier {
    fn products(&self, m: &BoolMatrix, vs: &[Vec<bool>]) -> Result<Vec<Vec<i64>>> {
        vs.iter().map(|v| int_mv(m, v)).collect()
    }
}

/// Precomputed products and per-row prefix sums.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EhState {
    matrix: BoolMatrix,
    /// `yhat[i][j] = Σ_k M[j][k]·v̂_i[k]`.
    pub yhat: Vec<Vec<i64>>,
    /// `prefix[j][b] = Σ_{k<b} M[j][k]`, length `n2 + 1`.
    pub prefix: Vec<Vec<i64>>,
    pub predictions: Vec<Vec<bool>>,
}

impl EhState {
    pub fn matrix(&self) -> &BoolMatrix {
        &self.matrix
    }

    pub fn rounds(&self) -> usize {
        self.predictions.len()
    }

    /// Sum of row `j` over 1-based columns `a..=b`.
    pub fn range_sum(&self, j: usize, a: usize, b: usize) -> i64 {
        self.prefix[j][b] - self.prefix[j][a - 1]
    }
}

/// Output of one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhAnswer {
    pub arith: Vec<i64>,
    pub boolean: Vec<bool>,
    pub corrections: usize,
    /// Matrix-side memory probes spent in the round.
    pub probes: u64,
}

/// Preprocessing with the default multiplier.
pub fn eh_preprocess(m: &BoolMatrix, predictions: &[Vec<bool>]) -> Result<EhState> {
    eh_preprocess_with(m, predictions, &NaiveMultiplier)
}

pub fn eh_preprocess_with(
    m: &BoolMatrix,
    predictions: &[Vec<bool>],
    mult: &dyn IntMultiplier,
) -> Result<EhState> {
    for p in predictions {
        check_len(m.cols(), p.len())?;
    }
    let yhat = mult.products(m, predictions)?;
    let prefix = (0..m.rows())
        .map(|j| {
            let mut acc = 0i64;
            std::iter::once(0)
                .chain((0..m.cols()).map(|k| {
                    acc += m.get(j, k) as i64;
                    acc
                }))
                .collect()
        })
        .collect();
    Ok(EhState { matrix: m.clone(), yhat, prefix, predictions: predictions.to_vec() })
}

/// Answers 0-based round `i` with actual vector `v`.
pub fn eh_query(state: &EhState, i: usize, v: &[bool]) -> Result<EhAnswer> {
    let rounds = state.rounds();
    let pred = state.predictions.get(i).ok_or(OmvError::Round { index: i, rounds })?;
    check_len(state.matrix.cols(), v.len())?;
    let n1 = state.matrix.rows();
    let blocks = eh_blocks(pred, v).expect("lengths checked");
    let mut arith = state.yhat[i].clone();
    let mut probes = n1 as u64 + v.len() as u64;
    for b in &blocks {
        for (j, a) in arith.iter_mut().enumerate() {
            *a += b.sign as i64 * state.range_sum(j, b.lo, b.hi);
        }
        probes += n1 as u64;
    }
    let boolean = arith.iter().map(|&a| a > 0).collect();
    Ok(EhAnswer { arith, boolean, corrections: blocks.len(), probes })
}
