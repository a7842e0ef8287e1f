//! OuMv instances: a matrix with a sequence of `(u, v)` vector pairs.

use core_predictions::{format_bits, parse_bits};
use serde::{Deserialize, Serialize};

use crate::error::{check_len, OmvError, Result};
use crate::matrix::{oumv_round, BoolMatrix};

#[derive(Serialize, Deserialize)]
struct InstanceRepr {
    matrix: Vec<String>,
    pairs: Vec<(String, String)>,
}

/// Matrix `M` (`n1 × n2`) and rounds `(u_k, v_k)` with `|u_k| = n1`, `|v_k| = n2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceRepr", into = "InstanceRepr")]
pub struct OuMvInstance {
    m: BoolMatrix,
    pairs: Vec<(Vec<bool>, Vec<bool>)>,
}

impl OuMvInstance {
    pub fn new(m: BoolMatrix, pairs: Vec<(Vec<bool>, Vec<bool>)>) -> Result<Self> {
        for (u, v) in &pairs {
            check_len(m.rows(), u.len())?;
            check_len(m.cols(), v.len())?;
        }
        Ok(OuMvInstance { m, pairs })
    }

    pub fn matrix(&self) -> &BoolMatrix {
        &self.m
    }

    pub fn pairs(&self) -> &[(Vec<bool>, Vec<bool>)] {
        &self.pairs
    }

    /// `u_kᵀ M v_k` for every round.
    pub fn answers(&self) -> Vec<bool> {
        self.pairs.iter().map(|(u, v)| oumv_round(&self.m, u, v).expect("validated dimensions")).collect()
    }
}

impl TryFrom<InstanceRepr> for OuMvInstance {
    type Error = OmvError;

    fn try_from(r: InstanceRepr) -> Result<Self> {
        let bits = |s: &str| parse_bits(s).map_err(|e| OmvError::Parse(e.to_string()));
        let rows: Vec<Vec<bool>> = r.matrix.iter().map(|s| bits(s)).collect::<Result<_>>()?;
        let pairs = r.pairs.iter().map(|(u, v)| Ok((bits(u)?, bits(v)?))).collect::<Result<_>>()?;
        OuMvInstance::new(BoolMatrix::from_rows(&rows)?, pairs)
    }
}

impl From<OuMvInstance> for InstanceRepr {
    fn from(x: OuMvInstance) -> Self {
        let m = &x.m;
        InstanceRepr {
            matrix: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| if m.get(i, j) { '1' } else { '0' }).collect())
                .collect(),
            pairs: x.pairs.iter().map(|(u, v)| (format_bits(u), format_bits(v))).collect(),
        }
    }
}
