//! Solver for query vectors whose fixed bits are known in advance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, OmvError, Result};
use crate::matrix::{int_mv, BoolMatrix};

/// Partially specified bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tri {
    Zero,
    One,
    Star,
}

impl Tri {
    pub fn from_char(c: char) -> Result<Tri> {
        match c {
            '0' => Ok(Tri::Zero),
            '1' => Ok(Tri::One),
            '*' => Ok(Tri::Star),
            other => Err(OmvError::Parse(format!("bad symbol {other:?}"))),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Tri::Zero => '0',
            Tri::One => '1',
            Tri::Star => '*',
        }
    }
}

/// Partial vector over `{0,1,*}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partial(pub Vec<Tri>);

impl FromStr for Partial {
    type Err = OmvError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Tri::from_char).collect::<Result<_>>().map(Partial)
    }
}

impl fmt::Display for Partial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{}", t.to_char()))
    }
}

impl Partial {
    pub fn stars(&self) -> usize {
        self.0.iter().filter(|&&t| t == Tri::Star).count()
    }
}

/// Outputs and per-round correction work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitAccurateReport {
    pub outputs: Vec<Vec<bool>>,
    /// Entries of `M` read while correcting each round.
    pub correction_work: Vec<u64>,
}

/// Precomputes products over the fixed 1-bits, then adds the starred positions online.
pub fn bit_accurate_solve(
    m: &BoolMatrix,
    partials: &[Partial],
    fills: &[Vec<bool>],
) -> Result<BitAccurateReport> {
    check_len(partials.len(), fills.len())?;
    let base: Vec<Vec<i64>> = partials
        .iter()
        .map(|p| {
            check_len(m.cols(), p.0.len())?;
            int_mv(m, &p.0.iter().map(|&t| t == Tri::One).collect::<Vec<_>>())
        })
        .collect::<Result<_>>()?;
    let mut report = BitAccurateReport { outputs: Vec::new(), correction_work: Vec::new() };
    for (round, (p, v)) in partials.iter().zip(fills).enumerate() {
        check_len(m.cols(), v.len())?;
        let mut y = base[round].clone();
        let mut work = 0u64;
        for (pos, (&t, &b)) in p.0.iter().zip(v).enumerate() {
            match t {
                Tri::Star if b => {
                    for (j, yj) in y.iter_mut().enumerate() {
                        *yj += m.get(j, pos) as i64;
                    }
                    work += m.rows() as u64;
                }
                Tri::Star => {}
                Tri::One if !b => return Err(OmvError::Contradiction { round, pos }),
                Tri::Zero if b => return Err(OmvError::Contradiction { round, pos }),
                _ => {}
            }
        }
        report.outputs.push(y.iter().map(|&a| a > 0).collect());
        report.correction_work.push(work);
    }
    Ok(report)
}
