//! Bit-packed Boolean matrices and the naive kernels.

use serde::{Deserialize, Serialize};

use crate::error::{check_len, OmvError, Result};

const W: usize = 64;

/// Row-major bit matrix with `n1` rows and `n2` columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoolMatrix {
    n1: usize,
    n2: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    /// All-zero matrix.
    pub fn zeros(n1: usize, n2: usize) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(OmvError::Empty);
        }
        let words = n2.div_ceil(W);
        Ok(BoolMatrix { n1, n2, words, bits: vec![0; n1 * words] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Matrix from equal-length rows.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n2 = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), n2)?;
        for (i, r) in rows.iter().enumerate() {
            check_len(n2, r.len())?;
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.n1
    }

    pub fn cols(&self) -> usize {
        self.n2
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / W] >> (j % W) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        let w = &mut self.bits[i * self.words + j / W];
        if b {
            *w |= 1 << (j % W);
        } else {
            *w &= !(1 << (j % W));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Parses `n1 n2` followed by `n1` lines of `0`/`1` characters.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| OmvError::Parse("missing header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| OmvError::Parse(header.into())))
            .collect::<Result<_>>()?;
        let [n1, n2] = dims[..] else {
            return Err(OmvError::Parse(header.into()));
        };
        let rows: Vec<Vec<bool>> = lines
            .map(|l| {
                core_predictions::parse_bits(l).map_err(|e| OmvError::Parse(e.to_string()))
            })
            .collect::<Result<_>>()?;
        check_len(n1, rows.len())?;
        let m = Self::from_rows(&rows)?;
        check_len(n2, m.n2)?;
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n1, self.n2);
        for i in 0..self.n1 {
            s.extend((0..self.n2).map(|j| if self.get(i, j) { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }
}

pub(crate) fn pack(v: &[bool]) -> Vec<u64> {
    let mut out = vec![0u64; v.len().div_ceil(W)];
    for (k, &b) in v.iter().enumerate() {
        if b {
            out[k / W] |= 1 << (k % W);
        }
    }
    out
}

/// Boolean product `(Mv)[i] = OR_k M[i][k] ∧ v[k]`.
pub fn bool_mv(m: &BoolMatrix, v: &[bool]) -> Result<Vec<bool>> {
    check_len(m.n2, v.len())?;
    let pv = pack(v);
    Ok((0..m.n1).map(|i| m.row_words(i).iter().zip(&pv).any(|(a, b)| a & b != 0)).collect())
}

/// Integer product `Σ_k M[i][k]·v[k]`.
pub fn int_mv(m: &BoolMatrix, v: &[bool]) -> Result<Vec<i64>> {
    check_len(m.n2, v.len())?;
    let pv = pack(v);
    Ok((0..m.n1)
        .map(|i| m.row_words(i).iter().zip(&pv).map(|(a, b)| (a & b).count_ones() as i64).sum())
        .collect())
}

/// `uᵀ M v` over the Boolean semiring.
pub fn oumv_round(m: &BoolMatrix, u: &[bool], v: &[bool]) -> Result<bool> {
    check_len(m.n1, u.len())?;
    let mv = bool_mv(m, v)?;
    Ok(u.iter().zip(mv).any(|(&a, b)| a && b))
}
