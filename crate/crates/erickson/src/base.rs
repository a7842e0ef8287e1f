//! Matrix with row/column increment counters and the full-scan oracle.

use core_predictions::{Answer, Payload, Replay, Request, StepStats};

use crate::error::{EricksonError, Result};

/// Incremented line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Line {
    Row(u32),
    Col(u32),
}

/// `Some(line)` for increments, `None` for queries.
pub fn decode(r: &Request) -> Result<Option<Line>> {
    match r.payload {
        Payload::Row(i) if r.is_update() => Ok(Some(Line::Row(i))),
        Payload::Col(j) if r.is_update() => Ok(Some(Line::Col(j))),
        Payload::Query if r.is_query() => Ok(None),
        _ => Err(EricksonError::Request(r.to_string())),
    }
}

/// Square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    cells: Vec<i64>,
}

impl Matrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(EricksonError::Shape);
        }
        Ok(Matrix { n, cells: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cells[i * self.n + j]
    }

    /// Parses `n` followed by `n` rows of `n` integers.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let bad = |s: &str| EricksonError::Parse(s.to_string());
        let n: usize = tokens.next().ok_or_else(|| bad("empty"))?.parse().map_err(|_| bad("n"))?;
        let cells: Vec<i64> = tokens.map(|t| t.parse().map_err(|_| bad(t))).collect::<Result<_>>()?;
        if n == 0 || cells.len() != n * n {
            return Err(EricksonError::Shape);
        }
        Ok(Matrix { n, cells })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub(crate) fn check(&self, line: Line) -> Result<()> {
        let (Line::Row(x) | Line::Col(x)) = line;
        if (x as usize) < self.n {
            Ok(())
        } else {
            Err(EricksonError::Index { index: x, n: self.n })
        }
    }
}

/// `M_t[i][j] = M0[i][j] + I_R[i] + I_C[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EricksonBase {
    pub m0: Matrix,
    pub ir: Vec<i64>,
    pub ic: Vec<i64>,
}

impl EricksonBase {
    pub fn new(m0: Matrix) -> Self {
        let n = m0.n();
        EricksonBase { m0, ir: vec![0; n], ic: vec![0; n] }
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.m0.get(i, j) + self.ir[i] + self.ic[j]
    }

    pub fn increment(&mut self, line: Line) -> Result<()> {
        self.m0.check(line)?;
        match line {
            Line::Row(i) => self.ir[i as usize] += 1,
            Line::Col(j) => self.ic[j as usize] += 1,
        }
        Ok(())
    }
}

/// Maximum entry and its lexicographically smallest 0-based position.
pub fn erickson_oracle(base: &EricksonBase) -> (i64, (usize, usize)) {
    let n = base.m0.n();
    let mut best = (base.entry(0, 0), (0, 0));
    for i in 0..n {
        for j in 0..n {
            let v = base.entry(i, j);
            if v > best.0 {
                best = (v, (i, j));
            }
        }
    }
    best
}

/// Rebuilds and scans the matrix at every query.
#[derive(Debug, Clone)]
pub struct EricksonOracle {
    pub base: EricksonBase,
}

impl EricksonOracle {
    pub fn new(m0: Matrix) -> Self {
        EricksonOracle { base: EricksonBase::new(m0) }
    }
}

impl Replay for EricksonOracle {
    type Error = EricksonError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Some(line) => self.base.increment(line).map(|_| None),
            None => Ok(Some(Answer::Int(erickson_oracle(&self.base).0))),
        }
    }

    fn stats(&self) -> StepStats {
        StepStats::default()
    }
}
