//! Predicted sensitivities of every vertex over time.

use core_predictions::Request;

use crate::error::Result;
use crate::graph::{flip_of, FlipGraph};

/// Change-point lists `S(v)` of `(t, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensitivityTimeline {
    points: Vec<Vec<(usize, i64)>>,
}

impl SensitivityTimeline {
    /// Sensitivity of `v` after `t` predicted requests.
    pub fn lookup(&self, v: u32, t: usize) -> i64 {
        let s = &self.points[v as usize];
        let k = s.partition_point(|&(time, _)| time <= t);
        s[k - 1].1
    }

    pub fn points(&self, v: u32) -> &[(usize, i64)] {
        &self.points[v as usize]
    }

    pub fn total_points(&self) -> usize {
        self.points.iter().map(Vec::len).sum()
    }
}

/// Predicted replay from `g0`: timeline plus predicted counts `ĉ_0..ĉ_T`.
pub fn predicted_replay(g0: &FlipGraph, s: u32, rhohat: &[Request]) -> Result<(SensitivityTimeline, Vec<i64>)> {
    let mut g = g0.clone();
    let mut sens: Vec<i64> = (0..g.n() as u32).map(|v| if v == s { 0 } else { g.sensitivity(s, v) }).collect();
    let mut points: Vec<Vec<(usize, i64)>> = sens.iter().map(|&m| vec![(0, m)]).collect();
    let mut c = crate::graph::count_striangles(&g, s);
    let mut counts = vec![c];
    for (idx, r) in rhohat.iter().enumerate() {
        let t = idx + 1;
        if let Some((a, b)) = flip_of(r)? {
            let on = g.flip(a, b)?;
            let e = if on { 1 } else { -1 };
            let mut bump = |v: u32, sens: &mut Vec<i64>| {
                sens[v as usize] += e;
                points[v as usize].push((t, sens[v as usize]));
            };
            if a == s || b == s {
                let u = if a == s { b } else { a };
                c += e * sens[u as usize];
                for v in g.neighbors(u).filter(|&v| v != s).collect::<Vec<_>>() {
                    bump(v, &mut sens);
                }
            } else {
                if g.has(s, a) && g.has(s, b) {
                    c += e;
                }
                if g.has(s, b) {
                    bump(a, &mut sens);
                }
                if g.has(s, a) {
                    bump(b, &mut sens);
                }
            }
        }
        counts.push(c);
    }
    Ok((SensitivityTimeline { points }, counts))
}
