//! Replay with oracle checks and per-request counters.

use std::io::Write;

use adversary::WorkloadPair;
use anyhow::{Context, Result};
use clap::ValueEnum;
use core_predictions::Answer;
use erickson::HeapMode;
use serde::Serialize;

use crate::variant::{build, Variant};

/// Which steps are compared against the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    /// Every request: updates must return nothing, queries must match.
    #[default]
    EveryStep,
    /// Query answers only.
    QueriesOnly,
    /// No oracle replay.
    Off,
}

/// Replay settings.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub variant: Variant,
    pub check: CheckMode,
    pub heap_mode: HeapMode,
}

/// One CSV row per request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub t: usize,
    pub kind: &'static str,
    pub answer: Option<String>,
    pub oracle: Option<String>,
    pub probes: u64,
    pub heap_ops: u64,
    pub dstar: Option<usize>,
    pub errset_size: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub requests: usize,
    pub queries: usize,
    pub mismatches: usize,
    pub probes: u64,
    pub heap_ops: u64,
    pub peak_errset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub problem: String,
    pub variant: Variant,
    pub n: usize,
    pub horizon: usize,
    pub d: usize,
    pub k: usize,
    pub totals: Totals,
    /// `d*` at every query.
    pub dstar_trace: Vec<Option<usize>>,
    pub rows: Vec<Row>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.totals.mismatches == 0
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn show(a: &Option<Answer>) -> Option<String> {
    a.as_ref().map(Answer::to_string)
}

/// Replays `pair.rho` through the configured variant.
pub fn run(pair: &WorkloadPair, cfg: RunConfig) -> Result<RunReport> {
    let rho = pair.rho.items();
    let mut algo = build(&pair.instance, pair.rhohat.items(), cfg.variant, pair.certificate.d, cfg.heap_mode)
        .context("preprocessing failed")?;
    let oracle = match cfg.check {
        CheckMode::Off => None,
        _ => Some(pair.instance.oracle_replay(rho)?),
    };
    let mut totals = Totals::default();
    let mut rows = Vec::with_capacity(rho.len());
    let mut dstar_trace = Vec::new();
    for (i, r) in rho.iter().enumerate() {
        let t = i + 1;
        let got = algo.step(r).map_err(|e| anyhow::anyhow!("request {t} ({r}): {e}"))?;
        let stats = algo.stats();
        let expect = oracle.as_ref().map(|o| o[i]);
        let mismatch = match (cfg.check, expect) {
            (CheckMode::EveryStep, Some(e)) => got != e,
            (CheckMode::QueriesOnly, Some(e)) => r.is_query() && got != e,
            _ => false,
        };
        totals.requests += 1;
        totals.mismatches += mismatch as usize;
        totals.probes += stats.probes;
        totals.heap_ops += stats.heap_ops;
        totals.peak_errset = totals.peak_errset.max(stats.errset);
        if r.is_query() {
            totals.queries += 1;
            dstar_trace.push(stats.dstar);
        }
        rows.push(Row {
            t,
            kind: if r.is_query() { "query" } else { "update" },
            answer: show(&got),
            oracle: expect.and_then(|e| show(&e)),
            probes: stats.probes,
            heap_ops: stats.heap_ops,
            dstar: stats.dstar,
            errset_size: stats.errset,
        });
    }
    Ok(RunReport {
        problem: pair.instance.problem().to_string(),
        variant: cfg.variant,
        n: pair.instance.size(),
        horizon: rho.len(),
        d: pair.certificate.d,
        k: pair.certificate.k,
        totals,
        dstar_trace,
        rows,
    })
}
