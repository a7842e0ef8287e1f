//! Delay sweeps over generated workloads, parallel across trials.

use adversary::Problem;
use anyhow::Result;
use erickson::HeapMode;
use rayon::prelude::*;
use serde::Serialize;

use crate::generate::{generate, mix_seed, GenKind, GenSpec};
use crate::report::{run, CheckMode, RunConfig};
use crate::variant::Variant;

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub problem: Problem,
    pub variants: Vec<Variant>,
    pub n: usize,
    pub len: usize,
    pub ds: Vec<usize>,
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
    pub heap_mode: HeapMode,
}

/// Totals of one (variant, d, trial) run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub problem: Problem,
    pub variant: Variant,
    pub n: usize,
    pub t: usize,
    pub d: usize,
    pub k: usize,
    pub trial: usize,
    pub queries: usize,
    pub mismatches: usize,
    pub probes: u64,
    pub heap_ops: u64,
    pub peak_errset: usize,
    pub max_dstar: Option<usize>,
}

pub fn bench(spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    let cells: Vec<(usize, usize)> =
        spec.ds.iter().flat_map(|&d| (0..spec.trials).map(move |trial| (d, trial))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(spec.jobs).build()?;
    let per_cell: Vec<Result<Vec<BenchRow>>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(d, trial)| {
                let g = generate(&GenSpec {
                    kind: GenKind::Perturb,
                    problem: spec.problem,
                    n: spec.n,
                    len: spec.len,
                    d,
                    k: spec.k,
                    rounds: None,
                    seed: mix_seed(spec.seed, d as u64, trial as u64),
                })?;
                spec.variants
                    .iter()
                    .map(|&variant| {
                        let cfg = RunConfig { variant, check: CheckMode::QueriesOnly, heap_mode: spec.heap_mode };
                        let r = run(&g.pair, cfg)?;
                        Ok(BenchRow {
                            problem: spec.problem,
                            variant,
                            n: spec.n,
                            t: spec.len,
                            d,
                            k: spec.k,
                            trial,
                            queries: r.totals.queries,
                            mismatches: r.totals.mismatches,
                            probes: r.totals.probes,
                            heap_ops: r.totals.heap_ops,
                            peak_errset: r.totals.peak_errset,
                            max_dstar: r.dstar_trace.iter().flatten().max().copied(),
                        })
                    })
                    .collect()
            })
            .collect()
    });
    let mut rows = Vec::new();
    for cell in per_cell {
        rows.extend(cell?);
    }
    Ok(rows)
}
