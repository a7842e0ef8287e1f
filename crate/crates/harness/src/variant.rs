//! Algorithm variants behind one dynamic replay interface.

use std::collections::BTreeSet;
use std::fmt;

use adversary::{Instance, Problem};
use anyhow::{bail, Result};
use clap::ValueEnum;
use core_predictions::{Answer, Replay, Request, StepStats};
use erickson::HeapMode;
use serde::Serialize;

/// Algorithm choice; validity depends on the problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Full recomputation at every query.
    Oracle,
    /// Prediction-free, constant-time queries.
    BaselineQuery,
    /// Prediction-free, constant-time updates.
    BaselineUpdate,
    /// Query-optimized with delayed predictions.
    Qopt,
    /// Update-optimized with delayed predictions.
    Uopt,
    /// Delay-agnostic doubling ladder.
    Agnostic,
    /// Single level at the certified delay.
    Promise,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Oracle => "oracle",
            Variant::BaselineQuery => "baseline-query",
            Variant::BaselineUpdate => "baseline-update",
            Variant::Qopt => "qopt",
            Variant::Uopt => "uopt",
            Variant::Agnostic => "agnostic",
            Variant::Promise => "promise",
        }
    }

    /// Variants implemented for `problem`.
    pub fn supported(problem: Problem) -> &'static [Variant] {
        use Variant::*;
        match problem {
            Problem::Striangle => &[Oracle, BaselineQuery, BaselineUpdate, Qopt, Uopt],
            Problem::Subconn => &[Oracle, Agnostic, Promise],
            Problem::Tc | Problem::Apsp => &[Oracle, Agnostic],
            Problem::Erickson => &[Oracle, Qopt, Uopt],
        }
    }

    pub fn default_for(problem: Problem) -> Variant {
        match problem {
            Problem::Striangle | Problem::Erickson => Variant::Qopt,
            _ => Variant::Agnostic,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Object-safe replay with errors flattened to text.
pub trait DynReplay {
    fn step(&mut self, r: &Request) -> std::result::Result<Option<Answer>, String>;
    fn stats(&self) -> StepStats;
}

struct Wrap<T>(T);

impl<T: Replay> DynReplay for Wrap<T>
where
    T::Error: fmt::Display,
{
    fn step(&mut self, r: &Request) -> std::result::Result<Option<Answer>, String> {
        self.0.process(r).map_err(|e| e.to_string())
    }

    fn stats(&self) -> StepStats {
        self.0.stats()
    }
}

struct Promise(subconn::SubConn);

impl DynReplay for Promise {
    fn step(&mut self, r: &Request) -> std::result::Result<Option<Answer>, String> {
        self.0.process_promise(r).map(|a| a.map(Answer::Bool)).map_err(|e| e.to_string())
    }

    fn stats(&self) -> StepStats {
        self.0.stats()
    }
}

fn boxed<T: Replay + 'static>(t: T) -> Box<dyn DynReplay>
where
    T::Error: fmt::Display,
{
    Box::new(Wrap(t))
}

/// Preprocesses `variant` on `instance` with prediction `rhohat`; `d` is used by `promise`.
pub fn build(
    instance: &Instance,
    rhohat: &[Request],
    variant: Variant,
    d: usize,
    heap_mode: HeapMode,
) -> Result<Box<dyn DynReplay>> {
    let problem = instance.problem();
    if !Variant::supported(problem).contains(&variant) {
        bail!("variant {variant} is not available for {problem}");
    }
    Ok(match instance {
        Instance::Striangle { n, s, edges } => {
            let g = striangle::FlipGraph::from_edges(*n, edges)?;
            match variant {
                Variant::Oracle | Variant::BaselineUpdate => boxed(striangle::UpdateOptBaseline::new(g, *s)),
                Variant::BaselineQuery => boxed(striangle::QueryOptBaseline::new(g, *s)),
                Variant::Qopt => boxed(striangle::QueryOptimized::preprocess(g, *s, rhohat)?),
                _ => boxed(striangle::UpdateOptimized::preprocess(g, *s, rhohat)?),
            }
        }
        Instance::Subconn { n, edges, members } => {
            let g = subconn::Graph::from_edges(*n, edges)?;
            let s0: BTreeSet<u32> = members.iter().copied().collect();
            match variant {
                Variant::Oracle => boxed(subconn::SubConnOracle::new(g, &s0)),
                Variant::Agnostic => boxed(subconn::SubConn::agnostic(g, &s0, rhohat)?),
                _ => Box::new(Promise(subconn::SubConn::promise(g, &s0, rhohat, d)?)),
            }
        }
        Instance::Tc { n, edges } => {
            let g = reach_tc::digraph(*n, edges)?;
            match variant {
                Variant::Oracle => boxed(reach_tc::TcOracle::new(g)),
                _ => boxed(reach_tc::Tc::agnostic(g, rhohat)?),
            }
        }
        Instance::Apsp { n, edges } => {
            let g = reach_tc::DiGraph::from_edges(*n, edges)?;
            match variant {
                Variant::Oracle => boxed(apsp::ApspOracle::new(g)),
                _ => boxed(apsp::Apsp::agnostic(g, rhohat)?),
            }
        }
        Instance::Erickson { matrix } => {
            let m = erickson::Matrix::from_rows(matrix)?;
            match variant {
                Variant::Oracle => boxed(erickson::EricksonOracle::new(m)),
                Variant::Qopt => boxed(erickson::QueryOptimized::preprocess(m, rhohat, heap_mode)?),
                _ => boxed(erickson::UpdateOptimized::preprocess(m, rhohat, heap_mode)?),
            }
        }
    })
}
