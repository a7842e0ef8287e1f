//! Pairwise reachability under directed edge flips.

use core_predictions::{
    Answer, ListPrediction, Payload, Replay, Request, ResumableAlgorithm, StepOutcome, StepStats,
};

use crate::engine::{default_ladder, predicted_touches, preprocess, Engine, Level, LevelBuilder, Op};
use crate::error::{GraphError, Result};
use crate::graph::{sssp, DiGraph};

/// Decodes `dedge u v` flips and `query u v`.
pub fn decode(r: &Request) -> Result<Op> {
    match r.payload {
        Payload::DEdge(u, v) if r.is_update() => Ok(Op::Flip((u, v, 1))),
        Payload::QueryPair(u, v) if r.is_query() => Ok(Op::Query(u, v)),
        _ => Err(GraphError::Request(r.to_string())),
    }
}

fn decode_all(rs: &[Request]) -> Result<Vec<Op>> {
    rs.iter().map(decode).collect()
}

/// Unweighted digraph from `(u, v)` pairs.
pub fn digraph(n: usize, edges: &[(u32, u32)]) -> Result<DiGraph> {
    DiGraph::from_edges(n, &edges.iter().map(|&(u, v)| (u, v, 1)).collect::<Vec<_>>())
}

/// Reachability structure over a ladder of levels.
#[derive(Debug, Clone)]
pub struct Tc {
    engine: Engine,
}

impl Tc {
    /// Levels `0, 1, 2, 4, …` up to `2n`.
    pub fn agnostic(g0: DiGraph, rhohat: &[Request]) -> Result<Self> {
        let ladder = default_ladder(g0.n());
        Self::with_ladder(g0, rhohat, &ladder)
    }

    pub fn with_ladder(g0: DiGraph, rhohat: &[Request], ladder: &[usize]) -> Result<Self> {
        let levels = preprocess(&g0, &decode_all(rhohat)?, ladder, true)?;
        Ok(Tc { engine: Engine::new(g0, levels) })
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn levels(&self) -> &[Level] {
        self.engine.levels()
    }

    pub fn query(&mut self, u: u32, v: u32) -> bool {
        self.engine.query(u, v).is_some()
    }
}

impl Replay for Tc {
    type Error = GraphError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        Ok(self.engine.process(decode(r)?)?.map(|d| Answer::Bool(d.is_some())))
    }

    fn stats(&self) -> StepStats {
        self.engine.stats()
    }
}

/// Breadth-first recomputation on the current digraph.
#[derive(Debug, Clone)]
pub struct TcOracle {
    g: DiGraph,
}

impl TcOracle {
    pub fn new(g0: DiGraph) -> Self {
        TcOracle { g: g0 }
    }

    pub fn graph(&self) -> &DiGraph {
        &self.g
    }
}

impl Replay for TcOracle {
    type Error = GraphError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Op::Flip(e) => self.g.flip(e).map(|_| None),
            Op::Query(u, v) => {
                self.g.check_vertex(u)?;
                self.g.check_vertex(v)?;
                let (dist, _) = sssp(&self.g.adjacency(), u, true);
                Ok(Some(Answer::Bool(dist[v as usize].is_some())))
            }
        }
    }

    fn stats(&self) -> StepStats {
        StepStats::default()
    }
}

/// Single-level copy for the parallel simulation.
///
/// The radius is `(L − 1) / 2` for list bound `L`. Preprocessing advances one
/// time step per micro-step. Online it stops when a request is missing from
/// its list slot; otherwise it answers exactly, falling back to a full search
/// when its level does not qualify.
#[derive(Debug)]
pub struct TcCopy {
    list: ListPrediction,
    g0: DiGraph,
    builder: Option<LevelBuilder>,
    engine: Option<Engine>,
    input: Vec<Request>,
    answers: Vec<Option<bool>>,
    work: u64,
}

impl TcCopy {
    pub fn new(g0: DiGraph, rhohat: &[Request], list: ListPrediction) -> Result<Self> {
        let d = list.bound.saturating_sub(1) / 2;
        let steps = predicted_touches(&g0, &decode_all(rhohat)?)?;
        let builder = LevelBuilder::new(&g0, &steps, d, true);
        Ok(TcCopy { list, g0, builder: Some(builder), engine: None, input: Vec::new(), answers: Vec::new(), work: 0 })
    }

    pub fn d(&self) -> usize {
        self.list.bound.saturating_sub(1) / 2
    }
}

impl ResumableAlgorithm for TcCopy {
    type Answer = bool;

    fn feed(&mut self, request: Request) {
        self.input.push(request);
    }

    fn step(&mut self) -> StepOutcome {
        if let Some(b) = self.builder.as_mut() {
            self.work += b.step();
            if b.done() {
                let level = self.builder.take().expect("builder present").finish();
                self.engine = Some(Engine::new(self.g0.clone(), vec![level]));
            }
            return StepOutcome::Progressed;
        }
        let engine = self.engine.as_mut().expect("engine built after preprocessing");
        let t = self.answers.len() + 1;
        let Some(r) = self.input.get(t - 1).copied() else { return StepOutcome::Idle };
        if !self.list.slot(t).is_some_and(|s| s.contains(&r)) {
            return StepOutcome::Stuck;
        }
        match decode(&r).and_then(|op| engine.process(op)) {
            Ok(out) => {
                self.work += engine.stats().probes + 1;
                self.answers.push(out.map(|d| d.is_some()));
                StepOutcome::Progressed
            }
            Err(_) => StepOutcome::Stuck,
        }
    }

    fn preprocessing_done(&self) -> bool {
        self.builder.is_none()
    }

    fn completed(&self) -> usize {
        self.answers.len()
    }

    fn answer(&self, t: usize) -> Option<bool> {
        self.answers.get(t.checked_sub(1)?).copied().flatten()
    }

    fn work_spent(&self) -> u64 {
        self.work
    }
}
