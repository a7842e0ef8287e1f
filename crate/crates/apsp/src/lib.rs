//! Exact shortest-path distance queries on a weighted digraph under edge
//! flips. Each flip toggles one fixed-weight edge; parallel edges count with
//! their minimum weight. Distances use `None` for unreachable pairs.

use core_predictions::{Answer, Payload, Replay, Request, StepStats};
use reach_tc::{default_ladder, preprocess, sssp, DiGraph, Dist, Engine, GraphError, Level, Op, Result};

pub use reach_tc::{Edge, Qualification};

/// Decodes `wedge u v w` flips and `query u v`.
pub fn decode(r: &Request) -> Result<Op> {
    match r.payload {
        Payload::WEdge(u, v, w) if r.is_update() => Ok(Op::Flip((u, v, w))),
        Payload::QueryPair(u, v) if r.is_query() => Ok(Op::Query(u, v)),
        _ => Err(GraphError::Request(r.to_string())),
    }
}

fn decode_all(rs: &[Request]) -> Result<Vec<Op>> {
    rs.iter().map(decode).collect()
}

/// Distance structure over a ladder of levels.
#[derive(Debug, Clone)]
pub struct Apsp {
    engine: Engine,
}

impl Apsp {
    /// Levels `0, 1, 2, 4, …` up to `2n`.
    pub fn agnostic(g0: DiGraph, rhohat: &[Request]) -> Result<Self> {
        let ladder = default_ladder(g0.n());
        Self::with_ladder(g0, rhohat, &ladder)
    }

    pub fn with_ladder(g0: DiGraph, rhohat: &[Request], ladder: &[usize]) -> Result<Self> {
        let levels = preprocess(&g0, &decode_all(rhohat)?, ladder, false)?;
        Ok(Apsp { engine: Engine::new(g0, levels) })
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn levels(&self) -> &[Level] {
        self.engine.levels()
    }

    pub fn query(&mut self, u: u32, v: u32) -> Dist {
        self.engine.query(u, v)
    }
}

impl Replay for Apsp {
    type Error = GraphError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        Ok(self.engine.process(decode(r)?)?.map(Answer::Dist))
    }

    fn stats(&self) -> StepStats {
        self.engine.stats()
    }
}

/// Dijkstra from scratch on the current graph.
#[derive(Debug, Clone)]
pub struct ApspOracle {
    g: DiGraph,
}

impl ApspOracle {
    pub fn new(g0: DiGraph) -> Self {
        ApspOracle { g: g0 }
    }

    pub fn graph(&self) -> &DiGraph {
        &self.g
    }
}

impl Replay for ApspOracle {
    type Error = GraphError;

    fn process(&mut self, r: &Request) -> Result<Option<Answer>> {
        match decode(r)? {
            Op::Flip(e) => self.g.flip(e).map(|_| None),
            Op::Query(u, v) => {
                self.g.check_vertex(u)?;
                self.g.check_vertex(v)?;
                let (dist, _) = sssp(&self.g.adjacency(), u, false);
                Ok(Some(Answer::Dist(dist[v as usize])))
            }
        }
    }

    fn stats(&self) -> StepStats {
        StepStats::default()
    }
}
