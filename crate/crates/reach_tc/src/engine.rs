//! Window levels over predicted edge flips, shortcut tables and the online
//! structure that answers distance queries on a small residual graph.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use core_predictions::{levels, StepStats, Touch, WindowLevel};

use crate::error::Result;
use crate::graph::{adjacency, sssp, DiGraph, Dist, Edge};

/// Decoded request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Flip(Edge),
    Query(u32, u32),
}

/// Element tracked by the window levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Elem {
    Vertex(u32),
    Edge(Edge),
}

impl Elem {
    fn vertices(self) -> impl Iterator<Item = u32> {
        let (a, b) = match self {
            Elem::Vertex(v) => (v, None),
            Elem::Edge((u, v, _)) => (u, Some(v)),
        };
        std::iter::once(a).chain(b)
    }
}

/// Replays the prediction from `g0` and records each request's effect.
pub fn predicted_touches(g0: &DiGraph, rhohat: &[Op]) -> Result<Vec<Touch<Elem>>> {
    let mut g = g0.clone();
    rhohat
        .iter()
        .map(|op| match *op {
            Op::Flip(e) => Ok(Touch { set: vec![(Elem::Edge(e), g.flip(e)?)], read: vec![] }),
            Op::Query(u, v) => {
                g.check_vertex(u)?;
                g.check_vertex(v)?;
                Ok(Touch { set: vec![], read: vec![Elem::Vertex(u), Elem::Vertex(v)] })
            }
        })
        .collect()
}

type Table = BTreeMap<u32, Arc<Vec<Dist>>>;

/// Permanent edges and active-vertex multiplicities at one time.
#[derive(Debug, Clone)]
struct Sets {
    perm: BTreeSet<Edge>,
    active: Vec<u32>,
}

impl Sets {
    fn new(n: usize, window: &WindowLevel<Elem>) -> Self {
        let perm = window
            .initial_permanent
            .iter()
            .filter_map(|e| if let Elem::Edge(e) = e { Some(*e) } else { None })
            .collect();
        let mut active = vec![0; n];
        for e in &window.initial_active {
            for v in e.vertices() {
                active[v as usize] += 1;
            }
        }
        Sets { perm, active }
    }

    /// Applies the events of step `t`; returns whether `P` changed.
    fn apply(&mut self, window: &WindowLevel<Elem>, t: usize) -> bool {
        let mut changed = false;
        for &(e, on) in &window.permanent_events[t] {
            if let Elem::Edge(e) = e {
                changed = true;
                if on {
                    self.perm.insert(e);
                } else {
                    self.perm.remove(&e);
                }
            }
        }
        for &(e, on) in &window.active_events[t] {
            for v in e.vertices() {
                if on {
                    self.active[v as usize] += 1;
                } else {
                    self.active[v as usize] -= 1;
                }
            }
        }
        changed
    }

    fn is_active(&self, v: u32) -> bool {
        self.active[v as usize] > 0
    }
}

/// Tables of one radius, built one time step at a time.
#[derive(Debug, Clone)]
pub struct LevelBuilder {
    n: usize,
    unit: bool,
    window: WindowLevel<Elem>,
    sets: Sets,
    tables: Vec<Table>,
    work: u64,
}

impl LevelBuilder {
    pub fn new(g0: &DiGraph, steps: &[Touch<Elem>], d: usize, unit: bool) -> Self {
        let initial: BTreeSet<Elem> = g0.edges().iter().map(|&e| Elem::Edge(e)).collect();
        let window = WindowLevel::build(&initial, steps, d);
        let sets = Sets::new(g0.n(), &window);
        LevelBuilder { n: g0.n(), unit, window, sets, tables: Vec::new(), work: 0 }
    }

    pub fn done(&self) -> bool {
        self.tables.len() > self.window.horizon
    }

    /// Fills the tables of the next time step; returns the work spent.
    pub fn step(&mut self) -> u64 {
        let t = self.tables.len();
        let changed = t > 0 && self.sets.apply(&self.window, t);
        let adj = adjacency(self.n, self.sets.perm.iter());
        let prev = self.tables.last();
        let mut work = 1;
        let row: Table = (0..self.n as u32)
            .filter(|&a| self.sets.is_active(a))
            .map(|a| {
                let reuse = if changed { None } else { prev.and_then(|p| p.get(&a)) };
                let dist = match reuse {
                    Some(d) => Arc::clone(d),
                    None => {
                        let (d, settled) = sssp(&adj, a, self.unit);
                        work += settled as u64;
                        Arc::new(d)
                    }
                };
                (a, dist)
            })
            .collect();
        self.tables.push(row);
        self.work += work;
        work
    }

    pub fn finish(mut self) -> Level {
        while !self.done() {
            self.step();
        }
        Level { window: self.window, tables: self.tables, work: self.work }
    }
}

/// Shortcut distances `D(a, b, t)` in `(V, P_t)` for active `a`.
#[derive(Debug, Clone)]
pub struct Level {
    pub window: WindowLevel<Elem>,
    tables: Vec<Table>,
    /// Settled vertices while building the tables.
    pub work: u64,
}

impl Level {
    pub fn build(g0: &DiGraph, steps: &[Touch<Elem>], d: usize, unit: bool) -> Self {
        LevelBuilder::new(g0, steps, d, unit).finish()
    }

    pub fn d(&self) -> usize {
        self.window.d
    }

    /// `D(a, b, t)`; outer `None` when `a` has no table at `t`.
    pub fn dist(&self, a: u32, b: u32, t: usize) -> Option<Dist> {
        let t = t.min(self.window.horizon);
        self.tables[t].get(&a).map(|row| row[b as usize])
    }

    /// Vertices with a table at `t`.
    pub fn active(&self, t: usize) -> impl Iterator<Item = u32> + '_ {
        self.tables[t.min(self.window.horizon)].keys().copied()
    }
}

/// Builds every level of the ladder for `n` vertices.
pub fn preprocess(g0: &DiGraph, rhohat: &[Op], ladder: &[usize], unit: bool) -> Result<Vec<Level>> {
    let steps = predicted_touches(g0, rhohat)?;
    Ok(ladder.iter().map(|&d| Level::build(g0, &steps, d, unit)).collect())
}

/// Default ladder.
pub fn default_ladder(n: usize) -> Vec<usize> {
    levels(n)
}

/// Runtime view of one level: `F = E ∖ P` and `|P ∖ E|`.
#[derive(Debug, Clone)]
struct LevelState {
    sets: Sets,
    f: BTreeSet<Edge>,
    missing: usize,
}

/// Outcome of the level qualification test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qualification {
    Ok,
    /// Some permanent edge is absent from `E`.
    Missing,
    /// `|F| > 2d + 1`.
    Large,
    /// Some vertex of `V(F) ∪ {u, v}` has no table.
    Inactive,
}

/// Online structure over a fixed set of levels.
#[derive(Debug, Clone)]
pub struct Engine {
    g: DiGraph,
    levels: Vec<Level>,
    states: Vec<LevelState>,
    t: usize,
    stats: StepStats,
}

impl Engine {
    pub fn new(g0: DiGraph, levels: Vec<Level>) -> Self {
        let states = levels
            .iter()
            .map(|l| {
                let sets = Sets::new(g0.n(), &l.window);
                let f = g0.edges().difference(&sets.perm).copied().collect();
                let missing = sets.perm.difference(g0.edges()).count();
                LevelState { sets, f, missing }
            })
            .collect();
        Engine { g: g0, levels, states, t: 0, stats: StepStats::default() }
    }

    pub fn graph(&self) -> &DiGraph {
        &self.g
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn time(&self) -> usize {
        self.t
    }

    pub fn stats(&self) -> StepStats {
        self.stats
    }

    /// `F` at level index `i`.
    pub fn residual(&self, i: usize) -> &BTreeSet<Edge> {
        &self.states[i].f
    }

    /// Whether `P ⊆ E` at level index `i`.
    pub fn permanent_in_e(&self, i: usize) -> bool {
        self.states[i].missing == 0
    }

    fn advance(&mut self) {
        self.t += 1;
        let t = self.t;
        for (st, lvl) in self.states.iter_mut().zip(&self.levels) {
            if t > lvl.window.horizon {
                continue;
            }
            for &(e, on) in &lvl.window.permanent_events[t] {
                let Elem::Edge(e) = e else { continue };
                match (self.g.has(&e), on) {
                    (true, true) => {
                        st.f.remove(&e);
                    }
                    (true, false) => {
                        st.f.insert(e);
                    }
                    (false, true) => st.missing += 1,
                    (false, false) => st.missing -= 1,
                }
            }
            st.sets.apply(&lvl.window, t);
        }
    }

    /// Applies the next request; returns the distance for queries.
    pub fn process(&mut self, op: Op) -> Result<Option<Dist>> {
        match op {
            Op::Flip(e) => {
                let on = self.g.flip(e)?;
                for st in &mut self.states {
                    if st.sets.perm.contains(&e) {
                        if on {
                            st.missing -= 1;
                        } else {
                            st.missing += 1;
                        }
                    } else if on {
                        st.f.insert(e);
                    } else {
                        st.f.remove(&e);
                    }
                }
                self.advance();
                self.stats = StepStats { probes: self.states.len() as u64, ..Default::default() };
                Ok(None)
            }
            Op::Query(u, v) => {
                self.g.check_vertex(u)?;
                self.g.check_vertex(v)?;
                self.advance();
                Ok(Some(self.query(u, v)))
            }
        }
    }

    pub fn qualification(&self, i: usize, u: u32, v: u32) -> Qualification {
        let st = &self.states[i];
        let d = self.levels[i].d();
        if st.missing > 0 {
            Qualification::Missing
        } else if st.f.len() > 2 * d + 1 {
            Qualification::Large
        } else if st
            .f
            .iter()
            .flat_map(|&(a, b, _)| [a, b])
            .chain([u, v])
            .any(|x| !st.sets.is_active(x))
        {
            Qualification::Inactive
        } else {
            Qualification::Ok
        }
    }

    /// Index of the smallest qualifying level.
    pub fn dstar_index(&self, u: u32, v: u32) -> Option<usize> {
        (0..self.levels.len()).find(|&i| self.qualification(i, u, v) == Qualification::Ok)
    }

    /// Distance from `u` to `v` at the current time.
    pub fn query(&mut self, u: u32, v: u32) -> Dist {
        match self.dstar_index(u, v) {
            Some(i) => {
                let (dist, hv) = self.shortcut_search(i, u, v);
                self.stats = StepStats {
                    probes: hv as u64,
                    dstar: Some(self.levels[i].d()),
                    errset: self.states[i].f.len(),
                    ..Default::default()
                };
                dist
            }
            None => {
                let (dist, settled) = sssp(&self.g.adjacency(), u, false);
                self.stats = StepStats { probes: settled.max(1) as u64, ..Default::default() };
                dist[v as usize]
            }
        }
    }

    /// Dijkstra on `H = V(F) ∪ {u, v}` with current edges and shortcuts.
    fn shortcut_search(&self, i: usize, u: u32, v: u32) -> (Dist, usize) {
        let lvl = &self.levels[i];
        let t = self.t;
        let h: Vec<u32> = self.states[i]
            .f
            .iter()
            .flat_map(|&(a, b, _)| [a, b])
            .chain([u, v])
            .collect::<BTreeSet<u32>>()
            .into_iter()
            .collect();
        let index: BTreeMap<u32, u32> = h.iter().enumerate().map(|(k, &x)| (x, k as u32)).collect();
        let inside: Vec<Edge> = self
            .g
            .edges()
            .iter()
            .filter(|(a, b, _)| index.contains_key(a) && index.contains_key(b))
            .map(|&(a, b, w)| (index[&a], index[&b], w))
            .collect();
        let mut adj = adjacency(h.len(), inside.iter());
        for (ka, &a) in h.iter().enumerate() {
            for (kb, &b) in h.iter().enumerate() {
                if ka == kb {
                    continue;
                }
                let Some(w) = lvl.dist(a, b, t).expect("every vertex of H has a table") else { continue };
                match adj[ka].iter_mut().find(|(x, _)| *x == kb as u32) {
                    Some(slot) => slot.1 = slot.1.min(w),
                    None => adj[ka].push((kb as u32, w)),
                }
            }
        }
        let (dist, _) = sssp(&adj, index[&u], false);
        (dist[index[&v] as usize], h.len())
    }
}
