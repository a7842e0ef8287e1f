//! Alternating parallel simulation over doubling delay guesses.

use crate::error::{Error, Result};
use crate::list::{delay_to_list, ListPrediction};
use crate::request::{Request, RequestSequence};

/// Result of one micro-step of a resumable copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// One unit of preprocessing or one online request was completed.
    Progressed,
    /// Nothing to do until more requests are fed.
    Idle,
    /// The copy detected that its list prediction is violated and stops.
    Stuck,
}

/// A copy that can be paused and resumed between micro-steps.
///
/// A micro-step is either one preprocessing time step or one online request.
pub trait ResumableAlgorithm {
    type Answer: Clone;

    /// Appends the next online request to the copy's input queue.
    fn feed(&mut self, request: Request);

    /// Runs one micro-step.
    fn step(&mut self) -> StepOutcome;

    /// Whether all preprocessing is finished.
    fn preprocessing_done(&self) -> bool;

    /// Number of online requests completed.
    fn completed(&self) -> usize;

    /// Answer of the query at 1-based time `t`, once completed.
    fn answer(&self, t: usize) -> Option<Self::Answer>;

    /// Work units spent so far; never decreases.
    fn work_spent(&self) -> u64;

    fn answer_ready(&self, t: usize) -> bool {
        self.answer(t).is_some()
    }
}

/// Final state of one spawned copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyReport {
    pub d: usize,
    pub work: u64,
    pub completed: usize,
    pub stuck: bool,
}

/// Answers and counters of a parallel simulation run.
#[derive(Debug, Clone)]
pub struct SimulationReport<A> {
    /// `(t, answer)` for every query.
    pub answers: Vec<(usize, A)>,
    pub copies: Vec<CopyReport>,
    /// Work spent building list predictions.
    pub list_work: u64,
    /// Copy work plus list work.
    pub total_work: u64,
}

/// Work-inflation factor beyond which a copy is paused.
pub const PAUSE_FACTOR: u64 = 2;

struct Running<A> {
    d: usize,
    alg: A,
    fed: usize,
    stuck: bool,
}

impl<A: ResumableAlgorithm> Running<A> {
    fn runnable(&self) -> bool {
        !self.stuck && (!self.alg.preprocessing_done() || self.alg.completed() < self.fed)
    }

    // Progress compared as completed/work without floating point.
    fn faster_than(&self, other: &Self) -> bool {
        let a = self.alg.completed() as u128 * other.alg.work_spent().max(1) as u128;
        let b = other.alg.completed() as u128 * self.alg.work_spent().max(1) as u128;
        a > b || (a == b && self.alg.work_spent() < other.alg.work_spent())
    }
}

fn next_level(d: usize) -> usize {
    if d == 0 {
        1
    } else {
        2 * d
    }
}

/// Runs copies for `d ∈ {0, 1, 2, 4, …}` built from `delay_to_list(rhohat, d)`.
///
/// The copy for the next `d` is spawned once some copy has spent `T·d` work.
/// A copy is paused while its work exceeds [`PAUSE_FACTOR`] times the work of
/// the fastest progressing copy. Each query is answered by the fastest
/// progressing copy that has its answer.
pub fn parallel_simulation<A, F>(
    mut factory: F,
    rhohat: &RequestSequence,
    online: &[Request],
) -> Result<SimulationReport<A::Answer>>
where
    A: ResumableAlgorithm,
    F: FnMut(ListPrediction) -> A,
{
    let horizon = rhohat.len();
    let mut copies: Vec<Running<A>> = Vec::new();
    let mut list_work = 0u64;
    let mut next_d = Some(0usize);
    let mut answers = Vec::new();

    let mut spawn = |copies: &mut Vec<Running<A>>, next_d: &mut Option<usize>, fed: &[Request]| {
        let d = next_d.expect("a level remains to spawn");
        let list = delay_to_list(rhohat, d);
        list_work += list.total_size() as u64;
        let mut alg = factory(list);
        for r in fed {
            alg.feed(*r);
        }
        copies.push(Running { d, alg, fed: fed.len(), stuck: false });
        *next_d = if d >= horizon { None } else { Some(next_level(d)) };
    };

    spawn(&mut copies, &mut next_d, &[]);
    for (idx, request) in online.iter().enumerate() {
        let t = idx + 1;
        for c in copies.iter_mut() {
            c.alg.feed(*request);
            c.fed += 1;
        }
        if !request.is_query() {
            continue;
        }
        loop {
            let holder = copies
                .iter()
                .filter(|c| c.alg.answer_ready(t))
                .reduce(|best, c| if c.faster_than(best) { c } else { best });
            if let Some(c) = holder {
                answers.push((t, c.alg.answer(t).expect("answer ready")));
                break;
            }
            let max_work = copies.iter().map(|c| c.alg.work_spent()).max().unwrap_or(0);
            if let Some(d) = next_d {
                if max_work >= (horizon as u64).saturating_mul(d as u64) {
                    spawn(&mut copies, &mut next_d, &online[..t]);
                    continue;
                }
            }
            let fastest = copies
                .iter()
                .filter(|c| !c.stuck)
                .reduce(|best, c| if c.faster_than(best) { c } else { best })
                .map(|c| c.alg.work_spent().max(1));
            let pick = copies
                .iter()
                .enumerate()
                .filter(|(_, c)| c.runnable())
                .filter(|(_, c)| fastest.is_none_or(|w| c.alg.work_spent() <= PAUSE_FACTOR * w))
                .min_by_key(|(_, c)| (c.alg.work_spent(), c.d))
                .or_else(|| {
                    copies
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| c.runnable())
                        .min_by_key(|(_, c)| (c.alg.work_spent(), c.d))
                })
                .map(|(i, _)| i);
            match pick {
                Some(i) => {
                    if copies[i].alg.step() == StepOutcome::Stuck {
                        copies[i].stuck = true;
                    }
                }
                None if next_d.is_some() => spawn(&mut copies, &mut next_d, &online[..t]),
                None => return Err(Error::Protocol(t)),
            }
        }
    }
    let copy_work: u64 = copies.iter().map(|c| c.alg.work_spent()).sum();
    Ok(SimulationReport {
        answers,
        copies: copies
            .iter()
            .map(|c| CopyReport { d: c.d, work: c.alg.work_spent(), completed: c.alg.completed(), stuck: c.stuck })
            .collect(),
        list_work,
        total_work: copy_work + list_work,
    })
}

/// Runs a single copy alone over the whole stream; returns its work plus
/// the list construction work, or `None` if it gets stuck.
pub fn standalone_work<A, F>(mut factory: F, rhohat: &RequestSequence, online: &[Request], d: usize) -> Option<u64>
where
    A: ResumableAlgorithm,
    F: FnMut(ListPrediction) -> A,
{
    let list = delay_to_list(rhohat, d);
    let list_work = list.total_size() as u64;
    let mut alg = factory(list);
    for r in online {
        alg.feed(*r);
    }
    loop {
        match alg.step() {
            StepOutcome::Progressed => {}
            StepOutcome::Idle => return Some(alg.work_spent() + list_work),
            StepOutcome::Stuck => return None,
        }
    }
}
