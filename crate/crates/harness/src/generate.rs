//! Generator dispatch for the `gen` and `bench` subcommands.

use std::path::Path;

use adversary::{
    certified_workload, gen_2list_striangle, gen_striangle_oumv, random_oumv, striangle_rho_star, Problem,
    WorkloadPair,
};
use anyhow::{Context, Result};
use clap::ValueEnum;
use core_predictions::DelayCertificate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Workload family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Random instance and prediction with a certified (d, k) perturbation.
    Perturb,
    /// OuMv encoded into #s-triangle with the identity prediction.
    StriangleOumv,
    /// Padded OuMv encoding against the repeated universal block.
    RhoStar,
    /// OuMv encoding with a junk vertex and a generic two-element list per step.
    TwoList,
}

/// Generator parameters.
#[derive(Debug, Clone, Copy)]
pub struct GenSpec {
    pub kind: GenKind,
    pub problem: Problem,
    pub n: usize,
    pub len: usize,
    pub d: usize,
    pub k: usize,
    pub rounds: Option<usize>,
    pub seed: u64,
}

/// Workload plus auxiliary files written next to it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub pair: WorkloadPair,
    pub extras: Vec<(&'static str, String)>,
}

/// SplitMix64 step, used to derive independent per-trial seeds.
pub fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let rounds = spec.rounds.unwrap_or(spec.n);
    let json = |x: &omv::OuMvInstance| serde_json::to_string_pretty(x).map(|s| s + "\n");
    Ok(match spec.kind {
        GenKind::Perturb => Generated {
            pair: certified_workload(spec.problem, spec.n, spec.len, spec.d, spec.k, &mut rng)?,
            extras: Vec::new(),
        },
        GenKind::StriangleOumv => {
            let inst = random_oumv(spec.n, spec.n, rounds, &mut rng)?;
            Generated { pair: gen_striangle_oumv(&inst)?, extras: vec![("oumv.json", json(&inst)?)] }
        }
        GenKind::RhoStar => {
            let inst = random_oumv(spec.n, spec.n, rounds, &mut rng)?;
            let w = striangle_rho_star(&inst)?;
            Generated { pair: w.pair, extras: vec![("oumv.json", json(&inst)?)] }
        }
        GenKind::TwoList => {
            let inst = random_oumv(spec.n, spec.n, rounds, &mut rng)?;
            let w = gen_2list_striangle(&inst);
            let cert = DelayCertificate::from_matching(&w.rho, &w.rho).expect("identical sequences");
            let list = serde_json::to_string_pretty(&w.list)? + "\n";
            let pair = WorkloadPair::new(w.instance, w.rho.clone(), w.rho, cert)?;
            Generated { pair, extras: vec![("oumv.json", json(&inst)?), ("list.json", list)] }
        }
    })
}

pub fn write_generated(g: &Generated, dir: &Path) -> Result<()> {
    g.pair.write_dir(dir)?;
    for (name, text) in &g.extras {
        let path = dir.join(name);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
