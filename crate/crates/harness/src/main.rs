use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adversary::{Problem, WorkloadPair};
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use erickson::HeapMode;
use harness::{
    bench, generate, run, write_generated, BenchRow, BenchSpec, CheckMode, GenKind, GenSpec, RunConfig, Variant,
    SEED_ENV,
};

#[derive(Parser)]
#[command(name = "harness", version, about = "Generate workloads, replay them against oracles, report work counters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a workload directory.
    Gen {
        kind: GenKind,
        #[command(flatten)]
        gen: GenArgs,
        /// Rounds for the OuMv-based families (default: n).
        #[arg(long)]
        rounds: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replay a workload through one variant with oracle checks.
    Run {
        /// Workload directory; mutually exclusive with the generator flags.
        #[arg(conflicts_with_all = ["problem", "n", "t", "d", "k"], required_unless_present = "problem")]
        dir: Option<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        variant: Option<Variant>,
        #[arg(long, value_enum, default_value_t = CheckMode::EveryStep)]
        check: CheckMode,
        /// Rebuild Erickson heaps per step instead of materializing them per time step.
        #[arg(long)]
        lazy: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check certificate, prefix containment and stored answers.
    Verify { dir: PathBuf },
    /// Sweep the delay over certified workloads.
    Bench {
        #[arg(long, value_enum)]
        problem: Problem,
        /// Variants to run (default: all supported).
        #[arg(long, value_delimiter = ',')]
        variants: Vec<Variant>,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        t: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,4,8")]
        ds: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        lazy: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    problem: Option<Problem>,
    #[arg(long)]
    n: Option<usize>,
    /// Sequence length.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    seed: u64,
}

impl GenArgs {
    fn spec(&self, kind: GenKind, rounds: Option<usize>) -> GenSpec {
        GenSpec {
            kind,
            problem: self.problem.unwrap_or(Problem::Striangle),
            n: self.n.unwrap_or(8),
            len: self.t.unwrap_or(100),
            d: self.d.unwrap_or(0),
            k: self.k.unwrap_or(0),
            rounds,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Mismatch(String),
    BadInput(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::BadInput(e)
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn heap_mode(lazy: bool) -> HeapMode {
    if lazy {
        HeapMode::Lazy
    } else {
        HeapMode::Full
    }
}

fn load(dir: &Path) -> Result<WorkloadPair> {
    WorkloadPair::read_dir(dir).with_context(|| format!("reading workload {}", dir.display()))
}

fn write_bench(rows: &[BenchRow], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => serde_json::to_writer_pretty(&mut *out, rows)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.cmd {
        Cmd::Gen { kind, gen, rounds, out } => {
            let g = generate(&gen.spec(kind, rounds))?;
            write_generated(&g, &out)?;
        }
        Cmd::Run { dir, gen, variant, check, lazy, format, out } => {
            let pair = match dir {
                Some(dir) => load(&dir)?,
                None => generate(&gen.spec(GenKind::Perturb, None))?.pair,
            };
            let variant = variant.unwrap_or_else(|| Variant::default_for(pair.instance.problem()));
            let report = run(&pair, RunConfig { variant, check, heap_mode: heap_mode(lazy) })?;
            let mut w = sink(&out)?;
            match format {
                Format::Csv => report.write_csv(&mut w)?,
                Format::Json => serde_json::to_writer_pretty(&mut w, &report).map_err(anyhow::Error::from)?,
            }
            w.flush().map_err(anyhow::Error::from)?;
            eprintln!(
                "{} {}: {} requests, {} queries, {} mismatches, probes {}, heap ops {}, peak error set {}",
                report.problem,
                report.variant,
                report.totals.requests,
                report.totals.queries,
                report.totals.mismatches,
                report.totals.probes,
                report.totals.heap_ops,
                report.totals.peak_errset
            );
            if !report.ok() {
                return Err(Failure::Mismatch(format!("{} answer mismatches", report.totals.mismatches)));
            }
        }
        Cmd::Verify { dir } => {
            let pair = load(&dir)?;
            pair.verify().map_err(|e| Failure::Mismatch(e.to_string()))?;
            println!("ok");
        }
        Cmd::Bench { problem, variants, n, t, ds, k, trials, seed, jobs, lazy, format, out } => {
            let variants = if variants.is_empty() { Variant::supported(problem).to_vec() } else { variants };
            let spec = BenchSpec {
                problem,
                variants,
                n,
                len: t,
                ds,
                k,
                trials,
                seed,
                jobs: jobs.max(1),
                heap_mode: heap_mode(lazy),
            };
            let rows = bench(&spec)?;
            write_bench(&rows, format, &mut *sink(&out)?)?;
            let bad: usize = rows.iter().map(|r| r.mismatches).sum();
            if bad > 0 {
                return Err(Failure::Mismatch(format!("{bad} answer mismatches")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::BadInput(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
