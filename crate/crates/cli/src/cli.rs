use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use weightmatch::genmodel::{gen_solid, gen_weighted};
use weightmatch::oracle::{oracle_wpm, oracle_wtm};
use weightmatch::{SearchReport, Threshold, WpmQuery, WtmQuery};

use crate::bench::{run_suite, BenchConfig, Suite};
use crate::format::{parse_plain, parse_weighted, serialize_plain, serialize_weighted, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "weightmatch",
    version,
    about = "Exact pattern matching on weighted strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weighted pattern against a plain text.
    Wpm(SearchArgs),
    /// Plain pattern against a weighted text.
    Wtm(SearchArgs),
    /// Brute-force reference results in the same output format.
    Oracle {
        #[command(subcommand)]
        problem: OracleCommand,
    },
    /// Generate random inputs.
    Gen {
        #[command(subcommand)]
        kind: GenCommand,
    },
    /// Run a benchmark suite and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub text: PathBuf,
    /// The threshold is 1/z; z must be at least 2.
    #[arg(long)]
    pub z: f64,
    /// Print work counters to stderr as key=value lines.
    #[arg(long)]
    pub stats: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub text: PathBuf,
    #[arg(long)]
    pub z: f64,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Wpm(OracleArgs),
    Wtm(OracleArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// A weighted string under the uniform-subset model.
    Weighted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(long)]
        seed: u64,
        /// Probability that a position is a single certain letter.
        #[arg(long, default_value_t = 0.0)]
        solid_bias: f64,
    },
    /// A uniform plain string.
    Solid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Sublinearity,
    Occurrences,
    Lcp,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seeds: Option<u64>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub sigma: Option<usize>,
    #[arg(long)]
    pub z: Option<f64>,
    #[arg(long)]
    pub solid_bias: Option<f64>,
    /// Comma-separated pattern lengths.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 3,
            _ => 2,
        }
    }
}

impl From<weightmatch::Error> for CliError {
    fn from(e: weightmatch::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parse_with<T>(path: &Path, f: fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    f(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn write_positions(out: &mut dyn Write, positions: &[usize]) -> io::Result<()> {
    for p in positions {
        writeln!(out, "{p}")?;
    }
    Ok(())
}

fn write_stats(err: &mut dyn Write, r: &SearchReport) -> io::Result<()> {
    writeln!(err, "chars_inspected={}", r.counters.chars_inspected)?;
    writeln!(err, "candidates={}", r.counters.candidates)?;
    writeln!(err, "full_verifications={}", r.counters.full_verifications)?;
    writeln!(err, "gate_satisfied={}", r.gate_satisfied)?;
    writeln!(err, "used_fallback={}", r.used_fallback)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Wpm(a) => {
            let t = Threshold::new(a.z)?;
            let x = parse_with(&a.pattern, parse_weighted)?;
            let y = parse_with(&a.text, parse_plain)?;
            let r = WpmQuery::new(&x, t)?.search_parallel(&y, a.threads)?;
            write_positions(out, &r.positions)?;
            if a.stats {
                write_stats(err, &r)?;
            }
        }
        Command::Wtm(a) => {
            let t = Threshold::new(a.z)?;
            let x = parse_with(&a.pattern, parse_plain)?;
            let y = parse_with(&a.text, parse_weighted)?;
            if x.alphabet() != y.alphabet() {
                return Err(weightmatch::Error::AlphabetMismatch.into());
            }
            let r = WtmQuery::new(&x, t)?.search_parallel(&y, a.threads)?;
            write_positions(out, &r.positions)?;
            if a.stats {
                write_stats(err, &r)?;
            }
        }
        Command::Oracle { problem } => {
            let positions = match problem {
                OracleCommand::Wpm(a) => {
                    let t = Threshold::new(a.z)?;
                    let x = parse_with(&a.pattern, parse_weighted)?;
                    let y = parse_with(&a.text, parse_plain)?;
                    check_shapes(x.alphabet() == y.alphabet(), x.len(), y.len())?;
                    oracle_wpm(&x, y.letters(), t)
                }
                OracleCommand::Wtm(a) => {
                    let t = Threshold::new(a.z)?;
                    let x = parse_with(&a.pattern, parse_plain)?;
                    let y = parse_with(&a.text, parse_weighted)?;
                    check_shapes(x.alphabet() == y.alphabet(), x.len(), y.len())?;
                    oracle_wtm(x.letters(), &y, t)
                }
            };
            write_positions(out, &positions)?;
        }
        Command::Gen { kind } => match kind {
            GenCommand::Weighted {
                n,
                sigma,
                seed,
                solid_bias,
            } => {
                if !(0.0..=1.0).contains(solid_bias) {
                    return Err(CliError::Usage(format!(
                        "--solid-bias must lie in [0, 1], got {solid_bias}"
                    )));
                }
                let w = gen_weighted(*n, *sigma, *seed, *solid_bias)?;
                out.write_all(serialize_weighted(&w).as_bytes())?;
            }
            GenCommand::Solid { n, sigma, seed } => {
                let s = gen_solid(*n, *sigma, *seed)?;
                out.write_all(serialize_plain(&s).as_bytes())?;
            }
        },
        Command::Bench(a) => {
            let mut cfg = BenchConfig::default();
            cfg.n = a.n.unwrap_or(cfg.n);
            cfg.seeds = a.seeds.unwrap_or(cfg.seeds);
            cfg.trials = a.trials.unwrap_or(cfg.trials);
            cfg.seed = a.seed.unwrap_or(cfg.seed);
            cfg.sigma = a.sigma.unwrap_or(cfg.sigma);
            cfg.z = a.z.unwrap_or(cfg.z);
            cfg.solid_bias = a.solid_bias.unwrap_or(cfg.solid_bias);
            if let Some(l) = &a.lengths {
                cfg.lengths = l.clone();
            }
            if cfg.lengths.iter().any(|&m| m == 0 || m >= cfg.n) || cfg.trials == 0 {
                return Err(CliError::Usage(
                    "pattern lengths must lie in 1..n and trials must be positive".into(),
                ));
            }
            let suite = match a.suite {
                SuiteArg::Sublinearity => Suite::Sublinearity,
                SuiteArg::Occurrences => Suite::Occurrences,
                SuiteArg::Lcp => Suite::Lcp,
            };
            out.write_all(run_suite(suite, &cfg)?.as_bytes())?;
        }
    }
    Ok(())
}

fn check_shapes(same_alphabet: bool, m: usize, n: usize) -> Result<(), CliError> {
    if !same_alphabet {
        return Err(weightmatch::Error::AlphabetMismatch.into());
    }
    if m >= n {
        return Err(weightmatch::Error::PatternLongerThanText { m, n }.into());
    }
    Ok(())
}
