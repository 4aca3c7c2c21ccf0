//! `dedup`: generate corpora, train the resolver, deduplicate, and measure.
//!
//! Exit codes are a stable contract: 0 success, 1 runtime failure,
//! 2 configuration or usage error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{CliError, RunConfig};

#[derive(Parser)]
#[command(
    name = "dedup",
    version,
    about = "Record deduplication: hierarchical matching and golden-record merge"
)]
struct Cli {
    /// JSON config file; flags override config values, config overrides
    /// built-in defaults.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Seed for corpus generation and pair sampling.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    /// Worker threads for pair matching (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Fail on the first malformed input line instead of skipping it.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic corpus with ground truth.
    Gen(commands::GenArgs),
    /// Train the match resolver on a corpus with ground truth.
    Train(commands::TrainArgs),
    /// Deduplicate a corpus into golden records.
    Dedupe(commands::DedupeArgs),
    /// Re-run the fuzzy stage across a threshold grid and score each run.
    Sweep(commands::SweepArgs),
    /// Time the full pipeline across corpus sizes.
    Bench(commands::BenchArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = RunConfig::load(cli.config.as_deref())?;
    if let Some(workers) = cli.workers.or(cfg.workers) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| CliError::runtime(format!("cannot size worker pool: {e}")))?;
    }
    let ctx = config::Context {
        cfg,
        seed: cli.seed,
        strict: cli.strict,
    };
    match cli.command {
        Command::Gen(args) => commands::gen(&ctx, args),
        Command::Train(args) => commands::train(&ctx, args),
        Command::Dedupe(args) => commands::dedupe(&ctx, args),
        Command::Sweep(args) => commands::sweep(&ctx, args),
        Command::Bench(args) => commands::bench(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
