//! The five subcommands: gen, train, dedupe, sweep, bench.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::Args;

use dedup_core::eval::{
    benchmark, render_report_table, render_sweep_table, reports_to_csv, sweep_to_csv,
    threshold_sweep, DEFAULT_SWEEP_GRID,
};
use dedup_core::io;
use dedup_core::ml::LogisticModel;
use dedup_core::pipeline::{run_pipeline, BlockingStrategy};
use dedup_core::record::{normalize_record, CanonicalRecord};
use dedup_core::synth::{generate_corpus, make_training_pairs};
use dedup_core::{train_with_history, DedupError};

use crate::config::{
    output_error, require_file, required_path, CliError, Context,
};

fn parse_blocking(s: &str) -> Result<BlockingStrategy, String> {
    match s {
        "name_prefix" => Ok(BlockingStrategy::NamePrefix),
        "phone_prefix" => Ok(BlockingStrategy::PhonePrefix),
        "ssn_exact" => Ok(BlockingStrategy::SsnExact),
        "composite" => Ok(BlockingStrategy::Composite),
        other => Err(format!(
            "unknown blocking strategy '{other}' (expected name_prefix, phone_prefix, ssn_exact, or composite)"
        )),
    }
}

/// Read a corpus file, apply the malformed-line policy, and normalize.
fn load_corpus(
    path: &Path,
    strict: bool,
    what: &str,
) -> Result<Vec<CanonicalRecord>, CliError> {
    require_file(path, what)?;
    let read = io::read_corpus(path)?;
    let raws = if strict {
        read.into_strict()?
    } else {
        if !read.skipped.is_empty() {
            for (line, message) in read.skipped.iter().take(5) {
                eprintln!("warning: {}:{line}: {message}", path.display());
            }
            eprintln!(
                "warning: skipped {} malformed line(s) in {}",
                read.skipped.len(),
                path.display()
            );
        }
        read.records
    };
    let records = raws
        .iter()
        .map(normalize_record)
        .collect::<dedup_core::Result<Vec<_>>>()?;
    Ok(records)
}

/// Load the resolver model when the ML stage is on; `None` otherwise.
fn load_model(
    path: Option<PathBuf>,
    ml_enabled: bool,
) -> Result<Option<LogisticModel>, CliError> {
    if !ml_enabled {
        return Ok(None);
    }
    let Some(path) = path else {
        return Err(CliError::usage(
            "--model is required while the resolver stage is enabled; pass --no-ml to run without it",
        ));
    };
    require_file(&path, "model file")?;
    match LogisticModel::load(&path) {
        Ok(model) => Ok(Some(model)),
        Err(DedupError::Json(e)) => Err(CliError::usage(format!(
            "invalid model file {}: {e}",
            path.display()
        ))),
        Err(other) => Err(other.into()),
    }
}

fn ensure_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| {
        CliError::usage(format!("cannot create output directory {}: {e}", path.display()))
    })
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct GenArgs {
    /// Corpus output file (.csv or .jsonl).
    #[arg(long, value_name = "PATH")]
    out_corpus: Option<PathBuf>,

    /// Ground-truth output file (JSON-lines).
    #[arg(long, value_name = "PATH")]
    out_truth: Option<PathBuf>,

    /// Number of entities to generate.
    #[arg(long, value_name = "N")]
    entities: Option<u64>,
}

pub fn gen(ctx: &Context, args: GenArgs) -> Result<(), CliError> {
    let paths = ctx.cfg.paths();
    let corpus_path = required_path(args.out_corpus, paths.corpus, "--out-corpus")?;
    let truth_path = required_path(args.out_truth, paths.truth, "--out-truth")?;
    let mut spec = ctx.corpus_spec();
    if let Some(n) = args.entities {
        spec.n_entities = n;
    }
    let (records, truth) = generate_corpus(&spec)?;
    io::write_corpus(&corpus_path, &records).map_err(output_error(&corpus_path))?;
    io::write_truth(&truth_path, &truth).map_err(output_error(&truth_path))?;
    let entities: BTreeSet<&str> = truth
        .record_to_entity
        .values()
        .map(String::as_str)
        .collect();
    println!(
        "wrote {} records ({} entities + {} duplicates) to {}",
        records.len(),
        entities.len(),
        records.len() - entities.len(),
        corpus_path.display()
    );
    println!("wrote ground truth to {}", truth_path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct TrainArgs {
    /// Training corpus file.
    #[arg(long, value_name = "PATH")]
    corpus: Option<PathBuf>,

    /// Ground-truth file for the corpus.
    #[arg(long, value_name = "PATH")]
    truth: Option<PathBuf>,

    /// Where to write the trained model JSON.
    #[arg(long, value_name = "PATH")]
    model_out: Option<PathBuf>,

    /// Labeled pairs to sample.
    #[arg(long, value_name = "N")]
    pairs: Option<usize>,

    /// Fraction of sampled pairs that are true duplicates.
    #[arg(long, value_name = "F")]
    positive_fraction: Option<f64>,

    /// Gradient-descent step size.
    #[arg(long, value_name = "F")]
    learning_rate: Option<f64>,

    /// Gradient-descent epochs.
    #[arg(long, value_name = "N")]
    epochs: Option<usize>,

    /// Decision threshold stored into the model.
    #[arg(long, value_name = "F")]
    tau: Option<f64>,
}

pub fn train(ctx: &Context, args: TrainArgs) -> Result<(), CliError> {
    let paths = ctx.cfg.paths();
    let corpus_path = required_path(args.corpus, paths.corpus, "--corpus")?;
    let truth_path = required_path(args.truth, paths.truth, "--truth")?;
    let model_path = required_path(args.model_out, paths.model, "--model-out")?;

    let records = load_corpus(&corpus_path, ctx.strict(), "training corpus")?;
    require_file(&truth_path, "ground-truth file")?;
    let truth = io::read_truth(&truth_path)?;

    let overrides = ctx.cfg.train.clone().unwrap_or_default();
    let n_pairs = args.pairs.or(overrides.n_pairs).unwrap_or(10_000);
    let positive_fraction = args
        .positive_fraction
        .or(overrides.positive_fraction)
        .unwrap_or(0.5);
    let train_cfg = ctx.train_config(args.learning_rate, args.epochs, args.tau)?;
    let sample_seed = ctx.seed().unwrap_or(42);

    let pairs = make_training_pairs(&records, &truth, n_pairs, positive_fraction, sample_seed)?;
    let positives = pairs.iter().filter(|p| p.label).count();
    println!(
        "sampled {} labeled pairs ({} positive, {} negative) with seed {}",
        pairs.len(),
        positives,
        pairs.len() - positives,
        sample_seed
    );

    let (model, history) = train_with_history(&pairs, &train_cfg)?;
    for (epoch, cost) in history.iter().enumerate() {
        println!("epoch {epoch:4}  cost {cost:.6}");
    }
    let correct = pairs
        .iter()
        .filter(|p| (model.predict_probability(&p.features) >= model.tau) == p.label)
        .count();
    println!(
        "final cost {:.6}  training accuracy {:.4}",
        history.last().copied().unwrap_or(f64::NAN),
        correct as f64 / pairs.len() as f64
    );
    model.save(&model_path).map_err(output_error(&model_path))?;
    println!("wrote model to {}", model_path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// dedupe
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct DedupeArgs {
    /// Corpus to deduplicate.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Output directory for golden records, provenance, and decisions.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Trained resolver model.
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,

    /// Name-similarity threshold for the fuzzy stage.
    #[arg(long, value_name = "F")]
    theta1: Option<f64>,

    /// Address-overlap threshold for the fuzzy stage.
    #[arg(long, value_name = "F")]
    theta2: Option<f64>,

    /// Probability threshold for the resolver stage.
    #[arg(long, value_name = "F")]
    tau: Option<f64>,

    /// Candidate generation strategy.
    #[arg(long, value_name = "NAME", value_parser = parse_blocking)]
    blocking: Option<BlockingStrategy>,

    /// Run without the resolver stage (fuzzy and exact stages only).
    #[arg(long)]
    no_ml: bool,
}

pub fn dedupe(ctx: &Context, args: DedupeArgs) -> Result<(), CliError> {
    let paths = ctx.cfg.paths();
    let input = required_path(args.input, paths.input, "--input")?;
    let out_dir = required_path(args.out, paths.output_dir, "--out")?;
    let cfg = ctx.pipeline_config(args.theta1, args.theta2, args.tau, args.blocking, args.no_ml)?;
    let model = load_model(args.model.or(paths.model), cfg.ml_enabled)?;

    let records = load_corpus(&input, ctx.strict(), "input corpus")?;
    ensure_dir(&out_dir)?;
    let (golden, decisions) = run_pipeline(&records, &cfg, model.as_ref())?;

    let golden_path = out_dir.join("golden.jsonl");
    let provenance_path = out_dir.join("golden.provenance.jsonl");
    let decisions_path = out_dir.join("decisions.jsonl");
    io::write_golden(&golden_path, &golden).map_err(output_error(&golden_path))?;
    io::write_golden_provenance(&provenance_path, &golden)
        .map_err(output_error(&provenance_path))?;
    io::write_decisions(&decisions_path, &decisions).map_err(output_error(&decisions_path))?;

    let matched = decisions.iter().filter(|d| d.matched).count();
    let multi = golden
        .iter()
        .filter(|g| g.cluster.member_ids.len() > 1)
        .count();
    println!(
        "deduplicated {} records into {} golden records ({} multi-record clusters)",
        records.len(),
        golden.len(),
        multi
    );
    println!(
        "evaluated {} candidate pairs, matched {}",
        decisions.len(),
        matched
    );
    println!("outputs in {}", out_dir.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct SweepArgs {
    /// Corpus to sweep over.
    #[arg(long, value_name = "PATH")]
    corpus: Option<PathBuf>,

    /// Ground-truth file for the corpus.
    #[arg(long, value_name = "PATH")]
    truth: Option<PathBuf>,

    /// Output directory for sweep reports.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Resolver model; accepted but idle, the sweep isolates the fuzzy
    /// stage.
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,
}

pub fn sweep(ctx: &Context, args: SweepArgs) -> Result<(), CliError> {
    let paths = ctx.cfg.paths();
    let corpus_path = required_path(args.corpus, paths.corpus, "--corpus")?;
    let truth_path = required_path(args.truth, paths.truth, "--truth")?;
    let out_dir = required_path(args.out, paths.output_dir, "--out")?;
    let cfg = ctx.pipeline_config(None, None, None, None, true)?;
    let model = match args.model.or(paths.model) {
        Some(path) => {
            require_file(&path, "model file")?;
            Some(LogisticModel::load(&path)?)
        }
        None => None,
    };

    let records = load_corpus(&corpus_path, ctx.strict(), "corpus")?;
    require_file(&truth_path, "ground-truth file")?;
    let truth = io::read_truth(&truth_path)?;
    let grid = ctx.cfg.grid.clone().unwrap_or_else(|| DEFAULT_SWEEP_GRID.to_vec());
    let rows = threshold_sweep(&records, &truth, &grid, &cfg, model.as_ref())?;

    ensure_dir(&out_dir)?;
    let json_path = out_dir.join("sweep.json");
    let table_path = out_dir.join("sweep.txt");
    let csv_path = out_dir.join("sweep.csv");
    io::write_json(&json_path, &rows).map_err(output_error(&json_path))?;
    let table = render_sweep_table(&rows);
    io::write_text(&table_path, &table).map_err(output_error(&table_path))?;
    io::write_text(&csv_path, &sweep_to_csv(&rows)).map_err(output_error(&csv_path))?;
    print!("{table}");
    println!("reports in {}", out_dir.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct BenchArgs {
    /// Comma-separated dataset sizes, ascending.
    #[arg(long, value_name = "N,N,...", value_delimiter = ',')]
    sizes: Option<Vec<u64>>,

    /// Output directory for benchmark reports.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Trained resolver model.
    #[arg(long, value_name = "PATH")]
    model: Option<PathBuf>,

    /// Run without the resolver stage.
    #[arg(long)]
    no_ml: bool,
}

pub fn bench(ctx: &Context, args: BenchArgs) -> Result<(), CliError> {
    let paths = ctx.cfg.paths();
    let out_dir = required_path(args.out, paths.output_dir, "--out")?;
    let sizes = args
        .sizes
        .or_else(|| ctx.cfg.sizes.clone())
        .ok_or_else(|| CliError::usage("--sizes is required (flag or config)"))?;
    let cfg = ctx.pipeline_config(None, None, None, None, args.no_ml)?;
    let model = load_model(args.model.or(paths.model), cfg.ml_enabled)?;
    let template = ctx.corpus_spec();

    let reports = benchmark(&sizes, &template, &cfg, model.as_ref())?;

    ensure_dir(&out_dir)?;
    let json_path = out_dir.join("bench.json");
    let table_path = out_dir.join("bench.txt");
    let csv_path = out_dir.join("bench.csv");
    io::write_json(&json_path, &reports).map_err(output_error(&json_path))?;
    let table = render_report_table(&reports);
    io::write_text(&table_path, &table).map_err(output_error(&table_path))?;
    io::write_text(&csv_path, &reports_to_csv(&reports)).map_err(output_error(&csv_path))?;
    print!("{table}");
    println!("reports in {}", out_dir.display());
    Ok(())
}
