//! Config file schema, flag/config/default resolution, and error → exit
//! code mapping.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use dedup_core::matchers::FuzzyThresholds;
use dedup_core::ml::TrainConfig;
use dedup_core::pipeline::{BlockingStrategy, PipelineConfig};
use dedup_core::synth::CorpusSpec;
use dedup_core::DedupError;

/// A CLI failure carrying its exit code: 1 for runtime failures, 2 for
/// configuration or usage errors.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn runtime(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

/// Invalid configuration surfaces as a usage error no matter how deep in
/// the run it is detected; everything else is a runtime failure.
impl From<DedupError> for CliError {
    fn from(e: DedupError) -> Self {
        match e {
            DedupError::InvalidConfig(_) => CliError::usage(e.to_string()),
            _ => CliError::runtime(e.to_string()),
        }
    }
}

/// Optional per-command path defaults, overridden by command flags.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathsConfig {
    /// Corpus file (gen output; train/sweep input).
    pub corpus: Option<PathBuf>,
    /// Ground-truth file (gen output; train/sweep input).
    pub truth: Option<PathBuf>,
    /// Model file (train output; dedupe/bench input).
    pub model: Option<PathBuf>,
    /// Corpus to deduplicate.
    pub input: Option<PathBuf>,
    /// Directory for command outputs.
    pub output_dir: Option<PathBuf>,
}

/// Training hyperparameter overrides.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrainOverrides {
    pub learning_rate: Option<f64>,
    pub epochs: Option<usize>,
    pub n_pairs: Option<usize>,
    pub positive_fraction: Option<f64>,
}

/// The JSON config file. Every field is optional; precedence is
/// flags > config > built-in defaults.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub seed: Option<u64>,
    pub workers: Option<usize>,
    pub strict: Option<bool>,
    pub theta1: Option<f64>,
    pub theta2: Option<f64>,
    pub tau: Option<f64>,
    pub blocking: Option<BlockingStrategy>,
    pub ml_enabled: Option<bool>,
    /// Corpus template for gen and bench.
    pub corpus: Option<CorpusSpec>,
    pub train: Option<TrainOverrides>,
    pub paths: Option<PathsConfig>,
    /// Dataset sizes for bench.
    pub sizes: Option<Vec<u64>>,
    /// Threshold grid for sweep.
    pub grid: Option<Vec<(f64, f64)>>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(RunConfig::default());
        };
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::usage(format!("cannot read config {}: {e}", path.display()))
        })?;
        serde_json::from_str(&text).map_err(|e| {
            CliError::usage(format!("invalid config {}: {e}", path.display()))
        })
    }

    pub fn paths(&self) -> PathsConfig {
        self.paths.clone().unwrap_or_default()
    }
}

/// Global flag state threaded into every command.
pub struct Context {
    pub cfg: RunConfig,
    pub seed: Option<u64>,
    pub strict: bool,
}

impl Context {
    pub fn seed(&self) -> Option<u64> {
        self.seed.or(self.cfg.seed)
    }

    pub fn strict(&self) -> bool {
        self.strict || self.cfg.strict == Some(true)
    }

    /// Corpus template from config with the resolved seed applied.
    pub fn corpus_spec(&self) -> CorpusSpec {
        let mut spec = self.cfg.corpus.unwrap_or_default();
        if let Some(seed) = self.seed() {
            spec.seed = seed;
        }
        spec
    }

    /// Pipeline settings from flags over config over defaults. The config
    /// is validated here so a bad value exits 2 before any work starts.
    pub fn pipeline_config(
        &self,
        theta1: Option<f64>,
        theta2: Option<f64>,
        tau: Option<f64>,
        blocking: Option<BlockingStrategy>,
        no_ml: bool,
    ) -> Result<PipelineConfig, CliError> {
        let defaults = PipelineConfig::default();
        let cfg = PipelineConfig {
            thresholds: FuzzyThresholds {
                theta1: theta1
                    .or(self.cfg.theta1)
                    .unwrap_or(defaults.thresholds.theta1),
                theta2: theta2
                    .or(self.cfg.theta2)
                    .unwrap_or(defaults.thresholds.theta2),
            },
            tau: tau.or(self.cfg.tau).unwrap_or(defaults.tau),
            blocking: blocking.or(self.cfg.blocking).unwrap_or(defaults.blocking),
            ml_enabled: if no_ml {
                false
            } else {
                self.cfg.ml_enabled.unwrap_or(defaults.ml_enabled)
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn train_config(
        &self,
        learning_rate: Option<f64>,
        epochs: Option<usize>,
        tau: Option<f64>,
    ) -> Result<TrainConfig, CliError> {
        let overrides = self.cfg.train.clone().unwrap_or_default();
        let defaults = TrainConfig::default();
        let cfg = TrainConfig {
            learning_rate: learning_rate
                .or(overrides.learning_rate)
                .unwrap_or(defaults.learning_rate),
            epochs: epochs.or(overrides.epochs).unwrap_or(defaults.epochs),
            tau: tau.or(self.cfg.tau).unwrap_or(defaults.tau),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Pick the first present path among flag and config, else a usage error
/// naming the flag.
pub fn required_path(
    flag_value: Option<PathBuf>,
    config_value: Option<PathBuf>,
    flag_name: &str,
) -> Result<PathBuf, CliError> {
    flag_value
        .or(config_value)
        .ok_or_else(|| CliError::usage(format!("{flag_name} is required (flag or config)")))
}

/// An input file the command cannot run without.
pub fn require_file(path: &Path, what: &str) -> Result<(), CliError> {
    if path.is_file() {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "{what} not found: {}",
            path.display()
        )))
    }
}

/// Failures while producing an output file are usage errors: the
/// destination the user chose is not writable.
pub fn output_error(path: &Path) -> impl Fn(DedupError) -> CliError + '_ {
    move |e| match e {
        DedupError::Io(io) => CliError::usage(format!(
            "cannot write {}: {io}",
            path.display()
        )),
        other => other.into(),
    }
}
