//! Record deduplication engine.
//!
//! Raw records are normalized into a canonical schema, candidate pairs are
//! generated by blocking, and each pair passes through a three-stage match
//! function: exact identifier equality, fuzzy name/address similarity, and
//! a logistic-regression resolver for the ambiguous middle ground. Matched
//! pairs are clustered transitively and each cluster is merged into a
//! golden record with per-field provenance.
//!
//! The companion modules supply everything needed to exercise the engine
//! end to end: seeded synthetic corpora with ground truth ([`synth`]),
//! classification/performance harnesses ([`eval`]), and file formats
//! ([`io`]).

pub mod error;
pub mod eval;
pub mod io;
pub mod matchers;
pub mod ml;
pub mod pipeline;
pub mod record;
pub mod synth;
mod union_find;

pub use error::{DedupError, Result};
pub use matchers::{levenshtein, levenshtein_similarity, FuzzyThresholds};
pub use ml::{
    extract_features, train, train_with_history, FeatureVector, LabeledPair, LogisticModel,
    TrainConfig,
};
pub use pipeline::{
    run_pipeline, BlockingStrategy, DuplicateCluster, GoldenRecord, MatchDecision, MatchStage,
    PipelineConfig,
};
pub use record::{normalize_record, CanonicalRecord, RawRecord, RecordId};
pub use synth::{generate_corpus, CorpusSpec, GroundTruth, NoiseSpec};
