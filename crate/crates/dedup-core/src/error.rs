//! Crate-wide error type.

use thiserror::Error;

use crate::record::RecordId;

#[derive(Debug, Error)]
pub enum DedupError {
    /// A record failed ingestion-level validation (e.g. empty id).
    #[error("invalid record: {0}")]
    InvalidRecord(String),

    /// Duplicate record ids in a pipeline input.
    #[error("duplicate record id in input: {0}")]
    DuplicateId(RecordId),

    /// A pair operation was invoked with the same record on both sides.
    #[error("cannot match a record against itself: {0}")]
    SelfPair(RecordId),

    /// A cluster referenced a record id that is not in the lookup.
    #[error("unresolvable record id in cluster: {0}")]
    UnknownId(RecordId),

    /// An id mentioned in a decision is missing from the ground truth.
    #[error("record id absent from ground truth: {0}")]
    MissingTruth(RecordId),

    /// Training was invoked with unusable data.
    #[error("invalid training data: {0}")]
    InvalidTrainingData(String),

    /// A configuration value violated its documented range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Pair sampling could not satisfy the requested mix.
    #[error("infeasible sampling request: {0}")]
    InfeasibleSampling(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// A data file contained a line that could not be parsed.
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: u64, message: String },
}

pub type Result<T> = std::result::Result<T, DedupError>;
