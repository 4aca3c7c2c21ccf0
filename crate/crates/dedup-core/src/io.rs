//! File formats: corpus CSV/JSON-lines, ground truth, decision logs, and
//! golden-record output.
//!
//! Corpus readers collect malformed lines instead of printing; callers
//! decide between warning and failing. Every writer produces byte-stable
//! output for fixed input, so reruns can be compared with a plain diff.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{DedupError, Result};
use crate::pipeline::{GoldenRecord, MatchDecision};
use crate::record::{RawRecord, RecordId, RECOGNIZED_FIELDS};
use crate::synth::GroundTruth;

/// Corpus container format, decided by file extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Csv,
    JsonLines,
}

impl CorpusFormat {
    /// `.csv` → CSV; `.jsonl`/`.ndjson`/`.json` → JSON-lines.
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => Ok(CorpusFormat::Csv),
            Some("jsonl") | Some("ndjson") | Some("json") => Ok(CorpusFormat::JsonLines),
            other => Err(DedupError::InvalidConfig(format!(
                "cannot infer corpus format from extension {other:?} of {}",
                path.display()
            ))),
        }
    }
}

/// A parsed corpus plus the lines that failed to parse.
#[derive(Debug, Default)]
pub struct CorpusRead {
    pub records: Vec<RawRecord>,
    /// (1-based line number, description) per malformed line.
    pub skipped: Vec<(u64, String)>,
}

impl CorpusRead {
    /// Fail on the first skipped line; used by strict mode.
    pub fn into_strict(self) -> Result<Vec<RawRecord>> {
        match self.skipped.into_iter().next() {
            Some((line, message)) => Err(DedupError::MalformedInput { line, message }),
            None => Ok(self.records),
        }
    }
}

// ---------------------------------------------------------------------------
// Corpus readers
// ---------------------------------------------------------------------------

/// Read a corpus, dispatching on the file extension.
pub fn read_corpus(path: &Path) -> Result<CorpusRead> {
    match CorpusFormat::from_path(path)? {
        CorpusFormat::Csv => read_corpus_csv(path),
        CorpusFormat::JsonLines => read_corpus_jsonl(path),
    }
}

pub fn read_corpus_csv(path: &Path) -> Result<CorpusRead> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(false)
        .from_path(path)?;
    let headers = reader.headers()?.clone();
    let id_col = headers.iter().position(|h| h == "id").ok_or_else(|| {
        DedupError::MalformedInput {
            line: 1,
            message: format!("{} has no 'id' column", path.display()),
        }
    })?;
    let mut out = CorpusRead::default();
    for row in reader.into_records() {
        match row {
            Ok(row) => {
                let line = row.position().map_or(0, |p| p.line());
                let id = row.get(id_col).unwrap_or("");
                if id.is_empty() {
                    out.skipped.push((line, "empty id".into()));
                    continue;
                }
                let mut record = RawRecord::new(id);
                for (col, value) in row.iter().enumerate() {
                    // Empty cells mean "absent", not "empty string".
                    if col != id_col && !value.is_empty() {
                        record
                            .fields
                            .push((headers[col].to_string(), value.to_string()));
                    }
                }
                out.records.push(record);
            }
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                out.skipped.push((line, e.to_string()));
            }
        }
    }
    Ok(out)
}

/// A scalar JSON value rendered as a field string; `None` for null and for
/// shapes a field cannot hold.
fn field_text(value: &Value) -> Option<Option<String>> {
    match value {
        Value::Null => Some(None),
        Value::String(s) => Some(Some(s.clone())),
        Value::Number(n) => Some(Some(n.to_string())),
        Value::Bool(b) => Some(Some(b.to_string())),
        Value::Array(_) | Value::Object(_) => None,
    }
}

pub fn read_corpus_jsonl(path: &Path) -> Result<CorpusRead> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = CorpusRead::default();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx as u64 + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let parsed: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => {
                out.skipped.push((line_no, e.to_string()));
                continue;
            }
        };
        let Value::Object(map) = parsed else {
            out.skipped.push((line_no, "line is not a JSON object".into()));
            continue;
        };
        let Some(Value::String(id)) = map.get("id") else {
            out.skipped.push((line_no, "missing string 'id'".into()));
            continue;
        };
        if id.is_empty() {
            out.skipped.push((line_no, "empty id".into()));
            continue;
        }
        let mut record = RawRecord::new(id.as_str());
        let mut bad = None;
        for (key, value) in &map {
            if key == "id" {
                continue;
            }
            match field_text(value) {
                Some(Some(text)) => record.fields.push((key.clone(), text)),
                Some(None) => {}
                None => {
                    bad = Some(format!("field '{key}' is not a scalar"));
                    break;
                }
            }
        }
        match bad {
            Some(message) => out.skipped.push((line_no, message)),
            None => out.records.push(record),
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Corpus writers
// ---------------------------------------------------------------------------

/// Write a corpus, dispatching on the file extension.
pub fn write_corpus(path: &Path, records: &[RawRecord]) -> Result<()> {
    match CorpusFormat::from_path(path)? {
        CorpusFormat::Csv => write_corpus_csv(path, records),
        CorpusFormat::JsonLines => write_corpus_jsonl(path, records),
    }
}

/// Column order: the recognized fields, then any extra field names sorted.
fn csv_columns(records: &[RawRecord]) -> Vec<String> {
    let mut extra: Vec<String> = records
        .iter()
        .flat_map(|r| r.fields.iter().map(|(k, _)| k))
        .filter(|k| !RECOGNIZED_FIELDS.contains(&k.as_str()))
        .cloned()
        .collect();
    extra.sort();
    extra.dedup();
    RECOGNIZED_FIELDS
        .iter()
        .map(|s| s.to_string())
        .chain(extra)
        .collect()
}

pub fn write_corpus_csv(path: &Path, records: &[RawRecord]) -> Result<()> {
    let columns = csv_columns(records);
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record(&columns)?;
    for record in records {
        let row: Vec<&str> = columns
            .iter()
            .map(|col| {
                if col == "id" {
                    record.id.as_str()
                } else {
                    record.get(col).unwrap_or("")
                }
            })
            .collect();
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_corpus_jsonl(path: &Path, records: &[RawRecord]) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for record in records {
        let mut map = serde_json::Map::new();
        map.insert("id".into(), Value::String(record.id.clone()));
        for (key, value) in &record.fields {
            map.insert(key.clone(), Value::String(value.clone()));
        }
        serde_json::to_writer(&mut writer, &Value::Object(map))?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Ground truth
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TruthLine {
    record_id: RecordId,
    entity_id: String,
}

/// One JSON object per record: `{"record_id": …, "entity_id": …}`.
pub fn write_truth(path: &Path, truth: &GroundTruth) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for (record_id, entity_id) in &truth.record_to_entity {
        let line = TruthLine {
            record_id: record_id.clone(),
            entity_id: entity_id.clone(),
        };
        serde_json::to_writer(&mut writer, &line)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

/// Truth files are machine-written, so any malformed or duplicate line is
/// an error regardless of strictness.
pub fn read_truth(path: &Path) -> Result<GroundTruth> {
    let reader = BufReader::new(File::open(path)?);
    let mut truth = GroundTruth::default();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx as u64 + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let parsed: TruthLine =
            serde_json::from_str(&text).map_err(|e| DedupError::MalformedInput {
                line: line_no,
                message: e.to_string(),
            })?;
        if truth
            .record_to_entity
            .insert(parsed.record_id.clone(), parsed.entity_id)
            .is_some()
        {
            return Err(DedupError::MalformedInput {
                line: line_no,
                message: format!("duplicate record_id {}", parsed.record_id),
            });
        }
    }
    Ok(truth)
}

// ---------------------------------------------------------------------------
// Decisions and golden records
// ---------------------------------------------------------------------------

/// One JSON-encoded decision per line, in the given order.
pub fn write_decisions(path: &Path, decisions: &[MatchDecision]) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for decision in decisions {
        serde_json::to_writer(&mut writer, decision)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_decisions(path: &Path) -> Result<Vec<MatchDecision>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let decision =
            serde_json::from_str(&text).map_err(|e| DedupError::MalformedInput {
                line: idx as u64 + 1,
                message: e.to_string(),
            })?;
        out.push(decision);
    }
    Ok(out)
}

/// Survivors only, in the corpus JSON-lines format — the output corpus is
/// itself re-ingestable.
pub fn write_golden(path: &Path, golden: &[GoldenRecord]) -> Result<()> {
    let survivors: Vec<RawRecord> = golden.iter().map(|g| g.survivor.to_raw()).collect();
    write_corpus_jsonl(path, &survivors)
}

/// Full per-cluster provenance: members, match evidence, and the source
/// record behind each survivor field.
pub fn write_golden_provenance(path: &Path, golden: &[GoldenRecord]) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    for record in golden {
        serde_json::to_writer(&mut writer, record)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_golden_provenance(path: &Path) -> Result<Vec<GoldenRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&text).map_err(|e| DedupError::MalformedInput {
            line: idx as u64 + 1,
            message: e.to_string(),
        })?;
        out.push(record);
    }
    Ok(out)
}

/// Pretty-printed JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut writer, value)?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(())
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    writer.write_all(text.as_bytes())?;
    writer.flush()?;
    Ok(())
}
