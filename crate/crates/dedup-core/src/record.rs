//! Canonical record schema, parsing, and normalization.
//!
//! All matching operates on [`CanonicalRecord`]s produced by
//! [`normalize_record`]: identifiers reduced to digit strings, names and
//! addresses case-folded with collapsed whitespace, dates validated.
//! Field values that fail normalization demote to missing rather than
//! rejecting the whole record.

use std::collections::BTreeMap;

use chrono::{DateTime, NaiveDate, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{DedupError, Result};

/// The five attributes the match stages compare.
pub const MATCH_FIELDS: [&str; 5] = [
    "ssn",
    "phone_number",
    "full_name",
    "full_address",
    "birth_date",
];

/// Field names with dedicated handling during ingestion; everything else
/// is carried opaquely in [`CanonicalRecord::extra`].
pub const RECOGNIZED_FIELDS: [&str; 8] = [
    "id",
    "ssn",
    "phone_number",
    "full_name",
    "full_address",
    "birth_date",
    "source_timestamp",
    "source_id",
];

/// Opaque unique identifier of a record within a corpus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RecordId(pub String);

impl RecordId {
    pub fn new(value: impl Into<String>) -> Self {
        RecordId(value.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for RecordId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for RecordId {
    fn from(value: &str) -> Self {
        RecordId(value.to_string())
    }
}

/// A record as ingested: an id plus free-form string fields.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawRecord {
    pub id: String,
    /// Attribute name/value pairs in ingestion order.
    pub fields: Vec<(String, String)>,
}

impl RawRecord {
    pub fn new(id: impl Into<String>) -> Self {
        RawRecord {
            id: id.into(),
            fields: Vec::new(),
        }
    }

    pub fn with_field(mut self, name: &str, value: impl Into<String>) -> Self {
        self.fields.push((name.to_string(), value.into()));
        self
    }

    /// Last value for a field name, if any.
    pub fn get(&self, name: &str) -> Option<&str> {
        self.fields
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }
}

/// A normalized record: the five match attributes plus provenance.
///
/// Immutable after construction; safe to share across workers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRecord {
    pub id: RecordId,
    /// Nine digits, punctuation stripped.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ssn: Option<String>,
    /// Digits only, at least seven of them.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phone_number: Option<String>,
    /// Case-folded, single internal spaces.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub full_name: Option<String>,
    /// Case-folded, single internal spaces.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub full_address: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub birth_date: Option<NaiveDate>,
    /// Record recency, used by merge survivorship.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source_timestamp: Option<DateTime<Utc>>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub source_id: String,
    /// Unrecognized ingestion fields, carried through to merge output.
    #[serde(flatten, skip_serializing_if = "BTreeMap::is_empty", default)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl CanonicalRecord {
    pub fn new(id: impl Into<String>) -> Self {
        CanonicalRecord {
            id: RecordId::new(id),
            ssn: None,
            phone_number: None,
            full_name: None,
            full_address: None,
            birth_date: None,
            source_timestamp: None,
            source_id: String::new(),
            extra: BTreeMap::new(),
        }
    }

    /// Render back to the raw field representation (canonical values).
    pub fn to_raw(&self) -> RawRecord {
        let mut raw = RawRecord::new(self.id.as_str());
        if let Some(v) = &self.ssn {
            raw.fields.push(("ssn".into(), v.clone()));
        }
        if let Some(v) = &self.phone_number {
            raw.fields.push(("phone_number".into(), v.clone()));
        }
        if let Some(v) = &self.full_name {
            raw.fields.push(("full_name".into(), v.clone()));
        }
        if let Some(v) = &self.full_address {
            raw.fields.push(("full_address".into(), v.clone()));
        }
        if let Some(v) = &self.birth_date {
            raw.fields.push(("birth_date".into(), v.format("%Y-%m-%d").to_string()));
        }
        if let Some(v) = &self.source_timestamp {
            raw.fields.push((
                "source_timestamp".into(),
                v.to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            ));
        }
        if !self.source_id.is_empty() {
            raw.fields.push(("source_id".into(), self.source_id.clone()));
        }
        for (k, v) in &self.extra {
            let text = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            raw.fields.push((k.clone(), text));
        }
        raw
    }
}

/// Collapse internal whitespace runs, trim, and lowercase.
fn normalize_text(value: &str) -> Option<String> {
    let folded = value
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase();
    if folded.is_empty() {
        None
    } else {
        Some(folded)
    }
}

/// Strip common separators; keep the value only if what remains is all
/// digits with an acceptable length.
fn normalize_digits(value: &str, accept_len: impl Fn(usize) -> bool) -> Option<String> {
    let stripped: String = value
        .chars()
        .filter(|c| !c.is_whitespace() && !"-.()+/".contains(*c))
        .collect();
    if !stripped.is_empty() && stripped.chars().all(|c| c.is_ascii_digit()) && accept_len(stripped.len())
    {
        Some(stripped)
    } else {
        None
    }
}

fn normalize_birth_date(value: &str, today: NaiveDate) -> Option<NaiveDate> {
    let date = NaiveDate::parse_from_str(value.trim(), "%Y-%m-%d").ok()?;
    if date > today {
        None
    } else {
        Some(date)
    }
}

fn normalize_timestamp(value: &str) -> Option<DateTime<Utc>> {
    DateTime::parse_from_rfc3339(value.trim())
        .ok()
        .map(|t| t.with_timezone(&Utc))
}

/// Normalize a raw record into canonical form.
///
/// Fields that fail their normalization rule become absent; only a
/// missing or empty id rejects the record.
pub fn normalize_record(raw: &RawRecord) -> Result<CanonicalRecord> {
    normalize_record_at(raw, Utc::now().date_naive())
}

/// [`normalize_record`] with an explicit "today" for the future-date check.
pub fn normalize_record_at(raw: &RawRecord, today: NaiveDate) -> Result<CanonicalRecord> {
    let id = raw.id.trim();
    if id.is_empty() {
        return Err(DedupError::InvalidRecord("missing or empty id".into()));
    }
    let mut record = CanonicalRecord::new(id);
    for (name, value) in &raw.fields {
        match name.as_str() {
            "id" => {}
            "ssn" => record.ssn = normalize_digits(value, |len| len == 9),
            "phone_number" => record.phone_number = normalize_digits(value, |len| len >= 7),
            "full_name" => record.full_name = normalize_text(value),
            "full_address" => record.full_address = normalize_text(value),
            "birth_date" => record.birth_date = normalize_birth_date(value, today),
            "source_timestamp" => record.source_timestamp = normalize_timestamp(value),
            "source_id" => record.source_id = value.trim().to_string(),
            _ => {
                record
                    .extra
                    .insert(name.clone(), serde_json::Value::String(value.clone()));
            }
        }
    }
    Ok(record)
}

/// Fraction of the five match attributes that are present, in [0, 1].
pub fn completeness_score(record: &CanonicalRecord) -> f64 {
    let present = [
        record.ssn.is_some(),
        record.phone_number.is_some(),
        record.full_name.is_some(),
        record.full_address.is_some(),
        record.birth_date.is_some(),
    ]
    .iter()
    .filter(|p| **p)
    .count();
    present as f64 / MATCH_FIELDS.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn today() -> NaiveDate {
        NaiveDate::from_ymd_opt(2026, 8, 22).unwrap()
    }

    #[test]
    fn ssn_punctuation_is_stripped() {
        let raw = RawRecord::new("r1").with_field("ssn", "123-45-6789");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.ssn.as_deref(), Some("123456789"));
    }

    #[test]
    fn name_is_case_folded_and_whitespace_collapsed() {
        let raw = RawRecord::new("r1").with_field("full_name", "  Jane   DOE ");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.full_name.as_deref(), Some("jane doe"));
    }

    #[test]
    fn invalid_ssn_demotes_to_missing() {
        let raw = RawRecord::new("r1").with_field("ssn", "12AB");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.ssn, None);
    }

    #[test]
    fn wrong_length_ssn_demotes_to_missing() {
        let raw = RawRecord::new("r1").with_field("ssn", "12345678");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.ssn, None);
    }

    #[test]
    fn short_phone_demotes_to_missing() {
        let raw = RawRecord::new("r1").with_field("phone_number", "123456");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.phone_number, None);
        let raw = RawRecord::new("r1").with_field("phone_number", "(555) 123-4567");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.phone_number.as_deref(), Some("5551234567"));
    }

    #[test]
    fn future_birth_date_demotes_to_missing() {
        let raw = RawRecord::new("r1").with_field("birth_date", "2999-01-01");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(rec.birth_date, None);
        let raw = RawRecord::new("r1").with_field("birth_date", "1984-07-14");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(
            rec.birth_date,
            Some(NaiveDate::from_ymd_opt(1984, 7, 14).unwrap())
        );
    }

    #[test]
    fn empty_id_is_rejected() {
        let raw = RawRecord::new("   ");
        assert!(matches!(
            normalize_record_at(&raw, today()),
            Err(DedupError::InvalidRecord(_))
        ));
    }

    #[test]
    fn unrecognized_fields_are_preserved() {
        let raw = RawRecord::new("r1")
            .with_field("full_name", "Ann Li")
            .with_field("nickname", "Annie");
        let rec = normalize_record_at(&raw, today()).unwrap();
        assert_eq!(
            rec.extra.get("nickname"),
            Some(&serde_json::Value::String("Annie".into()))
        );
    }

    #[test]
    fn normalization_is_idempotent() {
        let raw = RawRecord::new("r9")
            .with_field("ssn", "987-65-4321")
            .with_field("phone_number", "+1 (206) 555-0199")
            .with_field("full_name", "  Carlos  DE LA Cruz ")
            .with_field("full_address", "12   Main St.,  Austin, TX")
            .with_field("birth_date", "1970-02-28")
            .with_field("source_timestamp", "2023-05-01T12:00:00Z")
            .with_field("source_id", "crm")
            .with_field("color", "teal");
        let first = normalize_record_at(&raw, today()).unwrap();
        let second = normalize_record_at(&first.to_raw(), today()).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn completeness_counts_present_match_attributes() {
        let mut rec = CanonicalRecord::new("r1");
        assert_eq!(completeness_score(&rec), 0.0);
        rec.ssn = Some("123456789".into());
        rec.full_name = Some("jane doe".into());
        assert!((completeness_score(&rec) - 0.4).abs() < 1e-12);
        rec.phone_number = Some("5551234567".into());
        rec.full_address = Some("1 main st".into());
        rec.birth_date = NaiveDate::from_ymd_opt(1980, 1, 1);
        assert_eq!(completeness_score(&rec), 1.0);
    }

    #[test]
    fn completeness_is_monotone_in_added_fields() {
        let mut rec = CanonicalRecord::new("r1");
        let mut last = completeness_score(&rec);
        rec.birth_date = NaiveDate::from_ymd_opt(1980, 1, 1);
        for setter in [
            |r: &mut CanonicalRecord| r.ssn = Some("123456789".into()),
            |r: &mut CanonicalRecord| r.phone_number = Some("5551234".into()),
            |r: &mut CanonicalRecord| r.full_name = Some("a b".into()),
            |r: &mut CanonicalRecord| r.full_address = Some("1 x rd".into()),
        ] {
            setter(&mut rec);
            let next = completeness_score(&rec);
            assert!(next >= last);
            last = next;
        }
    }
}
