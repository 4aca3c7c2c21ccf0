//! Seeded synthetic corpora with ground-truth duplicate clusters.
//!
//! Each entity yields one clean record plus a sampled number of corrupted
//! duplicates. Corruption covers typos, dropped fields, and birth-date
//! jitter at the canonical level; punctuation/case formatting variants are
//! applied when rendering raw records, where normalization undoes them.

mod lexicon;
pub mod rng;

use std::collections::BTreeMap;

use chrono::{NaiveDate, TimeZone, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{DedupError, Result};
use crate::ml::{extract_features, LabeledPair};
use crate::record::{CanonicalRecord, RawRecord, RecordId};
use rng::SplitMix64;

/// How many duplicates an entity spawns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DuplicateDistribution {
    /// Geometric count with the given mean; most entities stay singletons.
    Geometric { mean: f64 },
    /// Exactly `count` duplicates per entity.
    Fixed { count: u32 },
}

impl DuplicateDistribution {
    fn sample(&self, rng: &mut SplitMix64) -> u64 {
        match *self {
            DuplicateDistribution::Geometric { mean } => {
                if mean <= 0.0 {
                    return 0;
                }
                // Failure probability q gives E[count] = q/(1-q) = mean.
                let q = mean / (1.0 + mean);
                let mut count = 0;
                while count < 64 && rng.chance(q) {
                    count += 1;
                }
                count
            }
            DuplicateDistribution::Fixed { count } => count as u64,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            DuplicateDistribution::Geometric { mean } if !mean.is_finite() || mean < 0.0 => {
                Err(DedupError::InvalidConfig(format!(
                    "geometric duplicate mean must be finite and >= 0, got {mean}"
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Corruption rates applied per field when deriving a duplicate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct NoiseSpec {
    /// Chance a present string field receives exactly one character edit;
    /// also the chance the birth date is jittered.
    pub typo_rate: f64,
    /// Chance a field is dropped entirely.
    pub missing_rate: f64,
    /// Chance a rendered raw field uses an alternate punctuation/case
    /// format (stripped again by normalization).
    pub format_variant_rate: f64,
    /// Maximum birth-date shift in days, either direction.
    pub date_jitter_days: u32,
}

impl NoiseSpec {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("typo_rate", self.typo_rate),
            ("missing_rate", self.missing_rate),
            ("format_variant_rate", self.format_variant_rate),
        ] {
            if !(0.0..=1.0).contains(&v) || !v.is_finite() {
                return Err(DedupError::InvalidConfig(format!(
                    "{name} must be in [0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }

    pub fn zero() -> Self {
        NoiseSpec {
            typo_rate: 0.0,
            missing_rate: 0.0,
            format_variant_rate: 0.0,
            date_jitter_days: 0,
        }
    }
}

impl Default for NoiseSpec {
    fn default() -> Self {
        NoiseSpec {
            typo_rate: 0.05,
            missing_rate: 0.15,
            format_variant_rate: 0.30,
            date_jitter_days: 1,
        }
    }
}

/// Full corpus recipe. Omitted fields deserialize to their defaults, so
/// config files may be partial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    pub n_entities: u64,
    pub duplicates_per_entity: DuplicateDistribution,
    pub noise: NoiseSpec,
    /// Chance an entity is generated as a "household neighbor" of the
    /// previous one: shared surname and address, near-collision first
    /// name. These are the realistic hard negatives for the fuzzy stage.
    pub confusable_rate: f64,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_entities == 0 {
            return Err(DedupError::InvalidConfig("n_entities must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.confusable_rate) || !self.confusable_rate.is_finite() {
            return Err(DedupError::InvalidConfig(format!(
                "confusable_rate must be in [0, 1], got {}",
                self.confusable_rate
            )));
        }
        self.duplicates_per_entity.validate()?;
        self.noise.validate()
    }
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            n_entities: 1000,
            duplicates_per_entity: DuplicateDistribution::Geometric { mean: 0.5 },
            noise: NoiseSpec::default(),
            confusable_rate: 0.08,
            seed: 42,
        }
    }
}

/// Which entity each generated record belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GroundTruth {
    pub record_to_entity: BTreeMap<RecordId, String>,
}

impl GroundTruth {
    pub fn len(&self) -> usize {
        self.record_to_entity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.record_to_entity.is_empty()
    }

    pub fn entity_of(&self, id: &RecordId) -> Option<&str> {
        self.record_to_entity.get(id).map(String::as_str)
    }

    /// Whether two records belong to the same entity; `None` if either is
    /// unknown.
    pub fn same_entity(&self, a: &RecordId, b: &RecordId) -> Option<bool> {
        Some(self.entity_of(a)? == self.entity_of(b)?)
    }
}

// ---------------------------------------------------------------------------
// Entity sampling
// ---------------------------------------------------------------------------

struct EntityState {
    first_idx: usize,
    last_idx: usize,
    address: String,
}

fn sample_entity(rng: &mut SplitMix64, previous: Option<&EntityState>, confusable_rate: f64) -> (EntityState, CanonicalRecord) {
    let (first_idx, last_idx, address) = match previous {
        // Household neighbor: same surname and address, first name pulled
        // from the adjacent lexicon slot (alphabetical near-collision).
        Some(prev) if rng.chance(confusable_rate) => {
            let shift = 1 + rng.next_below(2) as usize;
            let first = (prev.first_idx + shift) % lexicon::FIRST_NAMES.len();
            (first, prev.last_idx, prev.address.clone())
        }
        _ => {
            let first = rng.next_below(lexicon::FIRST_NAMES.len() as u64) as usize;
            let last = rng.next_below(lexicon::SURNAMES.len() as u64) as usize;
            let number = 1 + rng.next_below(9999);
            let street = lexicon::STREET_NAMES[rng.next_below(lexicon::STREET_NAMES.len() as u64) as usize];
            let street_type = lexicon::STREET_TYPES[rng.next_below(lexicon::STREET_TYPES.len() as u64) as usize];
            let city = lexicon::CITIES[rng.next_below(lexicon::CITIES.len() as u64) as usize];
            let state = lexicon::STATES[rng.next_below(lexicon::STATES.len() as u64) as usize];
            let address = format!("{number} {street} {street_type} {city} {state}");
            (first, last, address)
        }
    };
    let state = EntityState {
        first_idx,
        last_idx,
        address,
    };
    let record = clean_record(rng, &state);
    (state, record)
}

/// Unique per-entity SSN/phone assignment. The multipliers are odd and
/// coprime with the moduli, so the maps are injective over any corpus this
/// generator can produce — accidental cross-entity key collisions would
/// corrupt the ground truth.
fn entity_ssn(entity_idx: u64) -> String {
    format!("{:09}", 100_000_000 + (entity_idx.wrapping_mul(2_654_435_761)) % 800_000_000)
}

fn entity_phone(entity_idx: u64) -> String {
    format!("{:010}", 2_000_000_000 + (entity_idx.wrapping_mul(2_654_435_789)) % 8_000_000_000)
}

fn clean_record(rng: &mut SplitMix64, state: &EntityState) -> CanonicalRecord {
    // Keys are filled in by the caller (they depend on the entity index).
    let mut r = CanonicalRecord::new("pending");
    r.full_name = Some(format!(
        "{} {}",
        lexicon::FIRST_NAMES[state.first_idx],
        lexicon::SURNAMES[state.last_idx]
    ));
    r.full_address = Some(state.address.clone());
    let year = 1940 + rng.next_below(66) as i32;
    let month = 1 + rng.next_below(12) as u32;
    let day = 1 + rng.next_below(28) as u32;
    r.birth_date = NaiveDate::from_ymd_opt(year, month, day);
    // Source timestamps span 2022-2025 so survivorship has real recency.
    let epoch = 1_640_995_200 + rng.next_below(126_230_400) as i64;
    r.source_timestamp = Utc.timestamp_opt(epoch, 0).single();
    r.source_id = lexicon::SOURCE_SYSTEMS
        [rng.next_below(lexicon::SOURCE_SYSTEMS.len() as u64) as usize]
        .to_string();
    r
}

// ---------------------------------------------------------------------------
// Corruption
// ---------------------------------------------------------------------------

fn random_letter(rng: &mut SplitMix64) -> char {
    (b'a' + rng.next_below(26) as u8) as char
}

/// One character edit that keeps the string nonempty and normalized
/// (lowercase, single internal spaces): the result is always at edit
/// distance exactly 1 from the input.
fn typo_string(value: &str, rng: &mut SplitMix64) -> String {
    let chars: Vec<char> = value.chars().collect();
    let substitute = |chars: &[char], rng: &mut SplitMix64| -> Option<String> {
        let positions: Vec<usize> = (0..chars.len()).filter(|&i| chars[i] != ' ').collect();
        if positions.is_empty() {
            return None;
        }
        let pos = positions[rng.next_below(positions.len() as u64) as usize];
        let mut replacement = random_letter(rng);
        while replacement == chars[pos] {
            replacement = random_letter(rng);
        }
        let mut out: Vec<char> = chars.to_vec();
        out[pos] = replacement;
        Some(out.into_iter().collect())
    };
    match rng.next_below(3) {
        0 => substitute(&chars, rng).unwrap_or_else(|| value.to_string()),
        1 => {
            let pos = rng.next_below(chars.len() as u64 + 1) as usize;
            let mut out = chars.clone();
            out.insert(pos, random_letter(rng));
            out.into_iter().collect()
        }
        _ => {
            // Delete a letter that is not a whole single-letter word, so no
            // empty word (and thus no doubled space) can appear.
            let deletable: Vec<usize> = (0..chars.len())
                .filter(|&i| {
                    chars[i] != ' '
                        && !((i == 0 || chars[i - 1] == ' ')
                            && (i == chars.len() - 1 || chars[i + 1] == ' '))
                })
                .collect();
            if deletable.is_empty() {
                return substitute(&chars, rng).unwrap_or_else(|| value.to_string());
            }
            let pos = deletable[rng.next_below(deletable.len() as u64) as usize];
            let mut out = chars.clone();
            out.remove(pos);
            out.into_iter().collect()
        }
    }
}

/// Replace one digit with a different digit, preserving length.
fn typo_digits(value: &str, rng: &mut SplitMix64) -> String {
    let mut digits: Vec<char> = value.chars().collect();
    let pos = rng.next_below(digits.len() as u64) as usize;
    let mut replacement = (b'0' + rng.next_below(10) as u8) as char;
    while replacement == digits[pos] {
        replacement = (b'0' + rng.next_below(10) as u8) as char;
    }
    digits[pos] = replacement;
    digits.into_iter().collect()
}

/// Apply noise to every field, keeping the id.
fn corrupt_fields(r: &CanonicalRecord, noise: &NoiseSpec, rng: &mut SplitMix64) -> CanonicalRecord {
    let mut out = r.clone();
    let string_field = |field: &mut Option<String>, digits: bool, rng: &mut SplitMix64| {
        if field.is_none() {
            return;
        }
        if rng.chance(noise.missing_rate) {
            *field = None;
        } else if rng.chance(noise.typo_rate) {
            let value = field.as_ref().unwrap();
            *field = Some(if digits {
                typo_digits(value, rng)
            } else {
                typo_string(value, rng)
            });
        }
    };
    string_field(&mut out.ssn, true, rng);
    string_field(&mut out.phone_number, true, rng);
    string_field(&mut out.full_name, false, rng);
    string_field(&mut out.full_address, false, rng);
    if out.birth_date.is_some() {
        if rng.chance(noise.missing_rate) {
            out.birth_date = None;
        } else if noise.date_jitter_days > 0 && rng.chance(noise.typo_rate) {
            let magnitude = 1 + rng.next_below(noise.date_jitter_days as u64) as i64;
            let offset = if rng.chance(0.5) { magnitude } else { -magnitude };
            out.birth_date = out
                .birth_date
                .and_then(|d| d.checked_add_signed(chrono::Duration::days(offset)));
        }
    }
    out
}

/// Derive a corrupted duplicate of a normalized record under the noise
/// spec, with a fresh id. Formatting variants are a raw-rendering concern
/// and do not apply here.
pub fn corrupt_record(r: &CanonicalRecord, noise: &NoiseSpec, rng: &mut SplitMix64) -> CanonicalRecord {
    let mut out = corrupt_fields(r, noise, rng);
    out.id = RecordId(format!("{}-x{:08x}", r.id, rng.next_u64() as u32));
    out
}

// ---------------------------------------------------------------------------
// Raw rendering
// ---------------------------------------------------------------------------

fn title_case(value: &str) -> String {
    value
        .split(' ')
        .map(|word| {
            let mut chars = word.chars();
            match chars.next() {
                Some(c) => c.to_uppercase().chain(chars).collect::<String>(),
                None => String::new(),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Render a canonical record as a raw ingestion record, choosing alternate
/// formats at `variant_rate` per field. Every variant normalizes back to
/// the canonical value.
fn render_raw(r: &CanonicalRecord, variant_rate: f64, rng: &mut SplitMix64) -> RawRecord {
    let mut raw = RawRecord::new(r.id.as_str());
    if let Some(ssn) = &r.ssn {
        let text = if rng.chance(variant_rate) {
            format!("{}-{}-{}", &ssn[..3], &ssn[3..5], &ssn[5..])
        } else {
            ssn.clone()
        };
        raw.fields.push(("ssn".into(), text));
    }
    if let Some(phone) = &r.phone_number {
        let text = if rng.chance(variant_rate) && phone.len() == 10 {
            if rng.chance(0.5) {
                format!("({}) {}-{}", &phone[..3], &phone[3..6], &phone[6..])
            } else {
                format!("{}-{}-{}", &phone[..3], &phone[3..6], &phone[6..])
            }
        } else {
            phone.clone()
        };
        raw.fields.push(("phone_number".into(), text));
    }
    if let Some(name) = &r.full_name {
        let text = if rng.chance(variant_rate) {
            if rng.chance(0.5) {
                name.to_uppercase()
            } else {
                format!("  {}  ", title_case(name))
            }
        } else {
            title_case(name)
        };
        raw.fields.push(("full_name".into(), text));
    }
    if let Some(address) = &r.full_address {
        let text = if rng.chance(variant_rate) {
            title_case(address).replace(' ', "  ")
        } else {
            title_case(address)
        };
        raw.fields.push(("full_address".into(), text));
    }
    if let Some(date) = &r.birth_date {
        raw.fields
            .push(("birth_date".into(), date.format("%Y-%m-%d").to_string()));
    }
    if let Some(ts) = &r.source_timestamp {
        raw.fields.push((
            "source_timestamp".into(),
            ts.to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        ));
    }
    if !r.source_id.is_empty() {
        raw.fields.push(("source_id".into(), r.source_id.clone()));
    }
    raw
}

// ---------------------------------------------------------------------------
// Corpus assembly
// ---------------------------------------------------------------------------

fn push_entity(
    spec: &CorpusSpec,
    rng: &mut SplitMix64,
    entity_idx: u64,
    previous: &mut Option<EntityState>,
    out: &mut Vec<RawRecord>,
    truth: &mut GroundTruth,
    limit: Option<u64>,
) {
    let (state, mut clean) = sample_entity(rng, previous.as_ref(), spec.confusable_rate);
    *previous = Some(state);

    let entity_id = format!("e{entity_idx:07}");
    clean.id = RecordId(format!("r{entity_idx:07}"));
    clean.ssn = Some(entity_ssn(entity_idx));
    clean.phone_number = Some(entity_phone(entity_idx));

    let n_dups = spec.duplicates_per_entity.sample(rng);
    let mut members = Vec::with_capacity(1 + n_dups as usize);
    members.push(clean.clone());
    for k in 0..n_dups {
        let mut dup = corrupt_fields(&clean, &spec.noise, rng);
        dup.id = RecordId(format!("r{entity_idx:07}-d{k}"));
        members.push(dup);
    }

    for member in members {
        if limit.is_some_and(|n| out.len() as u64 >= n) {
            break;
        }
        truth
            .record_to_entity
            .insert(member.id.clone(), entity_id.clone());
        out.push(render_raw(&member, spec.noise.format_variant_rate, rng));
    }
}

/// Generate a seeded corpus: one clean record per entity plus corrupted
/// duplicates, rendered as raw ingestion records, with total ground truth.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<(Vec<RawRecord>, GroundTruth)> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let mut out = Vec::with_capacity(spec.n_entities as usize);
    let mut truth = GroundTruth::default();
    let mut previous = None;
    for entity_idx in 0..spec.n_entities {
        push_entity(spec, &mut rng, entity_idx, &mut previous, &mut out, &mut truth, None);
    }
    Ok((out, truth))
}

/// Generate a corpus with an exact record count, adding entities until the
/// target is reached and truncating any duplicate overshoot.
pub fn generate_corpus_sized(
    template: &CorpusSpec,
    n_records: u64,
) -> Result<(Vec<RawRecord>, GroundTruth)> {
    let mut spec = *template;
    spec.n_entities = spec.n_entities.max(1);
    spec.validate()?;
    if n_records == 0 {
        return Err(DedupError::InvalidConfig("n_records must be >= 1".into()));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut out = Vec::with_capacity(n_records as usize);
    let mut truth = GroundTruth::default();
    let mut previous = None;
    let mut entity_idx = 0;
    while (out.len() as u64) < n_records {
        push_entity(
            &spec,
            &mut rng,
            entity_idx,
            &mut previous,
            &mut out,
            &mut truth,
            Some(n_records),
        );
        entity_idx += 1;
    }
    Ok((out, truth))
}

/// Sample labeled feature vectors: positives within entities, negatives
/// across entities, deterministic under the seed.
pub fn make_training_pairs(
    records: &[CanonicalRecord],
    truth: &GroundTruth,
    n_pairs: usize,
    positive_fraction: f64,
    seed: u64,
) -> Result<Vec<LabeledPair>> {
    if !(0.0..=1.0).contains(&positive_fraction) || !positive_fraction.is_finite() {
        return Err(DedupError::InvalidConfig(format!(
            "positive_fraction must be in [0, 1], got {positive_fraction}"
        )));
    }
    let mut groups: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (idx, record) in records.iter().enumerate() {
        let entity = truth
            .entity_of(&record.id)
            .ok_or_else(|| DedupError::MissingTruth(record.id.clone()))?;
        groups.entry(entity).or_default().push(idx);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();

    let n_pos = (n_pairs as f64 * positive_fraction).round() as usize;
    let n_neg = n_pairs - n_pos;
    let multi: Vec<&Vec<usize>> = groups.iter().filter(|g| g.len() >= 2).collect();
    if n_pos > 0 && multi.is_empty() {
        return Err(DedupError::InfeasibleSampling(
            "positive pairs requested but no entity has two records".into(),
        ));
    }
    if n_neg > 0 && groups.len() < 2 {
        return Err(DedupError::InfeasibleSampling(
            "negative pairs requested but the corpus has fewer than two entities".into(),
        ));
    }

    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::with_capacity(n_pairs);
    for _ in 0..n_pos {
        let group = multi[rng.next_below(multi.len() as u64) as usize];
        let i = group[rng.next_below(group.len() as u64) as usize];
        let mut j = group[rng.next_below(group.len() as u64) as usize];
        while j == i {
            j = group[rng.next_below(group.len() as u64) as usize];
        }
        pairs.push(LabeledPair {
            features: extract_features(&records[i], &records[j]),
            label: true,
        });
    }
    for _ in 0..n_neg {
        // Half the negatives pair adjacent entities: generated corpora
        // place confusable households at consecutive indices, so
        // adjacency concentrates the near-miss pairs a resolver must
        // learn to reject. Uniform draws alone would teach it that a
        // shared address implies a duplicate.
        let (a, b) = if rng.chance(0.5) {
            let a = rng.next_below(groups.len() as u64 - 1) as usize;
            (a, a + 1)
        } else {
            let a = rng.next_below(groups.len() as u64) as usize;
            let mut b = rng.next_below(groups.len() as u64) as usize;
            while b == a {
                b = rng.next_below(groups.len() as u64) as usize;
            }
            (a, b)
        };
        let i = groups[a][rng.next_below(groups[a].len() as u64) as usize];
        let j = groups[b][rng.next_below(groups[b].len() as u64) as usize];
        pairs.push(LabeledPair {
            features: extract_features(&records[i], &records[j]),
            label: false,
        });
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchers::levenshtein;
    use crate::record::normalize_record;

    fn normalize_all(raws: &[RawRecord]) -> Vec<CanonicalRecord> {
        raws.iter().map(|r| normalize_record(r).unwrap()).collect()
    }

    fn small_spec() -> CorpusSpec {
        CorpusSpec {
            n_entities: 200,
            seed: 7,
            ..CorpusSpec::default()
        }
    }

    #[test]
    fn zero_duplicates_means_one_record_per_entity() {
        let spec = CorpusSpec {
            n_entities: 10,
            duplicates_per_entity: DuplicateDistribution::Geometric { mean: 0.0 },
            ..CorpusSpec::default()
        };
        let (records, truth) = generate_corpus(&spec).unwrap();
        assert_eq!(records.len(), 10);
        assert_eq!(truth.len(), 10);
        let entities: std::collections::BTreeSet<_> =
            truth.record_to_entity.values().collect();
        assert_eq!(entities.len(), 10);
    }

    #[test]
    fn same_seed_reproduces_byte_identical_corpora() {
        let spec = small_spec();
        let (a, truth_a) = generate_corpus(&spec).unwrap();
        let (b, truth_b) = generate_corpus(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(truth_a, truth_b);
        let different = CorpusSpec { seed: 8, ..spec };
        let (c, _) = generate_corpus(&different).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn zero_noise_duplicates_match_their_source_fields() {
        let spec = CorpusSpec {
            n_entities: 80,
            duplicates_per_entity: DuplicateDistribution::Fixed { count: 2 },
            noise: NoiseSpec::zero(),
            confusable_rate: 0.0,
            seed: 3,
        };
        let (raws, truth) = generate_corpus(&spec).unwrap();
        assert_eq!(raws.len(), 240);
        let records = normalize_all(&raws);
        let by_id: BTreeMap<&RecordId, &CanonicalRecord> =
            records.iter().map(|r| (&r.id, r)).collect();
        for record in &records {
            if let Some((source, _)) = record.id.as_str().split_once("-d") {
                let source = &by_id[&RecordId(source.to_string())];
                assert_eq!(record.ssn, source.ssn);
                assert_eq!(record.phone_number, source.phone_number);
                assert_eq!(record.full_name, source.full_name);
                assert_eq!(record.full_address, source.full_address);
                assert_eq!(record.birth_date, source.birth_date);
                assert_eq!(
                    truth.same_entity(&record.id, &source.id),
                    Some(true)
                );
            }
        }
    }

    #[test]
    fn truth_is_total_over_generated_records() {
        let (records, truth) = generate_corpus(&small_spec()).unwrap();
        assert_eq!(records.len(), truth.len());
        for r in &records {
            assert!(truth.entity_of(&RecordId(r.id.clone())).is_some());
        }
    }

    #[test]
    fn sized_generation_hits_exact_counts() {
        for n in [1u64, 7, 100, 1537] {
            let (records, truth) = generate_corpus_sized(&small_spec(), n).unwrap();
            assert_eq!(records.len() as u64, n);
            assert_eq!(truth.len() as u64, n);
        }
    }

    #[test]
    fn sized_generation_is_a_prefix_of_itself() {
        let (long, _) = generate_corpus_sized(&small_spec(), 500).unwrap();
        let (short, _) = generate_corpus_sized(&small_spec(), 200).unwrap();
        assert_eq!(&long[..200], &short[..]);
    }

    #[test]
    fn keys_are_unique_across_entities() {
        let spec = CorpusSpec {
            n_entities: 5000,
            duplicates_per_entity: DuplicateDistribution::Geometric { mean: 0.0 },
            noise: NoiseSpec::zero(),
            ..CorpusSpec::default()
        };
        let (raws, _) = generate_corpus(&spec).unwrap();
        let records = normalize_all(&raws);
        let ssns: std::collections::BTreeSet<_> = records.iter().map(|r| r.ssn.clone()).collect();
        let phones: std::collections::BTreeSet<_> =
            records.iter().map(|r| r.phone_number.clone()).collect();
        assert_eq!(ssns.len(), 5000);
        assert_eq!(phones.len(), 5000);
        for r in &records {
            assert_eq!(r.ssn.as_ref().unwrap().len(), 9);
            assert_eq!(r.phone_number.as_ref().unwrap().len(), 10);
        }
    }

    #[test]
    fn corrupt_with_zero_noise_changes_only_the_id() {
        let mut rng = SplitMix64::new(1);
        let mut r = CanonicalRecord::new("r1");
        r.full_name = Some("ann li".into());
        r.ssn = Some("123456789".into());
        let out = corrupt_record(&r, &NoiseSpec::zero(), &mut rng);
        assert_ne!(out.id, r.id);
        assert_eq!(out.full_name, r.full_name);
        assert_eq!(out.ssn, r.ssn);
    }

    #[test]
    fn missing_rate_one_drops_every_optional_field() {
        let mut rng = SplitMix64::new(2);
        let mut r = CanonicalRecord::new("r1");
        r.ssn = Some("123456789".into());
        r.phone_number = Some("5551234567".into());
        r.full_name = Some("ann li".into());
        r.full_address = Some("1 elm st".into());
        r.birth_date = NaiveDate::from_ymd_opt(1980, 1, 1);
        let noise = NoiseSpec {
            missing_rate: 1.0,
            ..NoiseSpec::zero()
        };
        let out = corrupt_record(&r, &noise, &mut rng);
        assert!(out.ssn.is_none());
        assert!(out.phone_number.is_none());
        assert!(out.full_name.is_none());
        assert!(out.full_address.is_none());
        assert!(out.birth_date.is_none());
    }

    #[test]
    fn full_typo_rate_yields_distance_exactly_one() {
        let mut rng = SplitMix64::new(3);
        let noise = NoiseSpec {
            typo_rate: 1.0,
            date_jitter_days: 0,
            ..NoiseSpec::zero()
        };
        let mut r = CanonicalRecord::new("r1");
        r.ssn = Some("123456789".into());
        r.phone_number = Some("5551234567".into());
        r.full_name = Some("ann li".into());
        r.full_address = Some("12 maple st springfield il".into());
        for _ in 0..300 {
            let out = corrupt_record(&r, &noise, &mut rng);
            for (a, b) in [
                (&r.ssn, &out.ssn),
                (&r.phone_number, &out.phone_number),
                (&r.full_name, &out.full_name),
                (&r.full_address, &out.full_address),
            ] {
                assert_eq!(levenshtein(a.as_ref().unwrap(), b.as_ref().unwrap()), 1);
            }
            // Digit fields must stay valid under normalization rules.
            assert_eq!(out.ssn.as_ref().unwrap().len(), 9);
            assert!(out.ssn.as_ref().unwrap().chars().all(|c| c.is_ascii_digit()));
            assert!(out.phone_number.as_ref().unwrap().chars().all(|c| c.is_ascii_digit()));
        }
    }

    #[test]
    fn typos_keep_strings_normalized() {
        let mut rng = SplitMix64::new(4);
        for _ in 0..500 {
            for base in ["a b", "ann li", "x", "12 maple st springfield il"] {
                let out = typo_string(base, &mut rng);
                assert!(!out.is_empty());
                assert!(!out.contains("  "), "doubled space in {out:?}");
                assert!(!out.starts_with(' ') && !out.ends_with(' '), "edge space in {out:?}");
                assert_eq!(levenshtein(base, &out), 1, "{base:?} -> {out:?}");
            }
        }
    }

    #[test]
    fn date_jitter_stays_within_bounds() {
        let mut rng = SplitMix64::new(5);
        let noise = NoiseSpec {
            typo_rate: 1.0,
            date_jitter_days: 3,
            ..NoiseSpec::zero()
        };
        let mut r = CanonicalRecord::new("r1");
        r.birth_date = NaiveDate::from_ymd_opt(1980, 6, 15);
        let mut saw_shift = false;
        for _ in 0..200 {
            let out = corrupt_record(&r, &noise, &mut rng);
            let delta = (out.birth_date.unwrap() - r.birth_date.unwrap()).num_days();
            assert!(delta.abs() >= 1 && delta.abs() <= 3, "delta {delta}");
            saw_shift = true;
        }
        assert!(saw_shift);
    }

    #[test]
    fn typo_rate_is_statistically_honest() {
        // Corrupt 4,000 records x 4 string fields = 16,000 field draws; the
        // observed corruption rate must sit within two points of the spec.
        let mut rng = SplitMix64::new(6);
        let noise = NoiseSpec {
            typo_rate: 0.10,
            date_jitter_days: 0,
            ..NoiseSpec::zero()
        };
        let mut r = CanonicalRecord::new("r1");
        r.ssn = Some("123456789".into());
        r.phone_number = Some("5551234567".into());
        r.full_name = Some("maria garcia".into());
        r.full_address = Some("12 maple st springfield il".into());
        let mut changed = 0u32;
        let total = 16_000u32;
        for _ in 0..4000 {
            let out = corrupt_fields(&r, &noise, &mut rng);
            changed += u32::from(out.ssn != r.ssn)
                + u32::from(out.phone_number != r.phone_number)
                + u32::from(out.full_name != r.full_name)
                + u32::from(out.full_address != r.full_address);
        }
        let rate = changed as f64 / total as f64;
        assert!((rate - 0.10).abs() < 0.02, "rate {rate}");
    }

    #[test]
    fn rendered_variants_normalize_back_to_canonical() {
        let spec = CorpusSpec {
            n_entities: 150,
            duplicates_per_entity: DuplicateDistribution::Fixed { count: 1 },
            noise: NoiseSpec {
                format_variant_rate: 1.0,
                ..NoiseSpec::zero()
            },
            confusable_rate: 0.0,
            seed: 11,
        };
        let (raws, _) = generate_corpus(&spec).unwrap();
        let records = normalize_all(&raws);
        let by_id: BTreeMap<&RecordId, &CanonicalRecord> =
            records.iter().map(|r| (&r.id, r)).collect();
        // Zero field noise: every duplicate normalizes to its source's
        // values even though the raw rendering differs.
        for record in &records {
            if let Some((source, _)) = record.id.as_str().split_once("-d") {
                let source = &by_id[&RecordId(source.to_string())];
                assert_eq!(record.ssn, source.ssn);
                assert_eq!(record.full_name, source.full_name);
                assert_eq!(record.full_address, source.full_address);
            }
        }
    }

    #[test]
    fn training_pairs_honor_requested_mix() {
        let (raws, truth) = generate_corpus(&small_spec()).unwrap();
        let records = normalize_all(&raws);
        let pairs = make_training_pairs(&records, &truth, 100, 0.5, 9).unwrap();
        assert_eq!(pairs.len(), 100);
        assert_eq!(pairs.iter().filter(|p| p.label).count(), 50);
        let zeros = make_training_pairs(&records, &truth, 40, 0.0, 9).unwrap();
        assert!(zeros.iter().all(|p| !p.label));
    }

    #[test]
    fn training_pairs_are_deterministic() {
        let (raws, truth) = generate_corpus(&small_spec()).unwrap();
        let records = normalize_all(&raws);
        let a = make_training_pairs(&records, &truth, 60, 0.4, 13).unwrap();
        let b = make_training_pairs(&records, &truth, 60, 0.4, 13).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn training_pairs_fail_on_infeasible_requests() {
        let spec = CorpusSpec {
            n_entities: 5,
            duplicates_per_entity: DuplicateDistribution::Geometric { mean: 0.0 },
            noise: NoiseSpec::zero(),
            ..CorpusSpec::default()
        };
        let (raws, truth) = generate_corpus(&spec).unwrap();
        let records = normalize_all(&raws);
        // No entity has two records: positives are unsatisfiable.
        assert!(make_training_pairs(&records, &truth, 10, 0.5, 1).is_err());
        assert!(make_training_pairs(&records, &truth, 10, 0.0, 1).is_ok());
    }

    #[test]
    fn confusable_entities_share_surname_and_address() {
        let spec = CorpusSpec {
            n_entities: 2000,
            duplicates_per_entity: DuplicateDistribution::Geometric { mean: 0.0 },
            noise: NoiseSpec::zero(),
            confusable_rate: 1.0,
            seed: 21,
        };
        let (raws, _) = generate_corpus(&spec).unwrap();
        let records = normalize_all(&raws);
        let mut households = 0;
        for pair in records.windows(2) {
            let addr_same = pair[0].full_address == pair[1].full_address;
            if addr_same {
                households += 1;
                let last_a = pair[0].full_name.as_ref().unwrap().split(' ').next_back();
                let last_b = pair[1].full_name.as_ref().unwrap().split(' ').next_back();
                assert_eq!(last_a, last_b);
            }
        }
        // confusable_rate=1 chains every entity to its predecessor.
        assert_eq!(households, 1999);
    }
}
