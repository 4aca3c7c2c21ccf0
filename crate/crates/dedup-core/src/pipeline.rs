//! End-to-end dedup pipeline: blocking, the staged match function,
//! transitive clustering, and survivorship merging into golden records.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{DedupError, Result};
use crate::matchers::{levenshtein_bytes_with, levenshtein_slices, FuzzyThresholds};
use crate::ml::{FeatureVector, LogisticModel};
use crate::record::{completeness_score, CanonicalRecord, RecordId};
use crate::union_find::UnionFind;

/// Hard cap on block membership; larger blocks are split deterministically.
pub const MAX_BLOCK_SIZE: usize = 1024;

/// Pairs evaluated per parallel batch before results are flushed in order.
const BATCH_PAIR_BUDGET: u64 = 2_000_000;

/// Candidate-generation strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockingStrategy {
    /// First four characters of the name.
    NamePrefix,
    /// First six digits of the phone number.
    PhonePrefix,
    /// Exact SSN.
    SsnExact,
    /// Union of all three key families.
    Composite,
}

impl std::str::FromStr for BlockingStrategy {
    type Err = DedupError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "name_prefix" => Ok(BlockingStrategy::NamePrefix),
            "phone_prefix" => Ok(BlockingStrategy::PhonePrefix),
            "ssn_exact" => Ok(BlockingStrategy::SsnExact),
            "composite" => Ok(BlockingStrategy::Composite),
            other => Err(DedupError::InvalidConfig(format!(
                "unknown blocking strategy {other:?} (expected name_prefix, \
                 phone_prefix, ssn_exact, or composite)"
            ))),
        }
    }
}

/// Opaque, deterministic block label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockKey(pub String);

/// Which stage decided a pair, `None` when every stage declined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchStage {
    Deterministic,
    Fuzzy,
    Ml,
    None,
}

/// Outcome of the match function for one candidate pair.
///
/// `(left, right)` are stored in canonical order: lexicographically by id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchDecision {
    pub left: RecordId,
    pub right: RecordId,
    pub matched: bool,
    pub stage: MatchStage,
    /// Similarity or probability evidence from the deciding stage; absent
    /// when no stage computed one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
}

/// Records judged to refer to one real-world entity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuplicateCluster {
    pub member_ids: BTreeSet<RecordId>,
    /// The matched decisions connecting the members.
    pub evidence: Vec<MatchDecision>,
}

/// Merged survivor for a cluster, with per-field provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenRecord {
    pub survivor: CanonicalRecord,
    /// Source record for every present survivor field.
    pub field_sources: BTreeMap<String, RecordId>,
    pub cluster: DuplicateCluster,
}

/// Pipeline settings: stage thresholds, blocking, and the ML toggle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub thresholds: FuzzyThresholds,
    /// Probability threshold applied at the ML stage.
    pub tau: f64,
    pub blocking: BlockingStrategy,
    pub ml_enabled: bool,
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        self.thresholds.validate()?;
        if !self.tau.is_finite() || self.tau <= 0.0 || self.tau >= 1.0 {
            return Err(DedupError::InvalidConfig(format!(
                "tau must lie strictly between 0 and 1, got {}",
                self.tau
            )));
        }
        Ok(())
    }
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            thresholds: FuzzyThresholds::default(),
            tau: 0.5,
            blocking: BlockingStrategy::Composite,
            ml_enabled: true,
        }
    }
}

// ---------------------------------------------------------------------------
// Blocking
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KeyField {
    Name,
    Phone,
    Ssn,
}

impl KeyField {
    fn tag(self) -> &'static str {
        match self {
            KeyField::Name => "name",
            KeyField::Phone => "phone",
            KeyField::Ssn => "ssn",
        }
    }

    fn base_prefix_len(self) -> usize {
        match self {
            KeyField::Name => 4,
            KeyField::Phone => 6,
            KeyField::Ssn => usize::MAX,
        }
    }

    fn value(self, r: &CanonicalRecord) -> Option<&str> {
        match self {
            KeyField::Name => r.full_name.as_deref(),
            KeyField::Phone => r.phone_number.as_deref(),
            KeyField::Ssn => r.ssn.as_deref(),
        }
    }
}

fn strategy_fields(strategy: BlockingStrategy) -> &'static [KeyField] {
    match strategy {
        BlockingStrategy::NamePrefix => &[KeyField::Name],
        BlockingStrategy::PhonePrefix => &[KeyField::Phone],
        BlockingStrategy::SsnExact => &[KeyField::Ssn],
        BlockingStrategy::Composite => &[KeyField::Name, KeyField::Phone, KeyField::Ssn],
    }
}

fn char_prefix(s: &str, n: usize) -> &str {
    match s.char_indices().nth(n) {
        Some((byte, _)) => &s[..byte],
        None => s,
    }
}

/// Group records by key prefix at `len` chars of the field value.
fn group_by_prefix(records: &[CanonicalRecord], field: KeyField, members: &[u32], len: usize) -> BTreeMap<String, Vec<u32>> {
    let mut groups: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    for &idx in members {
        // Missing values cannot reach here: residual blocks never regroup.
        let value = field.value(&records[idx as usize]).unwrap_or("");
        groups.entry(char_prefix(value, len).to_string()).or_default().push(idx);
    }
    groups
}

/// Emit `members` under `label`, chunked to the size cap.
fn emit_chunked(out: &mut BTreeMap<BlockKey, Vec<u32>>, label: String, members: Vec<u32>) {
    if members.len() <= MAX_BLOCK_SIZE {
        out.insert(BlockKey(label), members);
        return;
    }
    for (i, chunk) in members.chunks(MAX_BLOCK_SIZE).enumerate() {
        out.insert(BlockKey(format!("{label}\u{1}#{i}")), chunk.to_vec());
    }
}

/// Index-level blocking: the post-split map the pair generator consumes.
pub(crate) fn block_records_indexed(
    records: &[CanonicalRecord],
    strategy: BlockingStrategy,
) -> BTreeMap<BlockKey, Vec<u32>> {
    let mut out: BTreeMap<BlockKey, Vec<u32>> = BTreeMap::new();
    for &field in strategy_fields(strategy) {
        let mut keyed: BTreeMap<String, Vec<u32>> = BTreeMap::new();
        let mut residual: Vec<u32> = Vec::new();
        for (idx, record) in records.iter().enumerate() {
            match field.value(record) {
                Some(value) => {
                    let key = char_prefix(value, field.base_prefix_len()).to_string();
                    keyed.entry(key).or_default().push(idx as u32);
                }
                None => residual.push(idx as u32),
            }
        }
        if !residual.is_empty() {
            emit_chunked(&mut out, format!("{}:r", field.tag()), residual);
        }

        // Oversized keyed blocks split by extending the key prefix; when
        // the underlying values are exhausted, fall back to chunking.
        let mut work: Vec<(String, usize, Vec<u32>)> = keyed
            .into_iter()
            .map(|(key, members)| (key, field.base_prefix_len(), members))
            .collect();
        while let Some((key, prefix_len, members)) = work.pop() {
            let label = format!("{}:k:{key}", field.tag());
            if members.len() <= MAX_BLOCK_SIZE {
                out.insert(BlockKey(label), members);
                continue;
            }
            let extendable = members.iter().any(|&idx| {
                field
                    .value(&records[idx as usize])
                    .is_some_and(|v| v.chars().count() > prefix_len)
            });
            if !extendable || prefix_len == usize::MAX {
                emit_chunked(&mut out, label, members);
                continue;
            }
            let next_len = prefix_len.saturating_add(2);
            for (key, members) in group_by_prefix(records, field, &members, next_len) {
                work.push((key, next_len, members));
            }
        }
    }
    out
}

/// Candidate blocks for a corpus: every record lands in at least one block
/// per applicable key family, records missing the key in a residual block.
/// Blocks over the size cap are split deterministically.
pub fn block_records(
    records: &[CanonicalRecord],
    strategy: BlockingStrategy,
) -> BTreeMap<BlockKey, Vec<RecordId>> {
    block_records_indexed(records, strategy)
        .into_iter()
        .map(|(key, members)| {
            let ids = members
                .iter()
                .map(|&idx| records[idx as usize].id.clone())
                .collect();
            (key, ids)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Pair evaluation
// ---------------------------------------------------------------------------

/// Per-record data precomputed once so pair evaluation stays allocation-free.
struct Prepared<'a> {
    ssn: Option<&'a str>,
    phone: Option<&'a str>,
    name: Option<&'a str>,
    /// Sorted, deduplicated address tokens; `None` when the address is absent.
    tokens: Option<Vec<String>>,
    /// Birth date as a day number.
    dob_days: Option<i64>,
}

fn prepare(record: &CanonicalRecord) -> Prepared<'_> {
    Prepared {
        ssn: record.ssn.as_deref(),
        phone: record.phone_number.as_deref(),
        name: record.full_name.as_deref(),
        tokens: record.full_address.as_deref().map(|addr| {
            let set = crate::matchers::tokenize_address(addr);
            set.into_iter().collect()
        }),
        dob_days: record.birth_date.map(|d| {
            chrono::Datelike::num_days_from_ce(&d) as i64
        }),
    }
}

/// Jaccard over sorted deduplicated token slices; agrees exactly with the
/// set-based form.
fn jaccard_sorted(a: &[String], b: &[String]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    let mut i = 0;
    let mut j = 0;
    let mut intersection = 0usize;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                intersection += 1;
                i += 1;
                j += 1;
            }
        }
    }
    let union = a.len() + b.len() - intersection;
    intersection as f64 / union as f64
}

/// Edit distance plus the longer char length, sharing `row` as scratch.
fn distance_and_longest(a: &str, b: &str, row: &mut Vec<usize>) -> (usize, usize) {
    if a.is_ascii() && b.is_ascii() {
        let longest = a.len().max(b.len());
        let d = if a == b {
            0
        } else {
            levenshtein_bytes_with(a.as_bytes(), b.as_bytes(), row)
        };
        (d, longest)
    } else {
        let av: Vec<char> = a.chars().collect();
        let bv: Vec<char> = b.chars().collect();
        let longest = av.len().max(bv.len());
        (levenshtein_slices(&av, &bv, row), longest)
    }
}

/// Decision payload before ids are attached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct PairOutcome {
    pub left: u32,
    pub right: u32,
    pub matched: bool,
    pub stage: MatchStage,
    pub score: Option<f64>,
}

/// The staged match function over prepared records.
fn evaluate_prepared(
    a: &Prepared<'_>,
    b: &Prepared<'_>,
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
    row: &mut Vec<usize>,
) -> (bool, MatchStage, Option<f64>) {
    let ssn_equal = matches!((a.ssn, b.ssn), (Some(x), Some(y)) if x == y);
    let phone_equal = matches!((a.phone, b.phone), (Some(x), Some(y)) if x == y);
    if ssn_equal || phone_equal {
        return (true, MatchStage::Deterministic, None);
    }

    let mut fuzzy_score = None;
    let mut name_distance = None;
    if let (Some(name_a), Some(name_b), Some(tokens_a), Some(tokens_b)) =
        (a.name, b.name, &a.tokens, &b.tokens)
    {
        let (d, longest) = distance_and_longest(name_a, name_b, row);
        name_distance = Some(d);
        let name_sim = if longest == 0 {
            1.0
        } else {
            1.0 - d as f64 / longest as f64
        };
        let addr_sim = jaccard_sorted(tokens_a, tokens_b);
        fuzzy_score = Some(name_sim.min(addr_sim));
        if name_sim >= cfg.thresholds.theta1 && addr_sim >= cfg.thresholds.theta2 {
            return (true, MatchStage::Fuzzy, fuzzy_score);
        }
    }

    if cfg.ml_enabled {
        let model = model.expect("ml_enabled requires a model; validated upstream");
        let name_distance = match name_distance {
            Some(d) => d as f64,
            None => {
                let (d, _) =
                    distance_and_longest(a.name.unwrap_or(""), b.name.unwrap_or(""), row);
                d as f64
            }
        };
        let address_jaccard = match (&a.tokens, &b.tokens) {
            (Some(x), Some(y)) => jaccard_sorted(x, y),
            _ => 0.0,
        };
        let dob_diff_days = match (a.dob_days, b.dob_days) {
            (Some(x), Some(y)) => (x - y).abs() as f64,
            _ => 0.0,
        };
        let features = FeatureVector {
            name_distance,
            address_jaccard,
            dob_diff_days,
            // Both necessarily 0 here: equal keys would have matched at the
            // deterministic stage and never reached the resolver.
            ssn_equal: 0.0,
            phone_equal: 0.0,
        };
        let p = model.predict_probability(&features);
        if p >= cfg.tau {
            return (true, MatchStage::Ml, Some(p));
        }
        return (false, MatchStage::None, Some(p));
    }

    (false, MatchStage::None, fuzzy_score)
}

/// The staged match function for one pair: deterministic keys first, fuzzy
/// similarity second, the ML resolver last (when enabled), each stage
/// short-circuiting the rest. The ML stage thresholds at `cfg.tau`.
pub fn match_pair(
    left: &CanonicalRecord,
    right: &CanonicalRecord,
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
) -> Result<MatchDecision> {
    if left.id == right.id {
        return Err(DedupError::SelfPair(left.id.clone()));
    }
    cfg.validate()?;
    if cfg.ml_enabled && model.is_none() {
        return Err(DedupError::InvalidConfig(
            "ml_enabled requires a trained model".into(),
        ));
    }
    let a = prepare(left);
    let b = prepare(right);
    let mut row = Vec::new();
    let (matched, stage, score) = evaluate_prepared(&a, &b, cfg, model, &mut row);
    let (left_id, right_id) = if left.id <= right.id {
        (left.id.clone(), right.id.clone())
    } else {
        (right.id.clone(), left.id.clone())
    };
    Ok(MatchDecision {
        left: left_id,
        right: right_id,
        matched,
        stage,
        score,
    })
}

/// Run the match function over every candidate pair, feeding `sink` in a
/// deterministic order. Each pair sharing several blocks is evaluated once,
/// in the lowest-indexed shared block.
pub(crate) fn generate_decisions<F: FnMut(PairOutcome)>(
    records: &[CanonicalRecord],
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
    mut sink: F,
) -> Result<()> {
    cfg.validate()?;
    if cfg.ml_enabled && model.is_none() {
        return Err(DedupError::InvalidConfig(
            "ml_enabled requires a trained model".into(),
        ));
    }
    if records.len() > u32::MAX as usize {
        return Err(DedupError::InvalidConfig(
            "corpus exceeds the supported record count".into(),
        ));
    }

    let blocks: Vec<Vec<u32>> = block_records_indexed(records, cfg.blocking)
        .into_values()
        .collect();
    let mut record_blocks: Vec<Vec<u32>> = vec![Vec::new(); records.len()];
    for (block_idx, members) in blocks.iter().enumerate() {
        for &r in members {
            record_blocks[r as usize].push(block_idx as u32);
        }
    }

    let prepared: Vec<Prepared<'_>> = records.iter().map(prepare).collect();

    // First shared element of two ascending block-index lists.
    let first_shared = |a: &[u32], b: &[u32]| -> Option<u32> {
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(a[i]),
            }
        }
        None
    };

    let evaluate_block = |block_idx: usize| -> Vec<PairOutcome> {
        let members = &blocks[block_idx];
        let mut row = Vec::new();
        let mut out = Vec::new();
        for (pos, &i) in members.iter().enumerate() {
            for &j in &members[pos + 1..] {
                let shared = first_shared(&record_blocks[i as usize], &record_blocks[j as usize]);
                if shared != Some(block_idx as u32) {
                    continue;
                }
                let (matched, stage, score) = evaluate_prepared(
                    &prepared[i as usize],
                    &prepared[j as usize],
                    cfg,
                    model,
                    &mut row,
                );
                out.push(PairOutcome {
                    left: i,
                    right: j,
                    matched,
                    stage,
                    score,
                });
            }
        }
        out
    };

    // Batch blocks to a bounded pair budget, evaluate each batch in
    // parallel, then flush in block order so the stream is deterministic.
    let mut batch: Vec<usize> = Vec::new();
    let mut batch_pairs: u64 = 0;
    let flush = |batch: &mut Vec<usize>, sink: &mut F| {
        let results: Vec<Vec<PairOutcome>> =
            batch.par_iter().map(|&b| evaluate_block(b)).collect();
        for block in results {
            for outcome in block {
                sink(outcome);
            }
        }
        batch.clear();
    };
    for (block_idx, members) in blocks.iter().enumerate() {
        let m = members.len() as u64;
        if m < 2 {
            continue;
        }
        let pairs = m * (m - 1) / 2;
        if batch_pairs + pairs > BATCH_PAIR_BUDGET && !batch.is_empty() {
            flush(&mut batch, &mut sink);
            batch_pairs = 0;
        }
        batch.push(block_idx);
        batch_pairs += pairs;
    }
    if !batch.is_empty() {
        flush(&mut batch, &mut sink);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Clustering and merging
// ---------------------------------------------------------------------------

pub(crate) fn outcome_to_decision(records: &[CanonicalRecord], o: &PairOutcome) -> MatchDecision {
    let id_l = &records[o.left as usize].id;
    let id_r = &records[o.right as usize].id;
    let (left, right) = if id_l <= id_r {
        (id_l.clone(), id_r.clone())
    } else {
        (id_r.clone(), id_l.clone())
    };
    MatchDecision {
        left,
        right,
        matched: o.matched,
        stage: o.stage,
        score: o.score,
    }
}

/// Transitive closure over matched decisions. The id universe is the set of
/// ids appearing in `decisions`; records never paired by blocking gain their
/// singleton clusters in [`run_pipeline`].
pub fn cluster_matches(decisions: &[MatchDecision]) -> Vec<DuplicateCluster> {
    let mut ids: BTreeSet<&RecordId> = BTreeSet::new();
    for d in decisions {
        ids.insert(&d.left);
        ids.insert(&d.right);
    }
    let ids: Vec<&RecordId> = ids.into_iter().collect();
    let index: HashMap<&RecordId, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();

    let mut uf = UnionFind::new(ids.len());
    for d in decisions {
        if d.matched {
            uf.union(index[&d.left], index[&d.right]);
        }
    }
    let groups = uf.groups();
    let group_of: HashMap<usize, usize> = groups
        .iter()
        .enumerate()
        .flat_map(|(g, members)| members.iter().map(move |&m| (m, g)))
        .collect();

    let mut clusters: Vec<DuplicateCluster> = groups
        .iter()
        .map(|members| DuplicateCluster {
            member_ids: members.iter().map(|&m| ids[m].clone()).collect(),
            evidence: Vec::new(),
        })
        .collect();
    for d in decisions {
        if d.matched {
            clusters[group_of[&index[&d.left]]].evidence.push(d.clone());
        }
    }
    clusters
}

fn golden_id(member_ids: &BTreeSet<RecordId>) -> RecordId {
    let mut hasher = Sha256::new();
    for id in member_ids {
        hasher.update(id.0.as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(17);
    hex.push('g');
    for byte in &digest[..8] {
        hex.push_str(&format!("{byte:02x}"));
    }
    RecordId(hex)
}

/// True when `a` beats `b` as a field source: more recent source timestamp
/// first (a present timestamp beats a missing one), then higher
/// completeness, then the smaller id.
fn better_source(a: &CanonicalRecord, b: &CanonicalRecord) -> bool {
    match (a.source_timestamp, b.source_timestamp) {
        (Some(x), Some(y)) if x != y => return x > y,
        (Some(_), None) => return true,
        (None, Some(_)) => return false,
        _ => {}
    }
    let (ca, cb) = (completeness_score(a), completeness_score(b));
    if ca != cb {
        return ca > cb;
    }
    a.id < b.id
}

fn merge_members(cluster: DuplicateCluster, members: &[&CanonicalRecord]) -> GoldenRecord {
    let mut sorted: Vec<&CanonicalRecord> = members.to_vec();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));

    let mut survivor = CanonicalRecord::new(golden_id(&cluster.member_ids).0);
    survivor.source_id = "merged".to_string();
    survivor.source_timestamp = sorted.iter().filter_map(|r| r.source_timestamp).max();
    let mut field_sources: BTreeMap<String, RecordId> = BTreeMap::new();

    // Pick the best source holding each field; iteration order plus a
    // strict comparator makes the choice independent of enumeration order.
    let mut pick = |field: &str, present: &dyn Fn(&CanonicalRecord) -> bool| {
        let mut best: Option<&CanonicalRecord> = None;
        for &r in &sorted {
            if present(r) && best.is_none_or(|current| better_source(r, current)) {
                best = Some(r);
            }
        }
        if let Some(src) = best {
            field_sources.insert(field.to_string(), src.id.clone());
        }
        best
    };

    if let Some(src) = pick("ssn", &|r| r.ssn.is_some()) {
        survivor.ssn = src.ssn.clone();
    }
    if let Some(src) = pick("phone_number", &|r| r.phone_number.is_some()) {
        survivor.phone_number = src.phone_number.clone();
    }
    if let Some(src) = pick("full_name", &|r| r.full_name.is_some()) {
        survivor.full_name = src.full_name.clone();
    }
    if let Some(src) = pick("full_address", &|r| r.full_address.is_some()) {
        survivor.full_address = src.full_address.clone();
    }
    if let Some(src) = pick("birth_date", &|r| r.birth_date.is_some()) {
        survivor.birth_date = src.birth_date;
    }
    let extra_keys: BTreeSet<&String> = sorted.iter().flat_map(|r| r.extra.keys()).collect();
    for key in extra_keys {
        if let Some(src) = pick(key, &|r| r.extra.contains_key(key)) {
            survivor
                .extra
                .insert(key.clone(), src.extra[key].clone());
        }
    }

    GoldenRecord {
        survivor,
        field_sources,
        cluster,
    }
}

/// Survivorship merge of one cluster. Per field: absent values are
/// discarded, then the most recent source wins, then the most complete,
/// then the lexicographically smallest id.
pub fn merge_cluster(
    cluster: &DuplicateCluster,
    records: &HashMap<RecordId, CanonicalRecord>,
) -> Result<GoldenRecord> {
    let mut members = Vec::with_capacity(cluster.member_ids.len());
    for id in &cluster.member_ids {
        let record = records
            .get(id)
            .ok_or_else(|| DedupError::UnknownId(id.clone()))?;
        members.push(record);
    }
    Ok(merge_members(cluster.clone(), &members))
}

/// Cluster matched pairs transitively and merge each cluster, covering
/// every record (unmatched records become singleton clusters). Golden
/// records are ordered by smallest member id.
pub(crate) fn assemble_golden(
    records: &[CanonicalRecord],
    matched: &[PairOutcome],
) -> Vec<GoldenRecord> {
    let mut uf = UnionFind::new(records.len());
    for o in matched {
        uf.union(o.left as usize, o.right as usize);
    }
    let groups = uf.groups();
    let mut group_of: Vec<u32> = vec![0; records.len()];
    for (g, members) in groups.iter().enumerate() {
        for &m in members {
            group_of[m] = g as u32;
        }
    }

    let mut evidence: Vec<Vec<MatchDecision>> = vec![Vec::new(); groups.len()];
    for o in matched {
        evidence[group_of[o.left as usize] as usize].push(outcome_to_decision(records, o));
    }
    let mut golden: Vec<GoldenRecord> = groups
        .into_iter()
        .zip(evidence)
        .map(|(members, mut evidence)| {
            evidence.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
            let cluster = DuplicateCluster {
                member_ids: members.iter().map(|&m| records[m].id.clone()).collect(),
                evidence,
            };
            let refs: Vec<&CanonicalRecord> = members.iter().map(|&m| &records[m]).collect();
            merge_members(cluster, &refs)
        })
        .collect();
    golden.sort_by(|a, b| {
        a.cluster
            .member_ids
            .first()
            .cmp(&b.cluster.member_ids.first())
    });
    golden
}

/// Full pipeline: block, match every candidate pair, cluster transitively,
/// and merge each cluster into a golden record.
///
/// Decisions cover exactly the candidate pairs blocking produced, in
/// canonical (left, right) order. The model is required iff `ml_enabled`.
pub fn run_pipeline(
    records: &[CanonicalRecord],
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
) -> Result<(Vec<GoldenRecord>, Vec<MatchDecision>)> {
    let mut seen: HashSet<&str> = HashSet::with_capacity(records.len());
    for r in records {
        if !seen.insert(r.id.0.as_str()) {
            return Err(DedupError::DuplicateId(r.id.clone()));
        }
    }

    let mut outcomes: Vec<PairOutcome> = Vec::new();
    generate_decisions(records, cfg, model, |o| outcomes.push(o))?;

    let mut decisions: Vec<MatchDecision> = outcomes
        .iter()
        .map(|o| outcome_to_decision(records, o))
        .collect();
    decisions.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));

    let matched: Vec<PairOutcome> = outcomes.into_iter().filter(|o| o.matched).collect();
    let golden = assemble_golden(records, &matched);
    Ok((golden, decisions))
}
