//! Classification metrics, threshold-sensitivity sweeps, and scaling
//! benchmarks.
//!
//! "Accuracy" throughout is pairwise classification accuracy over the
//! candidate pairs produced by blocking; pairs never compared are scored by
//! `blocking_recall` instead so the two effects stay separable.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{DedupError, Result};
use crate::ml::LogisticModel;
use crate::pipeline::{assemble_golden, generate_decisions, MatchDecision, PairOutcome, PipelineConfig};
use crate::record::{normalize_record, CanonicalRecord};
use crate::synth::rng::SplitMix64;
use crate::synth::{generate_corpus_sized, CorpusSpec, GroundTruth};

mod secs {
    //! Serialize a [`Duration`] as fractional seconds.
    use super::Duration;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        d.as_secs_f64().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        if !secs.is_finite() || secs < 0.0 {
            return Err(serde::de::Error::custom("duration must be >= 0 seconds"));
        }
        Ok(Duration::from_secs_f64(secs))
    }
}

/// Classification and performance summary for one pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    /// TP / (TP + FP); 1.0 when nothing was matched.
    pub precision: f64,
    /// TP / (TP + FN) over candidate pairs; 1.0 when no candidate pair is
    /// a true duplicate.
    pub recall: f64,
    /// (TP + TN) / candidate pairs; 1.0 when there are none.
    pub accuracy: f64,
    /// FP / (FP + TN); 0.0 when no candidate pair is a true non-duplicate.
    pub false_positive_rate: f64,
    pub true_positives: u64,
    pub false_positives: u64,
    pub true_negatives: u64,
    pub false_negatives: u64,
    pub n_candidate_pairs: u64,
    /// Fraction of ground-truth duplicate pairs that shared a block and
    /// were therefore compared at all.
    pub blocking_recall: f64,
    /// End-to-end wall clock, as fractional seconds in JSON.
    #[serde(with = "secs")]
    pub latency_total: Duration,
    /// latency_total / dataset_size, in seconds.
    pub latency_per_record: f64,
    /// dataset_size / latency_total, records per second; 0 when untimed.
    pub throughput: f64,
    pub dataset_size: u64,
}

/// One grid point of a threshold-sensitivity sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta1: f64,
    pub theta2: f64,
    pub report: EvalReport,
}

// ---------------------------------------------------------------------------
// Confusion counting
// ---------------------------------------------------------------------------

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
struct Counts {
    tp: u64,
    fp: u64,
    tn: u64,
    fn_: u64,
}

impl Counts {
    fn observe(&mut self, matched: bool, same_entity: bool) {
        match (matched, same_entity) {
            (true, true) => self.tp += 1,
            (true, false) => self.fp += 1,
            (false, false) => self.tn += 1,
            (false, true) => self.fn_ += 1,
        }
    }

    fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }
}

fn ratio(num: u64, den: u64, when_empty: f64) -> f64 {
    if den == 0 {
        when_empty
    } else {
        num as f64 / den as f64
    }
}

impl EvalReport {
    fn from_counts(
        counts: Counts,
        total_true_pairs: u64,
        latency: Duration,
        dataset_size: u64,
    ) -> Self {
        let secs = latency.as_secs_f64();
        EvalReport {
            precision: ratio(counts.tp, counts.tp + counts.fp, 1.0),
            recall: ratio(counts.tp, counts.tp + counts.fn_, 1.0),
            accuracy: ratio(counts.tp + counts.tn, counts.total(), 1.0),
            false_positive_rate: ratio(counts.fp, counts.fp + counts.tn, 0.0),
            true_positives: counts.tp,
            false_positives: counts.fp,
            true_negatives: counts.tn,
            false_negatives: counts.fn_,
            n_candidate_pairs: counts.total(),
            blocking_recall: ratio(counts.tp + counts.fn_, total_true_pairs, 1.0),
            latency_total: latency,
            latency_per_record: if dataset_size == 0 { 0.0 } else { secs / dataset_size as f64 },
            throughput: if secs == 0.0 { 0.0 } else { dataset_size as f64 / secs },
            dataset_size,
        }
    }
}

/// Record-position → interned entity index, plus the number of
/// ground-truth duplicate pairs among those records.
struct EntityIndex {
    entity_of: Vec<u32>,
    total_true_pairs: u64,
}

fn index_entities(records: &[CanonicalRecord], truth: &GroundTruth) -> Result<EntityIndex> {
    let mut interned: HashMap<&str, u32> = HashMap::new();
    let mut entity_of = Vec::with_capacity(records.len());
    let mut sizes: Vec<u64> = Vec::new();
    for record in records {
        let entity = truth
            .entity_of(&record.id)
            .ok_or_else(|| DedupError::MissingTruth(record.id.clone()))?;
        let next = interned.len() as u32;
        let idx = *interned.entry(entity).or_insert(next);
        if idx as usize == sizes.len() {
            sizes.push(0);
        }
        sizes[idx as usize] += 1;
        entity_of.push(idx);
    }
    let total_true_pairs = sizes.iter().map(|&n| n * (n - 1) / 2).sum();
    Ok(EntityIndex {
        entity_of,
        total_true_pairs,
    })
}

/// Score a decision list against ground truth.
///
/// The confusion matrix covers exactly the given decisions (the candidate
/// pairs); ground-truth pairs that were never compared lower
/// `blocking_recall`, not `recall`. Latency fields are zero: timing is a
/// property of a run, not of a decision list.
pub fn pairwise_metrics(decisions: &[MatchDecision], truth: &GroundTruth) -> Result<EvalReport> {
    let mut counts = Counts::default();
    for d in decisions {
        let left = truth
            .entity_of(&d.left)
            .ok_or_else(|| DedupError::MissingTruth(d.left.clone()))?;
        let right = truth
            .entity_of(&d.right)
            .ok_or_else(|| DedupError::MissingTruth(d.right.clone()))?;
        counts.observe(d.matched, left == right);
    }
    let mut sizes: HashMap<&str, u64> = HashMap::new();
    for entity in truth.record_to_entity.values() {
        *sizes.entry(entity).or_insert(0) += 1;
    }
    let total_true_pairs = sizes.values().map(|&n| n * (n - 1) / 2).sum();
    Ok(EvalReport::from_counts(
        counts,
        total_true_pairs,
        Duration::ZERO,
        truth.len() as u64,
    ))
}

/// Run the matcher once per `(theta1, theta2)` grid point and score each
/// run. The resolver stage is switched off for every row so the numbers
/// isolate fuzzy-threshold sensitivity; `model` is accepted for signature
/// parity and passed through unused.
pub fn threshold_sweep(
    records: &[CanonicalRecord],
    truth: &GroundTruth,
    grid: &[(f64, f64)],
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(DedupError::InvalidConfig(
            "sweep grid must contain at least one threshold pair".into(),
        ));
    }
    let index = index_entities(records, truth)?;
    let mut rows = Vec::with_capacity(grid.len());
    for &(theta1, theta2) in grid {
        let mut row_cfg = cfg.clone();
        row_cfg.thresholds = crate::matchers::FuzzyThresholds::new(theta1, theta2)?;
        row_cfg.ml_enabled = false;
        let mut counts = Counts::default();
        let start = Instant::now();
        generate_decisions(records, &row_cfg, model, |o: PairOutcome| {
            counts.observe(
                o.matched,
                index.entity_of[o.left as usize] == index.entity_of[o.right as usize],
            );
        })?;
        let latency = start.elapsed();
        rows.push(SweepRow {
            theta1,
            theta2,
            report: EvalReport::from_counts(
                counts,
                index.total_true_pairs,
                latency,
                records.len() as u64,
            ),
        });
    }
    Ok(rows)
}

/// The default sensitivity grid, loose to tight.
pub const DEFAULT_SWEEP_GRID: [(f64, f64); 3] = [(0.7, 0.6), (0.8, 0.7), (0.9, 0.8)];

/// Generate a corpus at each size and push it through the full pipeline
/// (normalize, match, cluster, merge), timing each run end to end.
///
/// Each size derives its own corpus seed from the template seed, so runs
/// are reproducible yet corpora differ across sizes. Matched pairs stream
/// into the cluster/merge phase without retaining the full decision list,
/// keeping memory linear in matches rather than candidate pairs.
pub fn benchmark(
    sizes: &[u64],
    template: &CorpusSpec,
    cfg: &PipelineConfig,
    model: Option<&LogisticModel>,
) -> Result<Vec<EvalReport>> {
    if sizes.is_empty() {
        return Err(DedupError::InvalidConfig(
            "benchmark needs at least one dataset size".into(),
        ));
    }
    if sizes[0] == 0 {
        return Err(DedupError::InvalidConfig(
            "benchmark sizes must be positive".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DedupError::InvalidConfig(
            "benchmark sizes must be strictly ascending".into(),
        ));
    }
    let mut reports = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let mut spec = *template;
        spec.seed = SplitMix64::new(template.seed ^ size).next_u64();
        let (raws, truth) = generate_corpus_sized(&spec, size)?;

        let start = Instant::now();
        let records: Vec<CanonicalRecord> = raws
            .iter()
            .map(normalize_record)
            .collect::<Result<Vec<_>>>()?;
        drop(raws);
        let index = index_entities(&records, &truth)?;
        let mut counts = Counts::default();
        let mut matched: Vec<PairOutcome> = Vec::new();
        generate_decisions(&records, cfg, model, |o: PairOutcome| {
            counts.observe(
                o.matched,
                index.entity_of[o.left as usize] == index.entity_of[o.right as usize],
            );
            if o.matched {
                matched.push(o);
            }
        })?;
        let golden = assemble_golden(&records, &matched);
        let latency = start.elapsed();
        debug_assert!(golden.len() <= records.len());
        drop(golden);

        reports.push(EvalReport::from_counts(
            counts,
            index.total_true_pairs,
            latency,
            size,
        ));
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn pct(v: f64) -> String {
    format!("{:.2}", v * 100.0)
}

/// Plain-text sweep table, one row per grid point.
pub fn render_sweep_table(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "theta1  theta2  accuracy%  false_pos%  recall%  precision%  candidate_pairs\n",
    );
    for row in rows {
        let r = &row.report;
        out.push_str(&format!(
            "{:<7.2} {:<7.2} {:<10} {:<11} {:<8} {:<11} {}\n",
            row.theta1,
            row.theta2,
            pct(r.accuracy),
            pct(r.false_positive_rate),
            pct(r.recall),
            pct(r.precision),
            r.n_candidate_pairs,
        ));
    }
    out.push_str("(accuracy is pairwise, over candidate pairs produced by blocking)\n");
    out
}

/// Plain-text benchmark table, one row per dataset size.
pub fn render_report_table(reports: &[EvalReport]) -> String {
    let mut out = String::from(
        "records    latency_s  per_record_ms  throughput  accuracy%  precision%  recall%  blocking_recall%\n",
    );
    for r in reports {
        out.push_str(&format!(
            "{:<10} {:<10.2} {:<14.4} {:<11.0} {:<10} {:<11} {:<8} {}\n",
            r.dataset_size,
            r.latency_total.as_secs_f64(),
            r.latency_per_record * 1_000.0,
            r.throughput,
            pct(r.accuracy),
            pct(r.precision),
            pct(r.recall),
            pct(r.blocking_recall),
        ));
    }
    out.push_str("(accuracy is pairwise, over candidate pairs produced by blocking)\n");
    out
}

/// CSV export of sweep rows for plotting.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "theta1,theta2,precision,recall,accuracy,false_positive_rate,n_candidate_pairs\n",
    );
    for row in rows {
        let r = &row.report;
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.theta1,
            row.theta2,
            r.precision,
            r.recall,
            r.accuracy,
            r.false_positive_rate,
            r.n_candidate_pairs,
        ));
    }
    out
}

/// CSV export of benchmark reports for plotting.
pub fn reports_to_csv(reports: &[EvalReport]) -> String {
    let mut out = String::from(
        "dataset_size,latency_s,throughput,precision,recall,accuracy,false_positive_rate,blocking_recall,n_candidate_pairs\n",
    );
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.dataset_size,
            r.latency_total.as_secs_f64(),
            r.throughput,
            r.precision,
            r.recall,
            r.accuracy,
            r.false_positive_rate,
            r.blocking_recall,
            r.n_candidate_pairs,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{run_pipeline, MatchStage};
    use crate::record::RecordId;
    use crate::synth::{generate_corpus, DuplicateDistribution, NoiseSpec};
    use std::collections::BTreeMap;

    fn truth_of(pairs: &[(&str, &str)]) -> GroundTruth {
        GroundTruth {
            record_to_entity: pairs
                .iter()
                .map(|(r, e)| (RecordId::new(*r), e.to_string()))
                .collect(),
        }
    }

    fn decision(left: &str, right: &str, matched: bool) -> MatchDecision {
        MatchDecision {
            left: RecordId::new(left),
            right: RecordId::new(right),
            matched,
            stage: if matched { MatchStage::Fuzzy } else { MatchStage::None },
            score: None,
        }
    }

    #[test]
    fn perfect_decisions_score_perfectly() {
        let truth = truth_of(&[("a", "e1"), ("b", "e1"), ("c", "e2")]);
        let decisions = vec![
            decision("a", "b", true),
            decision("a", "c", false),
            decision("b", "c", false),
        ];
        let r = pairwise_metrics(&decisions, &truth).unwrap();
        assert_eq!(r.precision, 1.0);
        assert_eq!(r.recall, 1.0);
        assert_eq!(r.accuracy, 1.0);
        assert_eq!(r.false_positive_rate, 0.0);
        assert_eq!(r.blocking_recall, 1.0);
        assert_eq!(r.n_candidate_pairs, 3);
        assert_eq!(r.dataset_size, 3);
    }

    #[test]
    fn single_true_match_gives_full_recall() {
        let truth = truth_of(&[("a", "e1"), ("b", "e1")]);
        let r = pairwise_metrics(&[decision("a", "b", true)], &truth).unwrap();
        assert_eq!(r.true_positives, 1);
        assert_eq!(r.recall, 1.0);
    }

    #[test]
    fn hand_enumerated_confusion_matrix() {
        // Entities: e1 = {a,b,c}, e2 = {d}, e3 = {f}, e4 = {g,h}.
        // Decisions: TP (a,b), (a,c); FN (b,c); FP (d,f);
        // TN (a,d), (a,f), (a,g), (b,d), (c,f), (d,g).
        let truth = truth_of(&[
            ("a", "e1"),
            ("b", "e1"),
            ("c", "e1"),
            ("d", "e2"),
            ("f", "e3"),
            ("g", "e4"),
            ("h", "e4"),
        ]);
        let decisions = vec![
            decision("a", "b", true),
            decision("a", "c", true),
            decision("b", "c", false),
            decision("d", "f", true),
            decision("a", "d", false),
            decision("a", "f", false),
            decision("a", "g", false),
            decision("b", "d", false),
            decision("c", "f", false),
            decision("d", "g", false),
        ];
        let r = pairwise_metrics(&decisions, &truth).unwrap();
        assert_eq!(
            (r.true_positives, r.false_positives, r.true_negatives, r.false_negatives),
            (2, 1, 6, 1)
        );
        assert!((r.precision - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.recall - 2.0 / 3.0).abs() < 1e-12);
        assert!((r.accuracy - 0.8).abs() < 1e-12);
        assert!((r.false_positive_rate - 1.0 / 7.0).abs() < 1e-12);
        // e1 holds 3 true pairs, e4 one: 3 of 4 were ever compared.
        assert!((r.blocking_recall - 3.0 / 4.0).abs() < 1e-12);
    }

    #[test]
    fn empty_decision_list_uses_conventions() {
        let truth = truth_of(&[("a", "e1")]);
        let r = pairwise_metrics(&[], &truth).unwrap();
        assert_eq!(r.precision, 1.0);
        assert_eq!(r.recall, 1.0);
        assert_eq!(r.accuracy, 1.0);
        assert_eq!(r.false_positive_rate, 0.0);
        assert_eq!(r.throughput, 0.0);
    }

    #[test]
    fn unknown_record_id_is_an_error() {
        let truth = truth_of(&[("a", "e1")]);
        let err = pairwise_metrics(&[decision("a", "zz", false)], &truth).unwrap_err();
        assert!(matches!(err, DedupError::MissingTruth(_)));
    }

    #[test]
    fn counts_always_sum_to_candidate_pairs() {
        let truth = truth_of(&[("a", "e1"), ("b", "e1"), ("c", "e2"), ("d", "e3")]);
        let decisions = vec![
            decision("a", "b", true),
            decision("a", "c", true),
            decision("c", "d", false),
        ];
        let r = pairwise_metrics(&decisions, &truth).unwrap();
        assert_eq!(
            r.true_positives + r.false_positives + r.true_negatives + r.false_negatives,
            r.n_candidate_pairs
        );
    }

    fn sweep_fixture() -> (Vec<CanonicalRecord>, GroundTruth) {
        let spec = CorpusSpec {
            n_entities: 400,
            seed: 99,
            ..CorpusSpec::default()
        };
        let (raws, truth) = generate_corpus(&spec).unwrap();
        let records = raws.iter().map(|r| normalize_record(r).unwrap()).collect();
        (records, truth)
    }

    #[test]
    fn sweep_produces_one_row_per_grid_point() {
        let (records, truth) = sweep_fixture();
        let cfg = PipelineConfig::default();
        let rows = threshold_sweep(&records, &truth, &[(0.8, 0.7)], &cfg, None).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].theta1, 0.8);
        assert!(threshold_sweep(&records, &truth, &[], &cfg, None).is_err());
    }

    #[test]
    fn sweep_trends_are_monotone_on_default_grid() {
        let (records, truth) = sweep_fixture();
        let cfg = PipelineConfig::default();
        let rows =
            threshold_sweep(&records, &truth, &DEFAULT_SWEEP_GRID, &cfg, None).unwrap();
        assert_eq!(rows.len(), 3);
        for pair in rows.windows(2) {
            assert!(pair[1].report.recall <= pair[0].report.recall + 1e-12);
            assert!(
                pair[1].report.false_positive_rate
                    <= pair[0].report.false_positive_rate + 1e-12
            );
        }
    }

    #[test]
    fn vacuous_thresholds_match_every_fully_populated_candidate() {
        // Zero noise: every record keeps its name and address, so at
        // thresholds (0,0) no candidate pair can fail the fuzzy stage.
        let spec = CorpusSpec {
            n_entities: 200,
            duplicates_per_entity: DuplicateDistribution::Fixed { count: 1 },
            noise: NoiseSpec::zero(),
            confusable_rate: 0.1,
            seed: 12,
        };
        let (raws, truth) = generate_corpus(&spec).unwrap();
        let records: Vec<CanonicalRecord> =
            raws.iter().map(|r| normalize_record(r).unwrap()).collect();
        let rows = threshold_sweep(
            &records,
            &truth,
            &[(0.0, 0.0)],
            &PipelineConfig::default(),
            None,
        )
        .unwrap();
        let r = &rows[0].report;
        assert_eq!(r.false_negatives, 0);
        assert_eq!(r.true_negatives, 0);
        assert!(r.n_candidate_pairs > 0);
    }

    #[test]
    fn sweep_counts_agree_with_decision_scoring() {
        // The streaming accumulator and the decision-list path must
        // produce the same confusion matrix.
        let (records, truth) = sweep_fixture();
        let mut cfg = PipelineConfig::default();
        cfg.thresholds = crate::matchers::FuzzyThresholds::new(0.8, 0.7).unwrap();
        cfg.ml_enabled = false;
        let rows = threshold_sweep(&records, &truth, &[(0.8, 0.7)], &cfg, None).unwrap();
        let (_, decisions) = run_pipeline(&records, &cfg, None).unwrap();
        let direct = pairwise_metrics(&decisions, &truth).unwrap();
        let swept = &rows[0].report;
        assert_eq!(swept.true_positives, direct.true_positives);
        assert_eq!(swept.false_positives, direct.false_positives);
        assert_eq!(swept.true_negatives, direct.true_negatives);
        assert_eq!(swept.false_negatives, direct.false_negatives);
        assert_eq!(swept.recall, direct.recall);
    }

    #[test]
    fn sweep_classification_is_deterministic() {
        let (records, truth) = sweep_fixture();
        let cfg = PipelineConfig::default();
        let a = threshold_sweep(&records, &truth, &DEFAULT_SWEEP_GRID, &cfg, None).unwrap();
        let b = threshold_sweep(&records, &truth, &DEFAULT_SWEEP_GRID, &cfg, None).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.report.n_candidate_pairs, y.report.n_candidate_pairs);
            assert_eq!(x.report.true_positives, y.report.true_positives);
            assert_eq!(x.report.false_positives, y.report.false_positives);
        }
    }

    #[test]
    fn benchmark_reports_each_requested_size() {
        let template = CorpusSpec {
            seed: 5,
            ..CorpusSpec::default()
        };
        let mut cfg = PipelineConfig::default();
        cfg.ml_enabled = false;
        let reports = benchmark(&[500, 1200], &template, &cfg, None).unwrap();
        assert_eq!(reports.len(), 2);
        assert_eq!(reports[0].dataset_size, 500);
        assert_eq!(reports[1].dataset_size, 1200);
        for r in &reports {
            let secs = r.latency_total.as_secs_f64();
            assert!(secs > 0.0);
            assert!((r.throughput - r.dataset_size as f64 / secs).abs() < 1e-6);
            for v in [r.precision, r.recall, r.accuracy, r.false_positive_rate] {
                assert!((0.0..=1.0).contains(&v));
            }
        }
    }

    #[test]
    fn benchmark_rejects_bad_size_lists() {
        let template = CorpusSpec::default();
        let mut cfg = PipelineConfig::default();
        cfg.ml_enabled = false;
        assert!(benchmark(&[], &template, &cfg, None).is_err());
        assert!(benchmark(&[0, 5], &template, &cfg, None).is_err());
        assert!(benchmark(&[100, 100], &template, &cfg, None).is_err());
        assert!(benchmark(&[200, 100], &template, &cfg, None).is_err());
    }

    #[test]
    fn benchmark_sizes_draw_distinct_corpus_seeds() {
        let t = CorpusSpec::default();
        let a = SplitMix64::new(t.seed ^ 500).next_u64();
        let b = SplitMix64::new(t.seed ^ 1200).next_u64();
        assert_ne!(a, b);
    }

    #[test]
    fn report_round_trips_through_json() {
        let truth = truth_of(&[("a", "e1"), ("b", "e1")]);
        let r = pairwise_metrics(&[decision("a", "b", true)], &truth).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: EvalReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn tables_render_one_line_per_row() {
        let truth = truth_of(&[("a", "e1"), ("b", "e1")]);
        let report = pairwise_metrics(&[decision("a", "b", true)], &truth).unwrap();
        let rows = vec![
            SweepRow { theta1: 0.7, theta2: 0.6, report: report.clone() },
            SweepRow { theta1: 0.9, theta2: 0.8, report: report.clone() },
        ];
        let table = render_sweep_table(&rows);
        assert_eq!(table.lines().count(), 4);
        assert!(table.starts_with("theta1"));
        let bench = render_report_table(std::slice::from_ref(&report));
        assert_eq!(bench.lines().count(), 3);
        assert!(sweep_to_csv(&rows).lines().count() == 3);
        assert!(reports_to_csv(std::slice::from_ref(&report)).lines().count() == 2);
    }

    #[test]
    fn truth_sizes_count_all_records_not_just_decided_ones() {
        let mut map = BTreeMap::new();
        for (r, e) in [("a", "e1"), ("b", "e1"), ("c", "e1")] {
            map.insert(RecordId::new(r), e.to_string());
        }
        let truth = GroundTruth { record_to_entity: map };
        // Only one of e1's three true pairs appears in the decisions.
        let r = pairwise_metrics(&[decision("a", "b", true)], &truth).unwrap();
        assert!((r.blocking_recall - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.recall, 1.0);
    }
}
