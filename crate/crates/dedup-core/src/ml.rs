//! Logistic-regression duplicate resolver.
//!
//! Pairs that survive the first two stages are scored with a small
//! hand-rolled logistic model over five pair features. Training is
//! full-batch gradient descent on the log-loss with z-score feature
//! standardization; the fitted model round-trips through JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{DedupError, Result};
use crate::matchers::{jaccard, levenshtein, tokenize_address, StageVerdict};
use crate::record::CanonicalRecord;

/// Number of pair features the model consumes.
pub const FEATURE_COUNT: usize = 5;

/// Current on-disk model format.
pub const MODEL_FORMAT_VERSION: u32 = 1;

/// Pair features, in fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    /// Raw edit distance between names, missing names read as empty.
    pub name_distance: f64,
    /// Address token Jaccard; 0 when either address is missing.
    pub address_jaccard: f64,
    /// Absolute birth-date gap in days; 0 when either date is missing.
    pub dob_diff_days: f64,
    /// 1 iff both SSNs present and equal.
    pub ssn_equal: f64,
    /// 1 iff both phone numbers present and equal.
    pub phone_equal: f64,
}

impl FeatureVector {
    pub fn as_array(&self) -> [f64; FEATURE_COUNT] {
        [
            self.name_distance,
            self.address_jaccard,
            self.dob_diff_days,
            self.ssn_equal,
            self.phone_equal,
        ]
    }
}

/// A feature vector with its ground-truth duplicate label.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabeledPair {
    pub features: FeatureVector,
    /// true = duplicate pair.
    pub label: bool,
}

/// Gradient-descent settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Step size; zero is allowed and leaves the weights untouched.
    pub learning_rate: f64,
    pub epochs: usize,
    /// Decision threshold stored into the trained model.
    pub tau: f64,
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.learning_rate.is_finite() || self.learning_rate < 0.0 {
            return Err(DedupError::InvalidConfig(format!(
                "learning_rate must be finite and >= 0, got {}",
                self.learning_rate
            )));
        }
        if self.epochs == 0 {
            return Err(DedupError::InvalidConfig("epochs must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.tau) || !self.tau.is_finite() {
            return Err(DedupError::InvalidConfig(format!(
                "tau must be in [0, 1], got {}",
                self.tau
            )));
        }
        Ok(())
    }
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 0.1,
            epochs: 500,
            tau: 0.5,
        }
    }
}

/// Fitted logistic model with its standardization constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticModel {
    pub format_version: u32,
    /// Intercept followed by one weight per feature.
    pub beta: [f64; FEATURE_COUNT + 1],
    /// Decision threshold on the predicted probability.
    pub tau: f64,
    /// Per-feature training means, subtracted before scoring.
    pub feature_means: [f64; FEATURE_COUNT],
    /// Per-feature training standard deviations; constant features keep 1.
    pub feature_scales: [f64; FEATURE_COUNT],
}

impl LogisticModel {
    /// Zero-weight model with identity standardization.
    pub fn zeroed(tau: f64) -> Self {
        LogisticModel {
            format_version: MODEL_FORMAT_VERSION,
            beta: [0.0; FEATURE_COUNT + 1],
            tau,
            feature_means: [0.0; FEATURE_COUNT],
            feature_scales: [1.0; FEATURE_COUNT],
        }
    }

    fn standardize(&self, features: &FeatureVector) -> [f64; FEATURE_COUNT] {
        let raw = features.as_array();
        let mut z = [0.0; FEATURE_COUNT];
        for i in 0..FEATURE_COUNT {
            z[i] = (raw[i] - self.feature_means[i]) / self.feature_scales[i];
        }
        z
    }

    /// P(duplicate | features).
    pub fn predict_probability(&self, features: &FeatureVector) -> f64 {
        let z = self.standardize(features);
        let mut logit = self.beta[0];
        for i in 0..FEATURE_COUNT {
            logit += self.beta[i + 1] * z[i];
        }
        sigmoid(logit)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self)?;
        std::fs::write(path, json)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let json = std::fs::read_to_string(path)?;
        let model: LogisticModel = serde_json::from_str(&json)?;
        if model.format_version != MODEL_FORMAT_VERSION {
            return Err(DedupError::InvalidConfig(format!(
                "unsupported model format_version {}",
                model.format_version
            )));
        }
        for s in model.feature_scales {
            if s == 0.0 || !s.is_finite() {
                return Err(DedupError::InvalidConfig(
                    "model feature_scales must be finite and nonzero".into(),
                ));
            }
        }
        Ok(model)
    }
}

/// Numerically plain logistic function.
pub fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + (-z).exp())
}

/// Extract the pair features the resolver scores.
pub fn extract_features(left: &CanonicalRecord, right: &CanonicalRecord) -> FeatureVector {
    let name_l = left.full_name.as_deref().unwrap_or("");
    let name_r = right.full_name.as_deref().unwrap_or("");
    let name_distance = levenshtein(name_l, name_r) as f64;

    let address_jaccard = match (&left.full_address, &right.full_address) {
        (Some(a), Some(b)) => jaccard(&tokenize_address(a), &tokenize_address(b)),
        _ => 0.0,
    };

    let dob_diff_days = match (left.birth_date, right.birth_date) {
        (Some(a), Some(b)) => (a - b).num_days().abs() as f64,
        _ => 0.0,
    };

    let ssn_equal = matches!((&left.ssn, &right.ssn), (Some(a), Some(b)) if a == b);
    let phone_equal =
        matches!((&left.phone_number, &right.phone_number), (Some(a), Some(b)) if a == b);

    FeatureVector {
        name_distance,
        address_jaccard,
        dob_diff_days,
        ssn_equal: if ssn_equal { 1.0 } else { 0.0 },
        phone_equal: if phone_equal { 1.0 } else { 0.0 },
    }
}

fn design_row(features: &FeatureVector, means: &[f64; FEATURE_COUNT], scales: &[f64; FEATURE_COUNT]) -> [f64; FEATURE_COUNT + 1] {
    let raw = features.as_array();
    let mut row = [1.0; FEATURE_COUNT + 1];
    for i in 0..FEATURE_COUNT {
        row[i + 1] = (raw[i] - means[i]) / scales[i];
    }
    row
}

/// Mean log-loss of `beta` over standardized rows. Predicted probabilities
/// are clamped away from 0 and 1 to keep the logs finite.
pub fn cost(beta: &[f64; FEATURE_COUNT + 1], rows: &[[f64; FEATURE_COUNT + 1]], labels: &[f64]) -> f64 {
    const EPS: f64 = 1e-12;
    let m = rows.len() as f64;
    let mut total = 0.0;
    for (row, &y) in rows.iter().zip(labels) {
        let logit: f64 = row.iter().zip(beta).map(|(x, b)| x * b).sum();
        let h = sigmoid(logit).clamp(EPS, 1.0 - EPS);
        total += -y * h.ln() - (1.0 - y) * (1.0 - h).ln();
    }
    total / m
}

/// Analytic gradient of [`cost`] with respect to `beta`.
pub fn gradient(
    beta: &[f64; FEATURE_COUNT + 1],
    rows: &[[f64; FEATURE_COUNT + 1]],
    labels: &[f64],
) -> [f64; FEATURE_COUNT + 1] {
    let m = rows.len() as f64;
    let mut grad = [0.0; FEATURE_COUNT + 1];
    for (row, &y) in rows.iter().zip(labels) {
        let logit: f64 = row.iter().zip(beta).map(|(x, b)| x * b).sum();
        let err = sigmoid(logit) - y;
        for (g, x) in grad.iter_mut().zip(row) {
            *g += err * x;
        }
    }
    for g in &mut grad {
        *g /= m;
    }
    grad
}

fn standardization(pairs: &[LabeledPair]) -> ([f64; FEATURE_COUNT], [f64; FEATURE_COUNT]) {
    let m = pairs.len() as f64;
    let mut means = [0.0; FEATURE_COUNT];
    for p in pairs {
        for (mean, x) in means.iter_mut().zip(p.features.as_array()) {
            *mean += x;
        }
    }
    for mean in &mut means {
        *mean /= m;
    }
    let mut scales = [0.0; FEATURE_COUNT];
    for p in pairs {
        let raw = p.features.as_array();
        for i in 0..FEATURE_COUNT {
            scales[i] += (raw[i] - means[i]).powi(2);
        }
    }
    for s in &mut scales {
        // Population standard deviation; near-constant features fall back
        // to unit scale so standardization stays well-defined.
        *s = (*s / m).sqrt();
        if *s < 1e-12 {
            *s = 1.0;
        }
    }
    (means, scales)
}

/// Fit a model by full-batch gradient descent from zero weights.
pub fn train(pairs: &[LabeledPair], config: &TrainConfig) -> Result<LogisticModel> {
    train_with_history(pairs, config).map(|(model, _)| model)
}

/// [`train`], also returning the cost before the first step and after
/// each epoch (`epochs + 1` entries).
pub fn train_with_history(
    pairs: &[LabeledPair],
    config: &TrainConfig,
) -> Result<(LogisticModel, Vec<f64>)> {
    config.validate()?;
    if pairs.is_empty() {
        return Err(DedupError::InvalidTrainingData(
            "training set is empty".into(),
        ));
    }
    if pairs.iter().all(|p| p.label) || pairs.iter().all(|p| !p.label) {
        return Err(DedupError::InvalidTrainingData(
            "training set needs both duplicate and non-duplicate pairs".into(),
        ));
    }

    let (means, scales) = standardization(pairs);
    let rows: Vec<[f64; FEATURE_COUNT + 1]> = pairs
        .iter()
        .map(|p| design_row(&p.features, &means, &scales))
        .collect();
    let labels: Vec<f64> = pairs
        .iter()
        .map(|p| if p.label { 1.0 } else { 0.0 })
        .collect();

    let mut beta = [0.0; FEATURE_COUNT + 1];
    let mut history = Vec::with_capacity(config.epochs + 1);
    history.push(cost(&beta, &rows, &labels));
    for _ in 0..config.epochs {
        let grad = gradient(&beta, &rows, &labels);
        for (b, g) in beta.iter_mut().zip(grad) {
            *b -= config.learning_rate * g;
        }
        history.push(cost(&beta, &rows, &labels));
    }

    Ok((
        LogisticModel {
            format_version: MODEL_FORMAT_VERSION,
            beta,
            tau: config.tau,
            feature_means: means,
            feature_scales: scales,
        },
        history,
    ))
}

/// Resolver stage: duplicate iff the predicted probability reaches the
/// model's threshold. The verdict score is the probability itself.
pub fn match_ml(
    left: &CanonicalRecord,
    right: &CanonicalRecord,
    model: &LogisticModel,
) -> StageVerdict {
    let p = model.predict_probability(&extract_features(left, right));
    StageVerdict {
        matched: p >= model.tau,
        score: Some(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;
    use proptest::prelude::*;

    fn record(id: &str) -> CanonicalRecord {
        CanonicalRecord::new(id)
    }

    fn pair(features: FeatureVector, label: bool) -> LabeledPair {
        LabeledPair { features, label }
    }

    fn fv(nd: f64, aj: f64, dd: f64, se: f64, pe: f64) -> FeatureVector {
        FeatureVector {
            name_distance: nd,
            address_jaccard: aj,
            dob_diff_days: dd,
            ssn_equal: se,
            phone_equal: pe,
        }
    }

    #[test]
    fn sigmoid_fixed_points() {
        assert_eq!(sigmoid(0.0), 0.5);
        // sigmoid(ln 3) = 3/4 algebraically: 1 / (1 + 1/3).
        assert!((sigmoid(3f64.ln()) - 0.75).abs() < 1e-15);
        assert!(sigmoid(-40.0) < 1e-15);
        assert!(sigmoid(40.0) > 1.0 - 1e-15);
    }

    #[test]
    fn cost_at_zero_weights_is_ln_two() {
        // h = 0.5 for every row, so the loss is -ln(1/2) regardless of label.
        let rows = vec![[1.0, 0.3, -0.2, 1.1, 0.0, 0.9], [1.0, -1.0, 0.4, 0.0, 1.0, -0.5]];
        let labels = vec![1.0, 0.0];
        let c = cost(&[0.0; 6], &rows, &labels);
        assert!((c - std::f64::consts::LN_2).abs() < 1e-12);
        assert!((c - 0.6931471805599453).abs() < 1e-12);
    }

    #[test]
    fn cost_single_pair_example() {
        // One positive row with h = 0.75: loss = -ln(0.75) ≈ 0.2876820724.
        let beta = [3f64.ln(), 0.0, 0.0, 0.0, 0.0, 0.0];
        let rows = vec![[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]];
        let c = cost(&beta, &rows, &[1.0]);
        assert!((c - 0.2876820724517809).abs() < 1e-12);
    }

    #[test]
    fn cost_is_finite_even_when_saturated() {
        let beta = [1000.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let rows = vec![[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]];
        // Confidently wrong: h ≈ 1 with label 0. Clamping keeps the loss finite.
        let c = cost(&beta, &rows, &[0.0]);
        assert!(c.is_finite());
        assert!(c > 20.0);
    }

    #[test]
    fn gradient_matches_central_differences() {
        // Deterministic pseudo-random draws; the acceptance suite runs the
        // same check over 50 seeded draws.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..10 {
            let rows: Vec<[f64; 6]> = (0..8)
                .map(|_| {
                    let mut r = [1.0; 6];
                    for v in r.iter_mut().skip(1) {
                        *v = next() * 4.0 - 2.0;
                    }
                    r
                })
                .collect();
            let labels: Vec<f64> = (0..8).map(|_| if next() < 0.5 { 0.0 } else { 1.0 }).collect();
            let mut beta = [0.0; 6];
            for b in &mut beta {
                *b = next() * 2.0 - 1.0;
            }
            let analytic = gradient(&beta, &rows, &labels);
            let h = 1e-6;
            for k in 0..6 {
                let mut plus = beta;
                plus[k] += h;
                let mut minus = beta;
                minus[k] -= h;
                let numeric = (cost(&plus, &rows, &labels) - cost(&minus, &rows, &labels)) / (2.0 * h);
                let denom = analytic[k].abs().max(numeric.abs()).max(1e-8);
                assert!(
                    (analytic[k] - numeric).abs() / denom < 1e-5,
                    "component {k}: analytic {} vs numeric {numeric}",
                    analytic[k]
                );
            }
        }
    }

    #[test]
    fn extract_features_full_pair() {
        let mut a = record("a");
        let mut b = record("b");
        a.full_name = Some("jon smith".into());
        b.full_name = Some("john smith".into());
        a.full_address = Some("12 main st".into());
        b.full_address = Some("12 main st apt 4".into());
        a.birth_date = NaiveDate::from_ymd_opt(1980, 1, 1);
        b.birth_date = NaiveDate::from_ymd_opt(1980, 1, 3);
        a.ssn = Some("123456789".into());
        b.ssn = Some("123456789".into());
        a.phone_number = Some("5550001111".into());
        b.phone_number = Some("5559998888".into());
        let f = extract_features(&a, &b);
        assert_eq!(f.name_distance, 1.0);
        assert!((f.address_jaccard - 0.6).abs() < 1e-12); // {12,main,st} / {12,main,st,apt,4}
        assert_eq!(f.dob_diff_days, 2.0);
        assert_eq!(f.ssn_equal, 1.0);
        assert_eq!(f.phone_equal, 0.0);
    }

    #[test]
    fn extract_features_missing_fields() {
        let mut a = record("a");
        let b = record("b");
        a.full_name = Some("jane doe".into());
        let f = extract_features(&a, &b);
        // Missing name reads as empty, so distance is the present length.
        assert_eq!(f.name_distance, 8.0);
        assert_eq!(f.address_jaccard, 0.0);
        assert_eq!(f.dob_diff_days, 0.0);
        assert_eq!(f.ssn_equal, 0.0);
        assert_eq!(f.phone_equal, 0.0);
        let both_missing = extract_features(&record("x"), &record("y"));
        assert_eq!(both_missing.name_distance, 0.0);
    }

    fn separable_set() -> Vec<LabeledPair> {
        // Duplicates: tiny name distance, high address overlap. Distinct:
        // the opposite. Cleanly separable by either coordinate.
        let mut pairs = Vec::new();
        for i in 0..20 {
            let jitter = (i % 5) as f64;
            pairs.push(pair(fv(jitter * 0.2, 0.9 - jitter * 0.02, jitter, 0.0, 0.0), true));
            pairs.push(pair(fv(8.0 + jitter, 0.1 - jitter * 0.01, 400.0 + jitter, 0.0, 0.0), false));
        }
        pairs
    }

    #[test]
    fn training_reaches_full_accuracy_on_separable_set() {
        let pairs = separable_set();
        let model = train(&pairs, &TrainConfig::default()).unwrap();
        for p in &pairs {
            let prob = model.predict_probability(&p.features);
            assert_eq!(prob >= model.tau, p.label, "features {:?}", p.features);
        }
    }

    #[test]
    fn training_cost_is_non_increasing() {
        let pairs = separable_set();
        let (_, history) = train_with_history(
            &pairs,
            &TrainConfig {
                learning_rate: 0.1,
                epochs: 200,
                tau: 0.5,
            },
        )
        .unwrap();
        assert_eq!(history.len(), 201);
        for w in history.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "cost rose: {} -> {}", w[0], w[1]);
        }
    }

    #[test]
    fn zero_learning_rate_leaves_cost_unchanged() {
        let pairs = separable_set();
        let (model, history) = train_with_history(
            &pairs,
            &TrainConfig {
                learning_rate: 0.0,
                epochs: 10,
                tau: 0.5,
            },
        )
        .unwrap();
        assert_eq!(history.first(), history.last());
        assert_eq!(model.beta, [0.0; 6]);
    }

    #[test]
    fn training_rejects_degenerate_sets() {
        assert!(train(&[], &TrainConfig::default()).is_err());
        let all_pos = vec![pair(fv(0.0, 1.0, 0.0, 1.0, 1.0), true); 4];
        assert!(train(&all_pos, &TrainConfig::default()).is_err());
    }

    #[test]
    fn config_validation() {
        let bad_lr = TrainConfig { learning_rate: -0.1, ..TrainConfig::default() };
        assert!(bad_lr.validate().is_err());
        let bad_epochs = TrainConfig { epochs: 0, ..TrainConfig::default() };
        assert!(bad_epochs.validate().is_err());
        let bad_tau = TrainConfig { tau: 1.5, ..TrainConfig::default() };
        assert!(bad_tau.validate().is_err());
        assert!(TrainConfig { learning_rate: 0.0, ..TrainConfig::default() }.validate().is_ok());
    }

    #[test]
    fn model_round_trips_bit_exact() {
        let pairs = separable_set();
        let model = train(&pairs, &TrainConfig::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        model.save(&path).unwrap();
        let loaded = LogisticModel::load(&path).unwrap();
        assert_eq!(model, loaded);
        for b in model.beta.iter().zip(loaded.beta.iter()) {
            assert_eq!(b.0.to_bits(), b.1.to_bits());
        }
    }

    #[test]
    fn load_rejects_bad_payloads() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        std::fs::write(&path, "{\"format_version\": 99}").unwrap();
        assert!(LogisticModel::load(&path).is_err());
        std::fs::write(&path, "not json").unwrap();
        assert!(LogisticModel::load(&path).is_err());
    }

    #[test]
    fn match_ml_thresholds_probability() {
        let mut model = LogisticModel::zeroed(0.5);
        // Weightless model predicts 0.5 everywhere; tau = 0.5 matches.
        let a = record("a");
        let b = record("b");
        let v = match_ml(&a, &b, &model);
        assert!(v.matched);
        assert_eq!(v.score, Some(0.5));
        model.tau = 0.6;
        assert!(!match_ml(&a, &b, &model).matched);
    }

    proptest! {
        #[test]
        fn probability_stays_in_unit_interval(
            b0 in -5.0f64..5.0, b1 in -5.0f64..5.0, b2 in -5.0f64..5.0,
            nd in 0.0f64..20.0, aj in 0.0f64..=1.0, dd in 0.0f64..1000.0,
        ) {
            let mut model = LogisticModel::zeroed(0.5);
            model.beta = [b0, b1, b2, 0.0, 0.0, 0.0];
            let p = model.predict_probability(&fv(nd, aj, dd, 0.0, 1.0));
            prop_assert!((0.0..=1.0).contains(&p));
        }

        #[test]
        fn features_are_symmetric(
            name_a in "[a-e ]{0,10}", name_b in "[a-e ]{0,10}",
            year_a in 1950i32..2000, year_b in 1950i32..2000,
        ) {
            let mut a = record("a");
            let mut b = record("b");
            if !name_a.trim().is_empty() { a.full_name = Some(name_a.clone()); }
            if !name_b.trim().is_empty() { b.full_name = Some(name_b.clone()); }
            a.birth_date = NaiveDate::from_ymd_opt(year_a, 6, 1);
            b.birth_date = NaiveDate::from_ymd_opt(year_b, 6, 1);
            prop_assert_eq!(extract_features(&a, &b), extract_features(&b, &a));
        }
    }
}
