//! String-similarity primitives and the first two match stages.
//!
//! Deterministic matching declares a duplicate on exact equality of SSN or
//! phone number; fuzzy matching thresholds normalized Levenshtein name
//! similarity against `theta1` and address-token Jaccard against `theta2`.

use serde::{Deserialize, Serialize};

use crate::error::{DedupError, Result};
use crate::record::CanonicalRecord;

/// Fuzzy-stage thresholds, both in [0, 1].
///
/// `theta1` bounds normalized name similarity from below, `theta2` bounds
/// address Jaccard similarity from below.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzyThresholds {
    pub theta1: f64,
    pub theta2: f64,
}

impl FuzzyThresholds {
    pub fn new(theta1: f64, theta2: f64) -> Result<Self> {
        let t = FuzzyThresholds { theta1, theta2 };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("theta1", self.theta1), ("theta2", self.theta2)] {
            if !(0.0..=1.0).contains(&v) || !v.is_finite() {
                return Err(DedupError::InvalidConfig(format!(
                    "{name} must be in [0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }
}

impl Default for FuzzyThresholds {
    fn default() -> Self {
        FuzzyThresholds {
            theta1: 0.8,
            theta2: 0.7,
        }
    }
}

/// Verdict of a single match stage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StageVerdict {
    pub matched: bool,
    /// Similarity or probability evidence in [0, 1], when the stage
    /// computed one.
    pub score: Option<f64>,
}

impl StageVerdict {
    pub fn no_match() -> Self {
        StageVerdict {
            matched: false,
            score: None,
        }
    }
}

/// Minimum number of single-character insertions, deletions, or
/// substitutions transforming `a` into `b`.
pub fn levenshtein(a: &str, b: &str) -> usize {
    if a == b {
        return 0;
    }
    if a.is_ascii() && b.is_ascii() {
        let mut row = Vec::new();
        levenshtein_slices(a.as_bytes(), b.as_bytes(), &mut row)
    } else {
        let av: Vec<char> = a.chars().collect();
        let bv: Vec<char> = b.chars().collect();
        let mut row = Vec::new();
        levenshtein_slices(&av, &bv, &mut row)
    }
}

/// Two-row dynamic program over generic symbol slices. `row` is scratch
/// space so hot callers can reuse one allocation.
pub(crate) fn levenshtein_slices<T: PartialEq>(a: &[T], b: &[T], row: &mut Vec<usize>) -> usize {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return long.len();
    }
    row.clear();
    row.extend(0..=short.len());
    for (j, long_sym) in long.iter().enumerate() {
        let mut diag = row[0];
        row[0] = j + 1;
        for (i, short_sym) in short.iter().enumerate() {
            let above = row[i + 1];
            row[i + 1] = if short_sym == long_sym {
                diag
            } else {
                1 + diag.min(above).min(row[i])
            };
            diag = above;
        }
    }
    row[short.len()]
}

/// ASCII fast path used by the pipeline's inner loop.
pub(crate) fn levenshtein_bytes_with(a: &[u8], b: &[u8], row: &mut Vec<usize>) -> usize {
    if a == b {
        return 0;
    }
    levenshtein_slices(a, b, row)
}

/// Normalized Levenshtein similarity: `1 − distance / max(|a|, |b|)`,
/// measured in characters. Two empty strings are fully similar.
pub fn levenshtein_similarity(a: &str, b: &str) -> f64 {
    let len_a = a.chars().count();
    let len_b = b.chars().count();
    let longest = len_a.max(len_b);
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(a, b) as f64 / longest as f64
}

/// Lowercased word tokens of an address: split on any non-alphanumeric
/// character, duplicates collapsed.
pub fn tokenize_address(s: &str) -> std::collections::BTreeSet<String> {
    s.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(|t| t.to_lowercase())
        .collect()
}

/// Jaccard similarity of two token sets: `|A ∩ B| / |A ∪ B|`, with two
/// empty sets defined as fully similar.
pub fn jaccard(a: &std::collections::BTreeSet<String>, b: &std::collections::BTreeSet<String>) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 1.0;
    }
    let intersection = a.intersection(b).count();
    let union = a.len() + b.len() - intersection;
    intersection as f64 / union as f64
}

/// Deterministic stage: exact equality of SSN or phone number.
///
/// A missing identifier never equals a missing identifier.
pub fn match_deterministic(left: &CanonicalRecord, right: &CanonicalRecord) -> StageVerdict {
    let ssn_equal = matches!((&left.ssn, &right.ssn), (Some(a), Some(b)) if a == b);
    let phone_equal =
        matches!((&left.phone_number, &right.phone_number), (Some(a), Some(b)) if a == b);
    StageVerdict {
        matched: ssn_equal || phone_equal,
        score: None,
    }
}

/// Fuzzy stage: name similarity at or above `theta1` and address Jaccard
/// at or above `theta2`.
///
/// A pair missing a name or an address on either side cannot fuzzy-match;
/// its verdict carries no score. Otherwise the score is the smaller of
/// the two similarities, matched or not.
pub fn match_fuzzy(
    left: &CanonicalRecord,
    right: &CanonicalRecord,
    thresholds: &FuzzyThresholds,
) -> StageVerdict {
    let (Some(name_l), Some(name_r)) = (&left.full_name, &right.full_name) else {
        return StageVerdict::no_match();
    };
    let (Some(addr_l), Some(addr_r)) = (&left.full_address, &right.full_address) else {
        return StageVerdict::no_match();
    };
    let name_similarity = levenshtein_similarity(name_l, name_r);
    let address_similarity = jaccard(&tokenize_address(addr_l), &tokenize_address(addr_r));
    StageVerdict {
        matched: name_similarity >= thresholds.theta1 && address_similarity >= thresholds.theta2,
        score: Some(name_similarity.min(address_similarity)),
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Independent reference implementations used only by tests.

    use std::collections::HashMap;

    /// Textbook recursive edit-distance, memoized on (i, j).
    pub fn levenshtein_recursive(a: &str, b: &str) -> usize {
        fn go(
            a: &[char],
            b: &[char],
            i: usize,
            j: usize,
            memo: &mut HashMap<(usize, usize), usize>,
        ) -> usize {
            if i == 0 {
                return j;
            }
            if j == 0 {
                return i;
            }
            if let Some(&d) = memo.get(&(i, j)) {
                return d;
            }
            let cost = if a[i - 1] == b[j - 1] { 0 } else { 1 };
            let d = (go(a, b, i - 1, j, memo) + 1)
                .min(go(a, b, i, j - 1, memo) + 1)
                .min(go(a, b, i - 1, j - 1, memo) + cost);
            memo.insert((i, j), d);
            d
        }
        let av: Vec<char> = a.chars().collect();
        let bv: Vec<char> = b.chars().collect();
        go(&av, &bv, av.len(), bv.len(), &mut HashMap::new())
    }

    /// All strings over `alphabet` with length at most `max_len`.
    pub fn enumerate_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
        let mut out = vec![String::new()];
        let mut frontier = vec![String::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for s in &frontier {
                for &c in alphabet {
                    let mut t = s.clone();
                    t.push(c);
                    next.push(t);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}
