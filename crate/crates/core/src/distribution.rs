//! Linguistic distribution assessments: proportion vectors over the terms of one scale.
//!
//! Besides the weighted averaging operator this module carries both distance measures
//! (the proportion-only one is kept because it cannot tell `s_0` from `s_4` when both are
//! compared against `s_1`), the entropy based inaccuracy function, and the two-key
//! comparison used to rank assessments.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linguistic::{LinguisticScale, TwoTuple};

/// Tolerance on `|sum(beta) - 1|` accepted at construction.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Expectation values closer than this are treated as equal by [`compare`].
pub const EXPECTATION_TIE: f64 = 1e-9;

/// Inaccuracy values closer than this are treated as equal by [`compare`].
pub const INACCURACY_TIE: f64 = 1e-9;

/// `m = {<s_k, beta_k> | k = 0..g-1}` with `beta_k >= 0` and `sum beta_k = 1`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SparseRepr", into = "SparseRepr")]
pub struct DistributionAssessment {
    scale: LinguisticScale,
    proportions: Vec<f64>,
}

/// Wire form: only the nonzero `(term, proportion)` pairs.
#[derive(Serialize, Deserialize)]
struct SparseRepr {
    scale: LinguisticScale,
    terms: Vec<(usize, f64)>,
}

impl TryFrom<SparseRepr> for DistributionAssessment {
    type Error = Error;

    fn try_from(repr: SparseRepr) -> Result<Self> {
        let mut proportions = vec![0.0; repr.scale.granularity()];
        for (k, beta) in repr.terms {
            repr.scale.check_index(k)?;
            proportions[k] += beta;
        }
        let sum = validate(&repr.scale, &proportions)?;
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::ProportionSum { sum });
        }
        Ok(DistributionAssessment {
            scale: repr.scale,
            proportions,
        })
    }
}

impl From<DistributionAssessment> for SparseRepr {
    fn from(m: DistributionAssessment) -> Self {
        SparseRepr {
            terms: m.terms().collect(),
            scale: m.scale,
        }
    }
}

fn validate(scale: &LinguisticScale, proportions: &[f64]) -> Result<f64> {
    if proportions.len() != scale.granularity() {
        return Err(Error::ProportionLength {
            expected: scale.granularity(),
            actual: proportions.len(),
        });
    }
    for (index, &value) in proportions.iter().enumerate() {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::InvalidProportion { index, value });
        }
    }
    Ok(proportions.iter().sum())
}

impl DistributionAssessment {
    /// Builds an assessment from a dense proportion vector, rescaling it to sum exactly
    /// to one when it is already within [`SUM_TOLERANCE`].
    pub fn new(scale: &LinguisticScale, proportions: Vec<f64>) -> Result<Self> {
        let sum = validate(scale, &proportions)?;
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::ProportionSum { sum });
        }
        let proportions = if sum == 1.0 {
            proportions
        } else {
            proportions.into_iter().map(|b| b / sum).collect()
        };
        Ok(DistributionAssessment {
            scale: scale.clone(),
            proportions,
        })
    }

    /// Builds an assessment from sparse `(term, proportion)` pairs; repeated terms add up.
    pub fn from_pairs(
        scale: &LinguisticScale,
        pairs: impl IntoIterator<Item = (usize, f64)>,
    ) -> Result<Self> {
        let mut proportions = vec![0.0; scale.granularity()];
        for (k, beta) in pairs {
            scale.check_index(k)?;
            proportions[k] += beta;
        }
        DistributionAssessment::new(scale, proportions)
    }

    /// The degenerate assessment `{<s_k, 1>}`.
    pub fn from_term(scale: &LinguisticScale, k: usize) -> Result<Self> {
        scale.check_index(k)?;
        let mut proportions = vec![0.0; scale.granularity()];
        proportions[k] = 1.0;
        Ok(DistributionAssessment {
            scale: scale.clone(),
            proportions,
        })
    }

    /// Trusted constructor for values produced by closed operations (convex combinations).
    pub(crate) fn from_closed(scale: &LinguisticScale, proportions: Vec<f64>) -> Self {
        debug_assert_eq!(proportions.len(), scale.granularity());
        DistributionAssessment {
            scale: scale.clone(),
            proportions,
        }
    }

    pub fn scale(&self) -> &LinguisticScale {
        &self.scale
    }

    pub fn granularity(&self) -> usize {
        self.scale.granularity()
    }

    pub fn proportions(&self) -> &[f64] {
        &self.proportions
    }

    pub fn proportion(&self, k: usize) -> f64 {
        self.proportions.get(k).copied().unwrap_or(0.0)
    }

    /// Nonzero `(term, proportion)` pairs in term order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.proportions
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0.0)
            .map(|(k, &b)| (k, b))
    }

    /// `sum_k k * beta_k`, the expectation on the index domain.
    pub fn expectation_index(&self) -> f64 {
        self.proportions
            .iter()
            .enumerate()
            .map(|(k, b)| k as f64 * b)
            .sum()
    }

    /// `E(m) = delta(sum_k k * beta_k)`.
    pub fn expectation(&self) -> TwoTuple {
        self.scale
            .delta(self.expectation_index())
            .expect("expectation of a distribution lies in the index domain")
    }

    /// `T(m) = -sum_k beta_k log2 beta_k`, with `0 log2 0 = 0`.
    pub fn inaccuracy(&self) -> f64 {
        let entropy: f64 = self
            .proportions
            .iter()
            .filter(|&&b| b > 0.0)
            .map(|&b| b * b.log2())
            .sum();
        // -0.0 for singletons
        0.0 - entropy
    }

    pub fn ranking_key(&self) -> RankingKey {
        RankingKey {
            expectation: self.expectation_index(),
            inaccuracy: self.inaccuracy(),
        }
    }
}

impl fmt::Debug for DistributionAssessment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.terms()
                    .map(|(k, b)| (format!("s_{k}^{}", self.granularity()), b)),
            )
            .finish()
    }
}

impl fmt::Display for DistributionAssessment {
    /// Sparse `{<label, beta>, ...}` form; precision defaults to 4 decimals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let precision = f.precision().unwrap_or(4);
        write!(f, "{{")?;
        for (n, (k, b)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "<{}, {:.*}>", self.scale.label(k), precision, b)?;
        }
        write!(f, "}}")
    }
}

/// Expectation and inaccuracy of an assessment, the two keys of the comparison rules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankingKey {
    pub expectation: f64,
    pub inaccuracy: f64,
}

impl RankingKey {
    /// Greater means better: higher expectation first, then lower inaccuracy.
    pub fn compare(&self, other: &RankingKey) -> Ordering {
        if (self.expectation - other.expectation).abs() >= EXPECTATION_TIE {
            return self.expectation.total_cmp(&other.expectation);
        }
        if (self.inaccuracy - other.inaccuracy).abs() >= INACCURACY_TIE {
            return other.inaccuracy.total_cmp(&self.inaccuracy);
        }
        Ordering::Equal
    }
}

fn common_scale<'a>(ms: &'a [DistributionAssessment]) -> Result<&'a LinguisticScale> {
    let first = ms.first().ok_or(Error::Empty)?;
    for m in &ms[1..] {
        first.scale.check_compatible(&m.scale)?;
    }
    Ok(&first.scale)
}

pub(crate) fn check_weights(weights: &[f64], expected_len: usize) -> Result<()> {
    if weights.len() != expected_len {
        return Err(Error::InvalidWeights(format!(
            "expected {expected_len} weights, got {}",
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
        return Err(Error::InvalidWeights(format!(
            "weight {w} is negative or not finite"
        )));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::InvalidWeights(format!("weights sum to {sum}")));
    }
    Ok(())
}

/// Weighted averaging operator: `beta_k = sum_i w_i beta_k^i`.
pub fn dawa(ms: &[DistributionAssessment], weights: &[f64]) -> Result<DistributionAssessment> {
    let scale = common_scale(ms)?;
    check_weights(weights, ms.len())?;
    let mut proportions = vec![0.0; scale.granularity()];
    for (m, &w) in ms.iter().zip(weights) {
        if w == 0.0 {
            continue;
        }
        for (acc, b) in proportions.iter_mut().zip(&m.proportions) {
            *acc += w * b;
        }
    }
    Ok(DistributionAssessment::from_closed(scale, proportions))
}

/// Proportion-only distance `1/2 sum_k |beta_k^1 - beta_k^2|`.
pub fn distance_legacy(a: &DistributionAssessment, b: &DistributionAssessment) -> Result<f64> {
    a.scale.check_compatible(&b.scale)?;
    let total: f64 = a
        .proportions
        .iter()
        .zip(&b.proportions)
        .map(|(x, y)| (x - y).abs())
        .sum();
    Ok(0.5 * total)
}

/// Term-aware distance `|sum_k (beta_k^1 - beta_k^2) k| / (g - 1)`.
pub fn distance(a: &DistributionAssessment, b: &DistributionAssessment) -> Result<f64> {
    a.scale.check_compatible(&b.scale)?;
    let diff: f64 = a
        .proportions
        .iter()
        .zip(&b.proportions)
        .enumerate()
        .map(|(k, (x, y))| (x - y) * k as f64)
        .sum();
    Ok(diff.abs() / a.scale.max_index() as f64)
}

/// Two-key comparison: expectation first, lower inaccuracy breaks ties.
pub fn compare(a: &DistributionAssessment, b: &DistributionAssessment) -> Result<Ordering> {
    a.scale.check_compatible(&b.scale)?;
    Ok(a.ranking_key().compare(&b.ranking_key()))
}

/// An ordering of items, best first, with equal items grouped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranking {
    groups: Vec<Vec<usize>>,
}

impl Ranking {
    /// Ranks by keys; ties form groups that keep input order.
    pub fn from_keys(keys: &[RankingKey]) -> Ranking {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&i, &j| keys[j].compare(&keys[i]));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in order {
            match groups.last_mut() {
                Some(group) if keys[group[0]].compare(&keys[i]) == Ordering::Equal => {
                    group.push(i)
                }
                _ => groups.push(vec![i]),
            }
        }
        Ranking { groups }
    }

    /// Tie groups, best first.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Flattened order, best first.
    pub fn order(&self) -> Vec<usize> {
        self.groups.iter().flatten().copied().collect()
    }

    pub fn best(&self) -> Option<&[usize]> {
        self.groups.first().map(Vec::as_slice)
    }

    /// Renders `a > b = c > d` with the given names.
    pub fn describe<S: AsRef<str>>(&self, names: &[S]) -> String {
        self.groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| names[i].as_ref())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

/// Ranks assessments of one scale, best first.
pub fn rank(ms: &[DistributionAssessment]) -> Result<Ranking> {
    if !ms.is_empty() {
        common_scale(ms)?;
    }
    let keys: Vec<RankingKey> = ms.iter().map(DistributionAssessment::ranking_key).collect();
    Ok(Ranking::from_keys(&keys))
}
