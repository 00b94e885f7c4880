//! Inline distribution syntax: comma-separated `proportion@index` pairs, e.g.
//! `0.3@1,0.5@2,0.2@3`. A proportion may be a decimal or an exact fraction `1/3`.

use lingdist::{DistributionAssessment, LinguisticScale};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrammarError {
    #[error("empty distribution")]
    Empty,
    #[error("expected `proportion@index`, found `{0}`")]
    Pair(String),
    #[error("invalid proportion `{0}`")]
    Proportion(String),
    #[error("invalid term index `{0}`")]
    Index(String),
    #[error(transparent)]
    Invalid(#[from] lingdist::Error),
}

fn proportion(text: &str) -> Result<f64, GrammarError> {
    let bad = || GrammarError::Proportion(text.to_string());
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        }
        None => text.parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// Parses the sparse pairs without checking them against a scale.
pub fn parse_pairs(spec: &str) -> Result<Vec<(usize, f64)>, GrammarError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(GrammarError::Empty);
    }
    spec.split(',')
        .map(|pair| {
            let pair = pair.trim();
            let (p, k) = pair
                .split_once('@')
                .ok_or_else(|| GrammarError::Pair(pair.to_string()))?;
            let k = k.trim();
            let index = k
                .parse::<usize>()
                .map_err(|_| GrammarError::Index(k.to_string()))?;
            Ok((index, proportion(p.trim())?))
        })
        .collect()
}

pub fn parse_distribution(
    spec: &str,
    scale: &LinguisticScale,
) -> Result<DistributionAssessment, GrammarError> {
    Ok(DistributionAssessment::from_pairs(scale, parse_pairs(spec)?)?)
}

/// Nonzero terms in the inline syntax, 4 decimals.
pub fn format_sparse(m: &DistributionAssessment) -> String {
    m.terms()
        .map(|(k, b)| format!("{b:.4}@{k}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Every proportion, zeros included, 4 decimals.
pub fn format_dense(m: &DistributionAssessment) -> String {
    let cells: Vec<String> = m.proportions().iter().map(|b| format!("{b:.4}")).collect();
    format!("[{}]", cells.join(", "))
}
