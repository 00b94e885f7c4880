//! The JSON problem file and its translation into a [`DecisionProblem`].
//!
//! ```json
//! {
//!   "scales": [{ "id": "S5", "granularity": 5 }, { "id": "S7", "granularity": 7 }],
//!   "alternatives": ["G1", "G2"],
//!   "attributes": ["C1", "C2"],
//!   "decision_makers": [{ "id": "d1", "scale": "S5" }, { "id": "d2", "scale": "S7" }],
//!   "assessments": { "terms": { "d1": [[4, 1], [2, 3]], "d2": [[5, 3], [6, 2]] } },
//!   "attribute_weights": { "mode": "unknown" }
//! }
//! ```
//!
//! Fused input replaces `terms` with `distributions`, mapping each scale id to a matrix
//! of inline distributions such as `"0.4@3,0.6@4"`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use lingdist::magdm::{
    Assessments, DecisionMaker, DecisionMatrix, DecisionProblem, Violation, WeightMode,
};
use lingdist::{LinearConstraint, LinguisticScale};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grammar::parse_distribution;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub scales: Vec<ScaleEntry>,
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub decision_makers: Vec<DecisionMakerEntry>,
    pub assessments: AssessmentsEntry,
    #[serde(default)]
    pub attribute_weights: WeightsEntry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleEntry {
    pub id: String,
    pub granularity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecisionMakerEntry {
    pub id: String,
    pub scale: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
}

/// Exactly one of the two forms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AssessmentsEntry {
    /// Decision maker id to a matrix of term indices (alternatives by attributes).
    Terms(BTreeMap<String, Vec<Vec<usize>>>),
    /// Scale id to a matrix of inline distributions.
    Distributions(BTreeMap<String, Vec<Vec<String>>>),
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum WeightsEntry {
    Known {
        values: Vec<f64>,
    },
    #[default]
    Unknown,
    Partial {
        constraints: Vec<LinearConstraint>,
    },
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{} problem(s) found", .0.len())]
    Invalid(Vec<Violation>),
}

pub fn read(path: &Path) -> Result<ProblemFile, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: shown.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| InputError::Parse {
        path: shown,
        source,
    })
}

/// Reads and validates a problem file.
pub fn load(path: &Path) -> Result<DecisionProblem, InputError> {
    read(path)?.to_problem().map_err(InputError::Invalid)
}

fn violation(location: impl Into<String>, message: impl Into<String>) -> Violation {
    Violation {
        location: location.into(),
        message: message.into(),
    }
}

impl ProblemFile {
    /// Builds the problem, or lists every problem found. File-level checks (ids, cell
    /// syntax) run first; the library's invariant checks run once those pass.
    pub fn to_problem(&self) -> Result<DecisionProblem, Vec<Violation>> {
        let mut issues = Vec::new();

        let mut scale_ids: HashMap<&str, usize> = HashMap::new();
        let mut scales = Vec::with_capacity(self.scales.len());
        for (h, entry) in self.scales.iter().enumerate() {
            let location = format!("scales[{h}] ({})", entry.id);
            if scale_ids.insert(&entry.id, h).is_some() {
                issues.push(violation(&location, "duplicate scale id"));
            }
            let built = match &entry.labels {
                Some(labels) => {
                    LinguisticScale::with_granularity_and_labels(entry.granularity, labels.clone())
                }
                None => LinguisticScale::new(entry.granularity),
            };
            match built {
                Ok(scale) => scales.push(scale),
                Err(e) => issues.push(violation(location, e.to_string())),
            }
        }

        let mut dm_ids: HashMap<&str, usize> = HashMap::new();
        let mut decision_makers = Vec::with_capacity(self.decision_makers.len());
        for (l, entry) in self.decision_makers.iter().enumerate() {
            let location = format!("decision_makers[{l}] ({})", entry.id);
            if dm_ids.insert(&entry.id, l).is_some() {
                issues.push(violation(&location, "duplicate decision maker id"));
            }
            match scale_ids.get(entry.scale.as_str()) {
                Some(&h) => decision_makers.push(DecisionMaker {
                    id: entry.id.clone(),
                    scale: h,
                    importance: entry.weight,
                }),
                None => issues.push(violation(
                    location,
                    format!("references unknown scale \"{}\"", entry.scale),
                )),
            }
        }

        let (n, m) = (self.alternatives.len(), self.attributes.len());
        let assessments = match &self.assessments {
            AssessmentsEntry::Terms(tables) => {
                for id in tables.keys() {
                    if !dm_ids.contains_key(id.as_str()) {
                        issues.push(violation(
                            format!("assessments.terms.{id}"),
                            "no decision maker with this id",
                        ));
                    }
                }
                let mut terms = Vec::with_capacity(self.decision_makers.len());
                for entry in &self.decision_makers {
                    match tables.get(&entry.id) {
                        Some(table) => terms.push(table.clone()),
                        None => issues.push(violation(
                            format!("assessments.terms.{}", entry.id),
                            "missing assessments for this decision maker",
                        )),
                    }
                }
                Assessments::Terms(terms)
            }
            AssessmentsEntry::Distributions(cells) => {
                for id in cells.keys() {
                    if !scale_ids.contains_key(id.as_str()) {
                        issues.push(violation(
                            format!("assessments.distributions.{id}"),
                            "no scale with this id",
                        ));
                    }
                }
                let mut matrices = Vec::with_capacity(self.scales.len());
                for (entry, scale) in self.scales.iter().zip(&scales) {
                    let location = format!("assessments.distributions.{}", entry.id);
                    let Some(rows) = cells.get(&entry.id) else {
                        issues.push(violation(location, "missing matrix for this scale"));
                        continue;
                    };
                    if rows.len() != n || rows.iter().any(|row| row.len() != m) {
                        issues.push(violation(
                            location,
                            format!("expected a complete {n} x {m} matrix"),
                        ));
                        continue;
                    }
                    let mut parsed = Vec::with_capacity(n);
                    for (i, row) in rows.iter().enumerate() {
                        let mut out = Vec::with_capacity(m);
                        for (j, spec) in row.iter().enumerate() {
                            match parse_distribution(spec, scale) {
                                Ok(cell) => out.push(cell),
                                Err(e) => issues.push(violation(
                                    format!(
                                        "{location}[{}][{}]",
                                        self.alternatives[i], self.attributes[j]
                                    ),
                                    e.to_string(),
                                )),
                            }
                        }
                        parsed.push(out);
                    }
                    if parsed.iter().all(|row| row.len() == m) && n > 0 && m > 0 {
                        match DecisionMatrix::new(parsed) {
                            Ok(matrix) => matrices.push(matrix),
                            Err(e) => issues.push(violation(location, e.to_string())),
                        }
                    }
                }
                Assessments::Fused(matrices)
            }
        };

        let weight_mode = match &self.attribute_weights {
            WeightsEntry::Known { values } => WeightMode::Known {
                weights: values.clone(),
            },
            WeightsEntry::Unknown => WeightMode::Unknown,
            WeightsEntry::Partial { constraints } => WeightMode::Partial {
                constraints: constraints.clone(),
            },
        };

        if !issues.is_empty() {
            return Err(issues);
        }
        let problem = DecisionProblem {
            alternatives: self.alternatives.clone(),
            attributes: self.attributes.clone(),
            scales,
            decision_makers,
            assessments,
            weight_mode,
        };
        let violations = problem.violations();
        if violations.is_empty() {
            Ok(problem)
        } else {
            Err(violations)
        }
    }
}
