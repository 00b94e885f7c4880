//! Large-scale multi-attribute group decision making over multi-granular assessments.
//!
//! The pipeline runs in six steps:
//!
//! 1. decision makers sharing a scale are fused into one distribution matrix per scale,
//!    and each scale group gets a weight from its size (or total importance);
//! 2. every matrix is lifted onto the common hierarchy level;
//! 3. the lifted matrices are averaged cell by cell with the group weights;
//! 4. attribute weights are taken as given, or derived by maximum deviation, either in
//!    closed form or as a linear program when partial weight information is known;
//! 5. attributes are aggregated per alternative and the results ranked by expectation,
//!    then inaccuracy;
//! 6. each collective assessment is brought back down to every original scale.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distribution::{
    check_weights, dawa, distance, DistributionAssessment, Ranking, RankingKey, SUM_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::linguistic::{LinguisticScale, TwoTuple};
use crate::multigranular::HierarchyContext;
use crate::simplex::{self, LinearConstraint, Sense};

/// An `n x m` matrix of assessments (alternatives by attributes) on one scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<DistributionAssessment>>", into = "Vec<Vec<DistributionAssessment>>")]
pub struct DecisionMatrix {
    rows: Vec<Vec<DistributionAssessment>>,
}

impl TryFrom<Vec<Vec<DistributionAssessment>>> for DecisionMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<DistributionAssessment>>) -> Result<Self> {
        DecisionMatrix::new(rows)
    }
}

impl From<DecisionMatrix> for Vec<Vec<DistributionAssessment>> {
    fn from(matrix: DecisionMatrix) -> Self {
        matrix.rows
    }
}

impl DecisionMatrix {
    /// Rows are alternatives; every row needs the same length and every cell the same scale.
    pub fn new(rows: Vec<Vec<DistributionAssessment>>) -> Result<Self> {
        let first = rows
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::Empty)?
            .scale()
            .clone();
        let width = rows[0].len();
        for row in &rows {
            if row.len() != width {
                return Err(Error::InvalidProblem(format!(
                    "ragged matrix: row of {} cells, expected {width}",
                    row.len()
                )));
            }
            for cell in row {
                first.check_compatible(cell.scale())?;
            }
        }
        Ok(DecisionMatrix { rows })
    }

    pub fn alternatives(&self) -> usize {
        self.rows.len()
    }

    pub fn attributes(&self) -> usize {
        self.rows[0].len()
    }

    pub fn scale(&self) -> &LinguisticScale {
        self.rows[0][0].scale()
    }

    pub fn get(&self, i: usize, j: usize) -> &DistributionAssessment {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[DistributionAssessment] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<DistributionAssessment>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &DistributionAssessment> + '_ {
        self.rows.iter().map(move |row| &row[j])
    }

    fn try_map<F>(&self, mut f: F) -> Result<DecisionMatrix>
    where
        F: FnMut(usize, usize, &DistributionAssessment) -> Result<DistributionAssessment>,
    {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, cell)| f(i, j, cell))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        DecisionMatrix::new(rows)
    }
}

/// A member of the group, assessing with one of the problem's scales.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionMaker {
    pub id: String,
    /// Index into [`DecisionProblem::scales`].
    pub scale: usize,
    /// Importance `lambda_l`; either every member has one or none does.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub importance: Option<f64>,
}

/// The raw input of the group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Assessments {
    /// `terms[dm][alternative][attribute]`: term index in that member's scale.
    Terms(Vec<Vec<Vec<usize>>>),
    /// Already fused per-scale matrices, one per entry of [`DecisionProblem::scales`].
    Fused(Vec<DecisionMatrix>),
}

/// What is known about the attribute weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum WeightMode {
    Known { weights: Vec<f64> },
    Unknown,
    Partial { constraints: Vec<LinearConstraint> },
}

/// A large-scale multi-attribute group decision problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionProblem {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub scales: Vec<LinguisticScale>,
    pub decision_makers: Vec<DecisionMaker>,
    pub assessments: Assessments,
    pub weight_mode: WeightMode,
}

/// One failed invariant of a [`DecisionProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl DecisionProblem {
    /// Every invariant violation, in a stable order. Empty means the problem is solvable
    /// up to weight feasibility and nonzero deviations.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |location: String, message: String| out.push(Violation { location, message });
        let (n, m) = (self.alternatives.len(), self.attributes.len());
        if n == 0 {
            push("alternatives".into(), "no alternatives".into());
        }
        if m == 0 {
            push("attributes".into(), "no attributes".into());
        }
        if self.scales.is_empty() {
            push("scales".into(), "no scales".into());
        }
        for (h, scale) in self.scales.iter().enumerate() {
            if self.scales[..h]
                .iter()
                .any(|s| s.granularity() == scale.granularity())
            {
                push(
                    format!("scales[{h}]"),
                    format!("granularity {} appears twice", scale.granularity()),
                );
            }
        }
        if self.decision_makers.is_empty() {
            push("decision_makers".into(), "no decision makers".into());
        }
        let with_importance = self
            .decision_makers
            .iter()
            .filter(|d| d.importance.is_some())
            .count();
        if with_importance != 0 && with_importance != self.decision_makers.len() {
            push(
                "decision_makers".into(),
                "importance must be given for every decision maker or for none".into(),
            );
        }
        for (l, dm) in self.decision_makers.iter().enumerate() {
            if dm.scale >= self.scales.len() {
                push(
                    format!("decision_makers[{l}] ({})", dm.id),
                    format!("references unknown scale {}", dm.scale),
                );
            }
            if let Some(lambda) = dm.importance {
                if !(lambda.is_finite() && lambda >= 0.0) {
                    push(
                        format!("decision_makers[{l}] ({})", dm.id),
                        format!("importance {lambda} is negative or not finite"),
                    );
                }
            }
        }
        if with_importance == self.decision_makers.len() && with_importance > 0 {
            let total: f64 = self.decision_makers.iter().filter_map(|d| d.importance).sum();
            if (total - 1.0).abs() > SUM_TOLERANCE {
                push(
                    "decision_makers".into(),
                    format!("importances sum to {total}, expected 1"),
                );
            }
        }
        for (h, _) in self.scales.iter().enumerate() {
            let members: Vec<&DecisionMaker> =
                self.decision_makers.iter().filter(|d| d.scale == h).collect();
            if members.is_empty() {
                push(format!("scales[{h}]"), "no decision maker uses this scale".into());
            } else if with_importance == self.decision_makers.len()
                && members.iter().filter_map(|d| d.importance).sum::<f64>() <= 0.0
            {
                push(
                    format!("scales[{h}]"),
                    "decision makers of this scale have zero total importance".into(),
                );
            }
        }

        match &self.assessments {
            Assessments::Terms(terms) => {
                if terms.len() != self.decision_makers.len() {
                    push(
                        "assessments".into(),
                        format!(
                            "{} assessment tables for {} decision makers",
                            terms.len(),
                            self.decision_makers.len()
                        ),
                    );
                }
                for (l, (table, dm)) in terms.iter().zip(&self.decision_makers).enumerate() {
                    let location = format!("assessments[{l}] ({})", dm.id);
                    if table.len() != n || table.iter().any(|row| row.len() != m) {
                        push(location.clone(), format!("expected a complete {n} x {m} table"));
                        continue;
                    }
                    let Some(scale) = self.scales.get(dm.scale) else {
                        continue;
                    };
                    for (i, row) in table.iter().enumerate() {
                        for (j, &k) in row.iter().enumerate() {
                            if k >= scale.granularity() {
                                push(
                                    format!("{location}[{i}][{j}]"),
                                    format!(
                                        "term {k} out of range for granularity {}",
                                        scale.granularity()
                                    ),
                                );
                            }
                        }
                    }
                }
            }
            Assessments::Fused(matrices) => {
                if matrices.len() != self.scales.len() {
                    push(
                        "assessments".into(),
                        format!(
                            "{} matrices for {} scales",
                            matrices.len(),
                            self.scales.len()
                        ),
                    );
                }
                for (h, (matrix, scale)) in matrices.iter().zip(&self.scales).enumerate() {
                    if matrix.alternatives() != n || matrix.attributes() != m {
                        push(
                            format!("assessments[{h}]"),
                            format!(
                                "matrix is {} x {}, expected {n} x {m}",
                                matrix.alternatives(),
                                matrix.attributes()
                            ),
                        );
                    }
                    if matrix.scale().granularity() != scale.granularity() {
                        push(
                            format!("assessments[{h}]"),
                            format!(
                                "cells use granularity {}, scale has {}",
                                matrix.scale().granularity(),
                                scale.granularity()
                            ),
                        );
                    }
                }
            }
        }

        match &self.weight_mode {
            WeightMode::Known { weights } => {
                if let Err(e) = check_weights(weights, m) {
                    push("attribute_weights".into(), e.to_string());
                }
            }
            WeightMode::Unknown => {}
            WeightMode::Partial { constraints } => {
                for (c, row) in constraints.iter().enumerate() {
                    if row.coefficients.len() != m {
                        push(
                            format!("attribute_weights.constraints[{c}]"),
                            format!("{} coefficients, expected {m}", row.coefficients.len()),
                        );
                    }
                    if !row.bound.is_finite() || row.coefficients.iter().any(|a| !a.is_finite()) {
                        push(
                            format!("attribute_weights.constraints[{c}]"),
                            "values must be finite".into(),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let violations = self.violations();
        if violations.is_empty() {
            return Ok(());
        }
        let message = violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::InvalidProblem(message))
    }

    fn uses_importance(&self) -> bool {
        self.decision_makers.iter().all(|d| d.importance.is_some())
    }

    fn group_weight(&self, h: usize) -> f64 {
        let members = self.decision_makers.iter().filter(|d| d.scale == h);
        if self.uses_importance() {
            members.filter_map(|d| d.importance).sum()
        } else {
            members.count() as f64 / self.decision_makers.len() as f64
        }
    }
}

/// Fuses the members using scale `h` into one distribution matrix, and returns it with
/// the group weight `omega_h` (share of members, or their total importance).
pub fn fuse_group(problem: &DecisionProblem, h: usize) -> Result<(DecisionMatrix, f64)> {
    let scale = problem
        .scales
        .get(h)
        .ok_or_else(|| Error::InvalidProblem(format!("no scale {h}")))?;
    let members: Vec<usize> = problem
        .decision_makers
        .iter()
        .enumerate()
        .filter(|(_, d)| d.scale == h)
        .map(|(l, _)| l)
        .collect();
    if members.is_empty() {
        return Err(Error::EmptyGroup(h));
    }
    let omega = problem.group_weight(h);

    let matrix = match &problem.assessments {
        Assessments::Fused(matrices) => matrices
            .get(h)
            .cloned()
            .ok_or_else(|| Error::InvalidProblem(format!("no matrix for scale {h}")))?,
        Assessments::Terms(terms) => {
            let weight = |l: usize| match problem.decision_makers[l].importance {
                Some(lambda) if problem.uses_importance() => lambda,
                _ => 1.0,
            };
            let mass: f64 = members.iter().map(|&l| weight(l)).sum();
            if mass <= 0.0 {
                return Err(Error::InvalidProblem(format!(
                    "scale group {h} has zero total importance"
                )));
            }
            let (n, m) = (problem.alternatives.len(), problem.attributes.len());
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                let mut row = Vec::with_capacity(m);
                for j in 0..m {
                    let mut proportions = vec![0.0; scale.granularity()];
                    for &l in &members {
                        let k = *terms
                            .get(l)
                            .and_then(|t| t.get(i))
                            .and_then(|r| r.get(j))
                            .ok_or_else(|| {
                                Error::InvalidProblem(format!(
                                    "missing assessment of decision maker {l} on ({i}, {j})"
                                ))
                            })?;
                        scale.check_index(k)?;
                        proportions[k] += weight(l);
                    }
                    for b in &mut proportions {
                        *b /= mass;
                    }
                    row.push(DistributionAssessment::from_closed(scale, proportions));
                }
                rows.push(row);
            }
            DecisionMatrix::new(rows)?
        }
    };
    Ok((matrix, omega))
}

/// Lifts each per-scale matrix onto the common level, cell by cell.
pub fn unify(matrices: &[DecisionMatrix], ctx: &HierarchyContext) -> Result<Vec<DecisionMatrix>> {
    matrices
        .iter()
        .map(|matrix| matrix.try_map(|_, _, cell| ctx.upcast(cell)))
        .collect()
}

/// Cell-wise weighted average of the unified matrices with the group weights.
pub fn aggregate_groups(unified: &[DecisionMatrix], omega: &[f64]) -> Result<DecisionMatrix> {
    let first = unified.first().ok_or(Error::Empty)?;
    for other in &unified[1..] {
        if other.alternatives() != first.alternatives() || other.attributes() != first.attributes() {
            return Err(Error::InvalidProblem("matrices differ in shape".into()));
        }
    }
    first.try_map(|i, j, _| {
        let cells: Vec<DistributionAssessment> =
            unified.iter().map(|z| z.get(i, j).clone()).collect();
        dawa(&cells, omega)
    })
}

/// Coefficient of `w_j` in the total deviation: `sum_i sum_l d(z_ij, z_lj)`.
pub fn deviation_coefficient(z: &DecisionMatrix, j: usize) -> Result<f64> {
    let column: Vec<&DistributionAssessment> = z.column(j).collect();
    let mut total = 0.0;
    for a in &column {
        for b in &column {
            total += distance(a, b)?;
        }
    }
    Ok(total)
}

pub fn deviation_coefficients(z: &DecisionMatrix) -> Result<Vec<f64>> {
    (0..z.attributes())
        .map(|j| deviation_coefficient(z, j))
        .collect()
}

/// Closed-form maximum deviation weights: coefficients normalized to sum one.
pub fn max_deviation_weights(coefficients: &[f64]) -> Result<Vec<f64>> {
    let total: f64 = coefficients.iter().sum();
    if !(total > 0.0) {
        return Err(Error::ZeroDeviation);
    }
    Ok(coefficients.iter().map(|c| c / total).collect())
}

/// Weights for unknown attribute importance.
pub fn weights_m1(z: &DecisionMatrix) -> Result<Vec<f64>> {
    max_deviation_weights(&deviation_coefficients(z)?)
}

/// Linear program `max c.w` over `{sum w = 1, w >= 0} ∩ constraints`.
///
/// Returns the lexicographically smallest optimal weight vector and whether the optimum
/// was attained on more than one point.
pub fn constrained_weights(
    coefficients: &[f64],
    constraints: &[LinearConstraint],
) -> Result<(Vec<f64>, bool)> {
    let m = coefficients.len();
    let mut rows = Vec::with_capacity(constraints.len() + 1);
    rows.push(LinearConstraint::new(vec![1.0; m], Sense::Eq, 1.0));
    rows.extend_from_slice(constraints);
    let (solution, alternative_optima) = simplex::maximize_lexmin(coefficients, &rows)?;
    Ok((solution.x, alternative_optima))
}

/// Weights for partially known attribute importance.
pub fn weights_m2(
    z: &DecisionMatrix,
    constraints: &[LinearConstraint],
) -> Result<(Vec<f64>, bool)> {
    constrained_weights(&deviation_coefficients(z)?, constraints)
}

/// Row-wise weighted average over attributes, one collective assessment per alternative.
pub fn aggregate_attributes(z: &DecisionMatrix, weights: &[f64]) -> Result<Vec<DistributionAssessment>> {
    z.rows().iter().map(|row| dawa(row, weights)).collect()
}

/// Expectations, inaccuracies and the resulting order of the alternatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedAlternatives {
    pub expectations: Vec<TwoTuple>,
    pub inaccuracies: Vec<f64>,
    pub ranking: Ranking,
}

pub fn rank_alternatives(zs: &[DistributionAssessment]) -> Result<RankedAlternatives> {
    let first = zs.first().ok_or(Error::Empty)?;
    for z in zs {
        first.scale().check_compatible(z.scale())?;
    }
    let keys: Vec<RankingKey> = zs.iter().map(DistributionAssessment::ranking_key).collect();
    Ok(RankedAlternatives {
        expectations: zs.iter().map(DistributionAssessment::expectation).collect(),
        inaccuracies: keys.iter().map(|k| k.inaccuracy).collect(),
        ranking: Ranking::from_keys(&keys),
    })
}

/// Collective assessments re-expressed on one of the original scales.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleView {
    pub scale: LinguisticScale,
    pub assessments: Vec<DistributionAssessment>,
}

pub fn represent_per_scale(
    zs: &[DistributionAssessment],
    ctx: &HierarchyContext,
) -> Result<Vec<ScaleView>> {
    ctx.scales()
        .iter()
        .map(|scale| {
            Ok(ScaleView {
                scale: scale.clone(),
                assessments: zs
                    .iter()
                    .map(|z| ctx.downcast(z, scale))
                    .collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// Where the attribute weights came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum WeightProvenance {
    Given,
    MaximumDeviation,
    ConstrainedMaximumDeviation {
        /// The optimum is attained on more than one point; the lexicographically
        /// smallest one was returned.
        alternative_optima: bool,
    },
}

impl fmt::Display for WeightProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightProvenance::Given => write!(f, "given"),
            WeightProvenance::MaximumDeviation => write!(f, "maximum deviation, closed form"),
            WeightProvenance::ConstrainedMaximumDeviation { alternative_optima } => {
                write!(f, "maximum deviation, linear program")?;
                if *alternative_optima {
                    write!(f, " (alternative optima; lexicographically smallest)")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeWeights {
    pub values: Vec<f64>,
    pub provenance: WeightProvenance,
}

/// Everything the pipeline produces, step by step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionOutcome {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    /// Per-scale fused matrices, aligned with the problem's scales.
    pub group_matrices: Vec<DecisionMatrix>,
    pub group_weights: Vec<f64>,
    pub lcm_granularity: usize,
    pub unified_matrices: Vec<DecisionMatrix>,
    pub collective_matrix: DecisionMatrix,
    pub attribute_weights: AttributeWeights,
    /// `z_i` on the common level.
    pub collective: Vec<DistributionAssessment>,
    pub expectations: Vec<TwoTuple>,
    pub inaccuracies: Vec<f64>,
    pub ranking: Ranking,
    pub per_scale_views: Vec<ScaleView>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stage {
    Validation,
    Fusion,
    Unification,
    GroupAggregation,
    Weighting,
    AttributeAggregation,
    Ranking,
    Representation,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Validation => "validation",
            Stage::Fusion => "step 1 (group fusion)",
            Stage::Unification => "step 2 (unification)",
            Stage::GroupAggregation => "step 3 (group aggregation)",
            Stage::Weighting => "step 4 (attribute weights)",
            Stage::AttributeAggregation => "step 5 (attribute aggregation)",
            Stage::Ranking => "step 5 (ranking)",
            Stage::Representation => "step 6 (representation)",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{stage}: {source}")]
pub struct SolveError {
    pub stage: Stage,
    #[source]
    pub source: Error,
}

trait AtStage<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, SolveError>;
}

impl<T> AtStage<T> for Result<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, SolveError> {
        self.map_err(|source| SolveError { stage, source })
    }
}

/// Runs all six steps.
pub fn solve(problem: &DecisionProblem) -> std::result::Result<DecisionOutcome, SolveError> {
    problem.validate().at(Stage::Validation)?;

    let (group_matrices, group_weights): (Vec<_>, Vec<_>) = (0..problem.scales.len())
        .map(|h| fuse_group(problem, h))
        .collect::<Result<Vec<_>>>()
        .at(Stage::Fusion)?
        .into_iter()
        .unzip();

    let ctx = HierarchyContext::new(problem.scales.iter().cloned()).at(Stage::Unification)?;
    let unified_matrices = unify(&group_matrices, &ctx).at(Stage::Unification)?;
    let collective_matrix =
        aggregate_groups(&unified_matrices, &group_weights).at(Stage::GroupAggregation)?;

    let attribute_weights = match &problem.weight_mode {
        WeightMode::Known { weights } => AttributeWeights {
            values: weights.clone(),
            provenance: WeightProvenance::Given,
        },
        WeightMode::Unknown => AttributeWeights {
            values: weights_m1(&collective_matrix).at(Stage::Weighting)?,
            provenance: WeightProvenance::MaximumDeviation,
        },
        WeightMode::Partial { constraints } => {
            let (values, alternative_optima) =
                weights_m2(&collective_matrix, constraints).at(Stage::Weighting)?;
            AttributeWeights {
                values,
                provenance: WeightProvenance::ConstrainedMaximumDeviation { alternative_optima },
            }
        }
    };

    let collective = aggregate_attributes(&collective_matrix, &attribute_weights.values)
        .at(Stage::AttributeAggregation)?;
    let ranked = rank_alternatives(&collective).at(Stage::Ranking)?;
    let per_scale_views = represent_per_scale(&collective, &ctx).at(Stage::Representation)?;

    Ok(DecisionOutcome {
        alternatives: problem.alternatives.clone(),
        attributes: problem.attributes.clone(),
        group_matrices,
        group_weights,
        lcm_granularity: ctx.lcm_granularity(),
        unified_matrices,
        collective_matrix,
        attribute_weights,
        collective,
        expectations: ranked.expectations,
        inaccuracies: ranked.inaccuracies,
        ranking: ranked.ranking,
        per_scale_views,
    })
}
