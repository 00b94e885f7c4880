//! Extended linguistic hierarchies and transformations between scales of different
//! granularity.
//!
//! Every participating scale `S^g` embeds into the finest common level `S^{g*}` with
//! `g* - 1 = lcm(g_1 - 1, ..., g_n - 1)`: term `s_k^g` sits exactly on `s_{k r}^{g*}`
//! for the stride `r = (g* - 1) / (g - 1)`. Moving a distribution up is therefore a pure
//! relocation of mass. Moving it down splits each fine term between the two adjacent
//! coarse terms through the 2-tuple bridge and recombines with the weighted average.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::distribution::{dawa, DistributionAssessment};
use crate::error::{Error, Result};
use crate::linguistic::{LinguisticScale, TwoTuple};

/// Largest granularity the common level may reach.
pub const MAX_HIERARCHY_GRANULARITY: usize = 1_000_001;

/// Transformation between levels: `TF(t) = delta(delta_inv(t) (g' - 1) / (g - 1))`.
pub fn tf(t: &TwoTuple, target: &LinguisticScale) -> TwoTuple {
    let source_span = t.scale().max_index() as f64;
    let target_span = target.max_index() as f64;
    let kappa = t.delta_inv() * target_span / source_span;
    target
        .delta(kappa)
        .expect("rescaled index value stays in the target domain")
}

/// The equivalent distribution of a 2-tuple: `(s_k, alpha)` splits between `s_k` and
/// its neighbour in the direction of `alpha`. The expectation is exactly `k + alpha`.
pub fn tuple_to_distribution(t: &TwoTuple) -> DistributionAssessment {
    let scale = t.scale();
    let k = t.index();
    let alpha = t.translation();
    let mut proportions = vec![0.0; scale.granularity()];
    if alpha >= 0.0 {
        proportions[k] = 1.0 - alpha;
        if alpha > 0.0 {
            proportions[k + 1] = alpha;
        }
    } else {
        proportions[k - 1] = -alpha;
        proportions[k] = 1.0 + alpha;
    }
    DistributionAssessment::from_closed(scale, proportions)
}

/// The equivalent distribution of an index value `kappa in [0, g - 1]`:
/// `{<s_l, 1 - beta>, <s_{l+1}, beta>}` with `l = floor(kappa)`, `beta = kappa - l`.
///
/// Also accepts the index value of an unnormalized pair such as `(s_2, 0.6)`.
pub fn index_value_to_distribution(
    scale: &LinguisticScale,
    kappa: f64,
) -> Result<DistributionAssessment> {
    let max = scale.max_index();
    if !kappa.is_finite() || kappa < 0.0 || kappa > max as f64 {
        return Err(Error::Domain { value: kappa, max });
    }
    let l = (kappa.floor() as usize).min(max);
    let beta = kappa - l as f64;
    let mut proportions = vec![0.0; scale.granularity()];
    proportions[l] = 1.0 - beta;
    if beta > 0.0 {
        proportions[l + 1] = beta;
    }
    Ok(DistributionAssessment::from_closed(scale, proportions))
}

/// `F` on a raw pair `(s_k, alpha)` with `|alpha| < 1`, which need not be a normalized
/// 2-tuple: `(s_2, 0.6)` gives `{<s_2, 0.4>, <s_3, 0.6>}`. Working from `alpha` itself
/// avoids the rounding of `k + alpha`.
pub fn pair_to_distribution(
    scale: &LinguisticScale,
    index: usize,
    translation: f64,
) -> Result<DistributionAssessment> {
    scale.check_index(index)?;
    let invalid = Error::InvalidTranslation {
        index,
        translation,
        granularity: scale.granularity(),
    };
    if !(translation.abs() < 1.0) {
        return Err(invalid);
    }
    let mut proportions = vec![0.0; scale.granularity()];
    if translation > 0.0 {
        if index == scale.max_index() {
            return Err(invalid);
        }
        proportions[index] = 1.0 - translation;
        proportions[index + 1] = translation;
    } else if translation < 0.0 {
        if index == 0 {
            return Err(invalid);
        }
        proportions[index - 1] = -translation;
        proportions[index] = 1.0 + translation;
    } else {
        proportions[index] = 1.0;
    }
    Ok(DistributionAssessment::from_closed(scale, proportions))
}

/// The participating scales plus the common level they all embed into.
///
/// The per-scale decomposition tables used by [`HierarchyContext::downcast`] are built
/// eagerly, so a context is immutable once constructed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ContextRepr", into = "ContextRepr")]
pub struct HierarchyContext {
    scales: Vec<LinguisticScale>,
    lcm_scale: LinguisticScale,
    tables: Vec<Vec<DistributionAssessment>>,
}

#[derive(Serialize, Deserialize)]
struct ContextRepr {
    scales: Vec<LinguisticScale>,
}

impl TryFrom<ContextRepr> for HierarchyContext {
    type Error = Error;

    fn try_from(repr: ContextRepr) -> Result<Self> {
        HierarchyContext::new(repr.scales)
    }
}

impl From<HierarchyContext> for ContextRepr {
    fn from(ctx: HierarchyContext) -> Self {
        ContextRepr { scales: ctx.scales }
    }
}

impl HierarchyContext {
    /// Builds the hierarchy; scales with an already seen granularity are dropped.
    pub fn new(scales: impl IntoIterator<Item = LinguisticScale>) -> Result<Self> {
        let mut distinct: Vec<LinguisticScale> = Vec::new();
        for scale in scales {
            if !distinct
                .iter()
                .any(|s| s.granularity() == scale.granularity())
            {
                distinct.push(scale);
            }
        }
        if distinct.is_empty() {
            return Err(Error::Empty);
        }
        let mut span = 1usize;
        for scale in &distinct {
            let delta = scale.max_index();
            span = (span / span.gcd(&delta))
                .checked_mul(delta)
                .filter(|&s| s < MAX_HIERARCHY_GRANULARITY)
                .ok_or(Error::HierarchyTooLarge {
                    limit: MAX_HIERARCHY_GRANULARITY,
                })?;
        }
        debug_assert!(distinct.iter().all(|s| s.max_index() > 0 && span % s.max_index() == 0));
        let lcm_scale = distinct
            .iter()
            .find(|s| s.granularity() == span + 1)
            .cloned()
            .map_or_else(|| LinguisticScale::new(span + 1), Ok)?;
        let tables = distinct
            .iter()
            .map(|target| decomposition_table(span, target))
            .collect();
        Ok(HierarchyContext {
            scales: distinct,
            lcm_scale,
            tables,
        })
    }

    /// Participating scales, in first-seen order.
    pub fn scales(&self) -> &[LinguisticScale] {
        &self.scales
    }

    /// The common level `S^{g*}`.
    pub fn lcm_scale(&self) -> &LinguisticScale {
        &self.lcm_scale
    }

    pub fn lcm_granularity(&self) -> usize {
        self.lcm_scale.granularity()
    }

    /// Stride of `scale` inside the common level, `(g* - 1) / (g - 1)`.
    pub fn stride(&self, scale: &LinguisticScale) -> Result<usize> {
        self.position(scale)?;
        Ok(self.lcm_scale.max_index() / scale.max_index())
    }

    fn position(&self, scale: &LinguisticScale) -> Result<usize> {
        self.scales
            .iter()
            .position(|s| s.granularity() == scale.granularity())
            .ok_or(Error::ScaleNotInContext(scale.granularity()))
    }

    fn is_lcm(&self, scale: &LinguisticScale) -> bool {
        scale.granularity() == self.lcm_scale.granularity()
    }

    /// Stage one: relocates the mass of `m` onto the common level.
    pub fn upcast(&self, m: &DistributionAssessment) -> Result<DistributionAssessment> {
        if self.is_lcm(m.scale()) {
            return Ok(m.clone());
        }
        let stride = self.stride(m.scale())?;
        let mut gamma = vec![0.0; self.lcm_granularity()];
        for (k, &beta) in m.proportions().iter().enumerate() {
            gamma[k * stride] = beta;
        }
        Ok(DistributionAssessment::from_closed(&self.lcm_scale, gamma))
    }

    /// The `g*` assessments `F(TF(s_k^{g*}, 0))` on `target`, one per fine term.
    pub fn decompose_level(&self, target: &LinguisticScale) -> Result<&[DistributionAssessment]> {
        let position = self.position(target)?;
        Ok(&self.tables[position])
    }

    /// Stage two: brings an assessment on the common level down to `target`.
    pub fn downcast(
        &self,
        m: &DistributionAssessment,
        target: &LinguisticScale,
    ) -> Result<DistributionAssessment> {
        self.lcm_scale.check_compatible(m.scale())?;
        if self.is_lcm(target) {
            return Ok(m.clone());
        }
        dawa(self.decompose_level(target)?, m.proportions())
    }

    /// Converts `m` to `target`, always routing through the common level.
    pub fn transform(
        &self,
        m: &DistributionAssessment,
        target: &LinguisticScale,
    ) -> Result<DistributionAssessment> {
        if m.granularity() == target.granularity() {
            if !self.is_lcm(target) {
                self.position(target)?;
            }
            return Ok(m.clone());
        }
        self.downcast(&self.upcast(m)?, target)
    }
}

/// Entry `k` splits `kappa = k (g - 1) / (g* - 1)` between `s_l` and `s_{l+1}`.
///
/// Integer arithmetic keeps `l` and `theta` exact: `l = k (g - 1) div (g* - 1)`.
fn decomposition_table(span: usize, target: &LinguisticScale) -> Vec<DistributionAssessment> {
    let target_span = target.max_index();
    (0..=span)
        .map(|k| {
            let (l, rem) = (k * target_span).div_rem(&span);
            let theta = rem as f64 / span as f64;
            let mut proportions = vec![0.0; target.granularity()];
            proportions[l] = 1.0 - theta;
            if rem > 0 {
                proportions[l + 1] = theta;
            }
            DistributionAssessment::from_closed(target, proportions)
        })
        .collect()
}
