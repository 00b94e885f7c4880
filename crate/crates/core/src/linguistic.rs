//! Linguistic term sets and the 2-tuple representation.
//!
//! A [`LinguisticScale`] is an ordered set of `g` labels `s_0 .. s_{g-1}` with `g` odd.
//! A [`TwoTuple`] `(s_k, alpha)` is a term plus a symbolic translation, which lets the
//! result of any symbolic aggregation live on the continuous index domain `[0, g-1]`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed when a computed index value overshoots `[0, g-1]` by rounding noise.
pub(crate) const DOMAIN_SLACK: f64 = 1e-9;

/// An ordered linguistic term set of odd granularity.
///
/// Two scales compare equal when granularity and labels agree. Arithmetic only checks
/// granularity, since term indices carry the semantics.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScaleRepr", into = "ScaleRepr")]
pub struct LinguisticScale {
    granularity: usize,
    labels: Option<Arc<[String]>>,
}

#[derive(Serialize, Deserialize)]
struct ScaleRepr {
    granularity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<ScaleRepr> for LinguisticScale {
    type Error = Error;

    fn try_from(repr: ScaleRepr) -> Result<Self> {
        match repr.labels {
            Some(labels) => LinguisticScale::with_labels(labels),
            None => LinguisticScale::new(repr.granularity),
        }
    }
}

impl From<LinguisticScale> for ScaleRepr {
    fn from(scale: LinguisticScale) -> Self {
        ScaleRepr {
            granularity: scale.granularity,
            labels: scale.labels.map(|l| l.to_vec()),
        }
    }
}

impl LinguisticScale {
    /// Scale with default labels `s_0 .. s_{g-1}`.
    pub fn new(granularity: usize) -> Result<Self> {
        if granularity < 3 || granularity % 2 == 0 {
            return Err(Error::InvalidGranularity(granularity));
        }
        Ok(LinguisticScale {
            granularity,
            labels: None,
        })
    }

    /// Scale whose granularity is the number of labels given.
    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut scale = LinguisticScale::new(labels.len())?;
        scale.labels = Some(labels.into());
        Ok(scale)
    }

    /// Like [`with_labels`](Self::with_labels) but checks the label count against `granularity`.
    pub fn with_granularity_and_labels(granularity: usize, labels: Vec<String>) -> Result<Self> {
        if labels.len() != granularity {
            return Err(Error::LabelCount {
                granularity,
                labels: labels.len(),
            });
        }
        LinguisticScale::with_labels(labels)
    }

    pub fn granularity(&self) -> usize {
        self.granularity
    }

    /// Largest term index, `g - 1`.
    pub fn max_index(&self) -> usize {
        self.granularity - 1
    }

    pub fn has_custom_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Display label of term `k`.
    pub fn label(&self, k: usize) -> String {
        match &self.labels {
            Some(labels) => labels[k].clone(),
            None => format!("s_{k}"),
        }
    }

    pub(crate) fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.granularity {
            return Err(Error::IndexOutOfRange {
                index: k,
                granularity: self.granularity,
            });
        }
        Ok(())
    }

    pub(crate) fn check_compatible(&self, other: &LinguisticScale) -> Result<()> {
        if self.granularity != other.granularity {
            return Err(Error::ScaleMismatch {
                left: self.granularity,
                right: other.granularity,
            });
        }
        Ok(())
    }

    /// Symbolic translation `delta`: maps an index value onto the closest term plus offset.
    ///
    /// Ties at a fractional part of exactly 0.5 round up, so the translation is always
    /// in `[-0.5, 0.5)` and `delta_inv(delta(x)) == x` holds bit-for-bit.
    pub fn delta(&self, kappa: f64) -> Result<TwoTuple> {
        let max = self.max_index() as f64;
        if !kappa.is_finite() || kappa < -DOMAIN_SLACK || kappa > max + DOMAIN_SLACK {
            return Err(Error::Domain {
                value: kappa,
                max: self.max_index(),
            });
        }
        let kappa = kappa.clamp(0.0, max);
        let floor = kappa.floor();
        let index = if kappa - floor >= 0.5 { floor + 1.0 } else { floor };
        Ok(TwoTuple {
            scale: self.clone(),
            index: index as usize,
            translation: kappa - index,
        })
    }

    /// The plain term `(s_k, 0)`.
    pub fn term(&self, k: usize) -> Result<TwoTuple> {
        TwoTuple::new(self, k, 0.0)
    }
}

impl fmt::Debug for LinguisticScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{}", self.granularity)
    }
}

impl fmt::Display for LinguisticScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{}", self.granularity)
    }
}

/// A linguistic 2-tuple `(s_k, alpha)`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TwoTupleRepr", into = "TwoTupleRepr")]
pub struct TwoTuple {
    scale: LinguisticScale,
    index: usize,
    translation: f64,
}

#[derive(Serialize, Deserialize)]
struct TwoTupleRepr {
    scale: LinguisticScale,
    index: usize,
    translation: f64,
}

impl TryFrom<TwoTupleRepr> for TwoTuple {
    type Error = Error;

    fn try_from(repr: TwoTupleRepr) -> Result<Self> {
        TwoTuple::new(&repr.scale, repr.index, repr.translation)
    }
}

impl From<TwoTuple> for TwoTupleRepr {
    fn from(t: TwoTuple) -> Self {
        TwoTupleRepr {
            scale: t.scale,
            index: t.index,
            translation: t.translation,
        }
    }
}

impl TwoTuple {
    pub fn new(scale: &LinguisticScale, index: usize, translation: f64) -> Result<Self> {
        scale.check_index(index)?;
        let kappa = index as f64 + translation;
        let valid = translation.is_finite()
            && (-0.5..0.5).contains(&translation)
            && kappa >= 0.0
            && kappa <= scale.max_index() as f64;
        if !valid {
            return Err(Error::InvalidTranslation {
                index,
                translation,
                granularity: scale.granularity(),
            });
        }
        Ok(TwoTuple {
            scale: scale.clone(),
            index,
            translation,
        })
    }

    pub fn scale(&self) -> &LinguisticScale {
        &self.scale
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn translation(&self) -> f64 {
        self.translation
    }

    /// Equivalent numerical value `k + alpha`.
    pub fn delta_inv(&self) -> f64 {
        self.index as f64 + self.translation
    }

    /// `Neg(s_k, alpha) = delta(g - 1 - (k + alpha))`.
    pub fn negate(&self) -> TwoTuple {
        let mirrored = (self.scale.max_index() as f64 - self.index as f64) - self.translation;
        self.scale
            .delta(mirrored)
            .expect("mirror of a valid 2-tuple stays in the domain")
    }

    /// Orders two 2-tuples of the same scale by their numerical value.
    pub fn compare(&self, other: &TwoTuple) -> Result<Ordering> {
        self.scale.check_compatible(&other.scale)?;
        Ok(self.delta_inv().total_cmp(&other.delta_inv()))
    }

    pub fn max<'a>(&'a self, other: &'a TwoTuple) -> Result<&'a TwoTuple> {
        Ok(match self.compare(other)? {
            Ordering::Less => other,
            _ => self,
        })
    }

    pub fn min<'a>(&'a self, other: &'a TwoTuple) -> Result<&'a TwoTuple> {
        Ok(match self.compare(other)? {
            Ordering::Greater => other,
            _ => self,
        })
    }
}

impl fmt::Debug for TwoTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(s_{}^{}, {})",
            self.index,
            self.scale.granularity(),
            self.translation
        )
    }
}

impl fmt::Display for TwoTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let precision = f.precision().unwrap_or(2);
        write!(
            f,
            "({}, {:.*})",
            self.scale.label(self.index),
            precision,
            self.translation
        )
    }
}
