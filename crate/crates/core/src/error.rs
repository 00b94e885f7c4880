use thiserror::Error;

/// Errors raised by the linguistic computing primitives and the decision pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("granularity must be an odd integer >= 3, got {0}")]
    InvalidGranularity(usize),

    #[error("scale of granularity {granularity} needs {granularity} labels, got {labels}")]
    LabelCount { granularity: usize, labels: usize },

    #[error("value {value} is outside the index domain [0, {max}]")]
    Domain { value: f64, max: usize },

    #[error("term index {index} out of range for granularity {granularity}")]
    IndexOutOfRange { index: usize, granularity: usize },

    #[error("symbolic translation {translation} is invalid for term {index} of granularity {granularity}")]
    InvalidTranslation {
        index: usize,
        translation: f64,
        granularity: usize,
    },

    #[error("scale mismatch: granularity {left} vs {right}")]
    ScaleMismatch { left: usize, right: usize },

    #[error("expected {expected} proportions, got {actual}")]
    ProportionLength { expected: usize, actual: usize },

    #[error("proportion {value} at term {index} is negative or not finite")]
    InvalidProportion { index: usize, value: f64 },

    #[error("proportions sum to {sum}, expected 1")]
    ProportionSum { sum: f64 },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("nothing to aggregate")]
    Empty,

    #[error("granularity {0} is not part of the hierarchy")]
    ScaleNotInContext(usize),

    #[error("hierarchy granularity exceeds {limit}")]
    HierarchyTooLarge { limit: usize },

    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),

    #[error("scale group {0} has no decision makers")]
    EmptyGroup(usize),

    #[error("all attribute deviations are zero; the alternatives are indistinguishable, supply attribute weights instead")]
    ZeroDeviation,

    #[error("attribute weight constraints are infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
