//! Computing with multi-granular linguistic distribution assessments.
//!
//! * [`linguistic`]: term sets and the 2-tuple model.
//! * [`distribution`]: distribution assessments, weighted averaging, distances, ranking.
//! * [`multigranular`]: hierarchies over scales of different granularity and the
//!   transformations between them.
//! * [`magdm`]: the large-scale multi-attribute group decision pipeline.
//! * [`simplex`]: the small LP solver behind constrained attribute weighting.

pub mod distribution;
pub mod error;
pub mod linguistic;
pub mod magdm;
pub mod multigranular;
pub mod simplex;

pub use distribution::{DistributionAssessment, Ranking, RankingKey};
pub use error::{Error, Result};
pub use linguistic::{LinguisticScale, TwoTuple};
pub use multigranular::HierarchyContext;
pub use simplex::{LinearConstraint, Sense};
pub use magdm::{
    solve, Assessments, DecisionMaker, DecisionMatrix, DecisionOutcome, DecisionProblem,
    SolveError, WeightMode, WeightProvenance,
};
