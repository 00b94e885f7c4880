//! Shared fixtures, oracles and property checks for the integration tests.
#![allow(dead_code)]

pub mod oracles;
pub mod recruitment;

use lingdist::{DistributionAssessment, LinguisticScale};

pub type Cell = &'static [(usize, f64)];

pub fn scale(g: usize) -> LinguisticScale {
    LinguisticScale::new(g).unwrap()
}

pub fn dist(g: usize, pairs: &[(usize, f64)]) -> DistributionAssessment {
    DistributionAssessment::from_pairs(&scale(g), pairs.iter().copied()).unwrap()
}

/// Dense vector of a sparse cell.
pub fn dense(g: usize, pairs: &[(usize, f64)]) -> Vec<f64> {
    let mut v = vec![0.0; g];
    for &(k, p) in pairs {
        v[k] += p;
    }
    v
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
