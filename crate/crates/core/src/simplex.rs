//! Dense two-phase tableau simplex for small linear programs
//! `maximize c.x  s.t.  A x (<=|>=|=) b,  x >= 0`.
//!
//! Bland's rule is used for both entering and leaving variables, so the method cannot
//! cycle and the pivot sequence is fully determined by the input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pivot and feasibility tolerance.
pub const PIVOT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    LessEq,
    #[serde(rename = ">=")]
    GreaterEq,
    #[serde(rename = "=")]
    Eq,
}

/// One row `coefficients . x (sense) bound`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub coefficients: Vec<f64>,
    pub sense: Sense,
    pub bound: f64,
}

impl LinearConstraint {
    pub fn new(coefficients: Vec<f64>, sense: Sense, bound: f64) -> Self {
        LinearConstraint {
            coefficients,
            sense,
            bound,
        }
    }

    /// `x_j >= value`
    pub fn lower_bound(n: usize, j: usize, value: f64) -> Self {
        LinearConstraint::new(unit(n, j), Sense::GreaterEq, value)
    }

    /// `x_j <= value`
    pub fn upper_bound(n: usize, j: usize, value: f64) -> Self {
        LinearConstraint::new(unit(n, j), Sense::LessEq, value)
    }

    /// `x_a - x_b >= margin`, e.g. a weak ranking with `margin = 0`.
    pub fn at_least(n: usize, a: usize, b: usize, margin: f64) -> Self {
        let mut coefficients = unit(n, a);
        coefficients[b] -= 1.0;
        LinearConstraint::new(coefficients, Sense::GreaterEq, margin)
    }

    /// `x_a >= factor * x_b`
    pub fn multiple(n: usize, a: usize, b: usize, factor: f64) -> Self {
        let mut coefficients = unit(n, a);
        coefficients[b] -= factor;
        LinearConstraint::new(coefficients, Sense::GreaterEq, 0.0)
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.coefficients.iter().zip(x).map(|(a, x)| a * x).sum()
    }

    pub fn is_satisfied(&self, x: &[f64], tolerance: f64) -> bool {
        let lhs = self.value(x);
        match self.sense {
            Sense::LessEq => lhs <= self.bound + tolerance,
            Sense::GreaterEq => lhs >= self.bound - tolerance,
            Sense::Eq => (lhs - self.bound).abs() <= tolerance,
        }
    }
}

fn unit(n: usize, j: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[j] = 1.0;
    v
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
}

#[derive(Clone)]
struct Tableau {
    /// rows x (cols + 1); last column is the right-hand side.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let width = self.cols + 1;
        let p = self.rows[row][col];
        for v in self.rows[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let factor = other[col];
            if factor != 0.0 {
                for c in 0..width {
                    other[c] -= factor * pivot_row[c];
                }
                other[col] = 0.0;
            }
        }
        self.basis[row] = col;
    }

    /// Reduced costs of `cost` (to maximize) with respect to the current basis.
    fn reduced(&self, cost: &[f64]) -> Vec<f64> {
        let mut reduced = cost.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = cost[b];
            if cb != 0.0 {
                for (c, r) in reduced.iter_mut().enumerate() {
                    *r -= cb * row[c];
                }
            }
        }
        reduced
    }

    /// Primal simplex on `cost` restricted to columns where `allowed` holds.
    fn optimize(&mut self, cost: &[f64], allowed: &[bool]) -> Result<()> {
        loop {
            let reduced = self.reduced(cost);
            let entering = (0..self.cols).find(|&c| allowed[c] && reduced[c] > PIVOT_TOLERANCE);
            let Some(col) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, f64)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                let a = row[col];
                if a > PIVOT_TOLERANCE {
                    let ratio = row[self.cols] / a;
                    leaving = match leaving {
                        None => Some((r, ratio)),
                        Some((best, best_ratio)) => {
                            if ratio < best_ratio - PIVOT_TOLERANCE
                                || (ratio <= best_ratio + PIVOT_TOLERANCE
                                    && self.basis[r] < self.basis[best])
                            {
                                Some((r, ratio))
                            } else {
                                Some((best, best_ratio))
                            }
                        }
                    };
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return Err(Error::Unbounded),
            }
        }
    }

    fn value_of(&self, n: usize) -> Vec<f64> {
        let mut x = vec![0.0; n];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < n {
                x[b] = row[self.cols].max(0.0);
            }
        }
        x
    }
}

/// A feasible tableau after phase one, with artificial columns barred.
#[derive(Clone)]
struct Feasible {
    tableau: Tableau,
    n: usize,
    allowed: Vec<bool>,
}

impl Feasible {
    fn cost(&self, objective: &[f64]) -> Vec<f64> {
        let mut cost = vec![0.0; self.tableau.cols];
        cost[..self.n].copy_from_slice(objective);
        cost
    }

    /// Optimizes `objective`, then bars every column that would lower it, so later
    /// objectives only move along the optimal face.
    fn stage(&mut self, objective: &[f64]) -> Result<()> {
        let cost = self.cost(objective);
        self.tableau.optimize(&cost, &self.allowed)?;
        let reduced = self.tableau.reduced(&cost);
        for (c, allowed) in self.allowed.iter_mut().enumerate() {
            if reduced[c] < -PIVOT_TOLERANCE {
                *allowed = false;
            }
        }
        Ok(())
    }

    fn solution(&self, objective: &[f64]) -> LpSolution {
        let x = self.tableau.value_of(self.n);
        let objective = objective.iter().zip(&x).map(|(c, x)| c * x).sum();
        LpSolution { x, objective }
    }
}

fn phase_one(n: usize, constraints: &[LinearConstraint]) -> Result<Feasible> {
    for c in constraints {
        if c.coefficients.len() != n {
            return Err(Error::InvalidProblem(format!(
                "constraint has {} coefficients, expected {n}",
                c.coefficients.len()
            )));
        }
        if !c.bound.is_finite() || c.coefficients.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidProblem("constraint is not finite".into()));
        }
    }

    // Normalize rows to a nonnegative right-hand side.
    let normalized: Vec<(Vec<f64>, Sense, f64)> = constraints
        .iter()
        .map(|c| {
            if c.bound < 0.0 {
                let sense = match c.sense {
                    Sense::LessEq => Sense::GreaterEq,
                    Sense::GreaterEq => Sense::LessEq,
                    Sense::Eq => Sense::Eq,
                };
                (c.coefficients.iter().map(|a| -a).collect(), sense, -c.bound)
            } else {
                (c.coefficients.clone(), c.sense, c.bound)
            }
        })
        .collect();

    let slack_count = normalized
        .iter()
        .filter(|(_, s, _)| *s != Sense::Eq)
        .count();
    let artificial_count = normalized
        .iter()
        .filter(|(_, s, _)| *s != Sense::LessEq)
        .count();
    let cols = n + slack_count + artificial_count;
    let first_artificial = n + slack_count;

    let mut rows = Vec::with_capacity(normalized.len());
    let mut basis = Vec::with_capacity(normalized.len());
    let (mut slack, mut artificial) = (n, first_artificial);
    for (coefficients, sense, bound) in &normalized {
        let mut row = vec![0.0; cols + 1];
        row[..n].copy_from_slice(coefficients);
        row[cols] = *bound;
        match sense {
            Sense::LessEq => {
                row[slack] = 1.0;
                basis.push(slack);
                slack += 1;
            }
            Sense::GreaterEq => {
                row[slack] = -1.0;
                slack += 1;
                row[artificial] = 1.0;
                basis.push(artificial);
                artificial += 1;
            }
            Sense::Eq => {
                row[artificial] = 1.0;
                basis.push(artificial);
                artificial += 1;
            }
        }
        rows.push(row);
    }
    let mut tableau = Tableau { rows, basis, cols };

    if artificial_count > 0 {
        let mut cost = vec![0.0; cols];
        for c in cost.iter_mut().skip(first_artificial) {
            *c = -1.0;
        }
        tableau.optimize(&cost, &vec![true; cols])?;
        let infeasibility: f64 = tableau
            .rows
            .iter()
            .zip(&tableau.basis)
            .filter(|(_, &b)| b >= first_artificial)
            .map(|(row, _)| row[cols])
            .sum();
        if infeasibility > PIVOT_TOLERANCE {
            return Err(Error::Infeasible);
        }
        // Drive zero-level artificials out of the basis where a real column can replace them.
        for r in 0..tableau.rows.len() {
            if tableau.basis[r] >= first_artificial {
                if let Some(col) =
                    (0..first_artificial).find(|&c| tableau.rows[r][c].abs() > PIVOT_TOLERANCE)
                {
                    tableau.pivot(r, col);
                }
            }
        }
        // Rows still holding an artificial are redundant.
        let keep: Vec<bool> = tableau
            .basis
            .iter()
            .map(|&b| b < first_artificial)
            .collect();
        let mut it = keep.iter();
        tableau.rows.retain(|_| *it.next().unwrap());
        tableau.basis.retain(|&b| b < first_artificial);
    }

    let allowed = (0..cols).map(|c| c < first_artificial).collect();
    Ok(Feasible {
        tableau,
        n,
        allowed,
    })
}

/// Maximizes `objective . x` over `{x >= 0} ∩ constraints`.
pub fn maximize(objective: &[f64], constraints: &[LinearConstraint]) -> Result<LpSolution> {
    let mut feasible = phase_one(objective.len(), constraints)?;
    let cost = feasible.cost(objective);
    feasible.tableau.optimize(&cost, &feasible.allowed)?;
    Ok(feasible.solution(objective))
}

/// Maximizes `objective . x`, then returns the lexicographically smallest optimal point
/// (minimizing `x_0`, then `x_1`, ... without leaving the optimal face).
///
/// The flag reports whether the optimal face holds more than one point, found by
/// comparing against the lexicographically largest optimal point.
pub fn maximize_lexmin(
    objective: &[f64],
    constraints: &[LinearConstraint],
) -> Result<(LpSolution, bool)> {
    let n = objective.len();
    let mut feasible = phase_one(n, constraints)?;
    feasible.stage(objective)?;
    let optimal = feasible.solution(objective);

    let mut lexmax = feasible.clone();
    for j in 0..n {
        let mut down = vec![0.0; n];
        down[j] = -1.0;
        feasible.stage(&down)?;
        lexmax.stage(&unit(n, j))?;
    }
    let mut low = feasible.solution(objective);
    let high = lexmax.solution(objective);
    let spread = low
        .x
        .iter()
        .zip(&high.x)
        .any(|(a, b)| (a - b).abs() > 1e-7);
    // Stay on the reported optimum when rounding nudged the lexicographic passes.
    if (low.objective - optimal.objective).abs() > PIVOT_TOLERANCE {
        low = optimal;
    }
    Ok((low, spread))
}
