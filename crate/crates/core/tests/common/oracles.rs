//! Independent reference computations for the attribute-weighting models.

use lingdist::magdm::DecisionMatrix;
use lingdist::{LinearConstraint, Sense};
use nalgebra::{DMatrix, DVector};
use rand::rngs::StdRng;
use rand::Rng;

/// Index values `sum_k k beta_k` of every cell, read straight from the proportions.
fn index_values(z: &DecisionMatrix) -> Vec<Vec<f64>> {
    z.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|m| {
                    m.proportions()
                        .iter()
                        .enumerate()
                        .map(|(k, b)| k as f64 * b)
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn deviation(index: &[Vec<f64>], g: usize, w: &[f64]) -> f64 {
    let mut v = 0.0;
    for (j, wj) in w.iter().enumerate() {
        for a in index {
            for b in index {
                v += wj * (a[j] - b[j]).abs() / (g - 1) as f64;
            }
        }
    }
    v
}

/// Total deviation `V(w)`.
pub fn total_deviation(z: &DecisionMatrix, w: &[f64]) -> f64 {
    deviation(&index_values(z), z.scale().granularity(), w)
}

/// Maximizes `V` on `{|w| = 1, w >= 0}` by projected gradient ascent with a
/// finite-difference gradient, then rescales the maximizer to sum one.
pub fn numeric_max_deviation(z: &DecisionMatrix) -> Vec<f64> {
    let m = z.attributes();
    let g = z.scale().granularity();
    let index = index_values(z);
    let v = |w: &[f64]| deviation(&index, g, w);
    let h = 1e-4;
    let grad = |w: &[f64]| -> Vec<f64> {
        (0..m)
            .map(|j| {
                let mut up = w.to_vec();
                let mut down = w.to_vec();
                up[j] += h;
                down[j] -= h;
                (v(&up) - v(&down)) / (2.0 * h)
            })
            .collect()
    };
    let mut w = vec![1.0 / (m as f64).sqrt(); m];
    for _ in 0..500 {
        let g = grad(&w);
        let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            break;
        }
        let step: Vec<f64> = w
            .iter()
            .zip(&g)
            .map(|(wj, gj)| (wj + gj / norm).max(0.0))
            .collect();
        let len = step.iter().map(|x| x * x).sum::<f64>().sqrt();
        let next: Vec<f64> = step.iter().map(|x| x / len).collect();
        let moved = next
            .iter()
            .zip(&w)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        w = next;
        if moved < 1e-12 {
            break;
        }
    }
    let total: f64 = w.iter().sum();
    w.iter().map(|x| x / total).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All vertices of `{sum w = 1, w >= 0} ∩ constraints`, by solving every square
/// subsystem of active rows and keeping the feasible solutions.
pub fn enumerate_vertices(m: usize, constraints: &[LinearConstraint]) -> Vec<Vec<f64>> {
    let mut rows = vec![LinearConstraint::new(vec![1.0; m], Sense::Eq, 1.0)];
    rows.extend((0..m).map(|j| LinearConstraint::lower_bound(m, j, 0.0)));
    rows.extend_from_slice(constraints);
    let equalities: Vec<usize> = (0..rows.len())
        .filter(|&r| rows[r].sense == Sense::Eq)
        .collect();

    let mut vertices: Vec<Vec<f64>> = Vec::new();
    for active in combinations(rows.len(), m) {
        if !equalities.iter().all(|e| active.contains(e)) {
            continue;
        }
        let a = DMatrix::from_fn(m, m, |r, c| rows[active[r]].coefficients[c]);
        let b = DVector::from_fn(m, |r, _| rows[active[r]].bound);
        let Some(x) = a.lu().solve(&b) else {
            continue;
        };
        let x: Vec<f64> = x.iter().copied().collect();
        if x.iter().any(|v| !v.is_finite()) {
            continue;
        }
        if rows.iter().all(|row| row.is_satisfied(&x, 1e-9))
            && !vertices
                .iter()
                .any(|v| v.iter().zip(&x).all(|(p, q)| (p - q).abs() < 1e-9))
        {
            vertices.push(x);
        }
    }
    vertices
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A random nonempty polytope inside the weight simplex, and a nonnegative objective.
pub fn random_polytope(rng: &mut StdRng, m: usize) -> (Vec<f64>, Vec<LinearConstraint>) {
    let raw: Vec<f64> = (0..m).map(|_| -rng.gen_range(1e-6f64..1.0).ln()).collect();
    let total: f64 = raw.iter().sum();
    let anchor: Vec<f64> = raw.iter().map(|x| x / total).collect();

    let mut constraints = Vec::new();
    for _ in 0..rng.gen_range(0..=m) {
        let a: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let at = dot(&a, &anchor);
        let slack = rng.gen_range(0.0..0.2);
        constraints.push(if rng.gen_bool(0.5) {
            LinearConstraint::new(a, Sense::LessEq, at + slack)
        } else {
            LinearConstraint::new(a, Sense::GreaterEq, at - slack)
        });
    }
    for j in 0..m {
        if rng.gen_bool(0.3) {
            constraints.push(LinearConstraint::lower_bound(
                m,
                j,
                anchor[j] * rng.gen_range(0.0..1.0),
            ));
        }
    }
    let c = (0..m).map(|_| rng.gen_range(0.0..1.0)).collect();
    (c, constraints)
}
