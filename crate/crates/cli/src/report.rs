//! Human-readable and JSON renderings. Both are pure functions of their input, so equal
//! outcomes always print the same bytes.

use std::fmt::Write;

use lingdist::magdm::{DecisionMatrix, DecisionOutcome};
use lingdist::DistributionAssessment;

fn width(names: &[String]) -> usize {
    names.iter().map(|s| s.chars().count()).max().unwrap_or(0)
}

fn matrix(out: &mut String, z: &DecisionMatrix, alternatives: &[String], attributes: &[String]) {
    let (wa, wc) = (width(alternatives), width(attributes));
    for (i, row) in z.rows().iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let _ = writeln!(
                out,
                "    {:<wa$}  {:<wc$}  {cell}",
                alternatives[i], attributes[j]
            );
        }
    }
}

fn rows(out: &mut String, zs: &[DistributionAssessment], alternatives: &[String]) {
    let wa = width(alternatives);
    for (name, z) in alternatives.iter().zip(zs) {
        let _ = writeln!(out, "    {name:<wa$}  {z}");
    }
}

pub fn vector(values: &[f64]) -> String {
    let cells: Vec<String> = values.iter().map(|v| format!("{v:.4}")).collect();
    format!("({})", cells.join(", "))
}

pub fn render_table(o: &DecisionOutcome) -> String {
    let mut out = String::new();
    let (alts, atts) = (&o.alternatives, &o.attributes);

    let _ = writeln!(out, "Step 1  Fused assessments per scale");
    for (z, omega) in o.group_matrices.iter().zip(&o.group_weights) {
        let _ = writeln!(out, "  S^{}  omega = {omega:.4}", z.scale().granularity());
        matrix(&mut out, z, alts, atts);
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "Step 2  Common level S^{}", o.lcm_granularity);
    for (source, z) in o.group_matrices.iter().zip(&o.unified_matrices) {
        let _ = writeln!(
            out,
            "  S^{} on S^{}",
            source.scale().granularity(),
            o.lcm_granularity
        );
        matrix(&mut out, z, alts, atts);
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "Step 3  Collective matrix");
    matrix(&mut out, &o.collective_matrix, alts, atts);

    let _ = writeln!(out);
    let _ = writeln!(out, "Step 4  Attribute weights ({})", o.attribute_weights.provenance);
    let _ = writeln!(out, "  w = {}", vector(&o.attribute_weights.values));

    let _ = writeln!(out);
    let _ = writeln!(out, "Step 5  Collective assessments");
    rows(&mut out, &o.collective, alts);
    let wa = width(alts);
    for ((name, e), t) in alts.iter().zip(&o.expectations).zip(&o.inaccuracies) {
        let _ = writeln!(
            out,
            "    {name:<wa$}  E = {e}  E_idx = {:.4}  T = {t:.4}",
            e.delta_inv()
        );
    }
    let _ = writeln!(out, "  ranking: {}", o.ranking.describe(alts));

    let _ = writeln!(out);
    let _ = writeln!(out, "Step 6  Collective assessments on the original scales");
    for view in &o.per_scale_views {
        let _ = writeln!(out, "  S^{}", view.scale.granularity());
        rows(&mut out, &view.assessments, alts);
    }
    out
}

pub fn render_json(o: &DecisionOutcome) -> String {
    let mut text = serde_json::to_string_pretty(o).expect("outcome serializes");
    text.push('\n');
    text
}
