//! Recruitment case: four candidates, four criteria, 24 committee members split 10/8/6
//! over S^5, S^7 and S^9. Inputs are the fused per-scale matrices; the remaining tables
//! are the published intermediate and final results.

use lingdist::magdm::{Assessments, DecisionMaker, DecisionMatrix, DecisionProblem, WeightMode};
use lingdist::LinguisticScale;

use super::{dist, Cell};

const T: f64 = 1.0 / 3.0;
const S: f64 = 1.0 / 6.0;
const T2: f64 = 2.0 / 3.0;
const S5: f64 = 5.0 / 6.0;

pub const GRANULARITIES: [usize; 3] = [5, 7, 9];
pub const MEMBERS: [usize; 3] = [10, 8, 6];
pub const OMEGA: [f64; 3] = [5.0 / 12.0, 1.0 / 3.0, 1.0 / 4.0];
pub const LCM_GRANULARITY: usize = 25;

pub const LABELS_5: [&str; 5] = ["poor", "slightly poor", "fair", "slightly good", "good"];
pub const LABELS_7: [&str; 7] = [
    "very poor",
    "poor",
    "slightly poor",
    "fair",
    "slightly good",
    "good",
    "very good",
];
pub const LABELS_9: [&str; 9] = [
    "extremely poor",
    "very poor",
    "poor",
    "slightly poor",
    "fair",
    "slightly good",
    "good",
    "very good",
    "extremely good",
];

pub const FUSED_5: [[Cell; 4]; 4] = [
    [&[(3, 0.4), (4, 0.6)], &[(2, 0.2), (3, 0.8)], &[(3, 0.8), (4, 0.2)], &[(3, 1.0)]],
    [
        &[(2, 0.4), (3, 0.2), (4, 0.4)],
        &[(3, 0.8), (4, 0.2)],
        &[(2, 0.2), (3, 0.4), (4, 0.4)],
        &[(2, 0.6), (3, 0.4)],
    ],
    [
        &[(1, 0.2), (2, 0.4), (3, 0.4)],
        &[(2, 0.6), (3, 0.4)],
        &[(4, 1.0)],
        &[(1, 0.4), (2, 0.4), (3, 0.2)],
    ],
    [
        &[(4, 1.0)],
        &[(3, 0.6), (4, 0.4)],
        &[(1, 0.4), (2, 0.4), (3, 0.2)],
        &[(3, 0.2), (4, 0.8)],
    ],
];

pub const FUSED_7: [[Cell; 4]; 4] = [
    [
        &[(3, 0.25), (4, 0.5), (5, 0.25)],
        &[(1, 0.25), (2, 0.25), (4, 0.5)],
        &[(4, 0.5), (6, 0.5)],
        &[(3, 0.25), (4, 0.75)],
    ],
    [
        &[(3, 0.5), (4, 0.5)],
        &[(3, 0.25), (4, 0.25), (5, 0.5)],
        &[(3, 0.25), (4, 0.5), (5, 0.25)],
        &[(5, 0.5), (6, 0.5)],
    ],
    [
        &[(3, 0.5), (4, 0.5)],
        &[(3, 0.25), (4, 0.75)],
        &[(4, 0.25), (5, 0.25), (6, 0.5)],
        &[(0, 0.25), (2, 0.75)],
    ],
    [
        &[(4, 0.5), (5, 0.25), (6, 0.25)],
        &[(5, 0.5), (6, 0.5)],
        &[(2, 0.25), (3, 0.25), (4, 0.5)],
        &[(5, 0.5), (6, 0.5)],
    ],
];

pub const FUSED_9: [[Cell; 4]; 4] = [
    [
        &[(5, T), (6, S), (7, 0.5)],
        &[(4, S), (5, S5)],
        &[(6, 0.5), (7, S), (8, T)],
        &[(5, 0.5), (6, S), (7, T)],
    ],
    [
        &[(3, T), (5, S), (6, 0.5)],
        &[(6, 0.5), (7, 0.5)],
        &[(4, T), (6, 0.5), (7, S)],
        &[(2, T), (4, S), (5, 0.5)],
    ],
    [
        &[(4, T), (5, 0.5), (6, S)],
        &[(6, T), (7, T2)],
        &[(7, 0.5), (8, 0.5)],
        &[(2, T), (3, T), (4, T)],
    ],
    [
        &[(6, T), (7, T2)],
        &[(7, T), (8, T2)],
        &[(3, T), (4, 0.5), (5, S)],
        &[(5, 0.5), (6, S), (8, T)],
    ],
];

/// Upcast matrices on S^25, written out with exact fractions.
pub const UNIFIED_5: [[Cell; 4]; 4] = [
    [&[(18, 0.4), (24, 0.6)], &[(12, 0.2), (18, 0.8)], &[(18, 0.8), (24, 0.2)], &[(18, 1.0)]],
    [
        &[(12, 0.4), (18, 0.2), (24, 0.4)],
        &[(18, 0.8), (24, 0.2)],
        &[(12, 0.2), (18, 0.4), (24, 0.4)],
        &[(12, 0.6), (18, 0.4)],
    ],
    [
        &[(6, 0.2), (12, 0.4), (18, 0.4)],
        &[(12, 0.6), (18, 0.4)],
        &[(24, 1.0)],
        &[(6, 0.4), (12, 0.4), (18, 0.2)],
    ],
    [
        &[(24, 1.0)],
        &[(18, 0.6), (24, 0.4)],
        &[(6, 0.4), (12, 0.4), (18, 0.2)],
        &[(18, 0.2), (24, 0.8)],
    ],
];

pub const UNIFIED_7: [[Cell; 4]; 4] = [
    [
        &[(12, 0.25), (16, 0.5), (20, 0.25)],
        &[(4, 0.25), (8, 0.25), (16, 0.5)],
        &[(16, 0.5), (24, 0.5)],
        &[(12, 0.25), (16, 0.75)],
    ],
    [
        &[(12, 0.5), (16, 0.5)],
        &[(12, 0.25), (16, 0.25), (20, 0.5)],
        &[(12, 0.25), (16, 0.5), (20, 0.25)],
        &[(20, 0.5), (24, 0.5)],
    ],
    [
        &[(12, 0.5), (16, 0.5)],
        &[(12, 0.25), (16, 0.75)],
        &[(16, 0.25), (20, 0.25), (24, 0.5)],
        &[(0, 0.25), (8, 0.75)],
    ],
    [
        &[(16, 0.5), (20, 0.25), (24, 0.25)],
        &[(20, 0.5), (24, 0.5)],
        &[(8, 0.25), (12, 0.25), (16, 0.5)],
        &[(20, 0.5), (24, 0.5)],
    ],
];

pub const UNIFIED_9: [[Cell; 4]; 4] = [
    [
        &[(15, T), (18, S), (21, 0.5)],
        &[(12, S), (15, S5)],
        &[(18, 0.5), (21, S), (24, T)],
        &[(15, 0.5), (18, S), (21, T)],
    ],
    [
        &[(9, T), (15, S), (18, 0.5)],
        &[(18, 0.5), (21, 0.5)],
        &[(12, T), (18, 0.5), (21, S)],
        &[(6, T), (12, S), (15, 0.5)],
    ],
    [
        &[(12, T), (15, 0.5), (18, S)],
        &[(18, T), (21, T2)],
        &[(21, 0.5), (24, 0.5)],
        &[(6, T), (9, T), (12, T)],
    ],
    [
        &[(18, T), (21, T2)],
        &[(21, T), (24, T2)],
        &[(9, T), (12, 0.5), (15, S)],
        &[(15, 0.5), (18, S), (24, T)],
    ],
];

/// Collective decision matrix as printed (3 decimals).
pub const COLLECTIVE_MATRIX: [[Cell; 4]; 4] = [
    [
        &[(12, 0.083), (15, 0.083), (16, 0.167), (18, 0.209), (20, 0.083), (21, 0.125), (24, 0.25)],
        &[(4, 0.083), (8, 0.083), (12, 0.125), (15, 0.209), (16, 0.167), (18, 0.333)],
        &[(16, 0.167), (18, 0.458), (21, 0.042), (24, 0.333)],
        &[(12, 0.083), (15, 0.125), (16, 0.25), (18, 0.459), (21, 0.083)],
    ],
    [
        &[(9, 0.083), (12, 0.333), (15, 0.042), (16, 0.167), (18, 0.208), (24, 0.167)],
        &[(12, 0.083), (16, 0.083), (18, 0.459), (20, 0.167), (21, 0.125), (24, 0.083)],
        &[(12, 0.25), (16, 0.167), (18, 0.291), (20, 0.083), (21, 0.042), (24, 0.167)],
        &[(6, 0.083), (12, 0.291), (15, 0.125), (18, 0.167), (20, 0.167), (24, 0.167)],
    ],
    [
        &[(6, 0.083), (12, 0.417), (15, 0.125), (16, 0.167), (18, 0.208)],
        &[(12, 0.333), (16, 0.25), (18, 0.25), (21, 0.167)],
        &[(16, 0.083), (20, 0.083), (21, 0.125), (24, 0.709)],
        &[(0, 0.083), (6, 0.25), (8, 0.25), (9, 0.083), (12, 0.25), (18, 0.084)],
    ],
    [
        &[(16, 0.167), (18, 0.083), (20, 0.083), (21, 0.167), (24, 0.5)],
        &[(18, 0.25), (20, 0.167), (21, 0.083), (24, 0.5)],
        &[
            (6, 0.167),
            (8, 0.083),
            (9, 0.083),
            (12, 0.375),
            (15, 0.042),
            (16, 0.167),
            (18, 0.083),
        ],
        &[(15, 0.125), (18, 0.125), (20, 0.167), (24, 0.583)],
    ],
];

pub const WEIGHTS: [f64; 4] = [0.2079, 0.1968, 0.2827, 0.3126];

pub const COLLECTIVE: [Cell; 4] = [
    &[
        (4, 0.016),
        (8, 0.016),
        (12, 0.068),
        (15, 0.098),
        (16, 0.193),
        (18, 0.382),
        (20, 0.017),
        (21, 0.064),
        (24, 0.146),
    ],
    &[
        (6, 0.026),
        (9, 0.017),
        (12, 0.248),
        (15, 0.048),
        (16, 0.098),
        (18, 0.268),
        (20, 0.109),
        (21, 0.036),
        (24, 0.150),
    ],
    &[
        (0, 0.026),
        (6, 0.096),
        (8, 0.078),
        (9, 0.026),
        (12, 0.230),
        (15, 0.026),
        (16, 0.107),
        (18, 0.119),
        (20, 0.024),
        (21, 0.068),
        (24, 0.200),
    ],
    &[
        (6, 0.047),
        (8, 0.024),
        (9, 0.023),
        (12, 0.106),
        (15, 0.051),
        (16, 0.082),
        (18, 0.129),
        (20, 0.102),
        (21, 0.051),
        (24, 0.385),
    ],
];

/// Published expectations as (term, translation).
pub const EXPECTATIONS: [(usize, f64); 4] = [(18, -0.38), (17, -0.07), (15, 0.15), (18, 0.70)];

/// Best first.
pub const RANKING: [usize; 4] = [3, 0, 1, 2];

pub const VIEW_5: [Cell; 4] = [
    &[(0, 0.006), (1, 0.022), (2, 0.186), (3, 0.602), (4, 0.184)],
    &[(1, 0.035), (2, 0.313), (3, 0.448), (4, 0.204)],
    &[(0, 0.026), (1, 0.161), (2, 0.318), (3, 0.253), (4, 0.242)],
    &[(1, 0.075), (2, 0.178), (3, 0.303), (4, 0.444)],
];

pub const VIEW_7: [Cell; 4] = [
    &[(1, 0.016), (2, 0.017), (3, 0.092), (4, 0.457), (5, 0.256), (6, 0.162)],
    &[(1, 0.013), (2, 0.026), (3, 0.264), (4, 0.268), (5, 0.270), (6, 0.159)],
    &[(0, 0.026), (1, 0.048), (2, 0.145), (3, 0.244), (4, 0.186), (5, 0.134), (6, 0.217)],
    &[(1, 0.024), (2, 0.065), (3, 0.125), (4, 0.184), (5, 0.205), (6, 0.397)],
];

/// The G3 / s_4 cell is printed as 0.2370; the row only sums to one with 0.230, which is
/// also the value carried over from the collective assessment.
pub const VIEW_9: [Cell; 4] = [
    &[(1, 0.011), (2, 0.011), (3, 0.011), (4, 0.068), (5, 0.226), (6, 0.452), (7, 0.075), (8, 0.146)],
    &[(2, 0.026), (3, 0.017), (4, 0.248), (5, 0.113), (6, 0.337), (7, 0.109), (8, 0.150)],
    &[(0, 0.026), (2, 0.122), (3, 0.078), (4, 0.230), (5, 0.098), (6, 0.162), (7, 0.084), (8, 0.200)],
    &[(2, 0.055), (3, 0.039), (4, 0.106), (5, 0.105), (6, 0.191), (7, 0.119), (8, 0.385)],
];

pub fn fused(h: usize) -> &'static [[Cell; 4]; 4] {
    [&FUSED_5, &FUSED_7, &FUSED_9][h]
}

pub fn unified(h: usize) -> &'static [[Cell; 4]; 4] {
    [&UNIFIED_5, &UNIFIED_7, &UNIFIED_9][h]
}

pub fn views(h: usize) -> &'static [Cell; 4] {
    [&VIEW_5, &VIEW_7, &VIEW_9][h]
}

pub fn scales() -> Vec<LinguisticScale> {
    vec![
        LinguisticScale::with_labels(LABELS_5).unwrap(),
        LinguisticScale::with_labels(LABELS_7).unwrap(),
        LinguisticScale::with_labels(LABELS_9).unwrap(),
    ]
}

pub fn matrix(g: usize, cells: &[[Cell; 4]; 4]) -> DecisionMatrix {
    DecisionMatrix::new(
        cells
            .iter()
            .map(|row| row.iter().map(|cell| dist(g, cell)).collect())
            .collect(),
    )
    .unwrap()
}

/// The fused-form problem with labelled scales and unknown attribute weights.
pub fn problem() -> DecisionProblem {
    let scales = scales();
    let matrices = (0..3)
        .map(|h| {
            let rows = fused(h)
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| {
                            lingdist::DistributionAssessment::from_pairs(
                                &scales[h],
                                cell.iter().copied(),
                            )
                            .unwrap()
                        })
                        .collect()
                })
                .collect();
            DecisionMatrix::new(rows).unwrap()
        })
        .collect();
    let decision_makers = (0..3)
        .flat_map(|h| {
            (1..=MEMBERS[h]).map(move |n| DecisionMaker {
                id: format!("S{}-{n}", GRANULARITIES[h]),
                scale: h,
                importance: None,
            })
        })
        .collect();
    DecisionProblem {
        alternatives: (1..=4).map(|i| format!("G{i}")).collect(),
        attributes: (1..=4).map(|j| format!("C{j}")).collect(),
        scales,
        decision_makers,
        assessments: Assessments::Fused(matrices),
        weight_mode: WeightMode::Unknown,
    }
}
