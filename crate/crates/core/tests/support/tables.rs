//! Published nuclear waste dump site data and results.

pub const SITES: [&str; 12] = [
    "Nome",
    "Newark",
    "Rock Springs",
    "Duquesne",
    "Gary",
    "Yakima",
    "Turkey",
    "Wells",
    "Anaheim",
    "Epcot",
    "Duckwater",
    "Santa Cruz",
];

pub const ATTRIBUTES: [&str; 4] = ["Cost", "Lives lost", "Risk", "Civic"];

/// Interval data on the comparability scale, `[lo, hi]` per cell.
pub const INTERVALS: [[(f64, f64); 4]; 12] = [
    [(0.80, 1.00), (0.40, 0.70), (0.00, 0.10), (0.10, 0.30)],
    [(0.00, 0.05), (0.00, 0.05), (0.90, 1.00), (0.90, 1.00)],
    [(0.70, 0.95), (0.70, 0.90), (0.70, 0.90), (0.70, 0.90)],
    [(0.50, 0.85), (0.70, 0.90), (0.40, 0.60), (0.40, 0.60)],
    [(0.40, 0.60), (0.10, 0.30), (0.70, 0.90), (0.90, 1.00)],
    [(0.50, 0.70), (0.10, 0.30), (0.10, 0.30), (0.40, 0.60)],
    [(0.75, 0.90), (0.20, 0.40), (0.10, 0.30), (0.70, 0.90)],
    [(0.85, 0.95), (0.85, 1.00), (0.40, 0.60), (0.40, 0.60)],
    [(0.00, 0.30), (0.00, 0.10), (0.00, 0.10), (0.00, 0.10)],
    [(0.10, 0.40), (0.00, 0.20), (0.90, 1.00), (0.00, 0.10)],
    [(0.30, 0.50), (0.20, 0.40), (0.40, 0.60), (0.10, 0.30)],
    [(0.10, 0.40), (0.10, 0.30), (0.00, 0.10), (0.00, 0.10)],
];

/// Grey relational coefficients at ρ = 0.8.
pub const COEFFICIENTS: [[f64; 4]; 12] = [
    [0.9383, 0.6281, 0.4578, 0.4872],
    [0.4444, 0.4444, 1.0, 1.0],
    [0.8352, 0.8352, 0.7917, 0.7917],
    [0.6847, 0.8352, 0.6032, 0.6032],
    [0.6281, 0.5033, 0.7917, 1.0],
    [0.6847, 0.5033, 0.4872, 0.6032],
    [0.8837, 0.539, 0.4872, 0.7917],
    [0.9383, 1.0, 0.6032, 0.6032],
    [0.472, 0.4578, 0.4578, 0.4578],
    [0.5033, 0.472, 1.0, 0.4578],
    [0.5802, 0.539, 0.6032, 0.4872],
    [0.5033, 0.5033, 0.4578, 0.4578],
];

pub const PAIRWISE: [[f64; 4]; 4] = [
    [1.0, 1.0 / 5.0, 1.0 / 2.0, 3.0],
    [5.0, 1.0, 2.0, 9.0],
    [2.0, 1.0 / 2.0, 1.0, 6.0],
    [1.0 / 3.0, 1.0 / 9.0, 1.0 / 6.0, 1.0],
];

pub const PRIORITIES: [f64; 4] = [0.131, 0.545, 0.275, 0.05];

/// `(Γ, Γ', Δ(0.5), rank)` with AHP bounds and a free intercept.
pub const BOUNDED_VRS: [(f64, f64, f64, usize); 12] = [
    (0.7515, 1.1554, 0.3848, 8),
    (1.0000, 1.0000, 0.5000, 7),
    (1.0000, 1.3618, 0.9480, 2),
    (0.8770, 1.2808, 0.6954, 5),
    (1.0000, 1.1642, 0.7033, 3),
    (0.6642, 1.068, 0.1684, 10),
    (1.0000, 1.123, 0.6523, 6),
    (1.0000, 1.4038, 1.0000, 1),
    (0.5962, 1.0000, 0.0000, 12),
    (1.0000, 1.1609, 0.6992, 4),
    (0.6960, 1.0999, 0.2474, 9),
    (0.6251, 1.0289, 0.0716, 11),
];

/// `(Γ, Γ', Δ(0.5), rank)` without weight bounds under constant returns.
pub const CRS_UNBOUNDED: [(f64, f64, f64, usize); 12] = [
    (1.0000, 1.0000, 0.5000, 6),
    (1.0000, 1.0000, 0.5000, 6),
    (1.0000, 1.7294, 1.0000, 1),
    (0.8921, 1.3176, 0.5912, 3),
    (1.0000, 1.1146, 0.5785, 4),
    (0.7855, 1.0642, 0.2926, 7),
    (1.0000, 1.0642, 0.5440, 5),
    (1.0000, 1.3176, 0.7177, 2),
    (0.5735, 1.0000, 0.0000, 10),
    (1.0000, 1.0000, 0.5000, 6),
    (0.7351, 1.0642, 0.2335, 8),
    (0.5943, 1.0000, 0.0244, 9),
];

pub fn site(name: &str) -> usize {
    SITES.iter().position(|s| *s == name).expect("known site")
}
