//! Shared test data and independent oracles.
#![allow(dead_code)]

pub mod oracle;
pub mod tables;

use greyrank_core::gra::CoefficientMatrix;
use rand::Rng;

/// A random coefficient matrix with `m ∈ [3, 10]`, `n ∈ [2, 5]` and entries in `(0, 1]`.
pub fn random_coefficients<R: Rng>(rng: &mut R) -> Vec<Vec<f64>> {
    let m = rng.gen_range(3..=10);
    let n = rng.gen_range(2..=5);
    (0..m)
        .map(|_| (0..n).map(|_| 1.0 - rng.gen_range(0.0..0.99)).collect())
        .collect()
}

pub fn to_matrix(rows: &[Vec<f64>]) -> CoefficientMatrix {
    CoefficientMatrix::from_rows(rows).expect("valid coefficients")
}

/// Positive weights summing to one.
pub fn random_priorities<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / total).collect()
}
