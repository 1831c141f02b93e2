//! Attribute priorities from a pairwise comparison matrix.
//!
//! Priorities are the principal (Perron) eigenvector of the reciprocal
//! judgment matrix, found by power iteration. The consistency ratio compares
//! the eigenvalue excess `λmax − N` against Saaty's random index.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Saaty's average random consistency index for `N = 1..=10`.
pub const RANDOM_INDEX: [f64; 10] = [0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49];

/// Conventional upper limit for an acceptable consistency ratio.
pub const CONSISTENCY_THRESHOLD: f64 = 0.1;

pub const MAX_ITERATIONS: usize = 10_000;
pub const CONVERGENCE_TOLERANCE: f64 = 1e-12;

const RECIPROCITY_TOLERANCE: f64 = 1e-9;

/// Positive reciprocal `N × N` judgment matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PairwiseMatrix {
    labels: Vec<String>,
    entries: Vec<f64>,
}

impl PairwiseMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<f64>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Empty("pairwise matrix"));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                what: "pairwise matrix",
                expected: n * n,
                found: entries.len(),
            });
        }
        for h in 0..n {
            for q in 0..n {
                let b = entries[h * n + q];
                if !b.is_finite() {
                    return Err(Error::NonFinite("pairwise matrix"));
                }
                if b <= 0.0 {
                    return Err(Error::NonPositiveJudgment { row: h, col: q, value: b });
                }
            }
        }
        for h in 0..n {
            if (entries[h * n + h] - 1.0).abs() > RECIPROCITY_TOLERANCE {
                return Err(Error::Diagonal(h));
            }
            for q in h + 1..n {
                let product = entries[h * n + q] * entries[q * n + h];
                if (product - 1.0).abs() > RECIPROCITY_TOLERANCE {
                    return Err(Error::NotReciprocal { row: q, col: h });
                }
            }
        }
        Ok(Self { labels, entries })
    }

    pub fn from_rows(labels: Vec<String>, rows: &[Vec<f64>]) -> Result<Self> {
        let n = labels.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "pairwise matrix row",
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(labels, entries)
    }

    /// The fully consistent matrix `b_hq = v_h / v_q`.
    pub fn consistent(labels: Vec<String>, generator: &[f64]) -> Result<Self> {
        let n = generator.len();
        let mut entries = Vec::with_capacity(n * n);
        for &vh in generator {
            for &vq in generator {
                entries.push(vh / vq);
            }
        }
        Self::new(labels, entries)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, h: usize, q: usize) -> f64 {
        self.entries[h * self.size() + q]
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        let n = self.size();
        for (h, slot) in out.iter_mut().enumerate() {
            *slot = self.entries[h * n..(h + 1) * n]
                .iter()
                .zip(x)
                .map(|(b, v)| b * v)
                .sum();
        }
    }
}

/// Normalized attribute priorities with the eigenvalue and consistency
/// ratio they came with. Published or externally supplied weights carry
/// neither.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PriorityVector {
    weights: Vec<f64>,
    lambda_max: Option<f64>,
    consistency_ratio: Option<f64>,
    iterations: usize,
}

/// Tolerance on `Σ e_j = 1` for supplied weights. Published priorities are
/// rounded to three decimals and need not sum exactly to one.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-2;

impl PriorityVector {
    /// Wraps externally supplied priorities verbatim.
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("priority vector"));
        }
        if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
            return Err(Error::InvalidWeights("priorities must be finite and positive"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidWeights("priorities must sum to 1"));
        }
        Ok(Self {
            weights,
            lambda_max: None,
            consistency_ratio: None,
            iterations: 0,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn lambda_max(&self) -> Option<f64> {
        self.lambda_max
    }

    pub fn consistency_ratio(&self) -> Option<f64> {
        self.consistency_ratio
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// `true` unless a consistency ratio is known and exceeds 0.1.
    pub fn is_consistent(&self) -> bool {
        self.consistency_ratio
            .is_none_or(|cr| cr <= CONSISTENCY_THRESHOLD)
    }
}

/// Power iteration on `B` with sum-normalized iterates.
pub fn principal_eigenvector(matrix: &PairwiseMatrix) -> Result<PriorityVector> {
    let n = matrix.size();
    if n < 2 {
        return Err(Error::DimensionMismatch {
            what: "pairwise matrix size (at least 2)",
            expected: 2,
            found: n,
        });
    }
    let mut current = alloc::vec![1.0 / n as f64; n];
    let mut next = alloc::vec![0.0; n];
    let mut iterations = 0;
    loop {
        if iterations == MAX_ITERATIONS {
            return Err(Error::NoConvergence(MAX_ITERATIONS));
        }
        iterations += 1;
        matrix.apply(&current, &mut next);
        let total: f64 = next.iter().sum();
        next.iter_mut().for_each(|v| *v /= total);
        let change = current
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        core::mem::swap(&mut current, &mut next);
        if change < CONVERGENCE_TOLERANCE {
            break;
        }
    }

    matrix.apply(&current, &mut next);
    let lambda_max = next.iter().zip(&current).map(|(be, e)| be / e).sum::<f64>() / n as f64;
    let cr = consistency_ratio(lambda_max, n)?;
    Ok(PriorityVector {
        weights: current,
        lambda_max: Some(lambda_max),
        consistency_ratio: Some(cr),
        iterations,
    })
}

/// `(λmax − N) / ((N − 1)·R.I.)`; zero for `N <= 2`.
pub fn consistency_ratio(lambda_max: f64, n: usize) -> Result<f64> {
    if n > RANDOM_INDEX.len() {
        return Err(Error::UnsupportedSize(n));
    }
    if !lambda_max.is_finite() {
        return Err(Error::NonFinite("lambda_max"));
    }
    if n <= 2 {
        return Ok(0.0);
    }
    let excess = lambda_max - n as f64;
    if excess < -RECIPROCITY_TOLERANCE * n as f64 {
        return Err(Error::OutOfRange {
            name: "lambda_max",
            value: lambda_max,
            min: n as f64,
            max: f64::INFINITY,
        });
    }
    Ok(excess.max(0.0) / ((n - 1) as f64 * RANDOM_INDEX[n - 1]))
}
