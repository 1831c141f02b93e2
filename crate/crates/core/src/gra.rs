//! Grey relational analysis over interval data.
//!
//! Raw interval columns are first mapped onto a common `[0, 1]` comparability
//! scale where 1 is the best attainment. The ideal reference alternative takes
//! the column-wise maximum of each endpoint, and every cell's grey relational
//! coefficient measures its closeness to that reference relative to the global
//! spread of distances:
//!
//! ```text
//! ξ_ij = (Δmin + ρ·Δmax) / (Δ_ij + ρ·Δmax)
//! ```
//!
//! with `Δ_ij` the interval distance between cell `(i, j)` and the reference
//! entry for attribute `j`, and `Δmin`/`Δmax` taken over the whole matrix.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{check_unit, Error, Result};
use crate::fuzzy::{interval_distance, Interval};

/// Distinguishing coefficient used when a run does not choose one.
pub const DEFAULT_RHO: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Orientation {
    /// More is better.
    Desirable,
    /// Less is better.
    Undesirable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AttributeSpec {
    pub name: String,
    pub orientation: Orientation,
}

impl AttributeSpec {
    pub fn new(name: impl Into<String>, orientation: Orientation) -> Self {
        Self {
            name: name.into(),
            orientation,
        }
    }

    pub fn desirable(name: impl Into<String>) -> Self {
        Self::new(name, Orientation::Desirable)
    }

    pub fn undesirable(name: impl Into<String>) -> Self {
        Self::new(name, Orientation::Undesirable)
    }
}

/// Maps one attribute column onto the comparability scale.
///
/// Desirable columns are divided by the largest upper endpoint. Undesirable
/// columns take the smallest lower endpoint over each value; reciprocation
/// reverses the order, so the result is `[min⁻/hi, min⁻/lo]`.
pub fn normalize(values: &[Interval], spec: &AttributeSpec) -> Result<Vec<Interval>> {
    if values.is_empty() {
        return Err(Error::Empty("attribute column"));
    }
    let fail = |reason| Error::Normalization {
        attribute: spec.name.clone(),
        reason,
    };
    match spec.orientation {
        Orientation::Desirable => {
            let max_hi = values.iter().map(Interval::hi).fold(f64::NEG_INFINITY, f64::max);
            if max_hi <= 0.0 {
                return Err(fail("largest upper endpoint must be positive"));
            }
            if values.iter().any(|v| v.lo() < 0.0) {
                return Err(fail("desirable values must be non-negative"));
            }
            Ok(values
                .iter()
                .map(|v| Interval::from_ordered(v.lo() / max_hi, v.hi() / max_hi))
                .collect())
        }
        Orientation::Undesirable => {
            if values.iter().any(|v| v.lo() <= 0.0) {
                return Err(fail("undesirable values must be strictly positive"));
            }
            let min_lo = values.iter().map(Interval::lo).fold(f64::INFINITY, f64::min);
            Ok(values
                .iter()
                .map(|v| Interval::from_ordered(min_lo / v.hi(), min_lo / v.lo()))
                .collect())
        }
    }
}

/// `m` alternatives by `n` attributes of normalized intervals, stored row-major.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ComparabilityMatrix {
    alternatives: Vec<String>,
    attributes: Vec<String>,
    cells: Vec<Interval>,
}

impl ComparabilityMatrix {
    /// Builds the matrix from row-major cells, checking every entry lies in `[0, 1]`.
    pub fn new(alternatives: Vec<String>, attributes: Vec<String>, cells: Vec<Interval>) -> Result<Self> {
        let (m, n) = (alternatives.len(), attributes.len());
        if m == 0 {
            return Err(Error::Empty("alternatives"));
        }
        if n == 0 {
            return Err(Error::Empty("attributes"));
        }
        if cells.len() != m * n {
            return Err(Error::DimensionMismatch {
                what: "comparability cells",
                expected: m * n,
                found: cells.len(),
            });
        }
        for (idx, c) in cells.iter().enumerate() {
            if c.lo() < 0.0 || c.hi() > 1.0 {
                return Err(Error::NotComparable {
                    row: idx / n,
                    col: idx % n,
                    lo: c.lo(),
                    hi: c.hi(),
                });
            }
        }
        Ok(Self {
            alternatives,
            attributes,
            cells,
        })
    }

    /// Normalizes each raw column with its attribute's orientation.
    pub fn from_raw_columns(
        alternatives: Vec<String>,
        specs: &[AttributeSpec],
        columns: &[Vec<Interval>],
    ) -> Result<Self> {
        if specs.len() != columns.len() {
            return Err(Error::DimensionMismatch {
                what: "attribute columns",
                expected: specs.len(),
                found: columns.len(),
            });
        }
        let m = alternatives.len();
        let n = specs.len();
        let mut cells = alloc::vec![Interval::from_ordered(0.0, 0.0); m * n];
        for (j, (spec, column)) in specs.iter().zip(columns).enumerate() {
            if column.len() != m {
                return Err(Error::DimensionMismatch {
                    what: "column length",
                    expected: m,
                    found: column.len(),
                });
            }
            for (i, v) in normalize(column, spec)?.into_iter().enumerate() {
                cells[i * n + j] = v;
            }
        }
        let names = specs.iter().map(|s| s.name.clone()).collect();
        Self::new(alternatives, names, cells)
    }

    pub fn rows(&self) -> usize {
        self.alternatives.len()
    }

    pub fn cols(&self) -> usize {
        self.attributes.len()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn get(&self, i: usize, j: usize) -> Interval {
        self.cells[i * self.cols() + j]
    }

    pub fn row(&self, i: usize) -> &[Interval] {
        let n = self.cols();
        &self.cells[i * n..(i + 1) * n]
    }
}

/// The virtual ideal alternative: column-wise maxima of both endpoints.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ReferenceSequence(Vec<Interval>);

impl ReferenceSequence {
    pub fn entries(&self) -> &[Interval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn reference_sequence(cm: &ComparabilityMatrix) -> Result<ReferenceSequence> {
    if cm.rows() == 0 || cm.cols() == 0 {
        return Err(Error::Empty("comparability matrix"));
    }
    let entries = (0..cm.cols())
        .map(|j| {
            let (lo, hi) = (0..cm.rows()).map(|i| cm.get(i, j)).fold(
                (f64::NEG_INFINITY, f64::NEG_INFINITY),
                |(lo, hi), c| (lo.max(c.lo()), hi.max(c.hi())),
            );
            Interval::from_ordered(lo, hi)
        })
        .collect();
    Ok(ReferenceSequence(entries))
}

/// Grey relational coefficients `ξ_ij ∈ (0, 1]`, row-major, with the
/// parameters that produced them.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CoefficientMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
    rho: Option<f64>,
    min_distance: Option<f64>,
    max_distance: Option<f64>,
}

impl CoefficientMatrix {
    /// Wraps externally supplied coefficients (e.g. published tables or
    /// generated test data). Every entry must lie in `(0, 1]`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::Empty("coefficient matrix"));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::Empty("coefficient row"));
        }
        let mut values = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "coefficient row",
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !(v > 0.0 && v <= 1.0) {
                    return Err(Error::CoefficientRange { row: i, col: j, value: v });
                }
                values.push(v);
            }
        }
        Ok(Self {
            rows: m,
            cols: n,
            values,
            rho: None,
            min_distance: None,
            max_distance: None,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_max(&self, j: usize) -> f64 {
        (0..self.rows).map(|i| self.get(i, j)).fold(0.0, f64::max)
    }

    pub fn rho(&self) -> Option<f64> {
        self.rho
    }

    pub fn min_distance(&self) -> Option<f64> {
        self.min_distance
    }

    pub fn max_distance(&self) -> Option<f64> {
        self.max_distance
    }
}

/// Computes `ξ_ij` for every cell against the reference sequence.
///
/// `Δmin` and `Δmax` are global over all cells, not per attribute. When every
/// cell coincides with the reference (`Δmax = 0`) and `ρ > 0`, all
/// coefficients are 1.
pub fn grey_coefficients(
    cm: &ComparabilityMatrix,
    reference: &ReferenceSequence,
    rho: f64,
) -> Result<CoefficientMatrix> {
    check_unit("rho", rho)?;
    if reference.len() != cm.cols() {
        return Err(Error::DimensionMismatch {
            what: "reference sequence",
            expected: cm.cols(),
            found: reference.len(),
        });
    }
    let (m, n) = (cm.rows(), cm.cols());
    let distances: Vec<f64> = (0..m * n)
        .map(|idx| interval_distance(&reference.0[idx % n], &cm.get(idx / n, idx % n)))
        .collect();
    let d_min = distances.iter().copied().fold(f64::INFINITY, f64::min);
    let d_max = distances.iter().copied().fold(0.0, f64::max);

    let numerator = d_min + rho * d_max;
    let mut values = Vec::with_capacity(m * n);
    for (idx, &d) in distances.iter().enumerate() {
        if d_max == 0.0 && rho > 0.0 {
            values.push(1.0);
            continue;
        }
        let denominator = d + rho * d_max;
        if denominator <= 0.0 {
            return Err(Error::DegenerateData {
                row: idx / n,
                col: idx % n,
            });
        }
        values.push(numerator / denominator);
    }
    Ok(CoefficientMatrix {
        rows: m,
        cols: n,
        values,
        rho: Some(rho),
        min_distance: Some(d_min),
        max_distance: Some(d_max),
    })
}

/// `Γ = Σ_j w_j ξ_j` for one alternative.
pub fn weighted_grade(row: &[f64], weights: &[f64]) -> Result<f64> {
    if row.len() != weights.len() {
        return Err(Error::DimensionMismatch {
            what: "weights",
            expected: row.len(),
            found: weights.len(),
        });
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::InvalidWeights("weights must be finite and non-negative"));
    }
    Ok(row.iter().zip(weights).map(|(x, w)| x * w).sum())
}
