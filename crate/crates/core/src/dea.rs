//! Optimistic and pessimistic additive DEA grades over grey relational
//! coefficients, and their compromise.
//!
//! The coefficient matrix is treated as output-only data. For alternative
//! `k` the optimistic multiplier program chooses the weights that put `k` in
//! its best light against the best-practice frontier:
//!
//! ```text
//! Γ_k  = max  Σ_j w_j ξ_kj − w_0
//!        s.t. Σ_j w_j ξ_ij − w_0 <= 1   for all i
//!             w_j >= e_j,  w_0 free
//! ```
//!
//! and the pessimistic program the least favourable ones against the
//! worst-practice frontier:
//!
//! ```text
//! Γ'_k = min  Σ_j w_j ξ_kj + w_0
//!        s.t. Σ_j w_j ξ_ij + w_0 >= 1   for all i
//!             w_j >= e_j,  w_0 free
//! ```
//!
//! `e` are the AHP priorities. The constant-returns variant drops the
//! intercept and the priority bounds. The envelopment duals report the
//! per-attribute shortfall (`s⁺`) and excess (`s⁻`) slacks and satisfy
//! `Γ = 1 − P` and `Γ' = 1 + P'`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::ahp::PriorityVector;
use crate::error::{check_unit, Error, Result};
use crate::gra::CoefficientMatrix;
use crate::lp::{self, Bound, LinearProgram, LpSolution, Relation, Sense};

pub const DEFAULT_BETA: f64 = 0.5;

/// Scores closer than this share a rank.
pub const TIE_TOLERANCE: f64 = 5e-5;

/// Grade spreads below this contribute nothing to the compromise.
pub const DEGENERATE_SPREAD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Variant {
    /// Free intercept (variable returns) with AHP lower bounds on the weights.
    #[default]
    BoundedVrs,
    /// No intercept (constant returns), weights only non-negative.
    CrsUnbounded,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::BoundedVrs => "bounded-vrs",
            Variant::CrsUnbounded => "crs-unbounded",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeaConfig {
    variant: Variant,
    lower_bounds: Option<Vec<f64>>,
    beta: f64,
}

impl DeaConfig {
    pub fn bounded_vrs(priorities: &PriorityVector, beta: f64) -> Result<Self> {
        check_unit("beta", beta)?;
        Ok(Self {
            variant: Variant::BoundedVrs,
            lower_bounds: Some(priorities.weights().to_vec()),
            beta,
        })
    }

    pub fn crs_unbounded(beta: f64) -> Result<Self> {
        check_unit("beta", beta)?;
        Ok(Self {
            variant: Variant::CrsUnbounded,
            lower_bounds: None,
            beta,
        })
    }

    pub fn new(variant: Variant, priorities: Option<&PriorityVector>, beta: f64) -> Result<Self> {
        match (variant, priorities) {
            (Variant::BoundedVrs, Some(p)) => Self::bounded_vrs(p, beta),
            (Variant::BoundedVrs, None) => Err(Error::InvalidWeights(
                "bounded-vrs requires attribute priorities",
            )),
            (Variant::CrsUnbounded, _) => Self::crs_unbounded(beta),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lower_bounds(&self) -> Option<&[f64]> {
        self.lower_bounds.as_deref()
    }

    fn weight_bounds(&self, n: usize) -> Result<Vec<f64>> {
        match &self.lower_bounds {
            Some(e) if e.len() != n => Err(Error::DimensionMismatch {
                what: "attribute priorities",
                expected: n,
                found: e.len(),
            }),
            Some(e) => Ok(e.clone()),
            None => Ok(vec![0.0; n]),
        }
    }
}

/// Optimal value and weights of one multiplier program.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MultiplierSolution {
    pub grade: f64,
    pub weights: Vec<f64>,
    /// `w_0`; always zero under constant returns.
    pub intercept: f64,
}

/// Optimal value, peer weights `λ` and attribute slacks of one envelopment program.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EnvelopmentSolution {
    pub objective: f64,
    pub lambdas: Vec<f64>,
    pub slacks: Vec<f64>,
}

fn check_alternative(xi: &CoefficientMatrix, k: usize) -> Result<()> {
    if k >= xi.rows() {
        return Err(Error::DimensionMismatch {
            what: "alternative index",
            expected: xi.rows(),
            found: k,
        });
    }
    Ok(())
}

fn require_optimal(solution: LpSolution, model: &'static str, k: usize) -> Result<LpSolution> {
    if solution.is_optimal() {
        Ok(solution)
    } else {
        Err(Error::LpFailed {
            model,
            alternative: k,
            status: solution.status.as_str(),
        })
    }
}

#[derive(Clone, Copy)]
enum Perspective {
    Optimistic,
    Pessimistic,
}

fn multiplier_program(xi: &CoefficientMatrix, k: usize, cfg: &DeaConfig, side: Perspective) -> Result<LinearProgram> {
    check_alternative(xi, k)?;
    let n = xi.cols();
    let bounds = cfg.weight_bounds(n)?;
    let with_intercept = cfg.variant == Variant::BoundedVrs;
    // The intercept enters with −1 on the optimistic side and +1 on the pessimistic one.
    let (sense, relation, intercept_sign) = match side {
        Perspective::Optimistic => (Sense::Maximize, Relation::Le, -1.0),
        Perspective::Pessimistic => (Sense::Minimize, Relation::Ge, 1.0),
    };
    let width = if with_intercept { n + 1 } else { n };

    let mut objective = xi.row(k).to_vec();
    if with_intercept {
        objective.push(intercept_sign);
    }
    let mut lp = LinearProgram::new(sense, objective);
    for i in 0..xi.rows() {
        let mut row = Vec::with_capacity(width);
        row.extend_from_slice(xi.row(i));
        if with_intercept {
            row.push(intercept_sign);
        }
        lp.constrain(row, relation, 1.0);
    }
    for (j, &e) in bounds.iter().enumerate() {
        lp.bound(j, Bound::Lower(e));
    }
    if with_intercept {
        lp.bound(n, Bound::Free);
    }
    Ok(lp)
}

fn multiplier_solution(xi: &CoefficientMatrix, k: usize, cfg: &DeaConfig, side: Perspective) -> Result<MultiplierSolution> {
    let lp = multiplier_program(xi, k, cfg, side)?;
    let model = match side {
        Perspective::Optimistic => "optimistic multiplier",
        Perspective::Pessimistic => "pessimistic multiplier",
    };
    let solution = require_optimal(lp::solve(&lp)?, model, k)?;
    let n = xi.cols();
    Ok(MultiplierSolution {
        grade: solution.objective,
        weights: solution.x[..n].to_vec(),
        intercept: solution.x.get(n).copied().unwrap_or(0.0),
    })
}

/// `Γ_k` with the weights and intercept that attain it.
pub fn optimistic_grade(xi: &CoefficientMatrix, k: usize, cfg: &DeaConfig) -> Result<MultiplierSolution> {
    multiplier_solution(xi, k, cfg, Perspective::Optimistic)
}

/// `Γ'_k` with the weights and intercept that attain it.
pub fn pessimistic_grade(xi: &CoefficientMatrix, k: usize, cfg: &DeaConfig) -> Result<MultiplierSolution> {
    multiplier_solution(xi, k, cfg, Perspective::Pessimistic)
}

fn envelopment(xi: &CoefficientMatrix, k: usize, priorities: &[f64], side: Perspective) -> Result<EnvelopmentSolution> {
    check_alternative(xi, k)?;
    let (m, n) = (xi.rows(), xi.cols());
    if priorities.len() != n {
        return Err(Error::DimensionMismatch {
            what: "attribute priorities",
            expected: n,
            found: priorities.len(),
        });
    }
    // Variables: λ_1..λ_m, then s_1..s_n.
    let slack_sign = match side {
        Perspective::Optimistic => -1.0,
        Perspective::Pessimistic => 1.0,
    };
    let mut objective = vec![0.0; m];
    objective.extend_from_slice(priorities);
    let mut lp = LinearProgram::new(Sense::Maximize, objective);
    for j in 0..n {
        let mut row: Vec<f64> = (0..m).map(|i| xi.get(i, j)).collect();
        row.extend((0..n).map(|q| if q == j { slack_sign } else { 0.0 }));
        lp.constrain(row, Relation::Eq, xi.get(k, j));
    }
    let mut convexity = vec![1.0; m];
    convexity.extend(core::iter::repeat_n(0.0, n));
    lp.constrain(convexity, Relation::Eq, 1.0);

    let model = match side {
        Perspective::Optimistic => "optimistic envelopment",
        Perspective::Pessimistic => "pessimistic envelopment",
    };
    let solution = require_optimal(lp::solve(&lp)?, model, k)?;
    Ok(EnvelopmentSolution {
        objective: solution.objective,
        lambdas: solution.x[..m].to_vec(),
        slacks: solution.x[m..].to_vec(),
    })
}

/// `P_k`, the priority-weighted shortfall of `k` against the best-practice
/// frontier. Zero marks frontier membership.
pub fn optimistic_slacks(xi: &CoefficientMatrix, k: usize, priorities: &[f64]) -> Result<EnvelopmentSolution> {
    envelopment(xi, k, priorities, Perspective::Optimistic)
}

/// `P'_k`, the priority-weighted excess of `k` over the worst-practice
/// frontier. Zero marks the worst alternatives.
pub fn pessimistic_slacks(xi: &CoefficientMatrix, k: usize, priorities: &[f64]) -> Result<EnvelopmentSolution> {
    envelopment(xi, k, priorities, Perspective::Pessimistic)
}

/// Everything solved for one alternative before the compromise is known.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AlternativeGrades {
    pub optimistic: MultiplierSolution,
    pub pessimistic: MultiplierSolution,
    /// Envelopment diagnostics; only under bounded-vrs.
    pub shortfall: Option<EnvelopmentSolution>,
    pub excess: Option<EnvelopmentSolution>,
}

/// Solves all four programs for alternative `k` (two under constant returns).
pub fn grade_alternative(xi: &CoefficientMatrix, k: usize, cfg: &DeaConfig) -> Result<AlternativeGrades> {
    let optimistic = optimistic_grade(xi, k, cfg)?;
    let pessimistic = pessimistic_grade(xi, k, cfg)?;
    let (shortfall, excess) = match cfg.lower_bounds() {
        Some(e) if cfg.variant == Variant::BoundedVrs => (
            Some(optimistic_slacks(xi, k, e)?),
            Some(pessimistic_slacks(xi, k, e)?),
        ),
        _ => (None, None),
    };
    Ok(AlternativeGrades {
        optimistic,
        pessimistic,
        shortfall,
        excess,
    })
}

/// Runs independent per-alternative jobs. Implementations may run them in
/// parallel but must return results in index order.
pub trait Executor {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync;
}

/// Runs jobs one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        (0..count).map(job).collect()
    }
}

pub fn grade_all<E: Executor>(xi: &CoefficientMatrix, cfg: &DeaConfig, executor: &E) -> Result<Vec<AlternativeGrades>> {
    executor
        .map(xi.rows(), |k| grade_alternative(xi, k, cfg))
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Compromise {
    pub values: Vec<f64>,
    /// The optimistic grades had no spread and contributed zero.
    pub optimistic_degenerate: bool,
    /// The pessimistic grades had no spread and contributed zero.
    pub pessimistic_degenerate: bool,
}

fn min_max(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
}

/// Blends min-max normalized optimistic and pessimistic grades with weight `β`.
pub fn compromise(optimistic: &[f64], pessimistic: &[f64], beta: f64) -> Result<Compromise> {
    check_unit("beta", beta)?;
    if optimistic.len() != pessimistic.len() {
        return Err(Error::DimensionMismatch {
            what: "pessimistic grades",
            expected: optimistic.len(),
            found: pessimistic.len(),
        });
    }
    let (g_min, g_max) = min_max(optimistic);
    let (p_min, p_max) = min_max(pessimistic);
    let optimistic_degenerate = (g_max - g_min).is_nan() || g_max - g_min < DEGENERATE_SPREAD;
    let pessimistic_degenerate = (p_max - p_min).is_nan() || p_max - p_min < DEGENERATE_SPREAD;
    let values = optimistic
        .iter()
        .zip(pessimistic)
        .map(|(&g, &p)| {
            let a = if optimistic_degenerate { 0.0 } else { (g - g_min) / (g_max - g_min) };
            let b = if pessimistic_degenerate { 0.0 } else { (p - p_min) / (p_max - p_min) };
            (beta * a + (1.0 - beta) * b).clamp(0.0, 1.0)
        })
        .collect();
    Ok(Compromise {
        values,
        optimistic_degenerate,
        pessimistic_degenerate,
    })
}

/// Dense descending ranks: scores within [`TIE_TOLERANCE`] of the first
/// score of a group share its rank, and the next group takes the next integer.
pub fn rank_dense(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut ranks = vec![0; values.len()];
    let mut rank = 0;
    let mut leader = f64::INFINITY;
    for idx in order {
        if rank == 0 || leader - values[idx] > TIE_TOLERANCE {
            rank += 1;
            leader = values[idx];
        }
        ranks[idx] = rank;
    }
    ranks
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AlternativeReport {
    pub label: String,
    pub optimistic: f64,
    pub pessimistic: f64,
    pub compromise: f64,
    pub rank: usize,
    pub detail: AlternativeGrades,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GradeReport {
    pub variant: Variant,
    pub beta: f64,
    pub optimistic_degenerate: bool,
    pub pessimistic_degenerate: bool,
    pub alternatives: Vec<AlternativeReport>,
}

impl GradeReport {
    pub fn assemble(labels: &[String], cfg: &DeaConfig, grades: Vec<AlternativeGrades>) -> Result<Self> {
        if labels.len() != grades.len() {
            return Err(Error::DimensionMismatch {
                what: "alternative labels",
                expected: grades.len(),
                found: labels.len(),
            });
        }
        let optimistic: Vec<f64> = grades.iter().map(|g| g.optimistic.grade).collect();
        let pessimistic: Vec<f64> = grades.iter().map(|g| g.pessimistic.grade).collect();
        let blend = compromise(&optimistic, &pessimistic, cfg.beta)?;
        let ranks = rank_dense(&blend.values);
        let alternatives = grades
            .into_iter()
            .enumerate()
            .map(|(k, detail)| AlternativeReport {
                label: labels[k].clone(),
                optimistic: optimistic[k],
                pessimistic: pessimistic[k],
                compromise: blend.values[k],
                rank: ranks[k],
                detail,
            })
            .collect();
        Ok(Self {
            variant: cfg.variant,
            beta: cfg.beta,
            optimistic_degenerate: blend.optimistic_degenerate,
            pessimistic_degenerate: blend.pessimistic_degenerate,
            alternatives,
        })
    }

    pub fn optimistic(&self) -> Vec<f64> {
        self.alternatives.iter().map(|a| a.optimistic).collect()
    }

    pub fn pessimistic(&self) -> Vec<f64> {
        self.alternatives.iter().map(|a| a.pessimistic).collect()
    }

    pub fn compromise(&self) -> Vec<f64> {
        self.alternatives.iter().map(|a| a.compromise).collect()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.alternatives.iter().map(|a| a.rank).collect()
    }

    pub fn find(&self, label: &str) -> Option<&AlternativeReport> {
        self.alternatives.iter().find(|a| a.label == label)
    }
}

/// Grades every alternative and assembles the ranked report.
pub fn grade_report<E: Executor>(
    xi: &CoefficientMatrix,
    labels: &[String],
    cfg: &DeaConfig,
    executor: &E,
) -> Result<GradeReport> {
    let grades = grade_all(xi, cfg, executor)?;
    GradeReport::assemble(labels, cfg, grades)
}
