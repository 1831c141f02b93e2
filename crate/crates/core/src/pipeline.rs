//! End-to-end ranking: α-cut, normalization, grey coefficients, AHP
//! priorities, DEA grades, compromise and ranks.

use alloc::string::String;
use alloc::vec::Vec;

use crate::ahp::{principal_eigenvector, PairwiseMatrix, PriorityVector};
use crate::dea::{self, DeaConfig, Executor, GradeReport, Sequential, Variant};
use crate::error::{check_unit, Error};
use crate::fuzzy::{Interval, TrapezoidalFuzzy};
use crate::gra::{self, AttributeSpec, CoefficientMatrix, ComparabilityMatrix, ReferenceSequence};

pub const DEFAULT_ALPHA: f64 = 0.5;

/// Raw values of one attribute for every alternative.
#[derive(Debug, Clone, PartialEq)]
pub enum Column {
    /// Reduced by α-cut before normalization. Crisp values are degenerate trapezoids.
    Fuzzy(Vec<TrapezoidalFuzzy>),
    /// Already intervals; bypasses the α-cut.
    Intervals(Vec<Interval>),
}

impl Column {
    pub fn len(&self) -> usize {
        match self {
            Column::Fuzzy(v) => v.len(),
            Column::Intervals(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cut(&self, alpha: f64) -> Result<Vec<Interval>, Error> {
        match self {
            Column::Fuzzy(v) => v.iter().map(|f| f.alpha_cut(alpha)).collect(),
            Column::Intervals(v) => Ok(v.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub alternatives: Vec<String>,
    pub attributes: Vec<AttributeSpec>,
    pub columns: Vec<Column>,
}

/// Where the DEA weight bounds come from.
#[derive(Debug, Clone, PartialEq)]
pub enum Weighting {
    /// Priorities from the principal eigenvector of a judgment matrix.
    Matrix(PairwiseMatrix),
    /// Priorities supplied directly.
    Priorities(PriorityVector),
    None,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub alpha: f64,
    pub rho: f64,
    pub beta: f64,
    pub variant: Variant,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            alpha: DEFAULT_ALPHA,
            rho: gra::DEFAULT_RHO,
            beta: dea::DEFAULT_BETA,
            variant: Variant::BoundedVrs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Parameters,
    AlphaCut,
    Normalize,
    Reference,
    Coefficients,
    Priorities,
    Grades,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Parameters => "parameters",
            Stage::AlphaCut => "alpha-cut",
            Stage::Normalize => "normalize",
            Stage::Reference => "reference",
            Stage::Coefficients => "coefficients",
            Stage::Priorities => "priorities",
            Stage::Grades => "grades",
        }
    }
}

impl core::fmt::Display for Stage {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{stage}: {source}")]
pub struct PipelineError {
    pub stage: Stage,
    #[source]
    pub source: Error,
}

trait AtStage<T> {
    fn at(self, stage: Stage) -> Result<T, PipelineError>;
}

impl<T> AtStage<T> for Result<T, Error> {
    fn at(self, stage: Stage) -> Result<T, PipelineError> {
        self.map_err(|source| PipelineError { stage, source })
    }
}

/// Every intermediate product of a run, for auditing.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PipelineOutput {
    /// α-cut intervals, one vector per attribute column.
    pub intervals: Vec<Vec<Interval>>,
    pub comparability: ComparabilityMatrix,
    pub reference: ReferenceSequence,
    pub coefficients: CoefficientMatrix,
    pub priorities: Option<PriorityVector>,
    pub report: GradeReport,
}

/// Cut intervals, comparability matrix, reference and coefficients.
pub type CoefficientStages = (Vec<Vec<Interval>>, ComparabilityMatrix, ReferenceSequence, CoefficientMatrix);

/// Coefficient stage only.
pub fn coefficients(problem: &Problem, alpha: f64, rho: f64) -> Result<CoefficientStages, PipelineError> {
    check_unit("alpha", alpha).at(Stage::Parameters)?;
    check_unit("rho", rho).at(Stage::Parameters)?;
    if problem.columns.len() != problem.attributes.len() {
        return Err(Error::DimensionMismatch {
            what: "attribute columns",
            expected: problem.attributes.len(),
            found: problem.columns.len(),
        })
        .at(Stage::Parameters);
    }
    let intervals = problem
        .columns
        .iter()
        .map(|c| c.cut(alpha))
        .collect::<Result<Vec<_>, _>>()
        .at(Stage::AlphaCut)?;
    let comparability =
        ComparabilityMatrix::from_raw_columns(problem.alternatives.clone(), &problem.attributes, &intervals)
            .at(Stage::Normalize)?;
    let reference = gra::reference_sequence(&comparability).at(Stage::Reference)?;
    let xi = gra::grey_coefficients(&comparability, &reference, rho).at(Stage::Coefficients)?;
    Ok((intervals, comparability, reference, xi))
}

pub fn full_pipeline(problem: &Problem, weighting: &Weighting, params: &Params) -> Result<PipelineOutput, PipelineError> {
    full_pipeline_with(problem, weighting, params, &Sequential)
}

/// As [`full_pipeline`], with the per-alternative LP solves run by `executor`.
pub fn full_pipeline_with<E: Executor>(
    problem: &Problem,
    weighting: &Weighting,
    params: &Params,
    executor: &E,
) -> Result<PipelineOutput, PipelineError> {
    check_unit("beta", params.beta).at(Stage::Parameters)?;
    let (intervals, comparability, reference, xi) = coefficients(problem, params.alpha, params.rho)?;

    let priorities = match weighting {
        Weighting::Matrix(m) => Some(principal_eigenvector(m).at(Stage::Priorities)?),
        Weighting::Priorities(p) => Some(p.clone()),
        Weighting::None => None,
    };
    let cfg = DeaConfig::new(params.variant, priorities.as_ref(), params.beta).at(Stage::Priorities)?;
    let report = dea::grade_report(&xi, &problem.alternatives, &cfg, executor).at(Stage::Grades)?;

    Ok(PipelineOutput {
        intervals,
        comparability,
        reference,
        coefficients: xi,
        priorities,
        report,
    })
}
