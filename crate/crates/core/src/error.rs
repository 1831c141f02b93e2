use alloc::string::String;

/// Broad class of a failure, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: malformed values, wrong shapes, parameters out of range.
    Validation,
    /// The data was well-formed but the numerics could not produce a result.
    Numeric,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("trapezoid ({0}, {1}, {2}, {3}) is not monotone")]
    MalformedTrapezoid(f64, f64, f64, f64),

    #[error("interval [{0}, {1}] has lo > hi")]
    MalformedInterval(f64, f64),

    #[error("cannot normalize attribute '{attribute}': {reason}")]
    Normalization { attribute: String, reason: &'static str },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("comparability entry ({row}, {col}) = [{lo}, {hi}] is outside [0, 1]")]
    NotComparable {
        row: usize,
        col: usize,
        lo: f64,
        hi: f64,
    },

    #[error("coefficient ({row}, {col}) = {value} is outside (0, 1]")]
    CoefficientRange { row: usize, col: usize, value: f64 },

    #[error("degenerate data: coefficient denominator vanishes at ({row}, {col})")]
    DegenerateData { row: usize, col: usize },

    #[error("pairwise matrix entry ({row}, {col}) = {value} must be positive")]
    NonPositiveJudgment { row: usize, col: usize, value: f64 },

    #[error("pairwise matrix diagonal ({0}, {0}) must be 1")]
    Diagonal(usize),

    #[error("pairwise matrix is not reciprocal at ({row}, {col})")]
    NotReciprocal { row: usize, col: usize },

    #[error("no random index tabulated for matrices of size {0} (supported: up to 10)")]
    UnsupportedSize(usize),

    #[error("power iteration did not converge in {0} iterations")]
    NoConvergence(usize),

    #[error("invalid weights: {0}")]
    InvalidWeights(&'static str),

    #[error("LP for alternative {alternative} ({model}) ended {status}")]
    LpFailed {
        model: &'static str,
        alternative: usize,
        status: &'static str,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::DegenerateData { .. }
            | Error::NoConvergence(_)
            | Error::LpFailed { .. } => ErrorKind::Numeric,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite(name));
    }
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            name,
            value,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}
