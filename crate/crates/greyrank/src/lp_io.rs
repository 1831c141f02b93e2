//! Raw linear programs in JSON, for exercising the solver directly.
//!
//! ```text
//! {"sense": "maximize", "objective": [3, 2],
//!  "constraints": [{"coefficients": [1, 1], "relation": "<=", "rhs": 4}],
//!  "bounds": ["free", {"lower": 1}]}
//! ```

use greyrank_core::lp::{self, LinearProgram, LpSolution};

use crate::error::CliError;

pub fn parse(text: &str) -> Result<LinearProgram, CliError> {
    let lp: LinearProgram = serde_json::from_str(text).map_err(|e| {
        CliError::Validation(format!("parse error at line {}, column {}: {e}", e.line(), e.column()))
    })?;
    lp.validate()?;
    Ok(lp)
}

pub fn solve(text: &str) -> Result<LpSolution, CliError> {
    let lp = parse(text)?;
    Ok(lp::solve(&lp)?)
}
