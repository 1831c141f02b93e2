//! Pairwise comparison matrices in CSV.
//!
//! The first row holds `attribute` followed by the attribute labels and an
//! optional trailing `Priority` column. Entries may be decimals or fractions
//! such as `1/5`.

use greyrank_core::ahp::{PairwiseMatrix, PriorityVector};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub matrix: PairwiseMatrix,
    /// Priorities listed alongside the judgments, if any.
    pub published: Option<PriorityVector>,
}

pub fn parse_judgment(text: &str) -> Option<f64> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().ok()?;
            let den: f64 = den.trim().parse().ok()?;
            (den != 0.0).then(|| num / den)
        }
        None => text.parse().ok(),
    }
}

pub fn parse_matrix(text: &str) -> Result<MatrixFile, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let bad = |e: csv::Error| CliError::Validation(format!("pairwise matrix: {e}"));
    let headers = reader.headers().map_err(bad)?.clone();
    let mut labels: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    let has_priority = labels.last().is_some_and(|l| l.eq_ignore_ascii_case("priority"));
    if has_priority {
        labels.pop();
    }
    let n = labels.len();

    let mut rows = Vec::new();
    let mut priorities = Vec::new();
    for record in reader.records() {
        let record = record.map_err(bad)?;
        let line = record.position().map_or(0, |p| p.line());
        let values = record
            .iter()
            .skip(1)
            .enumerate()
            .map(|(q, cell)| {
                parse_judgment(cell).ok_or_else(|| {
                    CliError::Validation(format!(
                        "pairwise matrix line {line}, column {}: '{cell}' is not a number or fraction",
                        q + 2
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut values = values;
        if has_priority {
            priorities.push(values.pop().unwrap_or(f64::NAN));
        }
        if values.len() != n {
            return Err(CliError::Validation(format!(
                "pairwise matrix line {line} has {} judgments, expected {n}",
                values.len()
            )));
        }
        rows.push(values);
    }
    let matrix = PairwiseMatrix::from_rows(labels, &rows)?;
    let published = if has_priority {
        Some(PriorityVector::from_weights(priorities)?)
    } else {
        None
    };
    Ok(MatrixFile { matrix, published })
}
