//! Decision datasets: alternatives, attribute specs and per-cell values.
//!
//! Two on-disk forms are accepted.
//!
//! CSV, one row per alternative. Header cells name the attributes, with an
//! optional `:desirable` / `:undesirable` suffix (desirable when omitted).
//! A value cell is a plain number (crisp), `lo..hi` (interval) or a quoted
//! `"a,b,c,d"` (trapezoid). Lines starting with `#` form the provenance note.
//!
//! ```text
//! # note
//! alternative,Cost:undesirable,Civic
//! Nome,40,"2,3,4,5"
//! ```
//!
//! JSON with typed cells:
//!
//! ```text
//! {"note": "...",
//!  "attributes": [{"name": "Cost", "orientation": "undesirable"}],
//!  "alternatives": [{"name": "Nome", "values": [{"crisp": 40.0}]}]}
//! ```

use std::fmt;

use greyrank_core::gra::{AttributeSpec, Orientation};
use greyrank_core::pipeline::{Column, Problem};
use greyrank_core::{Interval, TrapezoidalFuzzy};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Crisp(f64),
    Trapezoid([f64; 4]),
    Interval([f64; 2]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Crisp,
    Trapezoid,
    Interval,
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Crisp => "crisp",
            CellKind::Trapezoid => "trapezoid",
            CellKind::Interval => "interval",
        })
    }
}

impl Cell {
    pub fn kind(&self) -> CellKind {
        match self {
            Cell::Crisp(_) => CellKind::Crisp,
            Cell::Trapezoid(_) => CellKind::Trapezoid,
            Cell::Interval(_) => CellKind::Interval,
        }
    }

    /// Parses the CSV spelling of a cell.
    pub fn parse(text: &str) -> Result<Self, String> {
        let text = text.trim();
        let number = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| format!("'{}' is not a number", s.trim()))
        };
        if let Some((lo, hi)) = text.split_once("..") {
            return Ok(Cell::Interval([number(lo)?, number(hi)?]));
        }
        if text.contains(',') {
            let parts: Vec<&str> = text.split(',').collect();
            if parts.len() != 4 {
                return Err(format!("trapezoid '{text}' needs 4 values, found {}", parts.len()));
            }
            let mut points = [0.0; 4];
            for (slot, part) in points.iter_mut().zip(parts) {
                *slot = number(part)?;
            }
            return Ok(Cell::Trapezoid(points));
        }
        Ok(Cell::Crisp(number(text)?))
    }

    fn to_csv(self) -> String {
        match self {
            Cell::Crisp(v) => v.to_string(),
            Cell::Interval([lo, hi]) => format!("{lo}..{hi}"),
            Cell::Trapezoid([a, b, c, d]) => format!("{a},{b},{c},{d}"),
        }
    }

    fn check(&self) -> Result<(), greyrank_core::Error> {
        match *self {
            Cell::Crisp(v) => TrapezoidalFuzzy::crisp(v).map(|_| ()),
            Cell::Trapezoid([a, b, c, d]) => TrapezoidalFuzzy::new(a, b, c, d).map(|_| ()),
            Cell::Interval([lo, hi]) => Interval::new(lo, hi).map(|_| ()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Alternative {
    pub name: String,
    pub values: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub attributes: Vec<AttributeSpec>,
    pub alternatives: Vec<Alternative>,
}

#[derive(Debug, thiserror::Error)]
pub enum DatasetError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: u64,
        column: u64,
        message: String,
    },
    #[error("row {row} ('{alternative}') has {found} values, expected {expected}")]
    Ragged {
        row: usize,
        alternative: String,
        expected: usize,
        found: usize,
    },
    #[error("cell ('{alternative}', '{attribute}') is {found} but the column is {expected}")]
    MixedColumn {
        alternative: String,
        attribute: String,
        expected: CellKind,
        found: CellKind,
    },
    #[error("cell ('{alternative}', '{attribute}'): {message}")]
    BadCell {
        alternative: String,
        attribute: String,
        message: String,
    },
    #[error("bad header '{0}': expected name or name:desirable / name:undesirable")]
    BadHeader(String),
    #[error("dataset has no {0}")]
    Empty(&'static str),
}

impl Dataset {
    /// Checks shape, column uniformity and every value.
    pub fn validate(&self) -> Result<(), DatasetError> {
        if self.attributes.is_empty() {
            return Err(DatasetError::Empty("attributes"));
        }
        if self.alternatives.is_empty() {
            return Err(DatasetError::Empty("alternatives"));
        }
        let n = self.attributes.len();
        for (row, alt) in self.alternatives.iter().enumerate() {
            if alt.values.len() != n {
                return Err(DatasetError::Ragged {
                    row: row + 1,
                    alternative: alt.name.clone(),
                    expected: n,
                    found: alt.values.len(),
                });
            }
        }
        for (j, attr) in self.attributes.iter().enumerate() {
            let expected = self.alternatives[0].values[j].kind();
            for alt in &self.alternatives {
                let cell = alt.values[j];
                if cell.kind() != expected {
                    return Err(DatasetError::MixedColumn {
                        alternative: alt.name.clone(),
                        attribute: attr.name.clone(),
                        expected,
                        found: cell.kind(),
                    });
                }
                cell.check().map_err(|e| DatasetError::BadCell {
                    alternative: alt.name.clone(),
                    attribute: attr.name.clone(),
                    message: e.to_string(),
                })?;
            }
        }
        Ok(())
    }

    pub fn column_kind(&self, j: usize) -> Option<CellKind> {
        self.alternatives.first().map(|a| a.values[j].kind())
    }

    /// Converts to the core pipeline's input. Interval columns bypass the α-cut.
    pub fn to_problem(&self) -> Result<Problem, DatasetError> {
        self.validate()?;
        let columns = (0..self.attributes.len())
            .map(|j| {
                let cells = self.alternatives.iter().map(|a| a.values[j]);
                match self.column_kind(j) {
                    Some(CellKind::Interval) => Column::Intervals(
                        cells
                            .map(|c| match c {
                                Cell::Interval([lo, hi]) => Interval::new(lo, hi).expect("validated"),
                                _ => unreachable!("uniform column"),
                            })
                            .collect(),
                    ),
                    _ => Column::Fuzzy(
                        cells
                            .map(|c| match c {
                                Cell::Crisp(v) => TrapezoidalFuzzy::crisp(v).expect("validated"),
                                Cell::Trapezoid([a, b, c, d]) => {
                                    TrapezoidalFuzzy::new(a, b, c, d).expect("validated")
                                }
                                Cell::Interval(_) => unreachable!("uniform column"),
                            })
                            .collect(),
                    ),
                }
            })
            .collect();
        Ok(Problem {
            alternatives: self.alternatives.iter().map(|a| a.name.clone()).collect(),
            attributes: self.attributes.clone(),
            columns,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, DatasetError> {
        let dataset: Dataset = serde_json::from_str(text).map_err(|e| DatasetError::Parse {
            line: e.line() as u64,
            column: e.column() as u64,
            message: e.to_string(),
        })?;
        dataset.validate()?;
        Ok(dataset)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dataset serializes")
    }

    pub fn from_csv(text: &str) -> Result<Self, DatasetError> {
        let note: Vec<&str> = text
            .lines()
            .map(str::trim_start)
            .filter_map(|l| l.strip_prefix('#'))
            .map(str::trim)
            .collect();
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());

        let headers = reader.headers().map_err(csv_error)?.clone();
        if headers.len() < 2 {
            return Err(DatasetError::Empty("attributes"));
        }
        let attributes = headers
            .iter()
            .skip(1)
            .map(parse_header)
            .collect::<Result<Vec<_>, _>>()?;

        let mut alternatives = Vec::new();
        for (row, record) in reader.records().enumerate() {
            let record = record.map_err(csv_error)?;
            let name = record.get(0).unwrap_or_default().to_string();
            if record.len() != attributes.len() + 1 {
                return Err(DatasetError::Ragged {
                    row: row + 1,
                    alternative: name,
                    expected: attributes.len(),
                    found: record.len().saturating_sub(1),
                });
            }
            let line = record.position().map_or(0, |p| p.line());
            let values = record
                .iter()
                .skip(1)
                .enumerate()
                .map(|(j, field)| {
                    Cell::parse(field).map_err(|message| DatasetError::Parse {
                        line,
                        column: j as u64 + 2,
                        message: format!("attribute '{}': {message}", attributes[j].name),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            alternatives.push(Alternative { name, values });
        }
        let dataset = Dataset {
            note: (!note.is_empty()).then(|| note.join("\n")),
            attributes,
            alternatives,
        };
        dataset.validate()?;
        Ok(dataset)
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
        let mut out = String::new();
        if let Some(note) = &self.note {
            for line in note.lines() {
                out.push_str(&format!("# {line}\n"));
            }
        }
        let mut header = vec!["alternative".to_string()];
        header.extend(self.attributes.iter().map(|a| match a.orientation {
            Orientation::Desirable => format!("{}:desirable", a.name),
            Orientation::Undesirable => format!("{}:undesirable", a.name),
        }));
        writer.write_record(&header).expect("in-memory write");
        for alt in &self.alternatives {
            let mut record = vec![alt.name.clone()];
            record.extend(alt.values.iter().map(|c| c.to_csv()));
            writer.write_record(&record).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8"));
        out
    }
}

fn parse_header(cell: &str) -> Result<AttributeSpec, DatasetError> {
    let (name, orientation) = match cell.rsplit_once(':') {
        Some((name, "desirable")) => (name, Orientation::Desirable),
        Some((name, "undesirable")) => (name, Orientation::Undesirable),
        Some(_) => return Err(DatasetError::BadHeader(cell.to_string())),
        None => (cell, Orientation::Desirable),
    };
    let name = name.trim();
    if name.is_empty() {
        return Err(DatasetError::BadHeader(cell.to_string()));
    }
    Ok(AttributeSpec::new(name, orientation))
}

fn csv_error(e: csv::Error) -> DatasetError {
    let (line, column) = e.position().map_or((0, 0), |p| (p.line(), 0));
    DatasetError::Parse {
        line,
        column,
        message: e.to_string(),
    }
}
