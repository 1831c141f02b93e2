//! Rendering of pipeline results. Tables and CSV print four decimals, JSON
//! carries full precision.

use std::fmt::Write;

use greyrank_core::ahp::PriorityVector;
use greyrank_core::dea::Variant;
use greyrank_core::gra::{CoefficientMatrix, ComparabilityMatrix, ReferenceSequence};
use greyrank_core::lp::LpSolution;
use greyrank_core::pipeline::PipelineOutput;
use greyrank_core::Interval;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Parameters {
    pub alpha: f64,
    pub rho: f64,
    pub beta: f64,
    pub variant: Variant,
}

fn fixed(v: f64) -> String {
    format!("{v:.4}")
}

fn interval(v: Interval) -> String {
    format!("[{:.4}, {:.4}]", v.lo(), v.hi())
}

/// Left-aligned first column, right-aligned remainder.
fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut line = String::new();
        for (j, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if j == 0 {
                let _ = write!(line, "{cell:<w$}");
            } else {
                let _ = write!(line, "  {cell:>w$}");
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

fn render(format: Format, header: &[String], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => csv_text(header, rows),
        _ => table(header, rows),
    }
}

fn strings<const N: usize>(items: [&str; N]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct RankJson<'a> {
    parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    priorities: Option<&'a PriorityVector>,
    report: &'a greyrank_core::dea::GradeReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<Audit<'a>>,
}

#[derive(Serialize)]
struct Audit<'a> {
    intervals: &'a [Vec<Interval>],
    comparability: &'a ComparabilityMatrix,
    reference: &'a ReferenceSequence,
    coefficients: &'a CoefficientMatrix,
}

pub fn rank(out: &PipelineOutput, params: Parameters, format: Format, audit: bool) -> String {
    if format == Format::Json {
        return json(&RankJson {
            parameters: params,
            priorities: out.priorities.as_ref(),
            report: &out.report,
            audit: audit.then_some(Audit {
                intervals: &out.intervals,
                comparability: &out.comparability,
                reference: &out.reference,
                coefficients: &out.coefficients,
            }),
        });
    }
    let mut text = String::new();
    if audit {
        text.push_str(&audit_text(out, format));
    }
    if format == Format::Table {
        let _ = writeln!(
            text,
            "variant {}  alpha {}  rho {}  beta {}",
            params.variant.as_str(),
            fixed(params.alpha),
            fixed(params.rho),
            fixed(params.beta)
        );
        let r = &out.report;
        if r.optimistic_degenerate || r.pessimistic_degenerate {
            let _ = writeln!(
                text,
                "note: all {} grades coincide; that term of the compromise is zero",
                match (r.optimistic_degenerate, r.pessimistic_degenerate) {
                    (true, true) => "optimistic and pessimistic",
                    (true, false) => "optimistic",
                    _ => "pessimistic",
                }
            );
        }
    }
    let header = strings(["alternative", "optimistic", "pessimistic", "compromise", "rank"]);
    let rows: Vec<Vec<String>> = out
        .report
        .alternatives
        .iter()
        .map(|a| {
            vec![
                a.label.clone(),
                fixed(a.optimistic),
                fixed(a.pessimistic),
                fixed(a.compromise),
                a.rank.to_string(),
            ]
        })
        .collect();
    text.push_str(&render(format, &header, &rows));
    text
}

fn section(text: &mut String, format: Format, title: &str) {
    if format == Format::Csv {
        let _ = writeln!(text, "# {title}");
    } else {
        let _ = writeln!(text, "{title}:");
    }
}

fn audit_text(out: &PipelineOutput, format: Format) -> String {
    let mut text = String::new();
    let cm = &out.comparability;
    let mut header = vec!["alternative".to_string()];
    header.extend(cm.attributes().iter().cloned());

    let interval_rows = |cell: &dyn Fn(usize, usize) -> Interval| -> Vec<Vec<String>> {
        (0..cm.rows())
            .map(|i| {
                std::iter::once(cm.alternatives()[i].clone())
                    .chain((0..cm.cols()).map(|j| interval(cell(i, j))))
                    .collect()
            })
            .collect()
    };

    section(&mut text, format, "alpha-cut intervals");
    text.push_str(&render(format, &header, &interval_rows(&|i, j| out.intervals[j][i])));
    text.push('\n');
    section(&mut text, format, "comparability");
    text.push_str(&render(format, &header, &interval_rows(&|i, j| cm.get(i, j))));
    text.push('\n');
    section(&mut text, format, "reference");
    let reference = vec![std::iter::once("reference".to_string())
        .chain(out.reference.entries().iter().map(|&v| interval(v)))
        .collect()];
    text.push_str(&render(format, &header, &reference));
    text.push('\n');
    section(&mut text, format, "coefficients");
    text.push_str(&coefficient_rows(cm.alternatives(), &header, &out.coefficients, format));
    text.push('\n');

    if let Some(p) = &out.priorities {
        section(&mut text, format, "priorities");
        text.push_str(&priority_rows(cm.attributes(), p, format));
        text.push('\n');
    }

    let mut weight_header = vec!["alternative".to_string(), "model".to_string()];
    weight_header.extend(cm.attributes().iter().cloned());
    weight_header.push("intercept".into());
    let mut rows = Vec::new();
    for a in &out.report.alternatives {
        for (model, sol) in [("optimistic", &a.detail.optimistic), ("pessimistic", &a.detail.pessimistic)] {
            let mut row = vec![a.label.clone(), model.to_string()];
            row.extend(sol.weights.iter().map(|&w| fixed(w)));
            row.push(fixed(sol.intercept));
            rows.push(row);
        }
    }
    section(&mut text, format, "weights");
    text.push_str(&render(format, &weight_header, &rows));
    text.push('\n');
    text
}

fn coefficient_rows(labels: &[String], header: &[String], xi: &CoefficientMatrix, format: Format) -> String {
    let rows: Vec<Vec<String>> = (0..xi.rows())
        .map(|i| {
            std::iter::once(labels[i].clone())
                .chain(xi.row(i).iter().map(|&v| fixed(v)))
                .collect()
        })
        .collect();
    render(format, header, &rows)
}

fn priority_rows(labels: &[String], p: &PriorityVector, format: Format) -> String {
    let rows: Vec<Vec<String>> = labels
        .iter()
        .zip(p.weights())
        .map(|(l, &w)| vec![l.clone(), fixed(w)])
        .collect();
    let mut text = render(format, &strings(["attribute", "priority"]), &rows);
    if let (Some(lambda), Some(cr)) = (p.lambda_max(), p.consistency_ratio()) {
        match format {
            Format::Csv => {
                let _ = writeln!(text, "lambda_max,{}\nconsistency_ratio,{}", fixed(lambda), fixed(cr));
            }
            _ => {
                let _ = writeln!(text, "lambda_max {}\nconsistency ratio {}", fixed(lambda), fixed(cr));
            }
        }
    }
    text
}

#[derive(Serialize)]
struct GraJson<'a> {
    alpha: f64,
    rho: f64,
    comparability: &'a ComparabilityMatrix,
    reference: &'a ReferenceSequence,
    coefficients: &'a CoefficientMatrix,
}

pub fn gra(
    cm: &ComparabilityMatrix,
    reference: &ReferenceSequence,
    xi: &CoefficientMatrix,
    alpha: f64,
    rho: f64,
    format: Format,
) -> String {
    if format == Format::Json {
        return json(&GraJson {
            alpha,
            rho,
            comparability: cm,
            reference,
            coefficients: xi,
        });
    }
    let mut header = vec!["alternative".to_string()];
    header.extend(cm.attributes().iter().cloned());
    coefficient_rows(cm.alternatives(), &header, xi, format)
}

#[derive(Serialize)]
struct AhpJson<'a> {
    labels: &'a [String],
    priorities: &'a PriorityVector,
}

pub fn ahp(labels: &[String], p: &PriorityVector, format: Format) -> String {
    if format == Format::Json {
        return json(&AhpJson { labels, priorities: p });
    }
    priority_rows(labels, p, format)
}

pub fn lp(s: &LpSolution, format: Format) -> String {
    if format == Format::Json {
        return json(s);
    }
    let mut text = format!("status {}\n", s.status.as_str());
    if s.is_optimal() {
        let _ = writeln!(text, "objective {}", fixed(s.objective));
        let rows: Vec<Vec<String>> = s
            .x
            .iter()
            .zip(&s.reduced_costs)
            .enumerate()
            .map(|(j, (x, d))| vec![format!("x{j}"), fixed(*x), fixed(*d)])
            .collect();
        text.push_str(&render(format, &strings(["variable", "value", "reduced_cost"]), &rows));
        let rows: Vec<Vec<String>> = s
            .duals
            .iter()
            .enumerate()
            .map(|(i, y)| vec![format!("row{i}"), fixed(*y)])
            .collect();
        text.push_str(&render(format, &strings(["constraint", "dual"]), &rows));
    }
    text
}
