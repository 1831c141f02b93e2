//! Command-line definitions and the code behind each subcommand.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use greyrank_core::ahp::{principal_eigenvector, CONSISTENCY_THRESHOLD};
use greyrank_core::dea::Variant;
use greyrank_core::gra::DEFAULT_RHO;
use greyrank_core::pipeline::{self, full_pipeline_with, Params, Weighting, DEFAULT_ALPHA};
use greyrank_core::dea::DEFAULT_BETA;

use crate::ahp_io::{self, MatrixFile};
use crate::dataset::Dataset;
use crate::error::CliError;
use crate::exec::Threaded;
use crate::fixtures;
use crate::lp_io;
use crate::report::{self, Format, Parameters};

#[derive(Debug, Parser)]
#[command(name = "greyrank", version, about = "Rank alternatives with fuzzy grey relational analysis, AHP and DEA")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline and print grades and ranks.
    Rank(RankArgs),
    /// Print the grey relational coefficient matrix.
    Gra(GraArgs),
    /// Derive priorities from a pairwise comparison matrix.
    Ahp(AhpArgs),
    /// Solve a linear program given as JSON.
    Lp(LpArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Dataset file (.json, otherwise CSV).
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Built-in dataset: nuclear, table1-raw or table2-intervals.
    #[arg(long, value_name = "ID")]
    pub fixture: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PriorityMode {
    /// Listed priorities when the matrix file has them, else the eigenvector.
    Auto,
    Eigenvector,
    Published,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    BoundedVrs,
    CrsUnbounded,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::BoundedVrs => Variant::BoundedVrs,
            VariantArg::CrsUnbounded => Variant::CrsUnbounded,
        }
    }
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = DEFAULT_RHO)]
    pub rho: f64,
    #[arg(long, default_value_t = DEFAULT_BETA)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = VariantArg::BoundedVrs)]
    pub variant: VariantArg,
    /// Pairwise comparison matrix (CSV). Built-in datasets default to the
    /// bundled site matrix.
    #[arg(long, value_name = "PATH")]
    pub matrix: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PriorityMode::Auto)]
    pub priorities: PriorityMode,
    /// Also print the intermediate matrices and per-alternative weights.
    #[arg(long)]
    pub audit: bool,
    /// Save the loaded dataset (JSON, or CSV for a .csv path).
    #[arg(long, value_name = "PATH")]
    pub emit_dataset: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GraArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = DEFAULT_RHO)]
    pub rho: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AhpArgs {
    #[arg(long, value_name = "PATH", required_unless_present = "fixture", conflicts_with = "fixture")]
    pub matrix: Option<PathBuf>,
    /// Built-in matrix: table3-ahp.
    #[arg(long, value_name = "ID")]
    pub fixture: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LpArgs {
    /// Linear program in JSON.
    pub file: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Report text plus any warnings meant for standard error.
#[derive(Debug, Default)]
pub struct Outcome {
    pub report: String,
    pub warnings: Vec<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(&path.display().to_string(), e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(&path.display().to_string(), e))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn load_dataset(source: &Source) -> Result<Dataset, CliError> {
    if let Some(id) = &source.fixture {
        let text = fixtures::dataset(id).ok_or_else(|| {
            CliError::Validation(format!("unknown fixture '{id}' (known: {})", fixtures::DATASETS.join(", ")))
        })?;
        return Ok(Dataset::from_csv(text)?);
    }
    let path = source.input.as_deref().expect("clap requires a source");
    let text = read(path)?;
    let parsed = if is_json(path) {
        Dataset::from_json(&text)
    } else {
        Dataset::from_csv(&text)
    };
    parsed.map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn load_matrix(path: Option<&Path>, fixture: Option<&str>) -> Result<Option<MatrixFile>, CliError> {
    if let Some(path) = path {
        return ahp_io::parse_matrix(&read(path)?)
            .map(Some)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())));
    }
    match fixture.map(|id| (id, fixtures::matrix(id))) {
        Some((_, Some(text))) => ahp_io::parse_matrix(text).map(Some),
        Some((id, None)) => Err(CliError::Validation(format!("unknown matrix fixture '{id}' (known: table3-ahp)"))),
        None => Ok(None),
    }
}

fn cr_warning(cr: Option<f64>) -> Option<String> {
    cr.filter(|&cr| cr > CONSISTENCY_THRESHOLD).map(|cr| {
        format!("warning: consistency ratio {cr:.4} exceeds {CONSISTENCY_THRESHOLD}; judgments may be incoherent")
    })
}

fn weighting(args: &RankArgs, outcome: &mut Outcome) -> Result<Weighting, CliError> {
    if args.variant == VariantArg::CrsUnbounded {
        return Ok(Weighting::None);
    }
    // Built-in datasets all describe the same four site attributes.
    let fixture = args.source.fixture.as_ref().map(|_| "table3-ahp");
    let file = load_matrix(args.matrix.as_deref(), fixture)?.ok_or_else(|| {
        CliError::Validation("bounded-vrs needs attribute priorities: pass --matrix".into())
    })?;
    match (args.priorities, file.published) {
        (PriorityMode::Published | PriorityMode::Auto, Some(p)) => Ok(Weighting::Priorities(p)),
        (PriorityMode::Published, None) => Err(CliError::Validation(
            "--priorities published needs a Priority column in the matrix file".into(),
        )),
        _ => {
            let p = principal_eigenvector(&file.matrix)?;
            outcome.warnings.extend(cr_warning(p.consistency_ratio()));
            Ok(Weighting::Priorities(p))
        }
    }
}

fn rank(args: &RankArgs) -> Result<Outcome, CliError> {
    let dataset = load_dataset(&args.source)?;
    if let Some(path) = &args.emit_dataset {
        let text = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
            dataset.to_csv()
        } else {
            dataset.to_json()
        };
        write(path, &text)?;
    }
    let problem = dataset.to_problem()?;
    let mut outcome = Outcome::default();
    let weighting = weighting(args, &mut outcome)?;
    if let Weighting::Priorities(p) = &weighting {
        if p.weights().len() != problem.attributes.len() {
            return Err(CliError::Validation(format!(
                "matrix has {} attributes, dataset has {}",
                p.weights().len(),
                problem.attributes.len()
            )));
        }
    }
    let params = Params {
        alpha: args.alpha,
        rho: args.rho,
        beta: args.beta,
        variant: args.variant.into(),
    };
    let out = full_pipeline_with(&problem, &weighting, &params, &Threaded::from_env()?)?;
    let parameters = Parameters {
        alpha: params.alpha,
        rho: params.rho,
        beta: params.beta,
        variant: params.variant,
    };
    outcome.report = report::rank(&out, parameters, args.output.format, args.audit);
    Ok(outcome)
}

fn gra(args: &GraArgs) -> Result<Outcome, CliError> {
    let problem = load_dataset(&args.source)?.to_problem()?;
    let (_, cm, reference, xi) = pipeline::coefficients(&problem, args.alpha, args.rho)?;
    Ok(Outcome {
        report: report::gra(&cm, &reference, &xi, args.alpha, args.rho, args.output.format),
        warnings: Vec::new(),
    })
}

fn ahp(args: &AhpArgs) -> Result<Outcome, CliError> {
    let file = load_matrix(args.matrix.as_deref(), args.fixture.as_deref())?.expect("clap requires a matrix");
    let p = principal_eigenvector(&file.matrix)?;
    Ok(Outcome {
        report: report::ahp(file.matrix.labels(), &p, args.output.format),
        warnings: cr_warning(p.consistency_ratio()).into_iter().collect(),
    })
}

fn lp(args: &LpArgs) -> Result<Outcome, CliError> {
    let solution = lp_io::solve(&read(&args.file)?)
        .map_err(|e| match e {
            CliError::Validation(m) => CliError::Validation(format!("{}: {m}", args.file.display())),
            other => other,
        })?;
    Ok(Outcome {
        report: report::lp(&solution, args.output.format),
        warnings: Vec::new(),
    })
}

/// Runs a parsed command line and writes the report to `--output` if given.
/// The returned report is empty in that case.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (mut outcome, output) = match &cli.command {
        Command::Rank(a) => (rank(a)?, &a.output),
        Command::Gra(a) => (gra(a)?, &a.output),
        Command::Ahp(a) => (ahp(a)?, &a.output),
        Command::Lp(a) => (lp(a)?, &a.output),
    };
    if let Some(path) = &output.output {
        write(path, &outcome.report)?;
        outcome.report.clear();
    }
    Ok(outcome)
}
