//! The `zzosp` command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when some check fails, 2 on
//! usage, spec or output errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::algebras::{
    elementary_basis, expected_dim, kernel_basis, verify_block_conditions, verify_closure, verify_grading,
    verify_jacobi, verify_lie_reduction, verify_membership, verify_s_membership, verify_super_reduction,
    verify_symmetry, AlgebraError, AlgebraSpec, Basis, BlockAdjudication, Family,
};
use crate::gmatrix::GradedMatrix;
use crate::parastat::{
    graded_bracket_consistency, verify_generators, verify_relations, OperatorSystem, ParastatError,
};
use crate::report::CheckReport;

pub const TOOL: &str = "zzosp";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Largest matrix size accepted without `--force`.
pub const MAX_SIZE: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print the canonical kernel basis (elementary basis for gl).
    Basis,
    /// Compare the computed dimension with the closed form.
    Dims,
    /// Defining condition, closure and block conditions of an osp algebra.
    CheckOsp,
    /// Grading, symmetry and Jacobi identities over all basis tuples.
    CheckJacobi,
    /// Parastatistics triple relations of the algebra's generators.
    CheckRelations,
    /// Everything applicable, bundled in one document.
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Basis => "basis",
            Command::Dims => "dims",
            Command::CheckOsp => "check-osp",
            Command::CheckJacobi => "check-jacobi",
            Command::CheckRelations => "check-relations",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
struct SpecArgs {
    /// gl, sl, ospB or ospD
    #[arg(long, global = true)]
    algebra: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    m1: usize,
    #[arg(long, global = true, default_value_t = 0)]
    m2: usize,
    #[arg(long, global = true, default_value_t = 0)]
    n1: usize,
    #[arg(long, global = true, default_value_t = 0)]
    n2: usize,
}

#[derive(Debug, Parser)]
#[command(name = "zzosp", version, about = "Exact checks for Z2xZ2-graded Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    spec: SpecArgs,
    /// Write the document here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Counterexamples kept per check.
    #[arg(long, global = true, default_value_t = 10)]
    max_counterexamples: usize,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow matrix sizes above 40.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub spec: AlgebraSpec,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub max_counterexamples: usize,
    pub jobs: Option<usize>,
    pub force: bool,
}

impl RunConfig {
    pub fn new(command: Command, spec: AlgebraSpec) -> Self {
        RunConfig { command, spec, output: None, format: Format::Json, max_counterexamples: 10, jobs: None, force: false }
    }

    /// Parses command-line arguments (including the program name).
    pub fn from_args<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let s = cli.spec;
        let family_text = s.algebra.ok_or_else(|| CliError::Usage("--algebra is required".into()))?;
        let family: Family = family_text.parse()?;
        let spec = AlgebraSpec::new(family, s.m1, s.m2, s.n1, s.n2)?;
        if cli.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            spec,
            output: cli.output,
            format: cli.format,
            max_counterexamples: cli.max_counterexamples,
            jobs: cli.jobs,
            force: cli.force,
        })
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Args(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parastat(#[from] ParastatError),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisEntry {
    pub label: String,
    pub matrix: GradedMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub computed: usize,
    pub expected: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: u64,
    pub failed: u64,
}

/// The document emitted by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub spec: AlgebraSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Dims>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<BasisEntry>>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjudication: Option<BlockAdjudication>,
    pub summary: Summary,
}

impl Document {
    fn new(command: Command, spec: AlgebraSpec) -> Self {
        Document {
            tool: TOOL,
            version: VERSION,
            command: command.name(),
            spec,
            dims: None,
            basis: None,
            checks: Vec::new(),
            adjudication: None,
            summary: Summary { total: 0, failed: 0 },
        }
    }

    /// Failures counted by the exit status: failed checks plus a dimension mismatch.
    pub fn failures(&self) -> u64 {
        self.summary.failed + self.dims.map_or(0, |d| (!d.matches) as u64)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {} {}", self.tool, self.version, self.command, self.spec);
        if let Some(d) = &self.dims {
            let _ = writeln!(s, "dimension: computed {} expected {} match {}", d.computed, d.expected, d.matches);
        }
        if let Some(b) = &self.basis {
            let _ = writeln!(s, "basis ({} elements)", b.len());
            for e in b {
                let entries: Vec<String> =
                    e.matrix.entries().map(|(i, j, v)| format!("({},{})={}", i + 1, j + 1, v)).collect();
                let _ = writeln!(s, "  {}: {}", e.label, entries.join(" "));
            }
        }
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            let _ = writeln!(s, "{:<24} {:>8} instances {:>6} failed  {}", c.check, c.total, c.failed, status);
            for cex in &c.counterexamples {
                let _ = writeln!(
                    s,
                    "    at {:?}{}{}: residual has {} nonzero entries",
                    cex.indices,
                    cex.signs.as_ref().map(|x| format!(" signs {x:?}")).unwrap_or_default(),
                    cex.relation.as_ref().map(|r| format!(" ({r})")).unwrap_or_default(),
                    cex.residual.nnz()
                );
            }
        }
        if let Some(a) = &self.adjudication {
            let _ = writeln!(
                s,
                "block conditions: kernel {} printed {} adjudicated {}",
                a.kernel_dim, a.printed_solution_dim, a.adjudicated_solution_dim
            );
            for v in a.discrepancies() {
                let _ = writeln!(s, "  discrepancy: {} readings {:?} labels {:?}", v.relation, v.consistent_readings, v.degree_labels);
            }
        }
        let _ = writeln!(s, "summary: {} instances, {} failed", self.summary.total, self.summary.failed);
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// Basis used by the checks: elementary for gl, kernel basis otherwise.
pub fn algebra_basis(spec: &AlgebraSpec) -> Result<Basis, AlgebraError> {
    match spec.family {
        Family::Gl => elementary_basis(spec),
        _ => kernel_basis(spec),
    }
}

/// Closed-form dimension for every family.
pub fn closed_form_dim(spec: &AlgebraSpec) -> Result<usize, AlgebraError> {
    let m = spec.size();
    match spec.family {
        Family::Gl => Ok(m * m),
        Family::Sl => Ok(m * m - 1),
        _ => expected_dim(spec),
    }
}

fn operator_system(spec: &AlgebraSpec) -> Result<Option<OperatorSystem>, CliError> {
    match spec.family {
        Family::OspB if spec.m() + spec.n() > 0 => Ok(Some(OperatorSystem::for_osp_b(spec)?)),
        Family::Sl if spec.m1 == 1 && spec.m2 == 0 && spec.n() > 0 => Ok(Some(OperatorSystem::for_palev(spec.n1, spec.n2)?)),
        _ => Ok(None),
    }
}

fn osp_checks(doc: &mut Document, spec: &AlgebraSpec, basis: &Basis) -> Result<(), CliError> {
    doc.checks.push(verify_s_membership(spec)?);
    doc.checks.push(verify_membership(basis)?);
    doc.checks.push(verify_closure(basis)?);
    if spec.family == Family::OspB {
        let adj = verify_block_conditions(spec)?;
        doc.checks.push(adj.report.clone());
        doc.adjudication = Some(adj);
    }
    Ok(())
}

fn jacobi_checks(doc: &mut Document, spec: &AlgebraSpec, basis: &Basis) -> Result<(), CliError> {
    doc.checks.push(verify_grading(basis)?);
    doc.checks.push(verify_symmetry(basis)?);
    doc.checks.push(verify_jacobi(basis)?);
    if spec.m2 == 0 && spec.n2 == 0 {
        doc.checks.push(verify_super_reduction(basis)?);
    }
    if spec.n() == 0 && spec.family.is_osp() {
        doc.checks.push(verify_lie_reduction(basis)?);
    }
    Ok(())
}

fn relation_checks(doc: &mut Document, system: &OperatorSystem) -> Result<(), CliError> {
    doc.checks.push(verify_generators(system)?);
    for family in system.applicable_families() {
        doc.checks.push(verify_relations(family, system)?);
    }
    doc.checks.push(graded_bracket_consistency(system)?);
    Ok(())
}

/// Builds the document for `config` on the current rayon pool, without the
/// size guard.
pub fn document(config: &RunConfig) -> Result<Document, CliError> {
    let spec = &config.spec;
    let mut doc = Document::new(config.command, *spec);
    match config.command {
        Command::Basis => {
            let b = algebra_basis(spec)?;
            doc.basis = Some(b.labels.into_iter().zip(b.elements).map(|(label, matrix)| BasisEntry { label, matrix }).collect());
        }
        Command::Dims => {
            let computed = algebra_basis(spec)?.len();
            let expected = closed_form_dim(spec)?;
            doc.dims = Some(Dims { computed, expected, matches: computed == expected });
        }
        Command::CheckOsp => {
            if !spec.family.is_osp() {
                return Err(CliError::Usage(format!("check-osp needs an ospB or ospD algebra, got {spec}")));
            }
            osp_checks(&mut doc, spec, &kernel_basis(spec)?)?;
        }
        Command::CheckJacobi => jacobi_checks(&mut doc, spec, &algebra_basis(spec)?)?,
        Command::CheckRelations => {
            let Some(system) = operator_system(spec)? else {
                return Err(CliError::Usage(format!(
                    "{spec} has no parastatistics generators (use ospB with m1+m2+n1+n2 > 0, or sl with m1=1, m2=0)"
                )));
            };
            relation_checks(&mut doc, &system)?;
        }
        Command::Report => {
            let basis = algebra_basis(spec)?;
            let computed = basis.len();
            let expected = closed_form_dim(spec)?;
            doc.dims = Some(Dims { computed, expected, matches: computed == expected });
            if spec.family.is_osp() {
                osp_checks(&mut doc, spec, &basis)?;
            }
            jacobi_checks(&mut doc, spec, &basis)?;
            if let Some(system) = operator_system(spec)? {
                relation_checks(&mut doc, &system)?;
            }
        }
    }
    for c in doc.checks.iter_mut() {
        c.truncate_counterexamples(config.max_counterexamples);
    }
    doc.summary = Summary {
        total: doc.checks.iter().map(|c| c.total).sum(),
        failed: doc.checks.iter().map(|c| c.failed).sum(),
    };
    Ok(doc)
}

/// Runs one subcommand on a dedicated thread pool and returns its document.
pub fn execute(config: &RunConfig) -> Result<Document, CliError> {
    if config.spec.size() > MAX_SIZE && !config.force {
        return Err(CliError::Usage(format!(
            "{} has matrix size {} > {MAX_SIZE}; pass --force to run anyway",
            config.spec,
            config.spec.size()
        )));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        pool = pool.num_threads(j);
    }
    pool.build()?.install(|| document(config))
}

/// Executes `config`, writes the rendered document, and returns the exit status.
pub fn run(config: &RunConfig) -> Result<i32, CliError> {
    let doc = execute(config)?;
    let text = doc.render(config.format);
    match &config.output {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Output { path: path.clone(), source })?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Output { path: "<stdout>".into(), source })?;
        }
    }
    Ok(if doc.failures() == 0 { 0 } else { 1 })
}

/// Entry point shared by the binary: parse, run, report errors, map to an exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = RunConfig::from_args(args).and_then(|c| run(&c));
    match result {
        Ok(code) => code,
        Err(CliError::Args(e)) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("zzosp: {e}");
            2
        }
    }
}
