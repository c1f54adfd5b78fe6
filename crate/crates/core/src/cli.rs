//! The `polyalg` command line: verification suites, compositions and irreps
//! on demand, and matrix export.
//!
//! Exit codes: 0 when no check fails, 1 when one does, 2 for usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::algebra::{build_irrep_exact, build_irrep_unitary, su2_label, IrrepLabel, PolyAlgebra};
use crate::bargmann::bargmann_report;
use crate::catalog::calogero::calogero_report;
use crate::catalog::oscillator::{fermion_report, quadratic_oscillator_report};
use crate::catalog::q11::{q11_algebra_for, q11_irreps_report, q11_label};
use crate::catalog::recipe::Recipe;
use crate::catalog::susy::{linear_report, radial_report};
use crate::catalog::{build_entry, entries, export_entry, find_entry, verify_entry, Constants};
use crate::composer::{compose_tensor, verify_order_theorem, Variant};
use crate::error::{Error, Result};
use crate::rational::{fmt_list, fmt_rational, parse_rational, rat, Rational};
use crate::report::{to_json, to_text, EntryReport};
use crate::triple::TripleExport;
use crate::verify::{scalar_value, verify_realization, Check, Status};

/// Suites reachable through `verify --catalog`, besides the table slugs.
pub const SUITES: [&str; 7] =
    ["fermion", "quadratic-oscillator", "calogero", "q11-irreps", "bargmann", "susy-linear", "susy-radial"];

/// Grid bounds shared by the suites: `2k <= 10`, `2l - k <= 10`, `j <= 6`.
const MAX_TWICE_K: i64 = 10;
const MAX_SPAN: i64 = 10;
const MAX_TWICE_J: i64 = 12;

#[derive(Debug, Clone, Parser)]
#[command(name = "polyalg", version, about = "Polynomial deformations of su(2) and su(1,1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Entrywise tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-12, value_parser = parse_tolerance)]
    pub tolerance: f64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IrrepAlgebra {
    #[value(name = "q11-minus")]
    Q11Minus,
    Su2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Exact,
    Unitary,
}

/// Constant overrides for a single catalog entry.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Overrides {
    /// Sets constant `k`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    pub k: Option<Rational>,
    /// Sets constant `L`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    pub l: Option<Rational>,
    /// Sets constant `j`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    pub j: Option<Rational>,
    /// Sets any constant, as NAME=VALUE; repeatable.
    #[arg(long = "set", value_parser = parse_assignment)]
    pub set: Vec<(String, Rational)>,
}

impl Overrides {
    pub fn constants(&self) -> Constants {
        let mut out: Constants = self.set.iter().cloned().collect();
        for (name, value) in [("k", &self.k), ("L", &self.l), ("j", &self.j)] {
            if let Some(v) = value {
                out.insert(name.to_string(), v.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Runs verification suites: a table slug, a suite name, `table` or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        catalog: String,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Composes two realizations and derives the structure polynomial on one sector.
    Compose {
        /// Operand such as su2:j=2, su11:k=1/2, heis, q11:k=1/2,l=3/4.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        pi: Rational,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
    },
    /// Builds a finite irrep and its matrices.
    Irrep {
        #[arg(long, value_enum)]
        algebra: IrrepAlgebra,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        k: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        l: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
        j: Option<Rational>,
        #[arg(long, value_enum, default_value_t = FlavorArg::Unitary)]
        flavor: FlavorArg,
    },
    /// Lists the table entries and suites.
    List,
    /// Exports the sector matrices of a table entry, or of all of them.
    Export {
        #[arg(long)]
        catalog: String,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
        #[command(flatten)]
        overrides: Overrides,
    },
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_assignment(s: &str) -> std::result::Result<(String, Rational), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got '{s}'"))?;
    Ok((name.trim().to_string(), parse_rational_arg(value)?))
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tolerance(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got '{s}'")),
    }
}

/// Reports plus the exit code they imply.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub reports: Vec<EntryReport>,
    pub code: i32,
}

impl Outcome {
    fn from_reports(reports: Vec<EntryReport>) -> Self {
        let code = i32::from(reports.iter().any(EntryReport::failed));
        Outcome { reports, code }
    }
}

/// Errors that mean the request itself was malformed.
fn is_usage(e: &Error) -> bool {
    matches!(e, Error::UnknownEntry(_) | Error::Parse(_) | Error::InvalidLabel(_))
}

/// A report standing in for a suite that could not be built.
fn failed_build(name: &str, e: &Error) -> EntryReport {
    let mut r = EntryReport::new(name);
    r.push(Check::fail("build", e.to_string()));
    r
}

/// Names selected by `--catalog`, in report order.
pub fn select(catalog: &str) -> Result<Vec<String>> {
    let table = || entries().iter().map(|e| e.slug.to_string());
    Ok(match catalog {
        "all" => table().chain(SUITES.iter().map(|s| s.to_string())).collect(),
        "table" => table().collect(),
        s if SUITES.contains(&s) => vec![s.to_string()],
        s => vec![find_entry(s)?.slug.to_string()],
    })
}

/// Runs one selected name. Suites that expand over parameters give several reports.
fn run_one(name: &str, overrides: &Constants, n_max: u32) -> Result<Vec<EntryReport>> {
    let halves = [rat(1, 2), rat(1, 1), rat(2, 1)];
    Ok(match name {
        "fermion" => vec![fermion_report()?],
        "quadratic-oscillator" => vec![quadratic_oscillator_report(MAX_TWICE_K, MAX_SPAN)?],
        "calogero" => vec![calogero_report(MAX_TWICE_J)?],
        "q11-irreps" => vec![q11_irreps_report(MAX_TWICE_K, MAX_SPAN)?],
        "bargmann" => vec![bargmann_report(MAX_TWICE_K, MAX_SPAN)?],
        "susy-linear" => halves.iter().map(linear_report).collect(),
        "susy-radial" => {
            let lead = radial_target(n_max)?;
            halves
                .iter()
                .flat_map(|g| halves.iter().map(move |e| (g, e)))
                .map(|(g, e)| radial_report(g, e, &lead))
                .collect()
        }
        slug => vec![verify_entry(slug, overrides, n_max)?],
    })
}

/// Leading coefficient of the derived `C−(q−1,h)` polynomial, the target of
/// the radial matching.
pub fn radial_target(n_max: u32) -> Result<Rational> {
    Ok(build_entry("cqm-h-minus", &Constants::new(), n_max)?.algebra().f.leading())
}

fn verify(catalog: &str, overrides: &Constants, n_max: u32) -> Result<Outcome> {
    let names = select(catalog)?;
    if !overrides.is_empty() {
        if names.len() != 1 || SUITES.contains(&names[0].as_str()) {
            return Err(Error::Parse("constant overrides need a single table entry".into()));
        }
        find_entry(&names[0])?.constants(overrides)?;
    }
    // Collected in selection order whatever the completion order.
    let results: Vec<Result<Vec<EntryReport>>> =
        names.par_iter().map(|name| run_one(name, overrides, n_max)).collect();
    let mut reports = Vec::new();
    for (name, result) in names.iter().zip(results) {
        match result {
            Ok(rs) => reports.extend(rs),
            Err(e) if is_usage(&e) => return Err(e),
            Err(e) => reports.push(failed_build(name, &e)),
        }
    }
    Ok(Outcome::from_reports(reports))
}

/// `compose`: builds the two operands, composes them and fits on `Π = pi`.
pub fn compose_report(left: &str, right: &str, variant: Variant, pi: &Rational, n_max: u32) -> Result<EntryReport> {
    let (l, r): (Recipe, Recipe) = (left.parse()?, right.parse()?);
    let recipe = Recipe::compose(l.clone(), r.clone(), variant, pi.clone());
    let built = match recipe.build(n_max) {
        Err(Error::EmptySector) => {
            let comp = compose_tensor(&l.build(n_max)?.triple, &r.build(n_max)?.triple, variant)?;
            return Err(Error::Parse(format!(
                "the Pi = {pi} sector is empty; Pi takes the values {}",
                fmt_list(&comp.pi_values())
            )));
        }
        other => other?,
    };
    let composed = built.composed.as_ref().expect("compose builds a composition");
    let (m, n) = composed.inputs;
    let f = &built.algebra.f;
    let verdict = verify_order_theorem(m, n, f);
    let samples = composed.fit.sample_count();
    let needed = composed.required_samples();

    let mut report = EntryReport::new("compose")
        .constant("pi", pi)
        .derived(f)
        .detail("left", left)
        .detail("right", right)
        .detail("variant", variant)
        .detail("pi0_spectrum", composed.fit.pi0_spectrum())
        .detail("verdict", &verdict);
    report.recipe = Some(recipe.to_string());
    report.extend(verify_realization(&built.triple, &built.algebra, 0.0)?.checks);
    let enough = samples >= needed;
    report.push(Check::new(
        "interpolation-points",
        if enough { Status::Pass } else { Status::InsufficientPoints },
        format!("{samples}/{needed}"),
    ));
    report.push(
        Check::from_bool("order-theorem", verdict.holds, crate::poly::Polynomial::describe_degree(verdict.degree))
            .with_note(format!("inputs of order {m} and {n}, bound {}, saturated {}", verdict.bound, verdict.saturated)),
    );
    Ok(report)
}

fn required(value: &Option<Rational>, flag: &str) -> Result<Rational> {
    value.clone().ok_or_else(|| Error::Parse(format!("--{flag} is required")))
}

/// `irrep`: matrices, checks and Casimir of one finite irrep.
pub fn irrep_report(
    algebra: IrrepAlgebra,
    (k, l, j): (&Option<Rational>, &Option<Rational>, &Option<Rational>),
    flavor: FlavorArg,
    tolerance: f64,
) -> Result<EntryReport> {
    let (name, alg, label, params): (&str, PolyAlgebra, IrrepLabel, Vec<(&str, Rational)>) = match algebra {
        IrrepAlgebra::Q11Minus => {
            let (k, l) = (required(k, "k")?, required(l, "l")?);
            let label = q11_label(&k, &l)?;
            ("q11-minus", q11_algebra_for(&k, &l), label, vec![("k", k), ("l", l)])
        }
        IrrepAlgebra::Su2 => {
            let j = required(j, "j")?;
            if !crate::rational::is_half_integer(&j) || j < rat(0, 1) {
                return Err(Error::InvalidLabel(format!("spin j = {j} must be a nonnegative half-integer")));
            }
            ("su2", PolyAlgebra::su2(), su2_label(&j), vec![("j", j)])
        }
    };
    let mut report = EntryReport::new(name).derived(&alg.f);
    for (p, v) in &params {
        report = report.constant(p, v);
    }
    let casimir = label.casimir_value.clone();
    let exact = build_irrep_exact(&alg, &label)?;
    let scalar = scalar_value(&alg.casimir().operator(&exact)?);
    report = report
        .detail("dim", label.dim)
        .detail("mu", fmt_rational(&label.mu))
        .detail("casimir", fmt_rational(&casimir));
    report.push(Check::from_bool("casimir-scalar", scalar.as_ref() == Some(&casimir), "0"));
    match flavor {
        FlavorArg::Exact => {
            report.extend(verify_realization(&exact, &alg, 0.0)?.checks);
            report.matrices = Some(TripleExport::from(&exact));
        }
        FlavorArg::Unitary => {
            let unitary = build_irrep_unitary(&alg, &label)?;
            report.extend(verify_realization(&unitary, &alg, tolerance)?.checks);
            report.matrices = Some(TripleExport::from(&unitary));
        }
    }
    Ok(report)
}

/// `list`: one report per table entry and suite, without checks.
pub fn list_reports() -> Vec<EntryReport> {
    let mut out: Vec<EntryReport> = entries()
        .iter()
        .map(|e| {
            let mut r = EntryReport::new(e.slug)
                .with_constants(&e.constants(&Constants::new()).expect("defaults are valid"))
                .detail("name", e.name)
                .detail("degree", e.degree)
                .detail("inputs", e.inputs);
            r.recipe = Some(e.recipe.to_string());
            r
        })
        .collect();
    out.extend(SUITES.iter().map(|s| EntryReport::new(*s).detail("kind", "suite")));
    out
}

fn export(catalog: &str, overrides: &Constants, n_max: u32) -> Result<Outcome> {
    let names: Vec<String> = select(catalog)?.into_iter().filter(|n| !SUITES.contains(&n.as_str())).collect();
    if names.is_empty() {
        return Err(Error::Parse(format!("'{catalog}' has no matrices to export")));
    }
    let reports = names
        .par_iter()
        .map(|n| export_entry(n, overrides, n_max))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::from_reports(reports))
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Verify { catalog, n_max, overrides } => verify(catalog, &overrides.constants(), *n_max),
        Command::Compose { left, right, variant, pi, n_max } => {
            Ok(Outcome::from_reports(vec![compose_report(left, right, *variant, pi, *n_max)?]))
        }
        Command::Irrep { algebra, k, l, j, flavor } => {
            Ok(Outcome::from_reports(vec![irrep_report(*algebra, (k, l, j), *flavor, cli.tolerance)?]))
        }
        Command::List => Ok(Outcome::from_reports(list_reports())),
        Command::Export { catalog, n_max, overrides } => export(catalog, &overrides.constants(), *n_max),
    }
}

pub fn render(reports: &[EntryReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(reports, true);
            s.push('\n');
            s
        }
        Format::Text => to_text(reports),
    }
}

/// Parses `args`, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return if is_usage(&e) { 2 } else { 1 };
        }
    };
    let text = render(&outcome.reports, cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    outcome.code
}

/// Summary counts by status, for callers that want a one-line verdict.
pub fn status_counts(reports: &[EntryReport]) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    for c in reports.iter().flat_map(|r| &r.checks) {
        let key = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DeviationDocumented => "deviation-documented",
            Status::InsufficientPoints => "insufficient-points",
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out
}
