//! Command-line front end.
//!
//! Each command produces one [`Report`]. JSON output wraps it in an envelope
//! carrying the schema and tool versions, with keys in sorted order and every
//! rational written as a `"p/q"` string. Tables and CSV render the same data.
//!
//! Exit codes: [`EXIT_PASS`] when every check passed, [`EXIT_FAIL`] when one
//! failed, [`EXIT_USAGE`] for bad arguments or unreadable inputs.

mod render;
mod reports;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hilbert::Family;
use crate::rootsys::CartanLabel;

pub use reports::{
    expand_report, load_root_table, prolong_report, verify_suite, wolf_report, ExpandSource, Report, Scope, Selector,
    SCHEMA_VERSION,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qkhilbert",
    version,
    about = "Exact Hilbert polynomials of Wolf spaces and twistor prolongations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert polynomial, invariants and checks for one Wolf space.
    Wolf(WolfArgs),
    /// Prolongation tower of the twistor symbol on the flat model.
    Prolong(ProlongArgs),
    /// Run the verification grid.
    Verify(VerifyArgs),
    /// Coefficients of a Hilbert polynomial in the Bernoulli basis.
    Expand(ExpandArgs),
}

#[derive(Args, Debug)]
pub struct SelectorArgs {
    /// Cartan label such as G2, C3 or E8.
    #[arg(long, value_parser = parse_label, conflicts_with = "family")]
    pub algebra: Option<CartanLabel>,

    /// One of HPn, Gr2C, Gr4R, G2; needs --n.
    #[arg(long, value_parser = parse_family, requires = "n")]
    pub family: Option<Family>,

    /// Quaternionic dimension.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct WolfArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,

    /// Largest |r| for the integrality and bound scans.
    #[arg(long, default_value_t = crate::hilbert::DEFAULT_R_MAX, value_parser = clap::value_parser!(i64).range(0..))]
    pub r_max: i64,

    /// Replace the built-in roots of the matching algebra with a JSON table.
    #[arg(long, hide = true)]
    pub root_table: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProlongArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,

    /// Highest prolongation level to compute; defaults to 2r.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: Option<u32>,

    /// Also count polynomial solutions of degree at most this.
    #[arg(long)]
    pub degree_bound: Option<u32>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Scope::All)]
    pub scope: Scope,

    #[arg(long, default_value_t = crate::hilbert::DEFAULT_R_MAX, value_parser = clap::value_parser!(i64).range(0..))]
    pub r_max: i64,

    #[arg(long, hide = true)]
    pub root_table: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub selector: SelectorArgs,

    /// Coefficients in increasing degree, comma separated, e.g. "1,11/3,4,4/3"; needs --n.
    #[arg(long, conflicts_with_all = ["algebra", "family"])]
    pub poly: Option<String>,
}

fn parse_label(s: &str) -> Result<CartanLabel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a command before a report exists.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAIL,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InadmissibleAlgebra { .. } | Error::InvalidParameter(_) | Error::ParseRational(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

fn selector(args: &SelectorArgs) -> Result<Selector, CliError> {
    match (args.algebra, args.family, args.n) {
        (Some(label), None, None) => Ok(Selector::Algebra(label)),
        (None, Some(family), Some(n)) => Ok(Selector::Family(family, n)),
        (Some(_), None, Some(_)) => Err(CliError::Usage("--n only applies to --family or --poly".into())),
        _ => Err(CliError::Usage("give either --algebra or --family with --n".into())),
    }
}

/// Build the report for parsed arguments.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Wolf(a) => {
            let table = a.root_table.as_deref().map(load_root_table).transpose()?;
            wolf_report(&selector(&a.selector)?, a.r_max, table.as_ref())
        }
        Command::Prolong(a) => prolong_report(
            a.n as usize,
            a.r as usize,
            a.cap.map(|c| c as usize),
            a.degree_bound.map(|d| d as usize),
        ),
        Command::Verify(a) => {
            let table = a.root_table.as_deref().map(load_root_table).transpose()?;
            Ok(verify_suite(a.scope, a.r_max, table.as_ref()))
        }
        Command::Expand(a) => {
            let source = match (&a.poly, a.selector.n) {
                (Some(p), Some(n)) => ExpandSource::Coefficients(reports::parse_coefficients(p)?, n),
                (Some(_), None) => return Err(CliError::Usage("--poly needs --n".into())),
                (None, _) => ExpandSource::Selected(selector(&a.selector)?),
            };
            expand_report(&source)
        }
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Table => report.table(),
        Format::Csv => report.csv(),
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("qkhilbert: {e}");
            return e.exit_code();
        }
    };
    let text = render(&report, cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    };
    if let Err(msg) = written {
        eprintln!("qkhilbert: {msg}");
        return EXIT_USAGE;
    }
    for c in report.checks.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
    }
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
