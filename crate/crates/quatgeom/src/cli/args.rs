use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::curvature::MetricFamily;
use crate::harmonic::{HSpec, Normalization};
use crate::wolf::{Space, WolfSpaceModel};

use super::acceptance::{evaluate, Verdict};
use super::report::{canonicalize, Report};
use super::suites::{run_suite, Scope, SuiteConfig, DEFAULT_SEED};
use super::{CliError, EXIT_ERROR, EXIT_FAIL, EXIT_PASS};

#[derive(Debug, Parser)]
#[command(name = "quatgeom", version, about = "Verify quaternionic geometry of the eight-dimensional Wolf spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Restrict per-space checks (repeatable); default: every space.
    #[arg(long, global = true, value_parser = parse_space)]
    pub space: Vec<Space>,
    /// Profile h: `zero`, `cos:k1:c1[,k2:c2...]` or `logsin:c`.
    #[arg(long, global = true, value_parser = parse_hspec)]
    pub h: Option<HSpec>,
    /// Comma-separated sample points t.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub t: Vec<f64>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Multiply every numeric tolerance by this factor.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tol_scale: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
    },
    /// Print Ricci tensors, scalar curvature and Einstein deviation as JSON.
    Ricci {
        #[arg(long, value_enum, default_value_t = NormalizationArg::Unit)]
        normalization: NormalizationArg,
    },
    /// Write the full JSON report (to OUT, `--json`, or standard output).
    Report { out: Option<PathBuf> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Unit,
    Literal,
}

impl From<NormalizationArg> for Normalization {
    fn from(n: NormalizationArg) -> Self {
        match n {
            NormalizationArg::Unit => Normalization::Unit,
            NormalizationArg::Literal => Normalization::Literal,
        }
    }
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse().map_err(|e: crate::wolf::UnknownSpace| e.to_string())
}

fn parse_hspec(s: &str) -> Result<HSpec, String> {
    s.parse().map_err(|e: crate::harmonic::HarmonicError| e.to_string())
}

impl Cli {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            spaces: if self.space.is_empty() { Space::ALL.to_vec() } else { self.space.clone() },
            h: self.h.clone(),
            ts: (!self.t.is_empty()).then(|| self.t.clone()),
            seed: self.seed,
            tol_scale: self.tol_scale,
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn verify(cli: &Cli, scope: Scope) -> Result<i32, CliError> {
    let config = cli.config();
    let report = run_suite(scope, &config)?;
    print!("{}", report.to_text());
    for outcome in evaluate(&report, config.tol_scale).iter().filter(|o| o.verdict != Verdict::NotRun) {
        println!("{}", outcome.line());
    }
    if let Some(path) = &cli.json {
        write_file(path, &report.to_canonical_json()?)?;
    }
    Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn report(cli: &Cli, out: Option<&PathBuf>) -> Result<i32, CliError> {
    let report: Report = run_suite(Scope::All, &cli.config())?;
    let text = report.to_canonical_json()?;
    match out.or(cli.json.as_ref()) {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn ricci(cli: &Cli, norm: Normalization) -> Result<i32, CliError> {
    let [space] = cli.space[..] else {
        return Err(CliError::Usage("ricci needs exactly one --space".into()));
    };
    let h = cli.h.clone().unwrap_or(HSpec::Zero);
    let ts = if cli.t.is_empty() { vec![0.3] } else { cli.t.clone() };
    let mf = MetricFamily::new(&WolfSpaceModel::build(space), &h, norm)?;
    let mut points = Vec::new();
    for t in ts {
        let r = mf.ricci_at(t)?;
        let rows: Vec<Vec<f64>> = (0..8).map(|i| (0..8).map(|j| r.ricci[(i, j)]).collect()).collect();
        points.push(json!({
            "t": t,
            "ricci": rows,
            "scalar": r.scalar,
            "einstein_deviation": r.einstein_deviation,
            "structure_residual": r.structure_residual,
        }));
    }
    let value = json!({
        "space": space.key(),
        "h": h.to_string(),
        "normalization": format!("{norm:?}").to_lowercase(),
        "points": points,
    });
    let text = canonicalize(&value)?;
    print!("{text}");
    if let Some(path) = &cli.json {
        write_file(path, &text)?;
    }
    Ok(EXIT_PASS)
}

/// Executes a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Verify { scope } => verify(&cli, *scope),
        Command::Ricci { normalization } => ricci(&cli, (*normalization).into()),
        Command::Report { out } => report(&cli, out.as_ref()),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_ERROR
    })
}
