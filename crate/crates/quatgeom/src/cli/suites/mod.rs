//! Named verification suites. Every task is a pure function of the configuration, so the
//! tasks of a scope run in parallel and the assembled report is deterministic.

mod algebra;
mod curvature;
mod harmonic;
mod perturb;
mod wolf;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::harmonic::HSpec;
use crate::wolf::Space;

use super::report::{CheckResult, Report};
use super::CliError;

/// Default seed for randomized checks.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Scope {
    All,
    Algebra,
    Wolf,
    Perturb,
    Harmonic,
    Curvature,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scope::All => "all",
            Scope::Algebra => "algebra",
            Scope::Wolf => "wolf",
            Scope::Perturb => "perturb",
            Scope::Harmonic => "harmonic",
            Scope::Curvature => "curvature",
        };
        f.write_str(s)
    }
}

/// What the suites run on.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Spaces for per-space checks.
    pub spaces: Vec<Space>,
    /// An extra user-supplied profile, evaluated alongside the built-in ones.
    pub h: Option<HSpec>,
    /// Sample points for the user profile; defaults to interior samples.
    pub ts: Option<Vec<f64>>,
    pub seed: u64,
    /// Multiplies every numeric tolerance.
    pub tol_scale: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { spaces: Space::ALL.to_vec(), h: None, ts: None, seed: DEFAULT_SEED, tol_scale: 1.0 }
    }
}

impl SuiteConfig {
    pub fn tol(&self, base: f64) -> f64 {
        base * self.tol_scale
    }

    pub fn includes(&self, space: Space) -> bool {
        self.spaces.contains(&space)
    }

    /// A reproducible generator for one task; `stream` separates tasks.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Checks and recorded values produced by one task.
#[derive(Debug, Default)]
pub struct Findings {
    pub checks: Vec<CheckResult>,
    pub recorded: Vec<(String, Value)>,
}

impl Findings {
    fn check(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    fn record(&mut self, key: &str, value: impl Into<Value>) {
        self.recorded.push((key.into(), value.into()));
    }
}

type Task = fn(&SuiteConfig) -> Result<Findings, CliError>;

fn tasks(scope: Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    let wants = |s: Scope| scope == Scope::All || scope == s;
    if wants(Scope::Algebra) {
        out.extend_from_slice(algebra::TASKS);
    }
    if wants(Scope::Wolf) {
        out.extend_from_slice(wolf::TASKS);
    }
    if wants(Scope::Perturb) {
        out.extend_from_slice(perturb::TASKS);
    }
    if wants(Scope::Harmonic) {
        out.extend_from_slice(harmonic::TASKS);
    }
    if wants(Scope::Curvature) {
        out.extend_from_slice(curvature::TASKS);
    }
    out
}

/// Runs every task of `scope` and assembles the report.
pub fn run_suite(scope: Scope, config: &SuiteConfig) -> Result<Report, CliError> {
    if !(config.tol_scale.is_finite() && config.tol_scale > 0.0) {
        return Err(CliError::Usage(format!("tolerance scale must be positive, got {}", config.tol_scale)));
    }
    if config.spaces.is_empty() {
        return Err(CliError::Usage("no space selected".into()));
    }
    let findings: Vec<Findings> = tasks(scope).par_iter().map(|task| task(config)).collect::<Result<_, _>>()?;
    let mut checks = Vec::new();
    let mut recorded = BTreeMap::new();
    for f in findings {
        checks.extend(f.checks);
        recorded.extend(f.recorded);
    }
    let mut report = Report::new(config.seed, checks, recorded);
    let criteria: serde_json::Map<String, Value> = super::acceptance::evaluate(&report, config.tol_scale)
        .into_iter()
        .map(|o| (format!("{:02}", o.id), serde_json::to_value(&o).expect("outcome serializes")))
        .collect();
    report.recorded.insert("acceptance_criteria".into(), Value::Object(criteria));
    Ok(report)
}

/// Human-readable list of spaces for details strings.
fn space_list(spaces: &[Space]) -> String {
    spaces.iter().map(|s| s.key()).collect::<Vec<_>>().join(", ")
}

fn parse_h(s: &str) -> HSpec {
    s.parse().expect("built-in profile parses")
}
