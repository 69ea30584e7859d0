//! Verification suites, the JSON report and the command-line driver.

pub mod acceptance;
mod args;
pub mod report;
pub mod suites;
pub mod tolerances;

pub use args::{run, Cli, Command};
pub use report::{Bound, CheckResult, Report, Status};
pub use suites::{run_suite, Scope, SuiteConfig};

use thiserror::Error;

use crate::curvature::CurvatureError;
use crate::harmonic::HarmonicError;

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
}
