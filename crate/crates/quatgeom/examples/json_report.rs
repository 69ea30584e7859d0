//! Run one verification suite programmatically and emit its canonical JSON report.

use quatgeom::cli::acceptance::{evaluate, Verdict};
use quatgeom::cli::{run_suite, Scope, SuiteConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SuiteConfig { seed: 7, ..SuiteConfig::default() };
    let report = run_suite(Scope::Wolf, &config)?;
    for outcome in evaluate(&report, config.tol_scale).iter().filter(|o| o.verdict != Verdict::NotRun) {
        eprintln!("{}", outcome.line());
    }
    print!("{}", report.to_canonical_json()?);
    Ok(())
}
