//! The thirteen acceptance criteria, one line each.
//!
//! Runs the full verification suite once at unit tolerance scale and the default
//! seed, prints a `[PASS]`/`[FAIL]` line per criterion, and exits non-zero if any
//! criterion is not fully passed. Pinned tolerances live in `quatgeom::cli::tolerances`
//! and are cross-checked against every report entry by `quatgeom::cli::acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use quatgeom::cli::acceptance::{evaluate, Verdict, CRITERIA};
use quatgeom::cli::tolerances;
use quatgeom::cli::{run_suite, Scope, SuiteConfig};

/// The numeric tolerances the criteria are stated with.
const PINNED: [(&str, f64, f64); 7] = [
    ("coframe pullback", tolerances::PULLBACK, 1e-10),
    ("quaternionic angle", tolerances::ANGLE_ORBIT, 1e-9),
    ("Killing triviality", tolerances::KILLING_TRIVIALITY, 1e-10),
    ("Einstein deviation", tolerances::EINSTEIN, 1e-7),
    ("Ricci table and scalar", tolerances::RICCI_TABLE, 1e-6),
    ("finite-difference oracle", tolerances::FD_ORACLE, 1e-3),
    ("orbit volume", tolerances::ORBIT_VOLUME, 1e-9),
];

fn main() -> ExitCode {
    let mut ok = true;
    for (what, actual, pinned) in PINNED {
        if actual != pinned {
            println!("[FAIL] tolerance for {what} is {actual:e}, pinned at {pinned:e}");
            ok = false;
        }
    }

    let started = Instant::now();
    let config = SuiteConfig::default();
    let report = match run_suite(Scope::All, &config) {
        Ok(r) => r,
        Err(e) => {
            println!("[FAIL] suite did not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let outcomes = evaluate(&report, 1.0);
    assert_eq!(outcomes.len(), CRITERIA.len());
    println!("acceptance criteria (seed {}, tolerance scale 1):", config.seed);
    for outcome in &outcomes {
        println!("{}", outcome.line());
        ok &= outcome.verdict == Verdict::Pass;
    }
    for failed in report.failures() {
        println!("[FAIL] check {}: {}", failed.name, failed.details);
        ok = false;
    }
    println!(
        "{} of {} criteria passed; {} checks in {:.1?}",
        outcomes.iter().filter(|o| o.verdict == Verdict::Pass).count(),
        outcomes.len(),
        report.checks.len(),
        started.elapsed()
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
