//! Acceptance criteria as named groups of report checks.
//!
//! Each criterion lists the checks that decide it together with the tolerance each
//! check must have been run at. A criterion passes only when every listed check is
//! present, passed, and used exactly the pinned tolerance, so a loosened constant
//! in [`super::tolerances`] shows up here as a failure rather than a silent pass.

use serde::Serialize;

use super::report::{Bound, Report};
use super::tolerances as tol;

/// `None` pins an exact (symbolic) check.
pub type PinnedCheck = (&'static str, Option<f64>);

#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: &'static [PinnedCheck],
}

pub const CRITERIA: [Criterion; 13] = [
    Criterion {
        id: 1,
        title: "structure constants: Jacobi, d² = 0, matrix commutators",
        checks: &[("algebra.structure_constants", None)],
    },
    Criterion {
        id: 2,
        title: "Ω in the E-basis: 16 terms, coefficients ±1, ±2, ±√3",
        checks: &[("perturb.omega_e_basis", None), ("perturb.omega_standard", None)],
    },
    Criterion {
        id: 3,
        title: "coframe pullbacks at 20 interior t",
        checks: &[("wolf.coframe_pullback", Some(tol::PULLBACK))],
    },
    Criterion { id: 4, title: "stabilizers at generic t, t = 0, t = T", checks: &[("wolf.stabilizers", None)] },
    Criterion {
        id: 5,
        title: "22 partitions screened to six; 200 constraint trials",
        checks: &[("perturb.partition_screen", None), ("perturb.constraint_trials", None)],
    },
    Criterion {
        id: 6,
        title: "U(1)-invariant perturbations are one-dimensional",
        checks: &[("perturb.invariant_perturbations", None)],
    },
    Criterion {
        id: 7,
        title: "quaternionic angle ¼ on degenerate orbits; formulas agree",
        checks: &[
            ("perturb.quaternionic_angle_orbit", Some(tol::ANGLE_ORBIT)),
            ("perturb.quaternionic_angle_formulas", None),
        ],
    },
    Criterion {
        id: 8,
        title: "closed perturbed 4-form; Killing obstruction; generalized Killing",
        checks: &[
            ("harmonic.closedness", None),
            ("harmonic.killing_obstruction", None),
            ("harmonic.generalized_killing", None),
        ],
    },
    Criterion {
        id: 9,
        title: "Ricci tensor, scalar curvature, log-sine family, finite differences",
        checks: &[
            ("curvature.g2_unperturbed_ricci", Some(tol::EINSTEIN)),
            ("curvature.g2_ricci_table", Some(tol::RICCI_TABLE)),
            ("curvature.scalar_formula", Some(tol::RICCI_TABLE)),
            ("curvature.logsin_constant_scalar", Some(tol::RICCI_TABLE)),
            ("curvature.fd_oracle", Some(tol::FD_ORACLE)),
        ],
    },
    Criterion {
        id: 10,
        title: "perturbations of HP(2) and Gr2(C4) are isometric and Einstein",
        checks: &[
            ("harmonic.killing_triviality", Some(tol::KILLING_TRIVIALITY)),
            ("curvature.isometric_perturbations_einstein", Some(tol::EINSTEIN)),
        ],
    },
    Criterion {
        id: 11,
        title: "orbit volume ∝ sin³(2t)cos²(2t) for every h",
        checks: &[("curvature.orbit_volume", Some(tol::ORBIT_VOLUME))],
    },
    Criterion {
        id: 12,
        title: "cohomology restriction to CP(2)",
        checks: &[("harmonic.cohomology_restriction", None)],
    },
    Criterion { id: 13, title: "PSU(3): dγ = 0 and d*γ = 0", checks: &[("harmonic.psu3_gamma", None)] },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Some checks did not run (restricted scope or spaces); those that ran passed.
    Incomplete,
    /// None of the criterion's checks ran.
    NotRun,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub verdict: Verdict,
    pub problems: Vec<String>,
}

impl CriterionOutcome {
    /// One line: `[PASS] 09 title` followed by any problems.
    pub fn line(&self) -> String {
        let tag = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Incomplete => "PART",
            Verdict::NotRun => "SKIP",
        };
        let mut s = format!("[{tag}] {:02} {}", self.id, self.title);
        if !self.problems.is_empty() {
            s.push_str(" — ");
            s.push_str(&self.problems.join("; "));
        }
        s
    }
}

fn pinned_matches(actual: &Bound, pinned: Option<f64>, tol_scale: f64) -> bool {
    match (actual, pinned) {
        (Bound::Exact(_), None) => true,
        (Bound::Value(v), Some(p)) => *v == p * tol_scale,
        _ => false,
    }
}

/// Evaluates every criterion against a report whose tolerances were scaled by `tol_scale`.
pub fn evaluate(report: &Report, tol_scale: f64) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|c| {
            let mut problems = Vec::new();
            let mut present = 0;
            let mut missing = Vec::new();
            for &(name, pinned) in c.checks {
                match report.checks.iter().find(|r| r.name == name) {
                    None => missing.push(name),
                    Some(r) => {
                        present += 1;
                        if !r.passed() {
                            problems.push(format!("{name} failed: {}", r.details));
                        }
                        if !pinned_matches(&r.tolerance, pinned, tol_scale) {
                            problems.push(format!("{name} ran at tolerance {:?}, pinned {:?}", r.tolerance, pinned));
                        }
                    }
                }
            }
            let verdict = if present == 0 {
                Verdict::NotRun
            } else if !problems.is_empty() {
                Verdict::Fail
            } else if !missing.is_empty() {
                problems.push(format!("not run: {}", missing.join(", ")));
                Verdict::Incomplete
            } else {
                Verdict::Pass
            };
            CriterionOutcome { id: c.id, title: c.title, verdict, problems }
        })
        .collect()
}
