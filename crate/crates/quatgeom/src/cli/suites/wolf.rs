use rayon::prelude::*;
use serde_json::json;

use crate::harmonic::interior_samples;
use crate::linalg;
use crate::wolf::{gr2_identification, isotropy_weights, OrbitPoint, Space, WolfSpaceModel};

use super::{space_list, CliError, Findings, SuiteConfig, Task};
use crate::cli::report::CheckResult;
use crate::cli::tolerances;

pub(super) const TASKS: &[Task] = &[model_invariants, coframe_pullback, stabilizers, isotropy, gr2_ends];

fn models(config: &SuiteConfig) -> Vec<WolfSpaceModel> {
    config.spaces.par_iter().map(|&s| WolfSpaceModel::build(s)).collect()
}

fn model_invariants(config: &SuiteConfig) -> Result<Findings, CliError> {
    let violations: Vec<String> = models(config)
        .iter()
        .flat_map(|m| m.invariant_violations().into_iter().map(move |v| format!("{}: {v}", m.space())))
        .collect();
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "wolf.model_invariants",
        "highest-root sp(1), centralizer and adapted coframe of each Wolf space",
        violations.is_empty(),
        if violations.is_empty() {
            format!("{}: all structural invariants hold", space_list(&config.spaces))
        } else {
            violations.join("; ")
        },
    ));
    Ok(f)
}

fn coframe_pullback(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for m in models(config) {
        let d = m.pullback_defect(&interior_samples(m.space(), 20));
        parts.push(format!("{} {d:.1e}", m.space()));
        worst = worst.max(d);
    }
    let mut f = Findings::default();
    f.check(CheckResult::measured(
        "wolf.coframe_pullback",
        "closed-form coframes along the normal geodesic",
        worst,
        config.tol(tolerances::PULLBACK),
        true,
        format!("Ad-pullback vs closed form at 20 interior t: {}", parts.join(", ")),
    ));
    Ok(f)
}

fn stabilizers(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut failures = Vec::new();
    for m in models(config) {
        for p in [OrbitPoint::Start, OrbitPoint::Generic, OrbitPoint::End] {
            let got = m.stabilizer_pi12(m.orbit_point_pi12(p));
            if !linalg::same_span(&got, &m.expected_stabilizer(p)) {
                failures.push(format!("{} {p:?}", m.space()));
            }
        }
    }
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "wolf.stabilizers",
        "isotropy algebras at the principal and singular orbits",
        failures.is_empty(),
        if failures.is_empty() {
            "span{e₁} generic; u(2) at t = 0; per-space stabilizer at t = T".to_string()
        } else {
            format!("mismatch at {}", failures.join(", "))
        },
    ));
    Ok(f)
}

fn isotropy(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut failures = Vec::new();
    for m in models(config) {
        let dims: Option<Vec<(u32, usize)>> =
            isotropy_weights(&m).map(|ws| ws.iter().map(|w| (w.weight, w.dim())).collect());
        if dims != Some(vec![(0, 2), (1, 4), (2, 2)]) {
            failures.push(format!("{}: {dims:?}", m.space()));
        }
    }
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "wolf.isotropy_weights",
        "U(1)-weights of the principal isotropy on the tangent space",
        failures.is_empty(),
        if failures.is_empty() { "weights 0², 1⁴, 2² in every space".to_string() } else { failures.join("; ") },
    ));
    Ok(f)
}

fn gr2_ends(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::Gr2C4) {
        return Ok(f);
    }
    let r = gr2_identification();
    f.check(CheckResult::exact(
        "wolf.gr2_two_ends",
        "the two singular orbits of Gr2(C4) are exchanged by an automorphism",
        r.holds(),
        format!("{r:?}"),
    ));
    f.record("gr2_identification", json!(r.holds()));
    Ok(f)
}
