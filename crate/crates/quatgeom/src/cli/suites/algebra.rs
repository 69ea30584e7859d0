use serde_json::json;

use crate::liealg::{build_g2, build_sp3, build_su3, build_su4, su3_from_matrices, InvariantComplex, G2_ROOT_PHASES};
use crate::scalars::QuadExt;

use super::{CliError, Findings, SuiteConfig, Task};
use crate::cli::report::CheckResult;

pub(super) const TASKS: &[Task] = &[structure_constants, su3_killing];

fn structure_constants(_: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let mut failures = Vec::new();
    let mut multiples = serde_json::Map::new();
    for alg in [build_su3(), build_sp3(), build_su4(), build_g2()] {
        let name = alg.name().to_string();
        if alg.jacobi_violations() != 0 {
            failures.push(format!("{name}: Jacobi"));
        }
        if alg.antisymmetry_violations() != 0 {
            failures.push(format!("{name}: antisymmetry"));
        }
        if alg.realization_violations() != Some(0) {
            failures.push(format!("{name}: matrix commutators"));
        }
        if alg.d_squared_violations() != 0 {
            failures.push(format!("{name}: d² ≠ 0"));
        }
        multiples.insert(name, json!(alg.killing_trace_multiple().map(|m| m.to_string())));
    }
    // Cross-check the sparse d² against the form engine where the rank allows it.
    let su3_complex = InvariantComplex::new(build_su3(), false);
    if !(0..8).all(|k| su3_complex.d(su3_complex.d_generator(k)).is_zero()) {
        failures.push("su3: d² ≠ 0 in the form engine".into());
    }
    let same_as_matrices = build_su3().structure() == su3_from_matrices().structure();
    if !same_as_matrices {
        failures.push("su3: closed-form constants differ from matrix commutators".into());
    }
    let details = if failures.is_empty() {
        "su3, sp3, su4, g2: Jacobi, antisymmetry, matrix commutators and d² = 0 hold exactly".to_string()
    } else {
        failures.join("; ")
    };
    f.check(CheckResult::exact(
        "algebra.structure_constants",
        "su(3) structure equations; sp(3), su(4), g2 root bases",
        failures.is_empty(),
        details,
    ));
    f.record("killing_trace_multiple", serde_json::Value::Object(multiples));
    f.record("g2_root_phases", json!(G2_ROOT_PHASES.to_vec()));
    Ok(f)
}

fn su3_killing(_: &SuiteConfig) -> Result<Findings, CliError> {
    let alg = build_su3();
    let k = alg.killing_matrix();
    let holds = (0..8).all(|i| (0..8).all(|j| k[i][j] == QuadExt::int(if i == j { -12 } else { 0 })));
    let mut f = Findings::default();
    f.check(CheckResult::exact("algebra.su3_killing_form", "Killing form of su(3)", holds, "κ = −12·Id on e₁ … e₈"));
    Ok(f)
}
