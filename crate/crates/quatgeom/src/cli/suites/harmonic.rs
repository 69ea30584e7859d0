use serde_json::json;

use crate::exterior::Form;
use crate::harmonic::{
    boundary_check, coclosedness, cohomology_restriction, generalized_killing, interior_samples, killing_obstruction,
    killing_triviality, perturbation_term, psu3_gamma, HSpec, Normalization,
};
use crate::wolf::{Space, WolfSpaceModel, COLS, DT};

use super::{parse_h, space_list, CliError, Findings, SuiteConfig, Task};
use crate::cli::report::CheckResult;
use crate::cli::tolerances;

pub(super) const TASKS: &[Task] =
    &[closedness, nilpotent_term, obstruction, generalized, boundary, restriction, triviality, gamma];

/// The built-in G₂/SO(4) profiles, plus the user's if it is a trigonometric polynomial
/// admissible there.
fn g2_profiles(config: &SuiteConfig) -> Vec<HSpec> {
    let mut hs: Vec<HSpec> = ["zero", "cos:4:1", "cos:4:1/2,8:1/8"].into_iter().map(parse_h).collect();
    if let Some(h) = &config.h {
        if h.is_polynomial() && h.admissible_for(Space::G2So4).is_ok() && !hs.contains(h) {
            hs.push(h.clone());
        }
    }
    hs
}

fn closedness(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = WolfSpaceModel::build(Space::G2So4);
    let mut failures = Vec::new();
    let mut star = serde_json::Map::new();
    for h in g2_profiles(config) {
        for norm in [Normalization::Unit, Normalization::Literal] {
            let c = coclosedness(&m, &h, norm)?;
            if !(c.closed && c.coframe_consistent && c.self_dual_standard) {
                failures.push(format!("{h} {norm:?}"));
            }
            star.insert(format!("{h} {norm:?}"), json!(c.star_closed));
        }
    }
    f.check(CheckResult::exact(
        "harmonic.closedness",
        "closed perturbations of the quaternion-Kähler 4-form on G2/SO(4)",
        failures.is_empty(),
        if failures.is_empty() {
            format!("dΩ̃ = 0 and Ω̃ = Ω(f̃) for {} profiles, both normalizations", star.len() / 2)
        } else {
            format!("not closed: {}", failures.join(", "))
        },
    ));
    f.record("star_closed", serde_json::Value::Object(star));
    Ok(f)
}

fn nilpotent_term(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let mut holds = true;
    for &s in &config.spaces {
        let m = WolfSpaceModel::build(s);
        for norm in [Normalization::Unit, Normalization::Literal] {
            let beta = perturbation_term(&m, norm)?;
            let dt = Form::basis(COLS, DT);
            let term = dt.wedge(&beta);
            holds &= !term.is_zero() && term.wedge(&term).is_zero();
        }
    }
    f.check(CheckResult::exact(
        "harmonic.perturbation_squares_to_zero",
        "dh ∧ (X ⨼ Ω) is a nilpotent perturbation",
        holds,
        format!("(dt∧β)∧(dt∧β) = 0 for {}", space_list(&config.spaces)),
    ));
    Ok(f)
}

fn obstruction(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut parts = Vec::new();
    let mut holds = true;
    for &s in &config.spaces {
        let r = killing_obstruction(&WolfSpaceModel::build(s));
        holds &= r.holds();
        parts.push(format!(
            "{s}: 𝓛Ω∧dt = 0 {}, orbit obstruction ≠ 0 {}",
            r.lie_wedge_dt_vanishes,
            !r.orbit_obstruction.is_zero()
        ));
    }
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "harmonic.killing_obstruction",
        "e⁸∧(∂t⨼Ω) is not closed on principal orbits",
        holds,
        parts.join("; "),
    ));
    Ok(f)
}

fn generalized(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut parts = Vec::new();
    let mut holds = true;
    for &s in &config.spaces {
        let r = generalized_killing(&WolfSpaceModel::build(s));
        holds &= r.condition_holds;
        if s == Space::G2So4 {
            holds &= r.norm_is_sin_squared() && !r.lie_derivative_vanishes;
        }
        parts.push(format!("{s}: ‖e₈‖² = {}, 𝓛Ω = 0 {}", r.norm_squared, r.lie_derivative_vanishes));
    }
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "harmonic.generalized_killing",
        "d(‖X‖²) ∧ 𝓛_XΩ = 0 for X = e₈",
        holds,
        parts.join("; "),
    ));
    Ok(f)
}

fn boundary(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = WolfSpaceModel::build(Space::G2So4);
    let expectations =
        [("zero", true), ("cos:4:1", true), ("cos:4:1/2,8:1/8", true), ("cos:2:1", false), ("logsin:1", false)];
    let mut failures = Vec::new();
    for (h, expected) in expectations {
        let r = boundary_check(&parse_h(h), &m)?;
        // Smooth extension and numerical continuity must agree with the expected verdict.
        if r.pass() != expected || r.numerically_continuous() != expected {
            failures.push(h.to_string());
        }
    }
    if let Some(h) = &config.h {
        let r = boundary_check(h, &m)?;
        f.record(
            "user_profile_boundary",
            json!({"h": h.to_string(), "pass": r.pass(), "continuous": r.numerically_continuous()}),
        );
    }
    f.check(CheckResult::exact(
        "harmonic.boundary_conditions",
        "h′ odd about both singular orbits",
        failures.is_empty(),
        if failures.is_empty() {
            "zero, cos 4t, ½cos 4t + ⅛cos 8t extend; cos 2t and log sin 2t do not".to_string()
        } else {
            format!("unexpected verdict for {}", failures.join(", "))
        },
    ));
    Ok(f)
}

fn restriction(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = WolfSpaceModel::build(Space::G2So4);
    let end = Space::G2So4.t_end_pi12();
    let mut holds = true;
    let mut multiple = None;
    for h in g2_profiles(config) {
        let start = cohomology_restriction(&m, &h, Normalization::Unit, 0)?;
        let far = cohomology_restriction(&m, &h, Normalization::Unit, end)?;
        holds &= start.holds() && far.perturbation_vanishes;
        multiple = start.volume_multiple.map(|c| c.to_string());
    }
    f.check(CheckResult::exact(
        "harmonic.cohomology_restriction",
        "Ω̃ and Ω_qK restrict to the same volume form of CP(2)",
        holds,
        format!(
            "(Ω̃ − Ω_qK)|CP(2) = 0, Ω_qK|CP(2) = {} · vol; perturbation also vanishes at t = T",
            multiple.as_deref().unwrap_or("?")
        ),
    ));
    f.record("cp2_volume_multiple", json!(multiple));
    Ok(f)
}

fn triviality(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let cases = [(Space::Hp2, vec!["cos:4:1/2,8:1/8", "cos:4:1"]), (Space::Gr2C4, vec!["cos:2:1", "cos:4:1/2,2:1/3"])];
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for (s, hs) in cases {
        if !config.includes(s) {
            continue;
        }
        let m = WolfSpaceModel::build(s);
        for h in hs {
            let r = killing_triviality(&m, &parse_h(h), &interior_samples(s, 20));
            worst = worst.max(r.max_defect);
            parts.push(format!("{s} {h}: {:.1e}", r.max_defect));
        }
    }
    if parts.is_empty() {
        return Ok(f);
    }
    let control = config.includes(Space::G2So4).then(|| {
        let m = WolfSpaceModel::build(Space::G2So4);
        killing_triviality(&m, &parse_h("cos:4:1/2,8:1/8"), &interior_samples(Space::G2So4, 20)).max_defect
    });
    if let Some(c) = control {
        parts.push(format!("control g2so4: {c:.2}"));
    }
    f.check(CheckResult::measured(
        "harmonic.killing_triviality",
        "on HP(2) and Gr2(C4) the perturbation is an equivariant isometry",
        worst,
        config.tol(tolerances::KILLING_TRIVIALITY),
        control.is_none_or(|c| c > tolerances::TRIVIALITY_CONTROL),
        format!("Gram defect at 20 t: {}", parts.join(", ")),
    ));
    Ok(f)
}

fn gamma(_: &SuiteConfig) -> Result<Findings, CliError> {
    let g = psu3_gamma();
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "harmonic.psu3_gamma",
        "γ = (1/6) Σ eⁱ ∧ deⁱ on SU(3)",
        g.holds(),
        format!("dγ = 0 {}, d*γ = 0 {}, totally antisymmetric {}", g.closed, g.coclosed, g.antisymmetric),
    ));
    Ok(f)
}
