use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::perturb::constraint::{expected_generator, proportional};
use crate::perturb::omega::{displayed_omega_terms, monomial_count};
use crate::perturb::quaternion::{
    act, chart_identity_holds, degenerate_pair_defect, model_degenerate_pair, random_sp2sp1_group,
};
use crate::perturb::{
    affine_chart_angle, angle_by_search, constraint_trials, expected_survivors, invariant_perturbation_space,
    omega_display_diff, omega_in_e_basis, omega_standard, quaternionic_angle, screen_all, so3_stabilizer_check, Quat,
    QuatVector,
};
use crate::scalars::{rat, QuadExt, Rational, ToFloat};

use super::{CliError, Findings, SuiteConfig, Task};
use crate::cli::report::CheckResult;
use crate::cli::tolerances;

pub(super) const TASKS: &[Task] = &[
    omega_shape,
    omega_e_basis,
    stabilizer,
    partition_screen,
    randomized_constraints,
    invariant_perturbations,
    angle_orbit,
    angle_formulas,
    angle_search,
];

const ANGLE_SAMPLES: usize = 500;
const FORMULA_SAMPLES: usize = 100;
const SEARCH_SAMPLES: usize = 5;
const TRIALS_PER_SIDE: usize = 100;

fn omega_shape(_: &SuiteConfig) -> Result<Findings, CliError> {
    let om = omega_standard();
    let top = om.wedge(&om);
    let coefficient = om.coeff_of(&[0, 1, 2, 3]);
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.omega_standard",
        "Ω = ½(ω₁² + ω₂² + ω₃²) on ℍ²",
        monomial_count(&om) == 14 && !top.is_zero(),
        format!("{} monomials, dx¹²³⁴ coefficient {coefficient}, Ω∧Ω ≠ 0", monomial_count(&om)),
    ));
    f.record("omega_dx1234_coefficient", coefficient.to_string());
    Ok(f)
}

fn omega_e_basis(_: &SuiteConfig) -> Result<Findings, CliError> {
    let diff = omega_display_diff();
    let om = omega_in_e_basis();
    let allowed: Vec<QuadExt> = [1, 2]
        .iter()
        .flat_map(|&n| [QuadExt::int(n), QuadExt::int(-n)])
        .chain([QuadExt::sqrt3(), -&QuadExt::sqrt3()])
        .collect();
    let coefficients_ok = om.terms().all(|(_, c)| allowed.contains(c));
    let terms = monomial_count(&om);
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.omega_e_basis",
        "Ω in the adapted basis E¹ … E⁸",
        diff.is_empty() && terms == 16 && terms == displayed_omega_terms().len() && coefficients_ok,
        format!("{terms} terms, coefficients in {{±1, ±2, ±√3}}: {coefficients_ok}, mismatches: {}", diff.len()),
    ));
    Ok(f)
}

fn stabilizer(_: &SuiteConfig) -> Result<Findings, CliError> {
    let r = so3_stabilizer_check();
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.so3_stabilizer",
        "so(3) ⊂ sp(2)sp(1) fixing the splitting S² ⊕ S⁴",
        r.holds(),
        format!(
            "stab(Ω) has dim {}, Casimirs {:?}/{:?}",
            r.omega_stabilizer_dim,
            r.casimir_s2.as_ref().map(ToString::to_string),
            r.casimir_s4.as_ref().map(ToString::to_string)
        ),
    ));
    Ok(f)
}

fn partition_screen(_: &SuiteConfig) -> Result<Findings, CliError> {
    let results = screen_all();
    let survivors: Vec<_> = results.iter().filter(|r| !r.excluded()).map(|r| r.partition.clone()).collect();
    let oracle_ok = results.iter().all(|r| r.kernel_dim == r.kernel_dim_oracle);
    let verdicts: Vec<String> = results
        .iter()
        .map(|r| format!("{}:{}{}", r.partition, r.kernel_dim, if r.excluded() { "x" } else { "✓" }))
        .collect();
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.partition_screen",
        "classification of nilpotent perturbations by Jordan type",
        results.len() == 22 && survivors == expected_survivors() && oracle_ok,
        format!(
            "{} partitions, {} survive; dim K (✓ kept, x excluded): {}",
            results.len(),
            survivors.len(),
            verdicts.join(" ")
        ),
    ));
    let table: serde_json::Map<String, serde_json::Value> = results
        .iter()
        .map(|r| (r.partition.to_string(), json!({"kernel_dim": r.kernel_dim, "excluded": r.excluded()})))
        .collect();
    f.record("partition_kernel_dims", serde_json::Value::Object(table));
    Ok(f)
}

fn randomized_constraints(config: &SuiteConfig) -> Result<Findings, CliError> {
    let t = constraint_trials(config.seed, TRIALS_PER_SIDE);
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.constraint_trials",
        "β-constraint ⟺ ρ(A)²Ω = 0, and A² = 0 on solutions",
        t.holds() && t.satisfying == TRIALS_PER_SIDE && t.violating == TRIALS_PER_SIDE,
        format!(
            "{} satisfying + {} violating samples, {} equivalence failures, {} A² failures, {} of rank 3",
            t.satisfying, t.violating, t.equivalence_failures, t.square_failures, t.rank_three_samples
        ),
    ));
    Ok(f)
}

fn invariant_perturbations(_: &SuiteConfig) -> Result<Findings, CliError> {
    let p = invariant_perturbation_space();
    let generator_ok = p.forms.first().is_some_and(|g| proportional(g, &expected_generator()));
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.invariant_perturbations",
        "U(1)-invariant nilpotent perturbations",
        p.dim() == 1 && p.invariant && generator_ok,
        format!("dimension {}, spanned by E⁸∧(E₁⨼Ω): {generator_ok}", p.dim()),
    ));
    Ok(f)
}

fn angle_orbit(config: &SuiteConfig) -> Result<Findings, CliError> {
    let (v, w) = model_degenerate_pair();
    let v: Vec<f64> = v.iter().map(ToFloat::to_f64).collect();
    let w: Vec<f64> = w.iter().map(ToFloat::to_f64).collect();
    let mut rng = config.rng(71);
    let groups: Vec<_> = (0..ANGLE_SAMPLES).map(|_| random_sp2sp1_group(&mut rng)).collect();
    let (angle_err, degeneracy) = groups
        .par_iter()
        .map(|g| {
            let (gv, gw) = (act(g, &v), act(g, &w));
            let q = quaternionic_angle(&QuatVector::from_real(&gv), &QuatVector::from_real(&gw)).unwrap_or(f64::NAN);
            ((q - 0.25).abs(), degenerate_pair_defect(&gv, &gw))
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    let tol = config.tol(tolerances::ANGLE_ORBIT);
    let mut f = Findings::default();
    f.check(CheckResult::measured(
        "perturb.quaternionic_angle_orbit",
        "degenerate pairs have quaternionic angle ¼",
        angle_err,
        tol,
        degeneracy <= tol,
        format!("{ANGLE_SAMPLES} Sp(2)Sp(1) images of the model pair; largest ((v∧w)⨼Ω)³ coefficient {degeneracy:.1e}"),
    ));
    Ok(f)
}

fn random_quat(rng: &mut ChaCha8Rng) -> Quat<Rational> {
    let mut c = || rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    Quat::new(c(), c(), c(), c())
}

fn angle_formulas(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut rng = config.rng(72);
    let one = Quat::real(rat(1, 1));
    let mut failures = 0;
    for _ in 0..FORMULA_SAMPLES {
        let (p, q) = (random_quat(&mut rng), random_quat(&mut rng));
        let hermitian =
            quaternionic_angle(&QuatVector::new(one.clone(), p.clone()), &QuatVector::new(one.clone(), q.clone()));
        let agree = hermitian.as_ref().is_ok_and(|h| *h == affine_chart_angle(&p, &q));
        if !(agree && chart_identity_holds(&p, &q)) {
            failures += 1;
        }
    }
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "perturb.quaternionic_angle_formulas",
        "the Hermitian and affine-chart expressions for Q",
        failures == 0,
        format!("{FORMULA_SAMPLES} random rational pairs [1:p], [1:q]; {failures} disagreements"),
    ));
    Ok(f)
}

fn angle_search(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut rng = config.rng(73);
    let mut pairs = Vec::new();
    for _ in 0..SEARCH_SAMPLES {
        let mut x = || (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>();
        pairs.push((QuatVector::from_real(&x()), QuatVector::from_real(&x())));
    }
    let worst = pairs
        .par_iter()
        .map(|(v, w)| {
            let exact = quaternionic_angle(v, w).unwrap_or(f64::NAN);
            (angle_by_search(v, w, 22) - exact).abs()
        })
        .reduce(|| 0.0, f64::max);
    let mut f = Findings::default();
    f.check(CheckResult::measured(
        "perturb.quaternionic_angle_search",
        "Q as a maximum over unit quaternions",
        worst,
        config.tol(tolerances::ANGLE_SEARCH),
        true,
        format!("{SEARCH_SAMPLES} random pairs, Hopf grid 22³ + pattern search"),
    ));
    Ok(f)
}
