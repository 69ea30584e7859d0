use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::curvature::{
    bianchi_defect, curvature, fd_ricci, frame_covariance_defect, g2_tabulated_ricci, identify_signed_permutation,
    levi_civita, logsin_scalar_curvature, perturbed_orbit_volume_density, tabulated_trace_identity, CoframeJet, JetMat,
    MetricFamily, FD_STEP,
};
use crate::harmonic::{interior_samples, HSpec, Normalization};
use crate::liealg::build_su3;
use crate::scalars::rat;
use crate::wolf::{orbit_volume_exact, Space, WolfSpaceModel};

use super::{parse_h, CliError, Findings, SuiteConfig, Task};
use crate::cli::report::CheckResult;
use crate::cli::tolerances;

pub(super) const TASKS: &[Task] = &[
    bi_invariant,
    solver_contract,
    einstein_unperturbed,
    g2_table,
    scalar_formula,
    trace_identity,
    logsin_scalar,
    fd_oracle,
    bianchi,
    frame_covariance,
    non_einstein,
    isometric_einstein,
    orbit_volume,
    frame_identification,
    user_profile,
];

const TABLE_PROFILES: [&str; 3] = ["cos:4:1/2", "cos:4:1/2,8:1/8", "cos:8:1/3,12:-1/5"];
const TABLE_SAMPLES: usize = 10;
const LOGSIN_SAMPLES: usize = 5;
const RANDOM_CASES: usize = 5;

fn g2() -> WolfSpaceModel {
    WolfSpaceModel::build(Space::G2So4)
}

fn unit_metric(model: &WolfSpaceModel, h: &HSpec) -> Result<MetricFamily, CliError> {
    Ok(MetricFamily::new(model, h, Normalization::Unit)?)
}

/// A random admissible cosine series on G₂/SO(4): frequencies 4 and 8.
fn random_profile(rng: &mut ChaCha8Rng) -> HSpec {
    let mut c = || rat(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(2..=8));
    HSpec::CosSeries(vec![(4, c()), (8, c())])
}

fn random_t(rng: &mut ChaCha8Rng, space: Space) -> f64 {
    rng.gen_range(0.1..space.t_end() - 0.1)
}

fn random_orthogonal(rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    DMatrix::from_fn(8, 8, |_, _| rng.gen_range(-1.0..1.0)).qr().q()
}

fn bi_invariant(config: &SuiteConfig) -> Result<Findings, CliError> {
    let su3 = build_su3();
    let c = su3.float_structure();
    let cf = CoframeJet::new(JetMat::constant(DMatrix::identity(8, 8)), vec![], c.clone(), 8, false);
    let conn = levi_civita(&cf)?;
    let curv = curvature(&cf, &conn)?;
    let mut worst = 0.0f64;
    for a in 0..8 {
        for b in 0..8 {
            for i in 0..8 {
                worst = worst.max((conn.gamma(i, b, a) - 0.5 * c[(a * 8 + b) * 8 + i]).abs());
            }
        }
    }
    let ricci_err = (&curv.ricci - DMatrix::identity(8, 8) * 3.0).amax();
    let mut f = Findings::default();
    f.check(CheckResult::measured(
        "curvature.bi_invariant_oracle",
        "bi-invariant metric on SU(3): ∇_XY = ½[X, Y]",
        worst.max(ricci_err),
        config.tol(tolerances::BI_INVARIANT),
        conn.rank == conn.unknowns,
        format!("connection error {worst:.1e}, |Ric − 3·Id| {ricci_err:.1e}"),
    ));
    Ok(f)
}

fn solver_contract(config: &SuiteConfig) -> Result<Findings, CliError> {
    let m = g2();
    let mut rng = config.rng(91);
    let mut cases = vec![(HSpec::Zero, 0.3)];
    cases.extend((0..RANDOM_CASES).map(|_| (random_profile(&mut rng), random_t(&mut rng, Space::G2So4))));
    let mut worst = 0.0f64;
    let mut side = true;
    for (h, t) in &cases {
        let r = unit_metric(&m, h)?.ricci_at(*t)?;
        worst = worst.max(r.structure_residual);
        side &= r.rank == r.unknowns
            && r.antisymmetry_defect == 0.0
            && r.basic_defect < config.tol(tolerances::STRUCTURE_RESIDUAL);
    }
    let mut f = Findings::default();
    f.check(CheckResult::measured(
        "curvature.solver_contract",
        "first structure equation in the invariant complex",
        worst,
        config.tol(tolerances::STRUCTURE_RESIDUAL),
        side,
        format!("{} cases on g2so4: full rank 252/252, exact antisymmetry, basic curvature", cases.len()),
    ));
    Ok(f)
}

fn einstein_unperturbed(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let mut worst = 0.0f64;
    let mut g2_err = 0.0f64;
    let mut constants = serde_json::Map::new();
    for &s in &config.spaces {
        let mf = MetricFamily::unperturbed(&WolfSpaceModel::build(s));
        let reports: Vec<_> =
            interior_samples(s, TABLE_SAMPLES).par_iter().map(|&t| mf.ricci_at(t)).collect::<Result<_, _>>()?;
        for r in &reports {
            worst = worst.max(r.einstein_deviation);
            if s == Space::G2So4 {
                g2_err = g2_err.max((&r.ricci - DMatrix::identity(8, 8) * 8.0).amax()).max((r.scalar - 64.0).abs());
            }
        }
        constants.insert(s.key().into(), json!(reports[0].scalar / 8.0));
    }
    let constant_text: Vec<String> = constants.iter().map(|(k, v)| format!("{k} {v}")).collect();
    f.check(CheckResult::measured(
        "curvature.einstein_unperturbed",
        "the Wolf spaces are Einstein",
        worst,
        config.tol(tolerances::EINSTEIN),
        true,
        format!("Ric = λ·Id at {TABLE_SAMPLES} t; λ: {}", constant_text.join(", ")),
    ));
    if config.includes(Space::G2So4) {
        f.check(CheckResult::measured(
            "curvature.g2_unperturbed_ricci",
            "Ricci tensor with h = 0: diagonal entries 8, s = 64",
            g2_err,
            config.tol(tolerances::EINSTEIN),
            true,
            format!("max(|Ric − 8·Id|, |s − 64|) over {TABLE_SAMPLES} t"),
        ));
    }
    f.record("einstein_constants", serde_json::Value::Object(constants));
    Ok(f)
}

/// Largest entrywise difference to the tabulated matrix over the built-in profiles.
fn table_errors(config: &SuiteConfig) -> Result<(f64, f64), CliError> {
    let m = g2();
    let ts = interior_samples(Space::G2So4, TABLE_SAMPLES);
    let mut ricci_err = 0.0f64;
    let mut scalar_err = 0.0f64;
    let mut hs: Vec<HSpec> = TABLE_PROFILES.into_iter().map(parse_h).collect();
    if let Some(h) = config.h.as_ref().filter(|h| h.admissible_for(Space::G2So4).is_ok()) {
        hs.push(h.clone());
    }
    for h in hs {
        let mf = unit_metric(&m, &h)?;
        for &t in &ts {
            let r = mf.ricci_at(t)?;
            let jet = h.derivative_taylor(t, 2);
            let table = g2_tabulated_ricci(jet[0], jet[1], t);
            ricci_err = ricci_err.max((&r.ricci - &table).amax());
            let tan = (2.0 * t).tan();
            scalar_err = scalar_err.max((r.scalar - (64.0 - 4.0 / 3.0 * tan * tan * jet[0] * jet[0])).abs());
        }
    }
    Ok((ricci_err, scalar_err))
}

fn g2_table(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let (ricci_err, _) = table_errors(config)?;
    f.check(CheckResult::measured(
        "curvature.g2_ricci_table",
        "the Ricci tensor of the perturbed G2/SO(4) metric",
        ricci_err,
        config.tol(tolerances::RICCI_TABLE),
        true,
        format!(
            "all 64 entries, {} profiles × {TABLE_SAMPLES} t",
            TABLE_PROFILES.len() + usize::from(config.h.is_some())
        ),
    ));
    Ok(f)
}

fn scalar_formula(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let (_, mut scalar_err) = table_errors(config)?;
    // h = ½cos 4t at t = π/8: tan²(π/4) = 1 and h′ = −2, so s = 64 − 16/3 = 176/3.
    let at_pi8 = unit_metric(&g2(), &parse_h("cos:4:1/2"))?.ricci_at(std::f64::consts::PI / 8.0)?.scalar;
    scalar_err = scalar_err.max((at_pi8 - 176.0 / 3.0).abs());
    f.check(CheckResult::measured(
        "curvature.scalar_formula",
        "s = 64 − (4/3)·tan²(2t)·h′(t)²",
        scalar_err,
        config.tol(tolerances::RICCI_TABLE),
        true,
        format!("built-in profiles at {TABLE_SAMPLES} t; s(π/8) = {at_pi8:.9} for ½cos 4t (176/3)"),
    ));
    Ok(f)
}

fn trace_identity(_: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    f.check(CheckResult::exact(
        "curvature.table_trace_identity",
        "trace of the tabulated Ricci tensor equals the scalar formula",
        tabulated_trace_identity(),
        "diagonal tan²·h′² coefficients sum to −4/3 over ℚ",
    ));
    Ok(f)
}

fn logsin_scalar(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = g2();
    let ts = interior_samples(Space::G2So4, LOGSIN_SAMPLES);
    let mut worst = 0.0f64;
    for (spec, c) in [("logsin:1/2", 0.5), ("logsin:1", 1.0), ("logsin:-3/2", -1.5)] {
        let mf = unit_metric(&m, &parse_h(spec))?;
        for &t in &ts {
            worst = worst.max((mf.ricci_at(t)?.scalar - logsin_scalar_curvature(c)).abs());
        }
    }
    f.check(CheckResult::measured(
        "curvature.logsin_constant_scalar",
        "h = c·log sin 2t gives constant scalar curvature",
        worst,
        config.tol(tolerances::RICCI_TABLE),
        true,
        format!("s = 64 − 16c²/3 for c ∈ {{½, 1, −3/2}} at {LOGSIN_SAMPLES} t"),
    ));
    Ok(f)
}

fn fd_oracle(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = g2();
    let mut rng = config.rng(92);
    let mut cases = vec![(HSpec::Zero, 0.3), (parse_h("logsin:1/2"), 0.4)];
    cases.extend((0..RANDOM_CASES).map(|_| (random_profile(&mut rng), random_t(&mut rng, Space::G2So4))));
    let errors: Vec<f64> = cases
        .par_iter()
        .map(|(h, t)| -> Result<f64, CliError> {
            let mf = unit_metric(&m, h)?;
            Ok((fd_ricci(&mf, *t, FD_STEP)? - mf.ricci_at(*t)?.ricci).amax())
        })
        .collect::<Result<_, _>>()?;
    let worst = errors.iter().copied().fold(0.0, f64::max);
    f.check(CheckResult::measured(
        "curvature.fd_oracle",
        "independent finite-difference Ricci tensor in exponential coordinates",
        worst,
        config.tol(tolerances::FD_ORACLE),
        true,
        format!("{} (h, t) cases incl. h = 0 at t = 0.3, step {FD_STEP:e}", cases.len()),
    ));
    Ok(f)
}

fn bianchi(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = g2();
    let mut rng = config.rng(93);
    let mut worst = 0.0f64;
    for _ in 0..RANDOM_CASES {
        let mf = unit_metric(&m, &random_profile(&mut rng))?;
        worst = worst.max(bianchi_defect(&mf, random_t(&mut rng, Space::G2So4), tolerances::BIANCHI_STEP)?);
    }
    f.check(CheckResult::measured(
        "curvature.contracted_bianchi",
        "div Ric = ½ ds",
        worst,
        config.tol(tolerances::BIANCHI),
        true,
        format!("{RANDOM_CASES} random admissible h on g2so4, t-step {:e}", tolerances::BIANCHI_STEP),
    ));
    Ok(f)
}

fn frame_covariance(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let mut rng = config.rng(94);
    let mut worst = 0.0f64;
    for &s in &config.spaces {
        let m = WolfSpaceModel::build(s);
        let h = if s == Space::G2So4 { random_profile(&mut rng) } else { HSpec::Zero };
        let mf = unit_metric(&m, &h)?;
        let q = random_orthogonal(&mut rng);
        worst = worst.max(frame_covariance_defect(&mf, random_t(&mut rng, s), &q)?);
    }
    f.check(CheckResult::measured(
        "curvature.frame_covariance",
        "the Ricci tensor transforms as a tensor under frame rotations",
        worst,
        config.tol(tolerances::FRAME_COVARIANCE),
        true,
        "second solver run in a randomly rotated orthonormal coframe",
    ));
    Ok(f)
}

fn non_einstein(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let dev = unit_metric(&g2(), &parse_h("cos:4:1/2"))?.ricci_at(std::f64::consts::PI / 8.0)?.einstein_deviation;
    f.check(CheckResult::exact(
        "curvature.g2_non_einstein",
        "the perturbed G2/SO(4) metrics are not Einstein",
        dev > tolerances::NON_EINSTEIN_MARGIN,
        format!("‖Ric − (s/8)·Id‖ = {dev:.6} at t = π/8 for ½cos 4t"),
    ));
    Ok(f)
}

fn isometric_einstein(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let cases = [(Space::Hp2, "cos:4:1/2,8:1/8"), (Space::Gr2C4, "cos:2:1"), (Space::Gr2C4, "cos:4:1/2,2:1/3")];
    let mut worst = 0.0f64;
    let mut used = Vec::new();
    for (s, h) in cases {
        if !config.includes(s) {
            continue;
        }
        let mf = unit_metric(&WolfSpaceModel::build(s), &parse_h(h))?;
        for t in interior_samples(s, TABLE_SAMPLES) {
            worst = worst.max(mf.ricci_at(t)?.einstein_deviation);
        }
        used.push(format!("{s} {h}"));
    }
    if used.is_empty() {
        return Ok(f);
    }
    f.check(CheckResult::measured(
        "curvature.isometric_perturbations_einstein",
        "perturbations on HP(2) and Gr2(C4) stay Einstein",
        worst,
        config.tol(tolerances::EINSTEIN),
        true,
        format!("{} at {TABLE_SAMPLES} t", used.join(", ")),
    ));
    Ok(f)
}

fn orbit_volume(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = g2();
    let exact = orbit_volume_exact(&m, 3, 2);
    let mut ratios = Vec::new();
    for h in ["zero", "cos:4:1/2", "cos:4:1/2,8:1/8", "logsin:1/2"] {
        let mf = unit_metric(&m, &parse_h(h))?;
        for t in interior_samples(Space::G2So4, 20) {
            let (s, c) = ((2.0 * t).sin(), (2.0 * t).cos());
            ratios.push(perturbed_orbit_volume_density(&mf, t) / (s.powi(3) * c.powi(2)));
        }
    }
    let reference = ratios[0];
    let spread = ratios.iter().map(|r| (r - reference).abs() / reference.abs()).fold(0.0, f64::max);
    f.check(CheckResult::measured(
        "curvature.orbit_volume",
        "orbit volume ∝ sin³(2t)cos²(2t) regardless of h",
        spread,
        config.tol(tolerances::ORBIT_VOLUME),
        exact.holds,
        format!(
            "det G = {} · sin⁶cos⁴ exactly; √det G / sin³cos² = {reference:.12} for 4 profiles × 20 t",
            exact.constant
        ),
    ));
    Ok(f)
}

fn frame_identification(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    if !config.includes(Space::G2So4) {
        return Ok(f);
    }
    let m = g2();
    let h = parse_h("cos:4:1/2,8:1/8");
    let t = 0.3;
    let jet = h.derivative_taylor(t, 2);
    let table = g2_tabulated_ricci(jet[0], jet[1], t);
    let mut summary = serde_json::Map::new();
    for norm in [Normalization::Unit, Normalization::Literal] {
        let ricci = MetricFamily::new(&m, &h, norm)?.ricci_at(t)?.ricci;
        let found = identify_signed_permutation(&ricci, &table, tolerances::FRAME_MATCH);
        summary.insert(
            format!("{norm:?}").to_lowercase(),
            json!(found.map(|p| json!({"perm": p.perm, "signs": p.signs, "identity": p.is_identity()}))),
        );
    }
    let unit_identity = summary["unit"]["identity"] == json!(true);
    f.check(CheckResult::recorded(
        "curvature.ricci_frame_identification",
        "frame ordering of the tabulated Ricci tensor",
        None,
        format!(
            "unit normalization matches by the identity: {unit_identity}; literal e₈-contraction matches by a signed permutation: {}",
            !summary["literal"].is_null()
        ),
    ));
    f.record("ricci_frame_identification", serde_json::Value::Object(summary));
    Ok(f)
}

fn user_profile(config: &SuiteConfig) -> Result<Findings, CliError> {
    let mut f = Findings::default();
    let Some(h) = &config.h else {
        return Ok(f);
    };
    for &s in &config.spaces {
        let m = WolfSpaceModel::build(s);
        if h.admissible_for(s).is_err() {
            f.check(CheckResult::recorded(
                &format!("curvature.user_profile.{s}"),
                "user-supplied profile",
                None,
                format!("{h} is not admissible on {s}"),
            ));
            continue;
        }
        let ts = config.ts.clone().unwrap_or_else(|| interior_samples(s, LOGSIN_SAMPLES));
        let mf = unit_metric(&m, h)?;
        let reports: Vec<_> = ts.iter().map(|&t| mf.ricci_at(t)).collect::<Result<_, _>>()?;
        let deviation = reports.iter().map(|r| r.einstein_deviation).fold(0.0, f64::max);
        let scalars: Vec<String> = reports.iter().map(|r| format!("s({:.4}) = {:.9}", r.t, r.scalar)).collect();
        f.check(CheckResult::recorded(
            &format!("curvature.user_profile.{s}"),
            "user-supplied profile",
            Some(deviation),
            format!("{h}: max Einstein deviation {deviation:.6e}; {}", scalars.join(", ")),
        ));
    }
    Ok(f)
}
