//! Randomized algebraic and geometric invariants.

use nalgebra::DMatrix;
use proptest::prelude::*;

use quatgeom::cli::report::{Bound, CheckResult, Report};
use quatgeom::curvature::{frame_covariance_defect, MetricFamily};
use quatgeom::exterior::{Endo, Form};
use quatgeom::harmonic::{HSpec, Normalization};
use quatgeom::scalars::{rat, QuadExt, Rational, Ring, TrigPoly};
use quatgeom::wolf::{Space, WolfSpaceModel};

const RANK: usize = 6;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn quadext() -> impl Strategy<Value = QuadExt> {
    (small_rational(), small_rational(), small_rational(), small_rational())
        .prop_map(|(a, b, c, d)| QuadExt::new(a, b, c, d))
}

/// A homogeneous form of degree `p` on `RANK` generators with up to four terms.
fn form_of_degree(p: usize) -> impl Strategy<Value = Form<QuadExt>> {
    let mask = proptest::sample::subsequence((0..RANK).collect::<Vec<_>>(), p);
    proptest::collection::vec((mask, -3i64..=3), 1..=4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Form::zero(RANK), |acc, (idx, c)| acc.add(&Form::from_indices(RANK, &idx, QuadExt::int(c))))
    })
}

fn cos_series() -> impl Strategy<Value = TrigPoly> {
    proptest::collection::vec((1u32..=6, quadext()), 1..=3)
        .prop_map(|terms| terms.into_iter().fold(TrigPoly::zero(), |acc, (k, c)| acc.add(&TrigPoly::cos(2 * k, c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadext_is_a_field(x in quadext(), y in quadext(), z in quadext()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.checked_inv().unwrap(), QuadExt::int(1));
        }
        let product = (&x * &y).to_f64();
        prop_assert!((product - x.to_f64() * y.to_f64()).abs() <= 1e-9 * (1.0 + product.abs()));
    }

    #[test]
    fn trig_products_and_derivatives_evaluate_pointwise(a in cos_series(), b in cos_series(), t in 0.0f64..1.6) {
        let lhs = a.mul(&b).eval(t);
        prop_assert!((lhs - a.eval(t) * b.eval(t)).abs() <= 1e-9 * (1.0 + lhs.abs()));
        let jet = a.taylor(t, 2);
        prop_assert!((jet[0] - a.eval(t)).abs() <= 1e-9 * (1.0 + jet[0].abs()));
        prop_assert!((jet[1] - a.deriv().eval(t)).abs() <= 1e-9 * (1.0 + jet[1].abs()));
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative(
        (p, alpha) in (1usize..=3).prop_flat_map(|p| (Just(p), form_of_degree(p))),
        (q, beta) in (1usize..=2).prop_flat_map(|q| (Just(q), form_of_degree(q))),
        gamma in form_of_degree(1),
    ) {
        let sign = if (p * q) % 2 == 0 { QuadExt::int(1) } else { QuadExt::int(-1) };
        prop_assert_eq!(alpha.wedge(&beta), beta.wedge(&alpha).scale(&sign));
        prop_assert_eq!(alpha.wedge(&beta).wedge(&gamma), alpha.wedge(&beta.wedge(&gamma)));
    }

    #[test]
    fn contraction_is_an_antiderivation(
        (p, alpha) in (1usize..=3).prop_flat_map(|p| (Just(p), form_of_degree(p))),
        beta in form_of_degree(2),
        i in 0..RANK,
    ) {
        let sign = if p % 2 == 0 { QuadExt::int(1) } else { QuadExt::int(-1) };
        let lhs = alpha.wedge(&beta).contract(i);
        let rhs = alpha.contract(i).wedge(&beta).add(&alpha.wedge(&beta.contract(i)).scale(&sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_is_a_derivation(
        entries in proptest::collection::vec(-2i64..=2, RANK * RANK),
        alpha in form_of_degree(2),
        beta in form_of_degree(2),
    ) {
        let rows = entries.chunks(RANK).map(|r| r.iter().map(|&c| QuadExt::int(c)).collect()).collect();
        let a = Endo::from_rows(rows);
        let lhs = a.rho(&alpha.wedge(&beta));
        let rhs = a.rho(&alpha).wedge(&beta).add(&alpha.wedge(&a.rho(&beta)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn profile_specs_round_trip_through_text(
        terms in proptest::collection::vec((1u32..=8, small_rational()), 1..=3),
        c in small_rational(),
    ) {
        let cos = HSpec::CosSeries(terms.into_iter().map(|(k, c)| (2 * k, c)).collect());
        prop_assert_eq!(cos.to_string().parse::<HSpec>().unwrap(), cos);
        let logsin = HSpec::LogSin2t(c);
        prop_assert_eq!(logsin.to_string().parse::<HSpec>().unwrap(), logsin);
    }

    #[test]
    fn reports_round_trip_byte_for_byte(
        values in proptest::collection::vec((any::<f64>().prop_filter("finite", |v| v.is_finite()), "[a-z]{1,8}"), 1..6),
        seed in any::<u64>(),
    ) {
        let checks = values
            .iter()
            .enumerate()
            .map(|(i, (v, name))| CheckResult::measured(&format!("{name}.{i}"), "anchor", v.abs(), 1e-6, true, format!("value {v}")))
            .collect();
        let report = Report::new(seed, checks, Default::default());
        let text = report.to_canonical_json().unwrap();
        prop_assert!(text.ends_with('\n'));
        let again = Report::from_json(&text).unwrap().to_canonical_json().unwrap();
        prop_assert_eq!(&text, &again);
        prop_assert!(report.checks.windows(2).all(|w| w[0].name <= w[1].name));
        prop_assert!(report.checks.iter().all(|c| matches!(c.tolerance, Bound::Value(_))));
    }
}

fn random_orthogonal(seed: &[f64]) -> DMatrix<f64> {
    DMatrix::from_iterator(8, 8, seed.iter().copied()).qr().q()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Ricci is a tensor: solving in a rotated orthonormal coframe gives the rotated answer.
    #[test]
    fn ricci_transforms_under_frame_rotation(
        c4 in (1i64..=4, 2i64..=8),
        c8 in (-4i64..=4, 2i64..=8),
        t in 0.15f64..0.6,
        entries in proptest::collection::vec(-1.0f64..1.0, 64),
    ) {
        let q = random_orthogonal(&entries);
        prop_assume!(q.determinant().abs() > 0.5);
        let h = HSpec::CosSeries(vec![(4, rat(c4.0, c4.1)), (8, rat(c8.0, c8.1))]);
        let mf = MetricFamily::new(&WolfSpaceModel::build(Space::G2So4), &h, Normalization::Unit).unwrap();
        prop_assert!(frame_covariance_defect(&mf, t, &q).unwrap() < 1e-8);
    }
}
