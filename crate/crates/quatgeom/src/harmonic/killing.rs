use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::exterior::{hodge_star, Form};
use crate::liealg::{ad_exp, build_su3, InvariantComplex};
use crate::scalars::{QuadExt, TrigPoly};
use crate::wolf::{Space, WolfSpaceModel, COLS, DT};

use super::forms::{perturbation_term, qk_four_form, Normalization};
use super::{HSpec, HarmonicError};

fn e8_vector() -> Vec<QuadExt> {
    let mut v = vec![QuadExt::int(0); 8];
    v[7] = QuadExt::int(1);
    v
}

/// Why `e₈` cannot simply be used to deform `Ω_qK` by a diffeomorphism-free formula.
#[derive(Clone, Debug, PartialEq)]
pub struct KillingObstruction {
    /// `𝓛_{e₈}Ω_qK ∧ dt = 0`.
    pub lie_wedge_dt_vanishes: bool,
    /// `d(e⁸ ∧ (∂t ⨼ Ω_qK))` with all `dt` monomials dropped.
    pub orbit_obstruction: Form<TrigPoly>,
    /// The same with `e⁸` replaced by `e¹`.
    pub control_obstruction: Form<TrigPoly>,
}

impl KillingObstruction {
    pub fn holds(&self) -> bool {
        self.lie_wedge_dt_vanishes
            && !self.orbit_obstruction.is_zero()
            && self.control_obstruction != self.orbit_obstruction
    }
}

pub fn killing_obstruction(model: &WolfSpaceModel) -> KillingObstruction {
    let cx = InvariantComplex::new(model.su3().clone(), true);
    let omega = qk_four_form(model).into_form();
    let radial = omega.contract(DT);
    let dt = Form::basis(COLS, DT);
    let obstruction = |k: usize| cx.d(&Form::basis(COLS, k).wedge(&radial)).restrict_away(1 << DT);
    KillingObstruction {
        lie_wedge_dt_vanishes: cx.lie_derivative(&e8_vector(), &omega).wedge(&dt).is_zero(),
        orbit_obstruction: obstruction(7),
        control_obstruction: obstruction(0),
    }
}

/// The condition `d(‖X‖²) ∧ 𝓛_XΩ = 0` for `X = e₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedKilling {
    /// `‖e₈‖²(t) = Σᵢ ẽⁱ(e₈)²`.
    pub norm_squared: TrigPoly,
    pub lie_derivative_vanishes: bool,
    pub condition_holds: bool,
}

impl GeneralizedKilling {
    /// `‖e₈‖² = sin²(2t)`.
    pub fn norm_is_sin_squared(&self) -> bool {
        let s = TrigPoly::sin(2, QuadExt::int(1));
        self.norm_squared == s.mul(&s)
    }
}

pub fn generalized_killing(model: &WolfSpaceModel) -> GeneralizedKilling {
    let cx = InvariantComplex::new(model.su3().clone(), true);
    let norm_squared = model.coframe().rows().iter().fold(TrigPoly::zero(), |acc, r| acc.add(&r[7].mul(&r[7])));
    let lie = cx.lie_derivative(&e8_vector(), qk_four_form(model).form());
    let d_norm = Form::monomial(COLS, 1 << DT, norm_squared.deriv());
    GeneralizedKilling {
        lie_derivative_vanishes: lie.is_zero(),
        condition_holds: d_norm.wedge(&lie).is_zero(),
        norm_squared,
    }
}

/// Smooth-extension conditions on `f = h′` at both singular orbits.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryReport {
    /// `f(−t) = −f(t)`, decided exactly for trigonometric profiles.
    pub odd_at_start: Option<bool>,
    /// `f(T − t) = −f(T + t)`.
    pub odd_at_end: Option<bool>,
    pub smooth: bool,
    /// Largest coefficient of the (unit-normalized) perturbation term at `t = ε` and `t = T − ε`.
    pub numeric_start: f64,
    pub numeric_end: f64,
}

/// Distance from the singular orbits used by the numeric boundary probe.
pub const BOUNDARY_EPSILON: f64 = 1e-6;
/// A perturbation term below this at distance `ε` counts as vanishing on the orbit.
pub const BOUNDARY_TOLERANCE: f64 = 1e-4;

impl BoundaryReport {
    pub fn pass(&self) -> bool {
        self.smooth && self.odd_at_start == Some(true) && self.odd_at_end == Some(true)
    }

    /// The perturbation dies off at both ends.
    pub fn numerically_continuous(&self) -> bool {
        self.numeric_start <= BOUNDARY_TOLERANCE && self.numeric_end <= BOUNDARY_TOLERANCE
    }
}

pub fn boundary_check(h: &HSpec, model: &WolfSpaceModel) -> Result<BoundaryReport, HarmonicError> {
    let end = model.space().t_end_pi12();
    let (odd_at_start, odd_at_end) = match h.derivative() {
        Some(f) => (Some(f.is_odd()), Some(f.shift_pi12(end).is_odd())),
        None => (None, None),
    };
    let beta = perturbation_term(model, Normalization::Unit)?;
    let probe = |t: f64| h.derivative_taylor(t, 1)[0].abs() * beta.max_abs(|p| p.eval(t));
    Ok(BoundaryReport {
        odd_at_start,
        odd_at_end,
        smooth: h.is_polynomial(),
        numeric_start: probe(BOUNDARY_EPSILON),
        numeric_end: probe(model.t_end() - BOUNDARY_EPSILON),
    })
}

/// Comparison of the perturbed metric with the metric moved by the flow of `e₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrivialityReport {
    pub samples: usize,
    /// Largest entrywise difference of the two Gram matrices on `𝔰𝔲(3) ⊕ ℝ`.
    pub max_defect: f64,
}

fn gram(m: &DMatrix<f64>) -> DMatrix<f64> {
    m.transpose() * m
}

/// Pulls the coframe back along `(g, t) ↦ (g·exp(h(t)e₈), t)`: the orbit block picks up
/// `Ad(exp(−h e₈))` and `∂t` picks up `h′ e₈`. When `e₈` generates isometries of every
/// orbit this reproduces the metric of `e⁸ ↦ e⁸ + h′dt`.
pub fn killing_triviality(model: &WolfSpaceModel, h: &HSpec, ts: &[f64]) -> TrivialityReport {
    let e8: Vec<f64> = e8_vector().iter().map(QuadExt::to_f64).collect();
    let max_defect = ts
        .par_iter()
        .map(|&t| {
            let base = model.coframe().eval(t);
            let f = h.derivative_taylor(t, 1)[0];
            let ad = ad_exp(model.su3(), &e8, -h.value(t));
            let mut moved = DMatrix::zeros(8, COLS);
            moved.columns_mut(0, 8).copy_from(&(base.columns(0, 8) * ad));
            let mut perturbed = base.clone();
            let shifted = base.column(DT) + base.column(7) * f;
            moved.set_column(DT, &shifted);
            perturbed.set_column(DT, &shifted);
            (gram(&moved) - gram(&perturbed)).amax()
        })
        .reduce(|| 0.0, f64::max);
    TrivialityReport { samples: ts.len(), max_defect }
}

/// The bi-invariant 3-form `γ = (1/6) Σ eⁱ ∧ deⁱ` on SU(3).
#[derive(Clone, Debug, PartialEq)]
pub struct Psu3Gamma {
    pub gamma: Form<QuadExt>,
    pub closed: bool,
    pub coclosed: bool,
    /// `γ(e_a, e_b, e_c)` changes sign under every transposition of arguments.
    pub antisymmetric: bool,
}

impl Psu3Gamma {
    pub fn holds(&self) -> bool {
        !self.gamma.is_zero() && self.closed && self.coclosed && self.antisymmetric
    }
}

fn evaluate3(gamma: &Form<QuadExt>, a: usize, b: usize, c: usize) -> QuadExt {
    // γ(e_a, e_b, e_c) = ι_c ι_b ι_a γ.
    gamma.contract(a).contract(b).contract(c).coeff(0)
}

pub fn psu3_gamma() -> Psu3Gamma {
    let cx = InvariantComplex::new(build_su3(), false);
    let sixth = QuadExt::rat(1, 6);
    let gamma =
        (0..8).fold(Form::zero(8), |acc, i| acc.add(&Form::basis(8, i).wedge(&cx.d(&Form::basis(8, i))))).scale(&sixth);
    let mut antisymmetric = true;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let v = evaluate3(&gamma, a, b, c);
                antisymmetric &= v == -&evaluate3(&gamma, b, a, c) && v == -&evaluate3(&gamma, a, c, b);
            }
        }
    }
    Psu3Gamma { closed: cx.d(&gamma).is_zero(), coclosed: cx.d(&hodge_star(&gamma)).is_zero(), antisymmetric, gamma }
}

/// Sample points `T·(k + ½)/n`, strictly inside the interval.
pub fn interior_samples(space: Space, n: usize) -> Vec<f64> {
    (0..n).map(|k| space.t_end() * (k as f64 + 0.5) / n as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_is_closed_and_coclosed() {
        let g = psu3_gamma();
        assert!(g.holds(), "{g:?}");
    }

    #[test]
    fn boundary_examples() {
        let m = WolfSpaceModel::build(Space::G2So4);
        let cos4 = boundary_check(&"cos:4:1".parse().unwrap(), &m).unwrap();
        assert!(cos4.pass() && cos4.numerically_continuous(), "{cos4:?}");
        let cos2 = boundary_check(&"cos:2:1".parse().unwrap(), &m).unwrap();
        assert_eq!(cos2.odd_at_end, Some(false));
        assert!(!cos2.pass() && !cos2.numerically_continuous());
        assert!(boundary_check(&HSpec::Zero, &m).unwrap().pass());
        let log = boundary_check(&"logsin:1".parse().unwrap(), &m).unwrap();
        assert!(!log.pass() && !log.numerically_continuous());
    }

    #[test]
    fn triviality_on_projective_plane_but_not_on_g2() {
        let h: HSpec = "cos:4:1/2,8:1/8".parse().unwrap();
        let hp2 = WolfSpaceModel::build(Space::Hp2);
        assert!(killing_triviality(&hp2, &h, &interior_samples(Space::Hp2, 20)).max_defect < 1e-10);
        let g2 = WolfSpaceModel::build(Space::G2So4);
        assert!(killing_triviality(&g2, &h, &interior_samples(Space::G2So4, 20)).max_defect > 1e-3);
    }
}
