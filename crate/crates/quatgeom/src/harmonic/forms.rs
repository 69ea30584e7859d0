use crate::exterior::{hodge_star, Form};
use crate::liealg::InvariantComplex;
use crate::perturb::omega_standard;
use crate::scalars::{QuadExt, Ring, TrigPoly};
use crate::wolf::{CoframeFamily, WolfSpaceModel, COLS, DT};

use super::{HSpec, HarmonicError};

/// A basic invariant 4-form on `SU(3) × (0, T)`: degree four over `e¹ … e⁸, dt` with
/// trigonometric coefficients and no component along `e₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantFourForm(Form<TrigPoly>);

impl InvariantFourForm {
    pub fn new(form: Form<TrigPoly>) -> Result<Self, HarmonicError> {
        assert_eq!(form.rank(), COLS);
        assert!(form.is_zero() || form.degree() == Some(4), "not a 4-form");
        if !form.contract(0).is_zero() {
            return Err(HarmonicError::NotBasic);
        }
        Ok(InvariantFourForm(form))
    }

    pub fn form(&self) -> &Form<TrigPoly> {
        &self.0
    }

    pub fn into_form(self) -> Form<TrigPoly> {
        self.0
    }

    pub fn eval(&self, t: f64) -> Form<f64> {
        self.0.map(|p| p.eval(t))
    }

    pub fn eval_pi12(&self, m: i64) -> Form<QuadExt> {
        self.0.map(|p| p.eval_pi12(m))
    }
}

/// How the perturbing 3-form is normalized.
///
/// * `Literal` — `dh ∧ (e₈ ⨼ Ω_qK)`, contraction with the left-invariant field `e₈`; this is
///   the form obtained by substituting `e⁸ ↦ e⁸ + h′dt` in every covector.
/// * `Unit` — `dh ∧ (F ⨼ Ω_qK)` with `F` the unit frame vector dual to the covector along
///   `e⁸`; this is the shift `ẽʲ ↦ ẽʲ + h′dt` of that single covector. The two differ by the
///   factor `ẽʲ(e₈)` in `h′`, and the Ricci tensor is tabulated for this one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    Literal,
    Unit,
}

fn lift(q: &Form<QuadExt>) -> Form<TrigPoly> {
    q.map(|c| TrigPoly::constant(c.clone()))
}

/// `Ω_qK`: the flat form `Ω` with each `dxⁱ` replaced by the covector `ẽⁱ(t)`.
pub fn qk_four_form(model: &WolfSpaceModel) -> InvariantFourForm {
    InvariantFourForm::new(lift(&omega_standard()).substitute(&model.coframe().forms()))
        .expect("the coframe annihilates e₁")
}

fn e8_row(model: &WolfSpaceModel) -> Result<usize, HarmonicError> {
    model.coframe().e8_row().ok_or(HarmonicError::NoE8Row(model.space()))
}

/// The 3-form `β` with `Ω̃ = Ω_qK + h′ dt ∧ β`.
pub fn perturbation_term(model: &WolfSpaceModel, norm: Normalization) -> Result<Form<TrigPoly>, HarmonicError> {
    match norm {
        Normalization::Literal => Ok(qk_four_form(model).into_form().contract(7)),
        Normalization::Unit => {
            let row = e8_row(model)?;
            Ok(lift(&omega_standard().contract(row)).substitute(&model.coframe().forms()))
        }
    }
}

fn polynomial_derivative(model: &WolfSpaceModel, h: &HSpec) -> Result<TrigPoly, HarmonicError> {
    h.admissible_for(model.space())?;
    h.derivative().ok_or(HarmonicError::NotPolynomial)
}

/// `Ω̃ = Ω_qK + dh ∧ β` for a trigonometric profile.
pub fn perturbed_form(
    model: &WolfSpaceModel,
    h: &HSpec,
    norm: Normalization,
) -> Result<InvariantFourForm, HarmonicError> {
    let f = polynomial_derivative(model, h)?;
    let beta = perturbation_term(model, norm)?;
    let dh = Form::monomial(COLS, 1 << DT, f);
    InvariantFourForm::new(qk_four_form(model).into_form().add(&dh.wedge(&beta)))
}

/// `Ω̃` at a fixed interior `t`, for any profile including the logarithmic one.
pub fn perturbed_form_at(
    model: &WolfSpaceModel,
    h: &HSpec,
    norm: Normalization,
    t: f64,
) -> Result<Form<f64>, HarmonicError> {
    h.admissible_for(model.space())?;
    let f = h.derivative_taylor(t, 1)[0];
    let beta = perturbation_term(model, norm)?.map(|p| p.eval(t));
    let qk = qk_four_form(model).eval(t);
    Ok(qk.add(&Form::monomial(COLS, 1 << DT, f).wedge(&beta)))
}

/// The coframe whose quaternionic form is `Ω̃`.
pub fn perturbed_coframe_family(
    model: &WolfSpaceModel,
    h: &HSpec,
    norm: Normalization,
) -> Result<CoframeFamily, HarmonicError> {
    let f = polynomial_derivative(model, h)?;
    Ok(match norm {
        Normalization::Literal => model.coframe().with_e8_substitution(&f),
        Normalization::Unit => model.coframe().with_dt_shift(e8_row(model)?, &f),
    })
}

/// `dΩ̃` and `d(*Ω̃)` for the metric making the perturbed coframe orthonormal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coclosedness {
    /// `Ω` is self-dual for the flat metric.
    pub self_dual_standard: bool,
    /// The quaternionic form of the perturbed coframe equals `Ω̃`.
    pub coframe_consistent: bool,
    pub closed: bool,
    pub star_closed: bool,
}

pub fn coclosedness(model: &WolfSpaceModel, h: &HSpec, norm: Normalization) -> Result<Coclosedness, HarmonicError> {
    let omega = omega_standard();
    let frame = perturbed_coframe_family(model, h, norm)?.forms();
    let tilde = perturbed_form(model, h, norm)?;
    let rebuilt = lift(&omega).substitute(&frame);
    let star = lift(&hodge_star(&omega)).substitute(&frame);
    let cx = InvariantComplex::new(model.su3().clone(), true);
    Ok(Coclosedness {
        self_dual_standard: hodge_star(&omega) == omega,
        coframe_consistent: &rebuilt == tilde.form(),
        closed: cx.d(tilde.form()).is_zero(),
        star_closed: cx.d(&star).is_zero(),
    })
}

/// Restriction of `Ω_qK` and `Ω̃` to a singular orbit at `t = mπ/12`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictionReport {
    pub t_pi12: i64,
    /// Covectors that survive on the orbit (nonzero on `e¹ … e⁸`).
    pub surviving: Vec<usize>,
    /// `(Ω̃ − Ω_qK)` restricted to the orbit is zero.
    pub perturbation_vanishes: bool,
    pub qk_restriction: Form<QuadExt>,
    /// `c` with `Ω_qK|orbit = c · ẽ^{i₁} ∧ … ∧ ẽ^{i₄}` over the surviving covectors.
    pub volume_multiple: Option<QuadExt>,
}

impl RestrictionReport {
    pub fn holds(&self) -> bool {
        self.perturbation_vanishes && self.volume_multiple.as_ref().is_some_and(|c| !c.is_zero())
    }
}

/// Evaluates at `t = mπ/12`, drops `dt` and the collapsing directions, and compares.
pub fn cohomology_restriction(
    model: &WolfSpaceModel,
    h: &HSpec,
    norm: Normalization,
    m: i64,
) -> Result<RestrictionReport, HarmonicError> {
    let drop_dt = 1u32 << DT;
    let qk = qk_four_form(model).eval_pi12(m).restrict_away(drop_dt);
    let tilde = perturbed_form(model, h, norm)?.eval_pi12(m).restrict_away(drop_dt);
    let frame = model.coframe().eval_pi12(m);
    let surviving: Vec<usize> = (0..8).filter(|&i| frame[i][..DT].iter().any(|x| !x.is_zero())).collect();
    let volume = surviving.iter().fold(Form::scalar(COLS, QuadExt::int(1)), |acc, &i| {
        let mut row = frame[i].clone();
        row[DT] = QuadExt::int(0);
        acc.wedge(&Form::one_form(&row))
    });
    let volume_multiple = (surviving.len() == 4 && !volume.is_zero())
        .then(|| {
            let (mask, v) = volume.terms().next().expect("nonzero volume");
            let c = qk.coeff(mask).checked_div(v).ok()?;
            (volume.scale(&c) == qk).then_some(c)
        })
        .flatten();
    Ok(RestrictionReport {
        t_pi12: m,
        surviving,
        perturbation_vanishes: tilde.sub(&qk).is_zero(),
        qk_restriction: qk,
        volume_multiple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wolf::Space;

    fn g2() -> WolfSpaceModel {
        WolfSpaceModel::build(Space::G2So4)
    }

    #[test]
    fn zero_profile_gives_the_unperturbed_form() {
        let m = g2();
        for norm in [Normalization::Literal, Normalization::Unit] {
            assert_eq!(perturbed_form(&m, &HSpec::Zero, norm).unwrap(), qk_four_form(&m));
        }
    }

    #[test]
    fn perturbation_squares_to_zero() {
        let m = g2();
        let f = TrigPoly::sin(4, QuadExt::int(-4));
        let beta = perturbation_term(&m, Normalization::Literal).unwrap();
        let term = Form::monomial(COLS, 1 << DT, f).wedge(&beta);
        assert!(!term.is_zero());
        assert!(term.wedge(&term).is_zero());
    }

    #[test]
    fn logsin_is_only_available_pointwise() {
        let m = g2();
        let h: HSpec = "logsin:1/2".parse().unwrap();
        assert_eq!(perturbed_form(&m, &h, Normalization::Unit), Err(HarmonicError::NotPolynomial));
        let at = perturbed_form_at(&m, &h, Normalization::Unit, 0.3).unwrap();
        assert!(at.sub(&qk_four_form(&m).eval(0.3)).max_abs(|x| *x) > 0.1);
    }
}
