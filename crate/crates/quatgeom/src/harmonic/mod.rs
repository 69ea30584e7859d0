//! Closed perturbations `Ω̃ = Ω_qK + dh ∧ (X ⨼ Ω_qK)` of the quaternion-Kähler 4-form on
//! the cohomogeneity-one models, their boundary behaviour, the Killing-field obstruction,
//! and the bi-invariant 3-form on SU(3).

mod forms;
mod hspec;
mod killing;

pub use forms::{
    coclosedness, cohomology_restriction, perturbation_term, perturbed_coframe_family, perturbed_form,
    perturbed_form_at, qk_four_form, Coclosedness, InvariantFourForm, Normalization, RestrictionReport,
};
pub use hspec::HSpec;
pub use killing::{
    boundary_check, generalized_killing, interior_samples, killing_obstruction, killing_triviality, psu3_gamma,
    BoundaryReport, GeneralizedKilling, KillingObstruction, Psu3Gamma, TrivialityReport, BOUNDARY_EPSILON,
    BOUNDARY_TOLERANCE,
};

use thiserror::Error;

use crate::wolf::Space;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarmonicError {
    #[error("cannot parse h-spec `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("frequency {k} violates the reflection condition at the far end of {space}")]
    Inadmissible { k: u32, space: Space },
    #[error("the logarithmic profile is not a trigonometric polynomial; evaluate at fixed t instead")]
    NotPolynomial,
    #[error("form has a component along e₁ and is not basic")]
    NotBasic,
    #[error("the coframe of {0} has no unique covector along e⁸")]
    NoE8Row(Space),
}
