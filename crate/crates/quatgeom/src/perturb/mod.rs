//! The flat quaternionic 4-form on ℝ⁸ and its nilpotent perturbations.
//!
//! * [`omega`] — the hyperkähler triplet, `Ω`, the adapted coframe `E¹ … E⁸` and the `β`-forms.
//! * [`quaternion`] — ℍ² arithmetic, the quaternionic angle `Q` and degenerate pairs.
//! * [`stabilizer`] — the 𝔰𝔬(3) stabilizing `⟨E¹, E², E³⟩` inside 𝔰𝔭(2) ⊕ 𝔰𝔭(1).
//! * [`partitions`] — Jordan types of nilpotent endomorphisms and kernel screening.
//! * [`constraint`] — the `β`-constraint parametrization and circle-invariant perturbations.

pub mod constraint;
pub mod omega;
pub mod partitions;
pub mod quaternion;
pub mod stabilizer;

pub use constraint::{
    check_parametrization, constraint_trials, invariant_perturbation_space, ConstraintTrials, InvariantPerturbations,
    ParametrizationReport,
};
pub use omega::{
    beta_forms, displayed_omega, hyperkahler_triplet, omega_display_diff, omega_in_e_basis, omega_standard,
    AdaptedBasis,
};
pub use partitions::{enumerate_partitions, expected_survivors, kernel_screen, screen_all, Partition8, ScreenResult};
pub use quaternion::{
    affine_chart_angle, angle_by_search, degenerate_pair_test, quaternionic_angle, Quat, QuatVector, QuaternionError,
};
pub use stabilizer::{so3_stabilizer_check, u1_generator, StabilizerReport};
