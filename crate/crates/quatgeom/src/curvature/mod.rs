//! Riemannian curvature of the invariant cohomogeneity-one metrics.
//!
//! The metric makes a coframe `f̃¹(t) … f̃⁸(t)` on `SU(3) × (0, T)` orthonormal; `e₁` is the
//! degenerate direction generating the principal isotropy. Curvature is computed at a
//! single `t` from second-order Taylor jets of the coframe, by solving Cartan's structure
//! equations in the invariant complex ([`levi_civita`], [`curvature()`]). A coordinate
//! finite-difference computation ([`fd_ricci`]) serves as an independent oracle.

mod connection;
mod fd;
mod jet;
mod metric;
mod tabulated;

pub use connection::{curvature, levi_civita, CoframeJet, ConnectionForms, Curvature};
pub use fd::{fd_ricci, FD_STEP};
pub use jet::{JetMat, JET_ORDER};
pub use metric::{
    bianchi_defect, frame_covariance_defect, identify_signed_permutation, perturbed_orbit_volume_density, MetricFamily,
    RicciReport, SignedPermutation,
};
pub use tabulated::{g2_tabulated_ricci, logsin_scalar_curvature, tabulated_trace_identity};

use thiserror::Error;

use crate::harmonic::HarmonicError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurvatureError {
    #[error("the coframe is degenerate at this point")]
    DegenerateCoframe,
    #[error("structure equations have rank {rank} for {unknowns} unknowns; the connection is not unique")]
    RankDeficient { rank: usize, unknowns: usize },
    #[error("t = {t} lies outside the open interval (0, {end})")]
    OutOfRange { t: f64, end: f64 },
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
}
