//! Exact and numerical verification of quaternionic geometry in dimension eight.
//!
//! The crate builds the three eight-dimensional Wolf spaces as cohomogeneity-one
//! SU(3)-manifolds, perturbs their fundamental 4-forms into closed but non-parallel
//! Sp(2)Sp(1)-structures, and checks the resulting algebra and curvature with an
//! exact coefficient tower (ℚ(√2,√3) and Fourier polynomials over it) backed by
//! independent floating-point oracles.
//!
//! Layers, bottom up:
//!
//! * [`scalars`] — exact rationals, [`scalars::QuadExt`], [`scalars::TrigPoly`].
//! * [`exterior`] — forms over a generic coefficient ring, wedge, contraction, ρ(A), Hodge star.
//! * [`liealg`] — structure constants, Killing forms, the invariant de Rham complex.
//! * [`wolf`] — the Wolf-space models and their pulled-back coframes.
//! * [`perturb`] — the quaternionic 4-form and its nilpotent perturbations.
//! * [`harmonic`] — closed perturbations on the cohomogeneity-one models.
//! * [`curvature`] — Levi-Civita connection and Ricci tensor of the perturbed metrics.
//! * [`cli`] — verification suites, JSON reports and the command-line driver.

// Index loops mirror the component formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod curvature;
pub mod exterior;
pub mod harmonic;
pub mod liealg;
pub mod linalg;
pub mod perturb;
pub mod scalars;
pub mod wolf;
