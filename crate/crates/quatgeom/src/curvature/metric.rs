use nalgebra::DMatrix;

use crate::harmonic::{perturbed_coframe_family, HSpec, Normalization};
use crate::liealg::LieAlgebraData;
use crate::scalars::TrigPoly;
use crate::wolf::{CoframeFamily, Space, WolfSpaceModel, COLS, DT};

use super::connection::{curvature, levi_civita, CoframeJet};
use super::jet::{JetMat, JET_ORDER};
use super::CurvatureError;

/// The invariant metric of the perturbed coframe `f̃ⁱ = ẽⁱ + (multiplier)·h′(t)·dt`.
///
/// Only the `dt` column of the coframe changes, so `h` enters through the Taylor jet of
/// `h′` alone; this lets the logarithmic profile be handled with the same machinery.
#[derive(Clone, Debug)]
pub struct MetricFamily {
    space: Space,
    base: CoframeFamily,
    algebra: LieAlgebraData,
    h: HSpec,
    norm: Normalization,
    /// Rows whose `dt` entry gains `multiplier · h′`.
    shifted: Vec<(usize, TrigPoly)>,
}

fn series_product(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..JET_ORDER).map(|n| (0..=n).map(|k| a[k] * b[n - k]).sum()).collect()
}

impl MetricFamily {
    pub fn new(model: &WolfSpaceModel, h: &HSpec, norm: Normalization) -> Result<Self, CurvatureError> {
        h.admissible_for(model.space())?;
        let base = model.coframe().clone();
        let shifted = match norm {
            Normalization::Unit => {
                let row = base.e8_row().ok_or(crate::harmonic::HarmonicError::NoE8Row(model.space()))?;
                vec![(row, TrigPoly::constant(crate::scalars::QuadExt::int(1)))]
            }
            Normalization::Literal => {
                (0..8).filter(|&i| !base.entry(i, 7).is_zero()).map(|i| (i, base.entry(i, 7).clone())).collect()
            }
        };
        Ok(MetricFamily { space: model.space(), base, algebra: model.su3().clone(), h: h.clone(), norm, shifted })
    }

    /// The unperturbed quaternion-Kähler metric.
    pub fn unperturbed(model: &WolfSpaceModel) -> Self {
        MetricFamily::new(model, &HSpec::Zero, Normalization::Unit).expect("the zero profile is always admissible")
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn h(&self) -> &HSpec {
        &self.h
    }

    pub fn normalization(&self) -> Normalization {
        self.norm
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    /// The perturbed coframe as exact trigonometric polynomials, for polynomial profiles.
    pub fn exact_coframe(&self, model: &WolfSpaceModel) -> Option<CoframeFamily> {
        perturbed_coframe_family(model, &self.h, self.norm).ok()
    }

    fn check_interior(&self, t: f64) -> Result<(), CurvatureError> {
        let end = self.space.t_end();
        if t > 0.0 && t < end {
            Ok(())
        } else {
            Err(CurvatureError::OutOfRange { t, end })
        }
    }

    /// Second-order jet of the coframe at `t`.
    pub fn coframe_jet(&self, t: f64) -> CoframeJet {
        let mut frame = JetMat::zeros(8, COLS);
        for i in 0..8 {
            for j in 0..COLS {
                frame.set_entry(i, j, &self.base.entry(i, j).taylor(t, JET_ORDER));
            }
        }
        let f = self.h.derivative_taylor(t, JET_ORDER);
        for (row, multiplier) in &self.shifted {
            let extra = series_product(&multiplier.taylor(t, JET_ORDER), &f);
            let current = frame.entry(*row, DT);
            let sum: Vec<f64> = current.iter().zip(&extra).map(|(a, b)| a + b).collect();
            frame.set_entry(*row, DT, &sum);
        }
        CoframeJet::new(frame, vec![0], self.algebra.float_structure(), 8, true)
    }

    /// Coframe coefficients at `t`, rows `f̃ⁱ` over `e¹ … e⁸, dt`.
    pub fn coframe_at(&self, t: f64) -> DMatrix<f64> {
        self.coframe_jet(t).frame().value().clone()
    }

    pub fn ricci_at(&self, t: f64) -> Result<RicciReport, CurvatureError> {
        self.check_interior(t)?;
        ricci_of_jet(&self.coframe_jet(t), t)
    }
}

fn ricci_of_jet(cf: &CoframeJet, t: f64) -> Result<RicciReport, CurvatureError> {
    let conn = levi_civita(cf)?;
    let curv = curvature(cf, &conn)?;
    Ok(RicciReport {
        t,
        scalar: curv.scalar(),
        einstein_deviation: curv.einstein_deviation(),
        ricci: curv.ricci,
        structure_residual: conn.residual,
        antisymmetry_defect: conn.antisymmetry_defect,
        basic_defect: curv.basic_defect,
        rank: conn.rank,
        unknowns: conn.unknowns,
    })
}

/// Curvature summary at one `t`.
#[derive(Clone, Debug)]
pub struct RicciReport {
    pub t: f64,
    /// `Ric(Fⱼ, Fₖ)` in the orthonormal frame dual to `f̃`.
    pub ricci: DMatrix<f64>,
    pub scalar: f64,
    pub einstein_deviation: f64,
    pub structure_residual: f64,
    pub antisymmetry_defect: f64,
    pub basic_defect: f64,
    pub rank: usize,
    pub unknowns: usize,
}

/// Contracted second Bianchi identity `div Ric = ½ ds`, checked in the orthonormal frame.
///
/// Every quantity depends on `t` only, so `Fᵢ(φ) = dt(Fᵢ)·φ′`, and
/// `(div Ric)ₖ = Σᵢ dt(Fᵢ)Ric′ᵢₖ − Σᵢₗ (Γˡᵢ(Fᵢ) Ricₗₖ + Γˡₖ(Fᵢ) Ricᵢₗ)`. The `t`-derivatives are
/// five-point central differences with the given step. Returns the largest component of the defect.
pub fn bianchi_defect(metric: &MetricFamily, t: f64, step: f64) -> Result<f64, CurvatureError> {
    metric.check_interior(t - 2.0 * step)?;
    metric.check_interior(t + 2.0 * step)?;
    let cf = metric.coframe_jet(t);
    let conn = levi_civita(&cf)?;
    let ric = curvature(&cf, &conn)?.ricci;
    // Five-point stencil: truncation O(step⁴), so strongly curved profiles stay resolvable.
    let mut ric_dot = DMatrix::zeros(8, 8);
    let mut s_dot = 0.0;
    for (offset, weight) in [(-2.0, 1.0), (-1.0, -8.0), (1.0, 8.0), (2.0, -1.0)] {
        let r = metric.ricci_at(t + offset * step)?;
        ric_dot += r.ricci * (weight / (12.0 * step));
        s_dot += r.scalar * weight / (12.0 * step);
    }

    // dt(Fᵢ): the dt-row of the inverse of the full θ-coframe.
    let mut theta = DMatrix::zeros(COLS, COLS);
    theta.rows_mut(0, 8).copy_from(cf.frame().value());
    theta[(8, 0)] = 1.0;
    let dual = theta.try_inverse().ok_or(CurvatureError::DegenerateCoframe)?;
    let dt_of = |i: usize| dual[(DT, i)];

    let mut defect = 0.0f64;
    for k in 0..8 {
        let mut div = 0.0;
        for i in 0..8 {
            div += dt_of(i) * ric_dot[(i, k)];
            for l in 0..8 {
                div -= conn.gamma(l, i, i) * ric[(l, k)] + conn.gamma(l, k, i) * ric[(i, l)];
            }
        }
        defect = defect.max((div - 0.5 * s_dot * dt_of(k)).abs());
    }
    Ok(defect)
}

/// `‖Ric[Q·f̃] − Q·Ric[f̃]·Qᵀ‖_∞` for a constant orthogonal `Q`.
pub fn frame_covariance_defect(metric: &MetricFamily, t: f64, q: &DMatrix<f64>) -> Result<f64, CurvatureError> {
    metric.check_interior(t)?;
    let cf = metric.coframe_jet(t);
    let base = ricci_of_jet(&cf, t)?.ricci;
    let rotated = ricci_of_jet(&cf.rotated(q), t)?.ricci;
    Ok((rotated - q * base * q.transpose()).amax())
}

/// Orbit-volume density `√det G(t)` of the perturbed metric on `e₂ … e₈`.
pub fn perturbed_orbit_volume_density(metric: &MetricFamily, t: f64) -> f64 {
    let m = metric.coframe_at(t);
    let orbit = m.columns(1, 7).into_owned();
    (orbit.transpose() * orbit).determinant().max(0.0).sqrt()
}

/// A relabelling `i ↦ (perm[i], signs[i])` of an orthonormal frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }
}

/// First signed permutation (in lexicographic search order, positive signs first) with
/// `sᵢsⱼ·computed[pᵢ][pⱼ] = reference[i][j]` within `tol`, by backtracking.
pub fn identify_signed_permutation(
    computed: &DMatrix<f64>,
    reference: &DMatrix<f64>,
    tol: f64,
) -> Option<SignedPermutation> {
    fn extend(
        computed: &DMatrix<f64>,
        reference: &DMatrix<f64>,
        tol: f64,
        perm: &mut Vec<usize>,
        signs: &mut Vec<i8>,
    ) -> bool {
        let i = perm.len();
        if i == reference.nrows() {
            return true;
        }
        for p in 0..computed.nrows() {
            if perm.contains(&p) {
                continue;
            }
            for s in [1i8, -1] {
                let fits = (0..=i).all(|j| {
                    let (pj, sj) = if j == i { (p, s) } else { (perm[j], signs[j]) };
                    let value = f64::from(s) * f64::from(sj) * computed[(p, pj)];
                    (value - reference[(i, j)]).abs() <= tol
                });
                if fits {
                    perm.push(p);
                    signs.push(s);
                    if extend(computed, reference, tol, perm, signs) {
                        return true;
                    }
                    perm.pop();
                    signs.pop();
                }
            }
        }
        false
    }
    let (mut perm, mut signs) = (Vec::new(), Vec::new());
    extend(computed, reference, tol, &mut perm, &mut signs).then_some(SignedPermutation { perm, signs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> WolfSpaceModel {
        WolfSpaceModel::build(Space::G2So4)
    }

    #[test]
    fn jet_matches_the_exact_perturbed_coframe() {
        let m = g2();
        let h: HSpec = "cos:4:1/2,8:1/8".parse().unwrap();
        for norm in [Normalization::Unit, Normalization::Literal] {
            let mf = MetricFamily::new(&m, &h, norm).unwrap();
            let exact = mf.exact_coframe(&m).unwrap();
            let jet = mf.coframe_jet(0.37);
            for i in 0..8 {
                for j in 0..COLS {
                    let want = exact.entry(i, j).taylor(0.37, JET_ORDER);
                    let got = jet.frame().entry(i, j);
                    for n in 0..JET_ORDER {
                        assert!((want[n] - got[n]).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn quaternion_kahler_g2_is_einstein_with_constant_eight() {
        let mf = MetricFamily::unperturbed(&g2());
        let r = mf.ricci_at(0.3).unwrap();
        assert!((r.ricci.clone() - DMatrix::identity(8, 8) * 8.0).amax() < 1e-9, "{}", r.ricci);
        assert!(r.structure_residual < 1e-10);
        assert_eq!(r.rank, r.unknowns);
        assert!(r.basic_defect < 1e-9);
    }

    #[test]
    fn endpoints_are_rejected() {
        let mf = MetricFamily::unperturbed(&g2());
        assert!(matches!(mf.ricci_at(0.0), Err(CurvatureError::OutOfRange { .. })));
        assert!(mf.ricci_at(Space::G2So4.t_end()).is_err());
    }

    #[test]
    fn signed_permutation_search_recovers_a_relabelling() {
        let a = DMatrix::from_fn(4, 4, |i, j| if i == j { i as f64 + 1.0 } else { 0.1 * (i + j) as f64 });
        let perm = [2usize, 0, 3, 1];
        let signs = [1i8, -1, -1, 1];
        let b = DMatrix::from_fn(4, 4, |i, j| f64::from(signs[i] * signs[j]) * a[(perm[i], perm[j])]);
        let found = identify_signed_permutation(&a, &b, 1e-12).unwrap();
        assert_eq!(found.perm, perm);
        assert!(identify_signed_permutation(&a, &a, 1e-12).unwrap().is_identity());
    }
}
