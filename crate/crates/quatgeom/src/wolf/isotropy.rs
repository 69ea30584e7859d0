use crate::linalg;
use crate::scalars::{QuadExt, Ring, TrigPoly};

use super::coframe::{COLS, DT};
use super::model::WolfSpaceModel;

/// `ad(e₁)` on `𝔰𝔲(3) ⊕ ℝ`, acting trivially on the `∂/∂t` direction.
fn ad_e1_extended(model: &WolfSpaceModel) -> Vec<Vec<QuadExt>> {
    let ad = model.su3().ad(&model.su3().basis(0));
    let mut out = vec![vec![QuadExt::int(0); COLS]; COLS];
    for (i, row) in ad.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out[i][j] = x;
        }
    }
    out
}

/// Matrix `W` of the principal isotropy generator `e₁` on the tangent space in the
/// coframe basis at `t = mπ/12`, defined by `ẽ(t) ∘ ad(e₁) = W · ẽ(t)`.
///
/// Returns `None` if the coframe is degenerate at that point or fails to be
/// equivariant.
pub fn isotropy_matrix_pi12(model: &WolfSpaceModel, m: i64) -> Option<Vec<Vec<QuadExt>>> {
    let frame = model.coframe().eval_pi12(m);
    let ad = ad_e1_extended(model);
    let moved = linalg::mat_mul(&frame, &ad);
    // e₁ spans the kernel, so the remaining eight columns form an invertible block.
    let block = |m: &[Vec<QuadExt>]| -> Vec<Vec<QuadExt>> { m.iter().map(|r| r[1..].to_vec()).collect() };
    let inv = linalg::inverse(&block(&frame))?;
    let w = linalg::mat_mul(&block(&moved), &inv);
    (linalg::mat_mul(&w, &frame) == moved).then_some(w)
}

/// An isotropy weight `k` with the real subspace where `W² = −k²` (or `W = 0` for `k = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSpace {
    pub weight: u32,
    pub basis: Vec<Vec<QuadExt>>,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Decomposition of the tangent space of a principal orbit point under the principal
/// U(1), computed exactly at `t = π/12`. Only nonzero weight spaces are returned.
pub fn isotropy_weights(model: &WolfSpaceModel) -> Option<Vec<WeightSpace>> {
    let w = isotropy_matrix_pi12(model, 1)?;
    let w2 = linalg::mat_mul(&w, &w);
    let mut out = Vec::new();
    let mut total = 0;
    for k in 0..=4u32 {
        let m = if k == 0 {
            w.clone()
        } else {
            let mut m = w2.clone();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = &row[i] + &QuadExt::int(i64::from(k * k));
            }
            m
        };
        let basis = linalg::nullspace(&m, 8);
        total += basis.len();
        if !basis.is_empty() {
            out.push(WeightSpace { weight: k, basis });
        }
    }
    (total == 8).then_some(out)
}

/// Orbit-volume density `√det G(t)` where `G` is the Gram matrix of the coframe
/// restricted to the orbit directions `e₂ … e₈`.
pub fn orbit_volume_density(model: &WolfSpaceModel, t: f64) -> f64 {
    let m = model.coframe().eval(t);
    let orbit = m.columns(1, 7).into_owned();
    (orbit.transpose() * orbit).determinant().max(0.0).sqrt()
}

/// Result of comparing `det G(t)` with `c · sin(2t)^{2a} cos(2t)^{2b}` as trigonometric polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitVolumeIdentity {
    pub constant: QuadExt,
    pub holds: bool,
}

/// Exact check that the squared orbit-volume density is a constant multiple of
/// `sin(2t)^{2a} cos(2t)^{2b}`. The Gram determinant is expanded by Cauchy–Binet
/// over the 7×7 minors of the coframe restricted to the orbit directions.
pub fn orbit_volume_exact(model: &WolfSpaceModel, sin_power: u32, cos_power: u32) -> OrbitVolumeIdentity {
    let rows: Vec<Vec<TrigPoly>> = model.coframe().rows().iter().map(|r| r[1..DT].to_vec()).collect();
    let mut det = TrigPoly::zero();
    for skip in 0..8 {
        let minor: Vec<Vec<TrigPoly>> =
            rows.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, r)| r.clone()).collect();
        let d = linalg::det_sparse(&minor);
        det = det.add(&d.mul(&d));
    }
    let one = QuadExt::int(1);
    let target = TrigPoly::sin(2, one.clone()).pow(2 * sin_power).mul(&TrigPoly::cos(2, one).pow(2 * cos_power));
    // Normalize at t = π/12 where neither factor vanishes.
    let constant = det.eval_pi12(1).checked_div(&target.eval_pi12(1)).expect("target is nonzero at π/12");
    let holds = det.sub(&target.scale(&constant)).is_zero();
    OrbitVolumeIdentity { constant, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wolf::Space;

    #[test]
    fn weights_are_two_zero_two_one_one_two() {
        for s in Space::ALL {
            let m = WolfSpaceModel::build(s);
            let ws = isotropy_weights(&m).expect("equivariant");
            let dims: Vec<(u32, usize)> = ws.iter().map(|w| (w.weight, w.dim())).collect();
            assert_eq!(dims, vec![(0, 2), (1, 4), (2, 2)], "{s}");
        }
    }

    #[test]
    fn hp2_weight_two_directions_are_the_first_two_covectors() {
        let m = WolfSpaceModel::build(Space::Hp2);
        let ws = isotropy_weights(&m).unwrap();
        let unit = |i: usize| (0..8).map(|j| QuadExt::int(i64::from(i == j))).collect::<Vec<_>>();
        assert!(linalg::same_span(&ws[2].basis, &[unit(0), unit(1)]));
    }

    #[test]
    fn displayed_hp2_block_is_the_coframe_over_four_root_two() {
        let m = WolfSpaceModel::build(Space::Hp2);
        let shown = crate::wolf::hp2_displayed_ad_block();
        for t in [0.1, 0.4, 0.7] {
            let got = m.p_coordinates_numeric(t);
            for i in 0..8 {
                for j in 0..8 {
                    assert!((got[(i, j)] - shown[i][j].eval(t)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn g2_orbit_volume_is_exact() {
        let m = WolfSpaceModel::build(Space::G2So4);
        assert!(orbit_volume_exact(&m, 3, 2).holds);
    }
}
