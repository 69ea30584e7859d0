use crate::liealg::{build_su3, su3_matrices, CMat, Cx};
use crate::scalars::{QuadExt, Ring, TrigPoly};

use super::coframe::{gr2_coframe, COLS, DT};
use super::Space;

/// The map exchanging the two ends of Gr₂(ℂ⁴):
/// `e₁ ↦ −e₁, e₂ ↦ e₄, e₃ ↦ −e₅, e₄ ↦ −e₂, e₅ ↦ e₃, e₆ ↦ e₆, e₇ ↦ −e₇, e₈ ↦ e₈`,
/// as an 8×8 matrix whose column `j` is the image of `e_{j+1}`.
pub fn gr2_identification_map() -> Vec<Vec<QuadExt>> {
    let images: [(usize, i64); 8] = [(1, -1), (4, 1), (5, -1), (2, -1), (3, 1), (6, 1), (7, -1), (8, 1)];
    let mut m = vec![vec![QuadExt::int(0); 8]; 8];
    for (j, &(target, sign)) in images.iter().enumerate() {
        m[target - 1][j] = QuadExt::int(sign);
    }
    m
}

/// Outcome of the two-ends identification checks on Gr₂(ℂ⁴).
#[derive(Clone, Debug, PartialEq)]
pub struct Gr2Identification {
    /// Basis pairs `(i, j)` with `φ[eᵢ, eⱼ] ≠ [φeᵢ, φeⱼ]`.
    pub automorphism_violations: usize,
    /// `φ(e₁) ∈ span{e₁}`.
    pub preserves_principal_u1: bool,
    /// `φ(X) = g X g⁻¹` for `g = [[0, i, 0], [i, 0, 0], [0, 0, 1]]` on the matrix basis.
    pub inner_by_displayed_matrix: bool,
    /// `G(t) = Pᵀ G(T − t) P` exactly, with `P = φ ⊕ (−1)` on `𝔰𝔲(3) ⊕ ℝ∂t`.
    pub exchanges_metrics: bool,
}

impl Gr2Identification {
    pub fn holds(&self) -> bool {
        self.automorphism_violations == 0
            && self.preserves_principal_u1
            && self.inner_by_displayed_matrix
            && self.exchanges_metrics
    }
}

pub fn gr2_identification() -> Gr2Identification {
    let phi = gr2_identification_map();
    let su3 = build_su3();
    let col = |j: usize| -> Vec<QuadExt> { phi.iter().map(|r| r[j].clone()).collect() };
    let apply = |x: &[QuadExt]| -> Vec<QuadExt> {
        (0..8).map(|i| (0..8).fold(QuadExt::int(0), |acc, j| &acc + &(&phi[i][j] * &x[j]))).collect()
    };

    let mut automorphism_violations = 0;
    for i in 0..8 {
        for j in 0..8 {
            let lhs = apply(&su3.bracket_basis(i, j));
            let rhs = su3.bracket(&col(i), &col(j));
            if lhs != rhs {
                automorphism_violations += 1;
            }
        }
    }
    let image_e1 = col(0);
    let preserves_principal_u1 = image_e1[1..].iter().all(|x| x.is_zero()) && !image_e1[0].is_zero();

    let mats = su3_matrices();
    let mut g = CMat::zero(3);
    g.set(0, 1, Cx::i());
    g.set(1, 0, Cx::i());
    g.set(2, 2, Cx::one());
    let g_inv = g.conj_transpose();
    let inner_by_displayed_matrix = (0..8).all(|j| {
        let conj = g.mul(&mats[j]).mul(&g_inv);
        let terms: Vec<(QuadExt, &CMat)> = (0..8).map(|k| (phi[k][j].clone(), &mats[k])).collect();
        conj == CMat::combination(3, &terms)
    });

    let gram = gr2_coframe().gram();
    let reflected: Vec<Vec<TrigPoly>> =
        gram.iter().map(|r| r.iter().map(|p| p.reflect().shift_pi12(-Space::Gr2C4.t_end_pi12())).collect()).collect();
    let mut p = vec![vec![QuadExt::int(0); COLS]; COLS];
    for (i, row) in phi.iter().enumerate() {
        p[i][..8].clone_from_slice(row);
    }
    p[DT][DT] = QuadExt::int(-1);
    let exchanges_metrics = (0..COLS).all(|a| {
        (0..COLS).all(|b| {
            let mut acc = TrigPoly::zero();
            for c in 0..COLS {
                for d in 0..COLS {
                    if !p[c][a].is_zero() && !p[d][b].is_zero() && !reflected[c][d].is_zero() {
                        acc = acc.add(&reflected[c][d].scale(&(&p[c][a] * &p[d][b])));
                    }
                }
            }
            acc == gram[a][b]
        })
    });

    Gr2Identification { automorphism_violations, preserves_principal_u1, inner_by_displayed_matrix, exchanges_metrics }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identification_holds() {
        let r = gr2_identification();
        assert!(r.holds(), "{r:?}");
    }
}
