use std::sync::OnceLock;

use crate::exterior::Form;
use crate::scalars::{qx, QuadExt, Ring};

/// The standard hyperkähler triplet on ℝ⁸ = ℍ² in coordinates `dx¹ … dx⁸`:
/// `ω₁ = dx¹²+dx³⁴+dx⁵⁶+dx⁷⁸`, `ω₂ = dx¹³+dx⁴²+dx⁵⁷+dx⁸⁶`, `ω₃ = dx¹⁴+dx²³+dx⁵⁸+dx⁶⁷`.
pub fn hyperkahler_triplet() -> [Form<QuadExt>; 3] {
    let pairs: [[(usize, usize); 4]; 3] =
        [[(1, 2), (3, 4), (5, 6), (7, 8)], [(1, 3), (4, 2), (5, 7), (8, 6)], [(1, 4), (2, 3), (5, 8), (6, 7)]];
    pairs.map(|ps| {
        ps.iter().fold(Form::zero(8), |acc, &(a, b)| acc.add(&Form::from_indices(8, &[a - 1, b - 1], QuadExt::int(1))))
    })
}

/// The quaternionic 4-form `Ω = ½(ω₁² + ω₂² + ω₃²)` in the standard coordinates.
pub fn omega_standard() -> Form<QuadExt> {
    let half = QuadExt::rat(1, 2);
    hyperkahler_triplet().iter().fold(Form::zero(8), |acc, w| acc.add(&w.wedge(w).scale(&half)))
}

/// An orthonormal change of coframe `Eᵃ = Σᵢ M[a][i] e⁰ᵢ` adapted to the splitting
/// `ℝ⁸ = S² ⊕ S⁴` with `S² = span{E¹, E², E³}` and `S⁴ = span{E⁴, …, E⁸}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdaptedBasis {
    rows: Vec<Vec<QuadExt>>,
}

impl AdaptedBasis {
    /// Dimension of `S²`; the remaining five covectors span `S⁴`.
    pub const S2: usize = 3;

    pub fn standard() -> Self {
        let z = || QuadExt::int(0);
        let mut m = vec![vec![z(); 8]; 8];
        let half = QuadExt::rat(1, 2);
        let half_r3 = qx(1, 2, 3);
        m[0][7] = QuadExt::int(1);
        m[1][1] = half_r3.clone();
        m[1][5] = -&half;
        m[2][0] = -&half_r3;
        m[2][4] = -&half;
        m[3][4] = -&half_r3;
        m[3][0] = half.clone();
        m[4][5] = half_r3;
        m[4][1] = half;
        m[5][3] = QuadExt::int(-1);
        m[6][2] = QuadExt::int(1);
        m[7][6] = QuadExt::int(1);
        AdaptedBasis { rows: m }
    }

    /// Row `a` holds the standard components of `E^{a+1}` (equivalently of the dual vector `E_{a+1}`).
    pub fn rows(&self) -> &[Vec<QuadExt>] {
        &self.rows
    }

    pub fn is_orthonormal(&self) -> bool {
        (0..8).all(|a| {
            (0..8).all(|b| {
                let dot = (0..8).fold(QuadExt::int(0), |acc, i| &acc + &(&self.rows[a][i] * &self.rows[b][i]));
                dot == QuadExt::int(i64::from(a == b))
            })
        })
    }

    /// Rewrites a form in standard coordinates in terms of `E¹ … E⁸`, using
    /// `e⁰ᵢ = Σₐ M[a][i] Eᵃ`.
    pub fn to_adapted(&self, alpha: &Form<QuadExt>) -> Form<QuadExt> {
        let images: Vec<Form<QuadExt>> =
            (0..8).map(|i| Form::one_form(&(0..8).map(|a| self.rows[a][i].clone()).collect::<Vec<_>>())).collect();
        alpha.substitute(&images)
    }

    /// Rewrites a form in `E`-coordinates back in standard coordinates.
    pub fn to_standard(&self, alpha: &Form<QuadExt>) -> Form<QuadExt> {
        let images: Vec<Form<QuadExt>> = self.rows.iter().map(|r| Form::one_form(r)).collect();
        alpha.substitute(&images)
    }

    /// Transforms a matrix acting on standard covector coordinates into `E`-coordinates: `M C Mᵀ`.
    pub fn conjugate(&self, c: &[Vec<QuadExt>]) -> Vec<Vec<QuadExt>> {
        let mt: Vec<Vec<QuadExt>> = (0..8).map(|i| (0..8).map(|a| self.rows[a][i].clone()).collect()).collect();
        crate::linalg::mat_mul(&crate::linalg::mat_mul(&self.rows, c), &mt)
    }
}

/// The sixteen monomials of `Ω` in the adapted coframe, as (1-based indices, coefficient).
pub fn displayed_omega_terms() -> Vec<([usize; 4], QuadExt)> {
    let one = || QuadExt::int(1);
    let m1 = || QuadExt::int(-1);
    let r3 = QuadExt::sqrt3;
    vec![
        ([1, 2, 4, 7], m1()),
        ([1, 2, 4, 8], r3()),
        ([1, 2, 5, 6], m1()),
        ([1, 3, 4, 6], m1()),
        ([1, 3, 5, 7], one()),
        ([1, 3, 5, 8], r3()),
        ([1, 4, 5, 8], QuadExt::int(2)),
        ([1, 6, 7, 8], m1()),
        ([2, 3, 4, 5], m1()),
        ([2, 3, 6, 7], QuadExt::int(2)),
        ([2, 4, 6, 7], -r3()),
        ([2, 4, 6, 8], one()),
        ([2, 5, 7, 8], m1()),
        ([3, 4, 7, 8], m1()),
        ([3, 5, 6, 7], -r3()),
        ([3, 5, 6, 8], m1()),
    ]
}

/// The displayed sixteen-term expression as a form in `E¹ … E⁸`.
pub fn displayed_omega() -> Form<QuadExt> {
    displayed_omega_terms().into_iter().fold(Form::zero(8), |acc, (idx, c)| {
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        acc.add(&Form::from_indices(8, &zero_based, c))
    })
}

/// `Ω` rewritten in the adapted coframe.
pub fn omega_in_e_basis() -> Form<QuadExt> {
    static CACHE: OnceLock<Form<QuadExt>> = OnceLock::new();
    CACHE.get_or_init(|| AdaptedBasis::standard().to_adapted(&omega_standard())).clone()
}

/// Monomials where the computed and displayed forms disagree: (mask, computed, displayed).
pub fn omega_display_diff() -> Vec<(u32, QuadExt, QuadExt)> {
    let got = omega_in_e_basis();
    let want = displayed_omega();
    let diff = got.sub(&want);
    diff.terms().map(|(m, _)| (m, got.coeff(m), want.coeff(m))).collect()
}

/// Unit vector `E_{a+1}` in `E`-coordinates.
pub fn e_unit(a: usize) -> Vec<QuadExt> {
    (0..8).map(|i| QuadExt::int(i64::from(i == a))).collect()
}

/// `β¹ = (E₂∧E₃)⨼Ω`, `β² = (E₃∧E₁)⨼Ω`, `β³ = (E₁∧E₂)⨼Ω`, all in `E`-coordinates.
pub fn beta_forms() -> [Form<QuadExt>; 3] {
    static CACHE: OnceLock<[Form<QuadExt>; 3]> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let omega = omega_in_e_basis();
            [(1, 2), (2, 0), (0, 1)].map(|(a, b)| omega.contract_bivector(&e_unit(a), &e_unit(b)))
        })
        .clone()
}

/// Whether a form in `E`-coordinates involves only `E⁴ … E⁸`.
pub fn lies_in_s4(alpha: &Form<QuadExt>) -> bool {
    alpha.terms().all(|(m, _)| m & 0b111 == 0)
}

/// Number of nonzero monomials of a form.
pub fn monomial_count<R: Ring>(alpha: &Form<R>) -> usize {
    alpha.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::volume;

    #[test]
    fn standard_omega_shape() {
        let om = omega_standard();
        assert_eq!(om.coeff_of(&[0, 1, 2, 3]), QuadExt::int(3));
        assert_eq!(om.coeff_of(&[0, 1, 4, 5]), QuadExt::int(1));
        assert_eq!(om.degree(), Some(4));
        assert_eq!(monomial_count(&om), 14);
        let top = om.wedge(&om);
        assert!(!top.is_zero());
        assert_eq!(top, volume::<QuadExt>(8).scale(&top.coeff((1 << 8) - 1)));
    }

    #[test]
    fn adapted_basis_is_orthonormal_and_invertible() {
        let b = AdaptedBasis::standard();
        assert!(b.is_orthonormal());
        let om = omega_standard();
        assert_eq!(b.to_standard(&b.to_adapted(&om)), om);
    }

    #[test]
    fn e_basis_matches_display() {
        assert!(omega_display_diff().is_empty(), "{:?}", omega_display_diff());
        let om = omega_in_e_basis();
        assert_eq!(om.coeff_of(&[0, 1, 3, 6]), QuadExt::int(-1));
        assert_eq!(om.coeff_of(&[0, 1, 3, 7]), QuadExt::sqrt3());
        assert_eq!(om.coeff_of(&[0, 3, 4, 7]), QuadExt::int(2));
    }

    #[test]
    fn betas_live_on_s4_and_are_nondegenerate() {
        for b in beta_forms() {
            assert!(lies_in_s4(&b));
            for a in 0..3 {
                assert!(b.contract_vec(&e_unit(a)).is_zero());
            }
            assert!(!b.wedge(&b).is_zero());
        }
    }
}
