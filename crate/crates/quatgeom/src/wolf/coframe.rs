use nalgebra::DMatrix;

use crate::exterior::Form;
use crate::scalars::{qx, QuadExt, TrigPoly};

/// Number of columns of a coframe: `e¹ … e⁸` followed by `dt`.
pub const COLS: usize = 9;
/// Column index of `dt`.
pub const DT: usize = 8;

/// A t-dependent coframe `ẽ¹(t) … ẽ⁸(t)` on `𝔰𝔲(3) ⊕ ℝ`, stored as an 8×9 matrix
/// whose row `i` holds the coefficients of `ẽⁱ⁺¹` on `e¹ … e⁸, dt`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoframeFamily {
    rows: Vec<Vec<TrigPoly>>,
}

impl CoframeFamily {
    pub fn new(rows: Vec<Vec<TrigPoly>>) -> Self {
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.len() == COLS));
        CoframeFamily { rows }
    }

    /// Builds a coframe from sparse `(row, column, coefficient)` entries.
    pub fn from_entries(entries: Vec<(usize, usize, TrigPoly)>) -> Self {
        let mut rows = vec![vec![TrigPoly::zero(); COLS]; 8];
        for (i, j, p) in entries {
            rows[i][j] = rows[i][j].add(&p);
        }
        CoframeFamily::new(rows)
    }

    pub fn rows(&self) -> &[Vec<TrigPoly>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &TrigPoly {
        &self.rows[i][j]
    }

    pub fn eval(&self, t: f64) -> DMatrix<f64> {
        DMatrix::from_fn(8, COLS, |i, j| self.rows[i][j].eval(t))
    }

    /// Exact values at `t = mπ/12`.
    pub fn eval_pi12(&self, m: i64) -> Vec<Vec<QuadExt>> {
        self.rows.iter().map(|r| r.iter().map(|p| p.eval_pi12(m)).collect()).collect()
    }

    /// `ẽⁱ` as a 1-form of rank 9 (0-based `i`).
    pub fn covector(&self, i: usize) -> Form<TrigPoly> {
        Form::one_form(&self.rows[i])
    }

    pub fn forms(&self) -> Vec<Form<TrigPoly>> {
        (0..8).map(|i| self.covector(i)).collect()
    }

    /// `Σᵢ ẽⁱ ⊗ ẽⁱ` as a symmetric 9×9 matrix of trigonometric polynomials.
    pub fn gram(&self) -> Vec<Vec<TrigPoly>> {
        let mut g = vec![vec![TrigPoly::zero(); COLS]; COLS];
        for row in &self.rows {
            for a in 0..COLS {
                if row[a].is_zero() {
                    continue;
                }
                for b in 0..COLS {
                    if !row[b].is_zero() {
                        g[a][b] = g[a][b].add(&row[a].mul(&row[b]));
                    }
                }
            }
        }
        g
    }

    /// Does every covector vanish on `e₁` identically?
    pub fn annihilates_e1(&self) -> bool {
        self.rows.iter().all(|r| r[0].is_zero())
    }

    /// Index of the unique covector with an `e⁸` component, if unique.
    pub fn e8_row(&self) -> Option<usize> {
        let hits: Vec<usize> = (0..8).filter(|&i| !self.rows[i][7].is_zero()).collect();
        (hits.len() == 1).then(|| hits[0])
    }

    /// Applies `ẽⁱ ↦ ẽⁱ + δᵢₖ·f·dt`.
    pub fn with_dt_shift(&self, row: usize, f: &TrigPoly) -> CoframeFamily {
        let mut rows = self.rows.clone();
        rows[row][DT] = rows[row][DT].add(f);
        CoframeFamily { rows }
    }

    /// Substitutes `e⁸ ↦ e⁸ + f·dt` in every covector.
    pub fn with_e8_substitution(&self, f: &TrigPoly) -> CoframeFamily {
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            if !r[7].is_zero() {
                r[DT] = r[DT].add(&r[7].mul(f));
            }
        }
        CoframeFamily { rows }
    }
}

fn cos(k: u32, c: QuadExt) -> TrigPoly {
    TrigPoly::cos(k, c)
}

fn sin(k: u32, c: QuadExt) -> TrigPoly {
    TrigPoly::sin(k, c)
}

fn konst(c: QuadExt) -> TrigPoly {
    TrigPoly::constant(c)
}

/// Closed-form pulled-back coframe of ℍP(2) (orbit map through `Q₁`).
pub fn hp2_coframe() -> CoframeFamily {
    let four_r2 = qx(4, 1, 2);
    let four = QuadExt::int(4);
    CoframeFamily::from_entries(vec![
        (0, 5, cos(2, four_r2.clone())),
        (1, 6, cos(2, -&four_r2)),
        (2, DT, konst(four_r2)),
        (3, 7, sin(2, qx(4, 3, 6))),
        (4, 1, cos(1, four.clone())),
        (4, 3, cos(1, four.clone())),
        (5, 2, cos(1, four.clone())),
        (5, 4, cos(1, four.clone())),
        (6, 1, sin(1, four.clone())),
        (6, 3, sin(1, -&four)),
        (7, 2, sin(1, four.clone())),
        (7, 4, sin(1, -&four)),
    ])
}

/// Closed-form pulled-back coframe of Gr₂(ℂ⁴) (orbit map through `C₅`).
pub fn gr2_coframe() -> CoframeFamily {
    let r = qx(2, 1, 2);
    let four = QuadExt::int(4);
    CoframeFamily::from_entries(vec![
        (0, 1, cos(1, r.clone())),
        (0, 3, cos(1, r.clone())),
        (1, 2, cos(1, r.clone())),
        (1, 4, cos(1, r.clone())),
        (2, DT, konst(four.clone())),
        (3, 7, sin(2, qx(-4, 3, 3))),
        (4, 5, konst(four.clone())),
        (5, 6, konst(-&four)),
        (6, 1, sin(1, -&r)),
        (6, 3, sin(1, r.clone())),
        (7, 2, sin(1, r.clone())),
        (7, 4, sin(1, -&r)),
    ])
}

/// Closed-form pulled-back coframe of G₂/SO(4) (orbit map through `W₃`).
///
/// The second covector is `ẽ² = −(√2/2)(cos³t − sin³t)e³ − (√2/2)(cos³t + sin³t)e⁵`.
pub fn g2_coframe() -> CoframeFamily {
    let one = QuadExt::int(1);
    let c = cos(1, one.clone());
    let s = sin(1, one.clone());
    let c3 = c.mul(&c).mul(&c);
    let s3 = s.mul(&s).mul(&s);
    let half_r2 = qx(1, 2, 2);
    let minus = c3.sub(&s3).scale(&half_r2);
    let plus = c3.add(&s3).scale(&half_r2);
    // −√(3/8)·sin 2t = −(√6/4)·sin 2t
    let lead = sin(2, qx(-1, 4, 6));
    let s_minus_c = lead.mul(&s.sub(&c));
    let s_plus_c = lead.mul(&s.add(&c));
    CoframeFamily::from_entries(vec![
        (0, 1, minus.clone()),
        (0, 3, plus.clone()),
        (1, 2, minus.neg()),
        (1, 4, plus.neg()),
        (2, 5, konst(-&one)),
        (3, 6, konst(one)),
        (4, DT, konst(QuadExt::sqrt3())),
        (5, 7, sin(2, QuadExt::int(-1))),
        (6, 1, s_minus_c.clone()),
        (6, 3, s_plus_c.clone()),
        (7, 2, s_minus_c),
        (7, 4, s_plus_c),
    ])
}

/// The matrix of `X ↦ [Ad(exp(−tQ₁))X]_𝔭` for ℍP(2) in the bases `e₁ … e₈` and
/// `P₁, P₄, Q₁, Q₄, P₂, P₅, Q₂, Q₅`, as displayed alongside the orbit map.
pub fn hp2_displayed_ad_block() -> Vec<Vec<TrigPoly>> {
    let half_r2 = qx(1, 2, 2);
    let mut m = vec![vec![TrigPoly::zero(); 8]; 8];
    m[0][5] = cos(2, QuadExt::int(1));
    m[1][6] = cos(2, QuadExt::int(-1));
    m[3][7] = sin(2, qx(1, 3, 3));
    m[4][1] = cos(1, half_r2.clone());
    m[4][3] = cos(1, half_r2.clone());
    m[5][2] = cos(1, half_r2.clone());
    m[5][4] = cos(1, half_r2.clone());
    m[6][1] = sin(1, half_r2.clone());
    m[6][3] = sin(1, -&half_r2);
    m[7][2] = sin(1, half_r2.clone());
    m[7][4] = sin(1, -&half_r2);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    #[test]
    fn coframes_annihilate_e1() {
        for cf in [hp2_coframe(), gr2_coframe(), g2_coframe()] {
            assert!(cf.annihilates_e1());
        }
    }

    #[test]
    fn e8_rows() {
        assert_eq!(hp2_coframe().e8_row(), Some(3));
        assert_eq!(gr2_coframe().e8_row(), Some(3));
        assert_eq!(g2_coframe().e8_row(), Some(5));
    }

    #[test]
    fn g2_cubic_coefficients_evaluate_correctly() {
        let cf = g2_coframe();
        let t: f64 = 0.37;
        let (c, s) = (t.cos(), t.sin());
        let want = std::f64::consts::SQRT_2 / 2.0 * (c.powi(3) - s.powi(3));
        assert!((cf.entry(0, 1).eval(t) - want).abs() < 1e-14);
        let want7 = -(3.0f64 / 8.0).sqrt() * (2.0 * t).sin() * (s + c);
        assert!((cf.entry(6, 3).eval(t) - want7).abs() < 1e-14);
    }

    #[test]
    fn hp2_fourth_covector_vanishes_at_zero() {
        let m = hp2_coframe().eval_pi12(0);
        assert!(m[3].iter().all(|x| x.is_zero()));
    }
}
