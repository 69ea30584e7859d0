use nalgebra::DMatrix;

use crate::scalars::{rat, rational_to_f64, Rational};

/// Coefficients of `tan²(2t)·h′²` on the diagonal of the G₂/SO(4) Ricci tensor; the
/// constant part of every diagonal entry is 8.
fn diagonal_coefficients() -> [Rational; 8] {
    [rat(-1, 3), rat(-1, 3), rat(0, 1), rat(0, 1), rat(-4, 3), rat(0, 1), rat(1, 3), rat(1, 3)]
}

/// The closed-form Ricci tensor of the perturbed G₂/SO(4) metric in the orthonormal frame,
/// given `h′(t)` and `h″(t)`.
pub fn g2_tabulated_ricci(h1: f64, h2: f64, t: f64) -> DMatrix<f64> {
    let tan = (2.0 * t).tan();
    let sqrt3 = 3f64.sqrt();
    let diag = diagonal_coefficients();
    let mut m =
        DMatrix::from_fn(8, 8, |i, j| if i == j { 8.0 + rational_to_f64(&diag[i]) * tan * tan * h1 * h1 } else { 0.0 });
    let quadratic = -sqrt3 * h1 * h1 * (3.0 + (4.0 * t).cos()) / (6.0 * (2.0 * t).cos().powi(2));
    let linear = -tan * h2 / 3.0 - 4.0 * h1;
    let mut put = |i: usize, j: usize, v: f64| {
        m[(i, j)] = v;
        m[(j, i)] = v;
    };
    put(0, 6, quadratic);
    put(0, 7, linear);
    put(1, 6, linear);
    put(1, 7, -quadratic);
    put(4, 5, 4.0 / 3.0 * tan * tan * sqrt3 * h1);
    m
}

/// Scalar curvature of the `h = c·log sin(2t)` metric: `tan(2t)·h′ = 2c` is constant.
pub fn logsin_scalar_curvature(c: f64) -> f64 {
    64.0 - 16.0 * c * c / 3.0
}

/// Exact check that the trace of the closed form is `64 − (4/3)·tan²(2t)·h′²`: the only
/// trace contributions are the diagonal coefficients, which must sum to `−4/3`.
pub fn tabulated_trace_identity() -> bool {
    let sum: Rational = diagonal_coefficients().iter().sum();
    sum == rat(-4, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_matches_the_scalar_formula() {
        assert!(tabulated_trace_identity());
        let (h1, t) = (-0.7f64, 0.31f64);
        let tan = (2.0 * t).tan();
        let m = g2_tabulated_ricci(h1, 1.3, t);
        assert!((m.trace() - (64.0 - 4.0 / 3.0 * tan * tan * h1 * h1)).abs() < 1e-12);
    }

    #[test]
    fn logsin_constant() {
        let c = 0.5;
        let t = 0.27f64;
        let h1 = c * 2.0 * (2.0 * t).cos() / (2.0 * t).sin();
        assert!((g2_tabulated_ricci(h1, 0.0, t).trace() - logsin_scalar_curvature(c)).abs() < 1e-12);
    }
}
