use nalgebra::DMatrix;

use super::algebra::LieAlgebraData;

/// `Ad(exp(tZ)) = exp(t·ad Z)` as a floating-point matrix (columns are images of basis elements).
///
/// Uses nalgebra's Padé scaling-and-squaring exponential.
pub fn ad_exp(alg: &LieAlgebraData, z: &[f64], t: f64) -> DMatrix<f64> {
    (alg.ad_float(z) * t).exp()
}

/// Largest defect of `Ad(exp(tZ))` preserving the Killing form: `‖AᵀKA − K‖_∞`.
pub fn killing_defect(alg: &LieAlgebraData, z: &[f64], t: f64) -> f64 {
    let n = alg.dim();
    let k = alg.killing_matrix();
    let kf = DMatrix::from_fn(n, n, |i, j| k[i][j].to_f64());
    let a = ad_exp(alg, z, t);
    let d = a.transpose() * &kf * &a - &kf;
    d.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}
