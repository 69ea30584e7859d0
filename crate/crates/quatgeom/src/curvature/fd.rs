use nalgebra::DMatrix;

use super::metric::MetricFamily;
use super::CurvatureError;

/// Central-difference step for both the Christoffel symbols and their derivatives.
pub const FD_STEP: f64 = 1e-4;

const DIM: usize = 8;
const SERIES_TERMS: usize = 30;

/// `g⁻¹ ∂g/∂xᵃ` for `g = exp(Σ xⁱeᵢ)`: columns of `Σₖ (−1)ᵏ adₓᵏ / (k+1)!`.
fn left_trivialized_differential(metric: &MetricFamily, x: &[f64]) -> DMatrix<f64> {
    let ad = metric.algebra().ad_float(x);
    let mut sum = DMatrix::zeros(DIM, DIM);
    let mut power = DMatrix::identity(DIM, DIM);
    let mut coeff = 1.0;
    for k in 0..SERIES_TERMS {
        sum += &power * coeff;
        power = &power * &ad;
        coeff *= -1.0 / (k as f64 + 2.0);
    }
    sum
}

/// Metric components in the chart `y = (x², …, x⁸, t)`: exponential coordinates on SU(3)
/// with `x¹ = 0`, which is transverse to the degenerate direction `e₁`.
fn metric_in_chart(metric: &MetricFamily, y: &[f64]) -> DMatrix<f64> {
    let mut x = [0.0; DIM];
    x[1..].copy_from_slice(&y[..DIM - 1]);
    let coframe = metric.coframe_at(y[DIM - 1]);
    let dexp = left_trivialized_differential(metric, &x);
    let mut jac = DMatrix::zeros(DIM + 1, DIM);
    jac.view_mut((0, 0), (DIM, DIM - 1)).copy_from(&dexp.columns(1, DIM - 1));
    jac[(DIM, DIM - 1)] = 1.0;
    let f = coframe * jac;
    f.transpose() * f
}

fn shifted(y: &[f64], c: usize, delta: f64) -> Vec<f64> {
    let mut out = y.to_vec();
    out[c] += delta;
    out
}

/// `Γᵃ_bc` at index `(a·n + b)·n + c`.
fn christoffel(metric: &MetricFamily, y: &[f64], step: f64) -> Vec<f64> {
    let g = metric_in_chart(metric, y);
    let g_inv = g.try_inverse().expect("metric is positive definite inside the interval");
    let dg: Vec<DMatrix<f64>> = (0..DIM)
        .map(|c| {
            (metric_in_chart(metric, &shifted(y, c, step)) - metric_in_chart(metric, &shifted(y, c, -step)))
                / (2.0 * step)
        })
        .collect();
    let mut gamma = vec![0.0; DIM * DIM * DIM];
    for a in 0..DIM {
        for b in 0..DIM {
            for c in 0..DIM {
                gamma[(a * DIM + b) * DIM + c] = 0.5
                    * (0..DIM).map(|d| g_inv[(a, d)] * (dg[b][(d, c)] + dg[c][(d, b)] - dg[d][(b, c)])).sum::<f64>();
            }
        }
    }
    gamma
}

/// Ricci tensor by finite differences in exponential coordinates, expressed in the
/// orthonormal frame dual to the coframe at `t`. Independent of the Cartan solver: it
/// uses only the coframe values and the exponential map.
pub fn fd_ricci(metric: &MetricFamily, t: f64, step: f64) -> Result<DMatrix<f64>, CurvatureError> {
    let end = metric.space().t_end();
    if t - 2.0 * step <= 0.0 || t + 2.0 * step >= end {
        return Err(CurvatureError::OutOfRange { t, end });
    }
    let mut y = vec![0.0; DIM];
    y[DIM - 1] = t;
    let idx = |a: usize, b: usize, c: usize| (a * DIM + b) * DIM + c;
    let gamma = christoffel(metric, &y, step);
    let d_gamma: Vec<Vec<f64>> = (0..DIM)
        .map(|c| {
            let plus = christoffel(metric, &shifted(&y, c, step), step);
            let minus = christoffel(metric, &shifted(&y, c, -step), step);
            plus.iter().zip(&minus).map(|(p, m)| (p - m) / (2.0 * step)).collect()
        })
        .collect();
    // R_bd = ∂ₐΓᵃ_bd − ∂_dΓᵃ_ba + Γᵃ_ae Γᵉ_bd − Γᵃ_de Γᵉ_ba
    let ricci_chart = DMatrix::from_fn(DIM, DIM, |b, d| {
        let mut r = 0.0;
        for a in 0..DIM {
            r += d_gamma[a][idx(a, b, d)] - d_gamma[d][idx(a, b, a)];
            for e in 0..DIM {
                r += gamma[idx(a, a, e)] * gamma[idx(e, b, d)] - gamma[idx(a, d, e)] * gamma[idx(e, b, a)];
            }
        }
        r
    });
    // At x = 0 the chart basis is (e₂, …, e₈, ∂t); its frame components are the coframe columns.
    let coframe = metric.coframe_at(t).columns(1, DIM).into_owned();
    let frame = coframe.try_inverse().ok_or(CurvatureError::DegenerateCoframe)?;
    Ok(frame.transpose() * ricci_chart * frame)
}
