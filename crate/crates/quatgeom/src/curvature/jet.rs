use nalgebra::DMatrix;

/// Number of Taylor coefficients carried: value, first and second derivative. Curvature
/// needs the coframe to second order.
pub const JET_ORDER: usize = 3;

/// A matrix-valued truncated Taylor series `Σₙ Aₙ τⁿ` around a fixed `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct JetMat {
    coeffs: Vec<DMatrix<f64>>,
}

impl JetMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        JetMat { coeffs: vec![DMatrix::zeros(rows, cols); JET_ORDER] }
    }

    pub fn constant(m: DMatrix<f64>) -> Self {
        let (r, c) = m.shape();
        let mut out = JetMat::zeros(r, c);
        out.coeffs[0] = m;
        out
    }

    pub fn from_coeffs(coeffs: Vec<DMatrix<f64>>) -> Self {
        assert_eq!(coeffs.len(), JET_ORDER);
        JetMat { coeffs }
    }

    pub fn shape(&self) -> (usize, usize) {
        self.coeffs[0].shape()
    }

    pub fn value(&self) -> &DMatrix<f64> {
        &self.coeffs[0]
    }

    pub fn coeff(&self, n: usize) -> &DMatrix<f64> {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut DMatrix<f64> {
        &mut self.coeffs[n]
    }

    /// Taylor coefficients of the `(i, j)` entry.
    pub fn entry(&self, i: usize, j: usize) -> [f64; JET_ORDER] {
        std::array::from_fn(|n| self.coeffs[n][(i, j)])
    }

    pub fn set_entry(&mut self, i: usize, j: usize, jet: &[f64]) {
        for (n, c) in self.coeffs.iter_mut().enumerate() {
            c[(i, j)] = jet.get(n).copied().unwrap_or(0.0);
        }
    }

    pub fn add(&self, other: &JetMat) -> JetMat {
        JetMat { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &JetMat) -> JetMat {
        JetMat { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: f64) -> JetMat {
        JetMat { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by a scalar series.
    pub fn scale_jet(&self, c: &[f64]) -> JetMat {
        let mut out = JetMat::zeros(self.shape().0, self.shape().1);
        for n in 0..JET_ORDER {
            for k in 0..=n {
                out.coeffs[n] += &self.coeffs[k] * c[n - k];
            }
        }
        out
    }

    pub fn mul(&self, other: &JetMat) -> JetMat {
        let mut out = JetMat::zeros(self.shape().0, other.shape().1);
        for n in 0..JET_ORDER {
            for k in 0..=n {
                out.coeffs[n] += &self.coeffs[k] * &other.coeffs[n - k];
            }
        }
        out
    }

    pub fn transpose(&self) -> JetMat {
        JetMat { coeffs: self.coeffs.iter().map(DMatrix::transpose).collect() }
    }

    /// Series inverse: `Q₀ = P₀⁻¹`, `Qₙ = −Q₀ Σ_{k≥1} Pₖ Qₙ₋ₖ`.
    pub fn inverse(&self) -> Option<JetMat> {
        let q0 = self.coeffs[0].clone().try_inverse()?;
        let mut q = vec![q0.clone()];
        for n in 1..JET_ORDER {
            let mut s = DMatrix::zeros(q0.nrows(), q0.ncols());
            for k in 1..=n {
                s += &self.coeffs[k] * &q[n - k];
            }
            q.push(-(&q0 * s));
        }
        Some(JetMat { coeffs: q })
    }

    /// Term-wise `d/dt`, losing the top coefficient.
    pub fn derivative(&self) -> JetMat {
        let (r, c) = self.shape();
        let mut out = JetMat::zeros(r, c);
        for n in 0..JET_ORDER - 1 {
            out.coeffs[n] = &self.coeffs[n + 1] * (n + 1) as f64;
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&DMatrix<f64>) -> DMatrix<f64>) -> JetMat {
        JetMat { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(t: f64) -> DMatrix<f64> {
        DMatrix::from_row_slice(2, 2, &[2.0 + t.sin(), t * t, (3.0 * t).cos(), 1.5 + t])
    }

    fn jet_of(t: f64) -> JetMat {
        // Taylor coefficients by high-order differences of an analytic function.
        let h = 1e-3;
        let f0 = sample(t);
        let d1 = (sample(t + h) - sample(t - h)) / (2.0 * h);
        let d2 = (sample(t + h) - &f0 * 2.0 + sample(t - h)) / (h * h);
        JetMat::from_coeffs(vec![f0, d1, d2 / 2.0])
    }

    #[test]
    fn inverse_is_a_two_sided_series_inverse() {
        let p = jet_of(0.4);
        let q = p.inverse().unwrap();
        let id = p.mul(&q);
        assert!((id.value() - DMatrix::identity(2, 2)).amax() < 1e-12);
        assert!(id.coeff(1).amax() < 1e-12 && id.coeff(2).amax() < 1e-12);
    }

    #[test]
    fn derivative_shifts_coefficients() {
        let p = jet_of(0.2);
        let d = p.derivative();
        assert!((d.value() - p.coeff(1)).amax() < 1e-15);
        assert!((d.coeff(1) - p.coeff(2) * 2.0).amax() < 1e-15);
        assert_eq!(d.coeff(2).amax(), 0.0);
    }
}
