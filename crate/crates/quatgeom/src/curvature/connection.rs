use nalgebra::{DMatrix, DVector};

use super::jet::{JetMat, JET_ORDER};
use super::CurvatureError;

/// Singular values below this (relative to the largest) count as zero in the rank check.
const RANK_TOL: f64 = 1e-10;

/// A coframe on an invariant complex, expanded to second order in `t` at one point.
///
/// The complex has generators `w¹ … wⁿ` dual to a Lie algebra basis with structure
/// constants `c`, optionally followed by `dt`. The frame covectors span a subspace;
/// `completion` lists generators added to make a basis `θ` of the whole complex (for the
/// Wolf spaces, `e¹`, along which every frame covector vanishes).
#[derive(Clone, Debug)]
pub struct CoframeJet {
    frame: JetMat,
    completion: Vec<usize>,
    structure: Vec<f64>,
    algebra_dim: usize,
    dt: Option<usize>,
}

impl CoframeJet {
    pub fn new(frame: JetMat, completion: Vec<usize>, structure: Vec<f64>, algebra_dim: usize, with_dt: bool) -> Self {
        let cols = algebra_dim + usize::from(with_dt);
        assert_eq!(frame.shape().1, cols, "frame width must match the complex");
        assert_eq!(frame.shape().0 + completion.len(), cols, "frame plus completion must be square");
        assert_eq!(structure.len(), algebra_dim.pow(3));
        CoframeJet { frame, completion, structure, algebra_dim, dt: with_dt.then_some(algebra_dim) }
    }

    pub fn frame(&self) -> &JetMat {
        &self.frame
    }

    pub fn frame_len(&self) -> usize {
        self.frame.shape().0
    }

    pub fn cols(&self) -> usize {
        self.frame.shape().1
    }

    /// Replaces the frame by `Q·frame` for a constant matrix `Q`.
    pub fn rotated(&self, q: &DMatrix<f64>) -> CoframeJet {
        CoframeJet { frame: self.frame.map_coeffs(|m| q * m), ..self.clone() }
    }

    /// `θ` as rows of a square matrix: frame covectors, then the completion.
    fn theta(&self) -> JetMat {
        let n = self.cols();
        let nf = self.frame_len();
        let mut p = JetMat::zeros(n, n);
        for k in 0..JET_ORDER {
            let c = p.coeff_mut(k);
            c.rows_mut(0, nf).copy_from(self.frame.coeff(k));
            if k == 0 {
                for (r, &g) in self.completion.iter().enumerate() {
                    c[(nf + r, g)] = 1.0;
                }
            }
        }
        p
    }

    /// Exterior derivative of a 1-form (column of coefficients) as an antisymmetric matrix
    /// `M` with `α = Σ_{a<b} M_ab wᵃ∧wᵇ`.
    fn d_one_form(&self, alpha: &JetMat) -> JetMat {
        let n = self.cols();
        let na = self.algebra_dim;
        let mut out = JetMat::zeros(n, n);
        for k in 0..JET_ORDER {
            let a = alpha.coeff(k);
            let m = out.coeff_mut(k);
            for g in 0..na {
                let ag = a[(g, 0)];
                if ag == 0.0 {
                    continue;
                }
                for i in 0..na {
                    for j in 0..na {
                        m[(i, j)] -= ag * self.structure[(i * na + j) * na + g];
                    }
                }
            }
        }
        if let Some(dt) = self.dt {
            let fp = alpha.derivative();
            for k in 0..JET_ORDER {
                let col = fp.coeff(k).clone();
                let m = out.coeff_mut(k);
                for a in 0..n {
                    m[(dt, a)] += col[(a, 0)];
                    m[(a, dt)] -= col[(a, 0)];
                }
            }
        }
        out
    }
}

fn wedge11(a: &JetMat, b: &JetMat) -> JetMat {
    a.mul(&b.transpose()).sub(&b.mul(&a.transpose()))
}

fn row_as_column(m: &JetMat, i: usize) -> JetMat {
    m.map_coeffs(|c| DMatrix::from_column_slice(c.ncols(), 1, c.row(i).transpose().as_slice()))
}

/// Levi-Civita connection forms `ωⁱⱼ` of the metric making the frame orthonormal.
#[derive(Clone, Debug)]
pub struct ConnectionForms {
    frame_len: usize,
    cols: usize,
    /// `Γⁱⱼ_c = ωⁱⱼ(Θ_c)` in the `θ`-basis, index `i·nf + j`, each a `cols × 1` jet.
    gamma: Vec<JetMat>,
    /// `ωⁱⱼ` on the generators of the complex.
    omega: Vec<JetMat>,
    /// `max |dθⁱ + ωⁱⱼ ∧ θʲ|` at the base point.
    pub residual: f64,
    /// `max |ωⁱⱼ + ωʲᵢ|`.
    pub antisymmetry_defect: f64,
    /// Rank of the linear structure-equation system and its number of unknowns.
    pub rank: usize,
    pub unknowns: usize,
}

impl ConnectionForms {
    /// `ωⁱⱼ(Θ_c)` at the base point, `Θ` the basis dual to `θ`.
    pub fn gamma(&self, i: usize, j: usize, c: usize) -> f64 {
        self.gamma[i * self.frame_len + j].value()[(c, 0)]
    }

    pub fn omega(&self, i: usize, j: usize) -> &JetMat {
        &self.omega[i * self.frame_len + j]
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Solves `dθⁱ = −ωⁱⱼ ∧ θʲ` with `ωⁱⱼ = −ωʲᵢ` order by order in `t`.
///
/// In the `θ`-basis the system has constant coefficients: the unknowns `Γⁱⱼ_c` (`i < j`)
/// enter `(dθⁱ)_{ab}` only through Kronecker deltas. It is solved by least squares and its
/// rank is compared with the number of unknowns.
pub fn levi_civita(cf: &CoframeJet) -> Result<ConnectionForms, CurvatureError> {
    let n = cf.cols();
    let nf = cf.frame_len();
    let p = cf.theta();
    let pinv = p.inverse().ok_or(CurvatureError::DegenerateCoframe)?;
    let to_theta = |m: &JetMat| pinv.transpose().mul(m).mul(&pinv);

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let var = |i: usize, j: usize, c: usize| -> (usize, f64) {
        // Unknown Γⁱⱼ_c with i < j; Γʲᵢ = −Γⁱⱼ.
        let (lo, hi, s) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
        let pair_index = lo * nf - lo * (lo + 1) / 2 + (hi - lo - 1);
        (pair_index * n + c, s)
    };
    let unknowns = nf * (nf - 1) / 2 * n;
    let mut a_mat: DMatrix<f64> = DMatrix::zeros(nf * pairs.len(), unknowns);
    for i in 0..nf {
        for (r, &(a, b)) in pairs.iter().enumerate() {
            let row = i * pairs.len() + r;
            // (ωⁱⱼ ∧ θʲ)_{ab} = Γⁱ_{b,a} − Γⁱ_{a,b} for frame indices a, b.
            if b < nf && b != i {
                let (v, s) = var(i, b, a);
                a_mat[(row, v)] += s;
            }
            if a < nf && a != i {
                let (v, s) = var(i, a, b);
                a_mat[(row, v)] -= s;
            }
        }
    }
    let svd = a_mat.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let rank = svd.singular_values.iter().filter(|s| **s > RANK_TOL * smax).count();
    if rank < unknowns {
        return Err(CurvatureError::RankDeficient { rank, unknowns });
    }
    // Full column rank: the normal equations are positive definite and well conditioned
    // (the entries of A are 0, ±1).
    let normal = (a_mat.transpose() * &a_mat).cholesky().ok_or(CurvatureError::DegenerateCoframe)?;

    let d_theta: Vec<JetMat> = (0..nf).map(|i| to_theta(&cf.d_one_form(&row_as_column(cf.frame(), i)))).collect();
    let mut solution = Vec::with_capacity(JET_ORDER);
    for k in 0..JET_ORDER {
        let rhs = DVector::from_iterator(
            nf * pairs.len(),
            (0..nf)
                .flat_map(|i| pairs.iter().map(move |&(a, b)| (i, a, b)))
                .map(|(i, a, b)| -d_theta[i].coeff(k)[(a, b)]),
        );
        solution.push(normal.solve(&(a_mat.transpose() * rhs)));
    }

    let mut gamma = vec![JetMat::zeros(n, 1); nf * nf];
    for i in 0..nf {
        for j in 0..nf {
            if i == j {
                continue;
            }
            let coeffs = (0..JET_ORDER)
                .map(|k| {
                    DMatrix::from_fn(n, 1, |c, _| {
                        let (v, s) = var(i, j, c);
                        s * solution[k][v]
                    })
                })
                .collect();
            gamma[i * nf + j] = JetMat::from_coeffs(coeffs);
        }
    }
    // ωⁱⱼ = Σ_c Γⁱⱼ_c θᶜ, on the generators: Pᵀ Γ.
    let omega: Vec<JetMat> = gamma.iter().map(|g| p.transpose().mul(g)).collect();

    let mut residual = 0.0f64;
    for i in 0..nf {
        let mut s = cf.d_one_form(&row_as_column(cf.frame(), i));
        for j in 0..nf {
            s = s.add(&wedge11(&omega[i * nf + j], &row_as_column(cf.frame(), j)));
        }
        residual = residual.max(s.value().amax());
    }
    let mut antisymmetry_defect = 0.0f64;
    for i in 0..nf {
        for j in 0..nf {
            antisymmetry_defect =
                antisymmetry_defect.max((omega[i * nf + j].value() + omega[j * nf + i].value()).amax());
        }
    }
    Ok(ConnectionForms { frame_len: nf, cols: n, gamma, omega, residual, antisymmetry_defect, rank, unknowns })
}

/// Curvature of the connection at the base point.
#[derive(Clone, Debug)]
pub struct Curvature {
    /// `Ric(Fⱼ, Fₖ)` in the orthonormal frame.
    pub ricci: DMatrix<f64>,
    /// Largest curvature component along the completion directions (zero for a basic form).
    pub basic_defect: f64,
}

impl Curvature {
    pub fn scalar(&self) -> f64 {
        self.ricci.trace()
    }

    /// `‖Ric − (s/n)·Id‖_∞`.
    pub fn einstein_deviation(&self) -> f64 {
        let n = self.ricci.nrows();
        (&self.ricci - DMatrix::identity(n, n) * (self.scalar() / n as f64)).amax()
    }
}

/// `Ωⁱⱼ = dωⁱⱼ + ωⁱₖ ∧ ωᵏⱼ`, then `Ric_{jk} = Σᵢ Ωⁱⱼ(Fᵢ, Fₖ)`.
pub fn curvature(cf: &CoframeJet, conn: &ConnectionForms) -> Result<Curvature, CurvatureError> {
    let n = cf.cols();
    let nf = cf.frame_len();
    let pinv = cf.theta().inverse().ok_or(CurvatureError::DegenerateCoframe)?;
    let mut riemann = Vec::with_capacity(nf * nf);
    for i in 0..nf {
        for j in 0..nf {
            let mut om = cf.d_one_form(conn.omega(i, j));
            for k in 0..nf {
                om = om.add(&wedge11(conn.omega(i, k), conn.omega(k, j)));
            }
            let theta = pinv.transpose().mul(&om).mul(&pinv);
            riemann.push(theta.value().clone());
        }
    }
    let ricci = DMatrix::from_fn(nf, nf, |j, k| (0..nf).map(|i| riemann[i * nf + j][(i, k)]).sum());
    let basic_defect = riemann
        .iter()
        .map(|r| (nf..n).map(|c| r.row(c).amax().max(r.column(c).amax())).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    Ok(Curvature { ricci, basic_defect })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_su3;

    fn bi_invariant() -> CoframeJet {
        let su3 = build_su3();
        CoframeJet::new(JetMat::constant(DMatrix::identity(8, 8)), vec![], su3.float_structure(), 8, false)
    }

    #[test]
    fn bi_invariant_connection_is_half_the_bracket() {
        let su3 = build_su3();
        let c = su3.float_structure();
        let cf = bi_invariant();
        let conn = levi_civita(&cf).unwrap();
        assert_eq!(conn.rank, conn.unknowns);
        // ∇_{e_a} e_b = Σᵢ ωⁱ_b(e_a) eᵢ = ½[e_a, e_b].
        for a in 0..8 {
            for b in 0..8 {
                for i in 0..8 {
                    let want = 0.5 * c[(a * 8 + b) * 8 + i];
                    assert!((conn.gamma(i, b, a) - want).abs() < 1e-12, "{a} {b} {i}");
                }
            }
        }
        assert!(conn.residual < 1e-12);
    }

    #[test]
    fn bi_invariant_ricci_is_a_quarter_of_minus_killing() {
        let cf = bi_invariant();
        let conn = levi_civita(&cf).unwrap();
        let curv = curvature(&cf, &conn).unwrap();
        // κ = −12·Id on this basis, so Ric = −κ/4 = 3·Id.
        assert!((curv.ricci.clone() - DMatrix::identity(8, 8) * 3.0).amax() < 1e-12);
        assert!(curv.einstein_deviation() < 1e-12);
    }
}
