use nalgebra::SMatrix;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exterior::Form;
use crate::scalars::{Field, QuadExt, Ring, ToFloat};

use super::omega::omega_standard;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuaternionError {
    #[error("quaternionic angle of a zero vector")]
    ZeroVector,
}

/// A quaternion `re + i·i + j·j + k·k` over any coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Quat<R: Ring> {
    pub re: R,
    pub i: R,
    pub j: R,
    pub k: R,
}

impl<R: Ring> Quat<R> {
    pub fn new(re: R, i: R, j: R, k: R) -> Self {
        Quat { re, i, j, k }
    }

    pub fn zero() -> Self {
        Quat::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    pub fn real(re: R) -> Self {
        Quat::new(re, R::zero(), R::zero(), R::zero())
    }

    pub fn unit_i() -> Self {
        Quat::new(R::zero(), R::one(), R::zero(), R::zero())
    }

    pub fn unit_j() -> Self {
        Quat::new(R::zero(), R::zero(), R::one(), R::zero())
    }

    pub fn unit_k() -> Self {
        Quat::new(R::zero(), R::zero(), R::zero(), R::one())
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.re.clone(), self.i.neg(), self.j.neg(), self.k.neg())
    }

    pub fn add(&self, o: &Self) -> Self {
        Quat::new(self.re.add(&o.re), self.i.add(&o.i), self.j.add(&o.j), self.k.add(&o.k))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quat::new(self.re.sub(&o.re), self.i.sub(&o.i), self.j.sub(&o.j), self.k.sub(&o.k))
    }

    pub fn scale(&self, c: &R) -> Self {
        Quat::new(self.re.mul(c), self.i.mul(c), self.j.mul(c), self.k.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&o.re, &o.i, &o.j, &o.k);
        Quat::new(
            a1.mul(a2).sub(&b1.mul(b2)).sub(&c1.mul(c2)).sub(&d1.mul(d2)),
            a1.mul(b2).add(&b1.mul(a2)).add(&c1.mul(d2)).sub(&d1.mul(c2)),
            a1.mul(c2).sub(&b1.mul(d2)).add(&c1.mul(a2)).add(&d1.mul(b2)),
            a1.mul(d2).add(&b1.mul(c2)).sub(&c1.mul(b2)).add(&d1.mul(a2)),
        )
    }

    /// `|q|²`.
    pub fn norm2(&self) -> R {
        self.components().iter().fold(R::zero(), |acc, x| acc.add(&x.mul(x)))
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|x| x.is_zero())
    }
}

/// A vector of `ℍ²`, with quaternionic lines taken as right multiples `vℍ`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatVector<R: Ring>(pub [Quat<R>; 2]);

impl<R: Ring> QuatVector<R> {
    pub fn new(a: Quat<R>, b: Quat<R>) -> Self {
        QuatVector([a, b])
    }

    /// Reads `qₐ = x₄ₐ₊₁ − x₄ₐ₊₂ i − x₄ₐ₊₃ j − x₄ₐ₊₄ k` from standard coordinates of ℝ⁸.
    pub fn from_real(x: &[R]) -> Self {
        assert_eq!(x.len(), 8);
        let q = |a: usize| Quat::new(x[4 * a].clone(), x[4 * a + 1].neg(), x[4 * a + 2].neg(), x[4 * a + 3].neg());
        QuatVector([q(0), q(1)])
    }

    pub fn to_real(&self) -> Vec<R> {
        self.0.iter().flat_map(|q| [q.re.clone(), q.i.neg(), q.j.neg(), q.k.neg()]).collect()
    }

    /// Hermitian product `h(v, w) = Σ v̄ₐ wₐ`.
    pub fn hermitian(&self, other: &Self) -> Quat<R> {
        self.0[0].conj().mul(&other.0[0]).add(&self.0[1].conj().mul(&other.0[1]))
    }

    pub fn norm2(&self) -> R {
        self.0[0].norm2().add(&self.0[1].norm2())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Quat::is_zero)
    }

    pub fn right_mul(&self, r: &Quat<R>) -> Self {
        QuatVector([self.0[0].mul(r), self.0[1].mul(r)])
    }

    /// `M·v` for a 2×2 quaternionic matrix acting on the left.
    pub fn left_mul(m: &[[Quat<R>; 2]; 2], v: &Self) -> Self {
        let row = |a: usize| m[a][0].mul(&v.0[0]).add(&m[a][1].mul(&v.0[1]));
        QuatVector([row(0), row(1)])
    }
}

/// The quaternionic angle `Q([v],[w]) = |h(v,w)|² / (|v|²|w|²)`, exact over any field.
pub fn quaternionic_angle<F: Field>(v: &QuatVector<F>, w: &QuatVector<F>) -> Result<F, QuaternionError> {
    if v.is_zero() || w.is_zero() {
        return Err(QuaternionError::ZeroVector);
    }
    let num = v.hermitian(w).norm2();
    let den = v.norm2().mul(&w.norm2());
    num.div(&den).ok_or(QuaternionError::ZeroVector)
}

/// `Q([1:p],[1:q])` in the affine chart: `|1+p̄q|² / (|1+p̄q|² + |q−p|²)`.
pub fn affine_chart_angle<F: Field>(p: &Quat<F>, q: &Quat<F>) -> F {
    let a = Quat::real(F::one()).add(&p.conj().mul(q)).norm2();
    let b = q.sub(p).norm2();
    a.div(&a.add(&b)).expect("the denominator is at least |1+p̄q|² + |q−p|² > 0")
}

/// Exact check of `(1+|p|²)(1+|q|²) = |1+p̄q|² + |q−p|²`.
pub fn chart_identity_holds<R: Ring>(p: &Quat<R>, q: &Quat<R>) -> bool {
    let lhs = R::one().add(&p.norm2()).mul(&R::one().add(&q.norm2()));
    let rhs = Quat::real(R::one()).add(&p.conj().mul(q)).norm2().add(&q.sub(p).norm2());
    lhs == rhs
}

fn real_dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Test oracle: `max_{J ∈ Sp(1)} ⟨v, wJ⟩² / (|v|²|w|²)` found by a Hopf-coordinate grid on
/// the unit quaternions with `n³` points, followed by a derivative-free pattern search.
/// Uses only the real inner product on ℝ⁸.
pub fn angle_by_search(v: &QuatVector<f64>, w: &QuatVector<f64>, n: usize) -> f64 {
    let vr = v.to_real();
    let nv = real_dot(&vr, &vr);
    let nw = w.norm2();
    let value = |j: &[f64; 4]| {
        let jq = Quat::new(j[0], j[1], j[2], j[3]);
        let x = real_dot(&vr, &w.right_mul(&jq).to_real());
        x * x / (nv * nw)
    };
    let normalize = |j: [f64; 4]| {
        let r = j.iter().map(|x| x * x).sum::<f64>().sqrt();
        j.map(|x| x / r)
    };
    let tau = std::f64::consts::TAU;
    let mut best = [1.0, 0.0, 0.0, 0.0];
    let mut best_val = value(&best);
    for a in 0..n {
        let eta = (a as f64 + 0.5) / n as f64 * std::f64::consts::FRAC_PI_2;
        for b in 0..n {
            let x1 = b as f64 / n as f64 * tau;
            for c in 0..n {
                let x2 = c as f64 / n as f64 * tau;
                let j = [eta.cos() * x1.cos(), eta.cos() * x1.sin(), eta.sin() * x2.cos(), eta.sin() * x2.sin()];
                let val = value(&j);
                if val > best_val {
                    best_val = val;
                    best = j;
                }
            }
        }
    }
    let mut step = 0.5 / n as f64;
    while step > 1e-10 {
        let mut improved = false;
        for axis in 0..4 {
            for sign in [1.0, -1.0] {
                let mut j = best;
                j[axis] += sign * step;
                let j = normalize(j);
                let val = value(&j);
                if val > best_val {
                    best_val = val;
                    best = j;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best_val
}

/// `((v ∧ w) ⨼ Ω)³ = 0` for vectors in standard coordinates.
pub fn degenerate_pair_test(v: &[QuadExt], w: &[QuadExt]) -> bool {
    let beta = omega_standard().contract_bivector(v, w);
    beta.wedge(&beta).wedge(&beta).is_zero()
}

/// Largest coefficient of `((v ∧ w) ⨼ Ω)³` for floating-point vectors.
pub fn degenerate_pair_defect(v: &[f64], w: &[f64]) -> f64 {
    let omega: Form<f64> = omega_standard().map(ToFloat::to_f64);
    let beta = omega.contract_bivector(v, w);
    let cube = beta.wedge(&beta).wedge(&beta);
    cube.terms().map(|(_, c)| c.abs()).fold(0.0, f64::max)
}

/// The model degenerate pair `v = √3e⁰₁ + e⁰₅`, `w = e⁰₈`.
pub fn model_degenerate_pair() -> (Vec<QuadExt>, Vec<QuadExt>) {
    let mut v = vec![QuadExt::int(0); 8];
    v[0] = QuadExt::sqrt3();
    v[4] = QuadExt::int(1);
    let mut w = vec![QuadExt::int(0); 8];
    w[7] = QuadExt::int(1);
    (v, w)
}

/// The real 8×8 matrix (column `c` = image of `e⁰_c`) of an ℝ-linear map of ℍ².
pub fn realize<R: Ring>(op: impl Fn(&QuatVector<R>) -> QuatVector<R>) -> Vec<Vec<R>> {
    let cols: Vec<Vec<R>> = (0..8)
        .map(|c| {
            let x: Vec<R> = (0..8).map(|i| if i == c { R::one() } else { R::zero() }).collect();
            op(&QuatVector::from_real(&x)).to_real()
        })
        .collect();
    (0..8).map(|i| (0..8).map(|c| cols[c][i].clone()).collect()).collect()
}

/// An element of `𝔰𝔭(2) ⊕ 𝔰𝔭(1)`: a quaternionic skew-Hermitian 2×2 matrix acting on
/// the left plus an imaginary quaternion acting on the right.
#[derive(Clone, Debug, PartialEq)]
pub struct Sp2Sp1Element<R: Ring> {
    pub left: [[Quat<R>; 2]; 2],
    pub right: Quat<R>,
}

impl<R: Ring> Sp2Sp1Element<R> {
    pub fn apply(&self, v: &QuatVector<R>) -> QuatVector<R> {
        let l = QuatVector::left_mul(&self.left, v);
        let r = v.right_mul(&self.right);
        QuatVector([l.0[0].add(&r.0[0]), l.0[1].add(&r.0[1])])
    }

    pub fn real_matrix(&self) -> Vec<Vec<R>> {
        realize(|v| self.apply(v))
    }
}

fn random_imaginary(rng: &mut ChaCha8Rng, scale: f64) -> Quat<f64> {
    Quat::new(0.0, rng.gen_range(-scale..scale), rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

/// A random element of `𝔰𝔭(2) ⊕ 𝔰𝔭(1)` with entries uniform in `(−scale, scale)`.
pub fn random_sp2sp1_algebra(rng: &mut ChaCha8Rng, scale: f64) -> Sp2Sp1Element<f64> {
    let a = random_imaginary(rng, scale);
    let d = random_imaginary(rng, scale);
    let b = Quat::new(
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
    );
    let minus_b_bar = b.conj().scale(&-1.0);
    Sp2Sp1Element { left: [[a, b], [minus_b_bar, d]], right: random_imaginary(rng, scale) }
}

/// `exp` of a random `𝔰𝔭(2) ⊕ 𝔰𝔭(1)` element as a real orthogonal 8×8 matrix.
pub fn random_sp2sp1_group(rng: &mut ChaCha8Rng) -> SMatrix<f64, 8, 8> {
    let x = random_sp2sp1_algebra(rng, 1.5).real_matrix();
    SMatrix::<f64, 8, 8>::from_fn(|i, j| x[i][j]).exp()
}

/// Applies a real 8×8 matrix to a vector.
pub fn act(g: &SMatrix<f64, 8, 8>, x: &[f64]) -> Vec<f64> {
    (0..8).map(|i| (0..8).map(|j| g[(i, j)] * x[j]).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Rational};
    use rand::SeedableRng;

    fn rq(re: i64, i: i64, j: i64, k: i64) -> Quat<Rational> {
        Quat::new(rat(re, 1), rat(i, 1), rat(j, 1), rat(k, 1))
    }

    #[test]
    fn quaternion_units_multiply() {
        let (i, j, k) = (Quat::<f64>::unit_i(), Quat::unit_j(), Quat::unit_k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quat::real(-1.0));
    }

    #[test]
    fn real_identification_round_trips() {
        let x: Vec<f64> = (1..=8).map(f64::from).collect();
        assert_eq!(QuatVector::from_real(&x).to_real(), x);
    }

    #[test]
    fn lemma_model_values() {
        let p = Quat::<Rational>::zero();
        let q = rq(1, 1, 1, 0);
        assert_eq!(affine_chart_angle(&p, &q), rat(1, 4));
        let v = QuatVector::new(rq(1, 0, 0, 0), p.clone());
        let w = QuatVector::new(rq(1, 0, 0, 0), q);
        assert_eq!(quaternionic_angle(&v, &w).unwrap(), rat(1, 4));
        assert_eq!(quaternionic_angle(&v, &v).unwrap(), rat(1, 1));
        assert_eq!(quaternionic_angle(&v, &QuatVector::new(p.clone(), p)), Err(QuaternionError::ZeroVector));
    }

    #[test]
    fn model_pair_is_degenerate_and_generic_pair_is_not() {
        let (v, w) = model_degenerate_pair();
        assert!(degenerate_pair_test(&v, &w));
        let mut e1 = vec![QuadExt::int(0); 8];
        e1[0] = QuadExt::int(1);
        assert!(!degenerate_pair_test(&e1, &w));
        let qv = QuatVector::from_real(&v);
        let qw = QuatVector::from_real(&w);
        assert_eq!(quaternionic_angle(&qv, &qw).unwrap(), QuadExt::rat(1, 4));
    }

    #[test]
    fn chart_identity_on_examples() {
        assert!(chart_identity_holds(&rq(1, -2, 3, 0), &rq(0, 5, -1, 2)));
    }

    #[test]
    fn group_elements_are_orthogonal_and_preserve_omega() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_sp2sp1_group(&mut rng);
        assert!((g.transpose() * g - SMatrix::<f64, 8, 8>::identity()).abs().max() < 1e-12);
        let x = random_sp2sp1_algebra(&mut rng, 1.0).real_matrix();
        let omega: Form<f64> = omega_standard().map(ToFloat::to_f64);
        let cov: Vec<Vec<f64>> = (0..8).map(|i| (0..8).map(|j| -x[j][i]).collect()).collect();
        let moved = crate::exterior::Endo::from_rows(cov).rho(&omega);
        assert!(moved.terms().all(|(_, c)| c.abs() < 1e-12));
    }

    #[test]
    fn search_oracle_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let v = QuatVector::from_real(&(0..8).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>());
        let w = QuatVector::from_real(&(0..8).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>());
        let exact = quaternionic_angle(&v, &w).unwrap();
        assert!((angle_by_search(&v, &w, 22) - exact).abs() < 1e-6);
    }
}
