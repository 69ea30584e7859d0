//! Concrete bases of 𝔰𝔲(3), 𝔰𝔭(3), 𝔰𝔲(4) and 𝔤₂.

use crate::scalars::{qx, QuadExt, Ring};

use super::algebra::LieAlgebraData;
use super::cmat::{CMat, Cx};

/// Structure equations of 𝔰𝔲(3): `deᵏ = Σ coeff·eⁱʲ` as `(k, i, j, coeff)` with 1-based `i < j`.
fn su3_structure_equations() -> Vec<(usize, usize, usize, QuadExt)> {
    let n = QuadExt::int;
    let r3 = QuadExt::sqrt3;
    vec![
        (1, 2, 3, n(-1)),
        (1, 4, 5, n(-1)),
        (1, 6, 7, n(2)),
        (2, 1, 3, n(1)),
        (2, 4, 6, n(1)),
        (2, 5, 7, n(-1)),
        (2, 5, 8, -r3()),
        (3, 1, 2, n(-1)),
        (3, 4, 7, n(-1)),
        (3, 4, 8, r3()),
        (3, 5, 6, n(-1)),
        (4, 1, 5, n(1)),
        (4, 2, 6, n(-1)),
        (4, 3, 7, n(1)),
        (4, 3, 8, -r3()),
        (5, 1, 4, n(-1)),
        (5, 2, 7, n(1)),
        (5, 2, 8, r3()),
        (5, 3, 6, n(1)),
        (6, 1, 7, n(-2)),
        (6, 2, 4, n(1)),
        (6, 3, 5, n(-1)),
        (7, 1, 6, n(2)),
        (7, 2, 5, n(-1)),
        (7, 3, 4, n(-1)),
        (8, 2, 5, -r3()),
        (8, 3, 4, r3()),
    ]
}

/// The matrix basis `e₁ … e₈` of 𝔰𝔲(3) ⊂ 𝔤𝔩(3, ℂ).
pub fn su3_matrices() -> Vec<CMat> {
    let e = |i, j| CMat::unit(3, i, j);
    let i_times = |m: CMat| m.times_i();
    vec![
        e(2, 1).sub(&e(1, 2)),
        e(3, 1).sub(&e(1, 3)),
        e(3, 2).sub(&e(2, 3)),
        i_times(e(2, 3).add(&e(3, 2))).scale(&Cx::from_i64(-1)),
        i_times(e(1, 3).add(&e(3, 1))),
        i_times(e(1, 2).add(&e(2, 1))).scale(&Cx::from_i64(-1)),
        i_times(e(2, 2).sub(&e(1, 1))),
        i_times(e(3, 3).scale(&Cx::from_i64(2)).sub(&e(1, 1)).sub(&e(2, 2))).scale_real(&qx(1, 3, 3)),
    ]
}

fn su3_labels() -> Vec<String> {
    (1..=8).map(|i| format!("e{i}")).collect()
}

/// 𝔰𝔲(3) with structure constants defined by its structure equations under the
/// convention `deᵏ(X, Y) = −eᵏ([X, Y])`, i.e. `c_{ij}^k = −(coefficient of eⁱʲ in deᵏ)`,
/// together with the matrix basis as realization.
pub fn build_su3() -> LieAlgebraData {
    let mut c = vec![vec![vec![QuadExt::int(0); 8]; 8]; 8];
    for (k, i, j, coeff) in su3_structure_equations() {
        c[i - 1][j - 1][k - 1] = -&coeff;
        c[j - 1][i - 1][k - 1] = coeff;
    }
    let mut alg = LieAlgebraData::from_structure("su(3)", su3_labels(), c);
    alg.attach_realization(su3_matrices());
    alg
}

/// 𝔰𝔲(3) with structure constants computed purely from matrix commutators.
pub fn su3_from_matrices() -> LieAlgebraData {
    LieAlgebraData::from_matrices("su(3)", su3_labels(), su3_matrices()).expect("su(3) matrix basis is closed")
}

/// 𝔰𝔭(3) inside 𝔰𝔲(6): `A_k = iH_k`, the P/Q pairs from `X_{kl}`, `Y_{kl}`, `Z_{kl}` and
/// `R_k, R_{k+3}` from `U_k, V_k`.
pub fn build_sp3() -> LieAlgebraData {
    let e = |i, j| CMat::unit(6, i, j);
    let h = |k: usize| e(k, k).sub(&e(k + 3, k + 3));
    let x = |i: usize, j: usize| e(i, j).sub(&e(3 + j, 3 + i));
    let y = |i: usize, j: usize| e(i, 3 + j).add(&e(j, 3 + i));
    let z = |i: usize, j: usize| e(3 + i, j).add(&e(3 + j, i));
    let u = |i: usize| e(i, 3 + i);
    let v = |i: usize| e(3 + i, i);

    let mut named: Vec<(String, CMat)> = Vec::new();
    for k in 1..=3 {
        named.push((format!("A{k}"), h(k).times_i()));
    }
    for (k, l) in [(1, 2), (1, 3), (2, 3)] {
        named.push((format!("P{}", k + l - 2), x(k, l).sub(&x(l, k))));
        named.push((format!("P{}", k + l + 1), x(k, l).add(&x(l, k)).times_i()));
        named.push((format!("Q{}", k + l - 2), y(k, l).sub(&z(k, l))));
        named.push((format!("Q{}", k + l + 1), y(k, l).add(&z(k, l)).times_i()));
    }
    for k in 1..=3 {
        named.push((format!("R{k}"), u(k).sub(&v(k))));
        named.push((format!("R{}", k + 3), u(k).add(&v(k)).times_i()));
    }
    let (labels, mats) = named.into_iter().unzip();
    LieAlgebraData::from_matrices("sp(3)", labels, mats).expect("sp(3) basis is closed")
}

/// 𝔰𝔲(4): `A_j = iH_j`, `C_j = X_j − Y_j`, `B_j = i(X_j + Y_j)` with
/// `X₁ … X₆ = E₁₂, E₁₃, E₁₄, E₂₃, E₂₄, E₃₄` and `Y_j = X_jᵀ`.
pub fn build_su4() -> LieAlgebraData {
    let e = |i, j| CMat::unit(4, i, j);
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let mut named: Vec<(String, CMat)> = Vec::new();
    for j in 1..=3 {
        named.push((format!("A{j}"), e(j, j).sub(&e(j + 1, j + 1)).times_i()));
    }
    for (j, &(a, b)) in pairs.iter().enumerate() {
        let (xj, yj) = (e(a, b), e(b, a));
        named.push((format!("C{}", j + 1), xj.sub(&yj)));
        named.push((format!("B{}", j + 1), xj.add(&yj).times_i()));
    }
    let (labels, mats) = named.into_iter().unzip();
    LieAlgebraData::from_matrices("su(4)", labels, mats).expect("su(4) basis is closed")
}

/// Sign of the permutation `(i, j, k)` of `(0, 1, 2)`, zero on repeats.
fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    ((j - i) * (k - i) * (k - j)).signum()
}

/// 𝔤₂ in its 7-dimensional representation on `ℂ ⊕ V ⊕ V*` (V = ℂ³).
///
/// 𝔰𝔩(3) acts as `diag(0, A, −Aᵀ)`; a vector `v_a` acts by
/// `u ↦ √2·v_a`, `φ_a ↦ √2·u`, `v_b ↦ ε_{abc} φ_c`, and the covector generators
/// are the conjugate transposes. With these constants the 14 operators close
/// into a Lie algebra stable under `X ↦ X†`, so the compact real form consists
/// of its skew-Hermitian elements.
pub struct G2Generators {
    pub h1: CMat,
    pub h2: CMat,
    /// Positive root vectors `X₁ … X₆` (short: 1, 3, 4; long: 2, 5, 6).
    pub roots: Vec<CMat>,
}

/// Normalization phases of the positive root vectors, fixed so that the
/// 𝔰𝔲(3) embedding satisfies the structure equations and reproduces the
/// pulled-back coframe of the exceptional Wolf space.
pub const G2_ROOT_PHASES: [i64; 6] = [1, 1, 1, -1, -1, 1];

pub fn g2_generators(phases: [i64; 6]) -> G2Generators {
    let n = 7;
    let s2 = QuadExt::sqrt2();
    let sl3 = |a: &[[i64; 3]; 3]| {
        let mut m = CMat::zero(n);
        for i in 0..3 {
            for j in 0..3 {
                if a[i][j] != 0 {
                    m.set(1 + i, 1 + j, Cx::from_i64(a[i][j]));
                    m.set(4 + j, 4 + i, Cx::from_i64(-a[i][j]));
                }
            }
        }
        m
    };
    let unit3 = |i: usize, j: usize| {
        let mut a = [[0i64; 3]; 3];
        a[i - 1][j - 1] = 1;
        sl3(&a)
    };
    let vector = |a: usize| {
        let mut m = CMat::zero(n);
        m.set(1 + a, 0, Cx::real(s2.clone()));
        m.set(0, 4 + a, Cx::real(s2.clone()));
        for b in 0..3 {
            for c in 0..3 {
                let eps = levi_civita(a, b, c);
                if eps != 0 {
                    let cur = m.get(4 + c, 1 + b).clone();
                    m.set(4 + c, 1 + b, cur.add(&Cx::from_i64(eps)));
                }
            }
        }
        m
    };
    let base = [vector(0), unit3(2, 1), vector(1), vector(2).conj_transpose(), unit3(1, 3), unit3(2, 3)];
    let roots = base.iter().zip(phases).map(|(m, p)| m.scale(&Cx::from_i64(p))).collect();
    G2Generators { h1: sl3(&[[2, 0, 0], [0, -1, 0], [0, 0, -1]]), h2: sl3(&[[-1, 0, 0], [0, 1, 0], [0, 0, 0]]), roots }
}

/// Compact 𝔤₂ with basis `A₁ = iH₁, A₂ = iH₂, W_j = X_j − Y_j, Z_j = i(X_j + Y_j)`,
/// where `Y_j = X_j†`.
pub fn build_g2_with_phases(phases: [i64; 6]) -> LieAlgebraData {
    let g = g2_generators(phases);
    let mut labels = vec!["A1".to_string(), "A2".to_string()];
    let mut mats = vec![g.h1.times_i(), g.h2.times_i()];
    for (j, x) in g.roots.iter().enumerate() {
        let y = x.conj_transpose();
        labels.push(format!("W{}", j + 1));
        mats.push(x.sub(&y));
        labels.push(format!("Z{}", j + 1));
        mats.push(x.add(&y).times_i());
    }
    LieAlgebraData::from_matrices("g2", labels, mats).expect("g2 basis is closed")
}

pub fn build_g2() -> LieAlgebraData {
    build_g2_with_phases(G2_ROOT_PHASES)
}
