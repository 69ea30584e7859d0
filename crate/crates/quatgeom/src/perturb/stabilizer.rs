use crate::exterior::{Endo, Form};
use crate::linalg;
use crate::scalars::{qx, QuadExt, Ring};

use super::omega::{omega_standard, AdaptedBasis};
use super::quaternion::{Quat, Sp2Sp1Element};

type Mat = Vec<Vec<QuadExt>>;

/// The three displayed generators of the stabilizer of `⟨E¹, E², E³⟩`, as elements of
/// `𝔰𝔭(2) ⊕ 𝔰𝔭(1)` (left quaternionic matrix, right multiplication).
pub fn so3_generators() -> [Sp2Sp1Element<QuadExt>; 3] {
    let h = qx(1, 2, 3);
    let half = QuadExt::rat(-1, 2);
    let z = Quat::<QuadExt>::zero;
    let j = Quat::<QuadExt>::unit_j();
    let k = Quat::<QuadExt>::unit_k();
    let i = Quat::<QuadExt>::unit_i();
    [
        Sp2Sp1Element { left: [[z(), j.scale(&h)], [j.scale(&h), j.scale(&QuadExt::int(-1))]], right: j.scale(&half) },
        Sp2Sp1Element { left: [[z(), k.scale(&h)], [k.scale(&h), k.clone()]], right: k.scale(&half) },
        Sp2Sp1Element {
            left: [[i.scale(&QuadExt::rat(3, 2)), z()], [z(), i.scale(&QuadExt::rat(-1, 2))]],
            right: i.scale(&half),
        },
    ]
}

/// Action on covectors (standard coordinates) induced by a vector endomorphism: `−Aᵀ`.
pub fn covector_action(vector_map: &[Vec<QuadExt>]) -> Mat {
    let n = vector_map.len();
    (0..n).map(|i| (0..n).map(|j| -&vector_map[j][i]).collect()).collect()
}

/// Covector actions of the three generators in `E`-coordinates.
pub fn so3_in_e_basis() -> [Mat; 3] {
    let basis = AdaptedBasis::standard();
    so3_generators().map(|g| basis.conjugate(&covector_action(&g.real_matrix())))
}

fn flatten(m: &[Vec<QuadExt>]) -> Vec<QuadExt> {
    m.iter().flatten().cloned().collect()
}

fn commutator(a: &[Vec<QuadExt>], b: &[Vec<QuadExt>]) -> Mat {
    let ab = linalg::mat_mul(a, b);
    let ba = linalg::mat_mul(b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

/// `c` with `x = c·y`, if `x` is a multiple of the nonzero `y`.
fn ratio(x: &[QuadExt], y: &[QuadExt]) -> Option<QuadExt> {
    let pivot = y.iter().position(|v| !v.is_zero())?;
    let c = x[pivot].checked_div(&y[pivot]).ok()?;
    x.iter().zip(y).all(|(a, b)| *a == &c * b).then_some(c)
}

fn block_scalar(m: &[Vec<QuadExt>], range: std::ops::Range<usize>) -> Option<QuadExt> {
    let c = m[range.start][range.start].clone();
    range
        .clone()
        .all(|i| range.clone().all(|j| m[i][j] == if i == j { c.clone() } else { QuadExt::int(0) }))
        .then_some(c)
}

/// Outcome of the checks on the three stabilizer generators.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerReport {
    /// Generators whose covector action kills `Ω`.
    pub annihilate_omega: [bool; 3],
    /// Generators preserving `span{E¹, E², E³}` (and hence, being skew, `S⁴`).
    pub preserve_s2: [bool; 3],
    /// `c` with `[ξ₁,ξ₂] = cξ₃`, `[ξ₂,ξ₃] = cξ₁`, `[ξ₃,ξ₁] = cξ₂`, if one common `c` exists.
    pub structure_constant: Option<QuadExt>,
    /// Casimir `Σ ξᵢ²` on `S²` and `S⁴` when it is scalar there, normalized by `c²`;
    /// the 𝔰𝔬(3) values are `−2` (vector) and `−6` (spin two).
    pub casimir_s2: Option<QuadExt>,
    pub casimir_s4: Option<QuadExt>,
    /// Dimension of the stabilizer of `Ω` in 𝔤𝔩(8) (expected `dim 𝔰𝔭(2)⊕𝔰𝔭(1) = 13`).
    pub omega_stabilizer_dim: usize,
    /// Whether the subalgebra of that stabilizer preserving `S²` is exactly the span of the generators.
    pub generators_span_full_stabilizer: bool,
}

impl StabilizerReport {
    pub fn holds(&self) -> bool {
        self.annihilate_omega.iter().all(|b| *b)
            && self.preserve_s2.iter().all(|b| *b)
            && self.structure_constant.is_some()
            && self.casimir_s2 == Some(QuadExt::int(-2))
            && self.casimir_s4 == Some(QuadExt::int(-6))
            && self.omega_stabilizer_dim == 13
            && self.generators_span_full_stabilizer
    }
}

/// Basis of `{C ∈ 𝔤𝔩(8) : ρ(C)Ω = 0}` in standard covector coordinates, each flattened row-major.
pub fn omega_stabilizer() -> Vec<Vec<QuadExt>> {
    let omega = omega_standard();
    let masks: Vec<u32> = (0u32..256).filter(|m| m.count_ones() == 4).collect();
    let mut cols = Vec::with_capacity(64);
    for i in 0..8 {
        for j in 0..8 {
            let mut e = Endo::zero(8);
            e.set(i, j, QuadExt::int(1));
            let img = e.rho(&omega);
            cols.push(masks.iter().map(|&m| img.coeff(m)).collect::<Vec<_>>());
        }
    }
    let rows: Mat = (0..masks.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    linalg::nullspace(&rows, 64)
}

pub fn so3_stabilizer_check() -> StabilizerReport {
    let omega = omega_standard();
    let basis = AdaptedBasis::standard();
    let std_actions: Vec<Mat> = so3_generators().iter().map(|g| covector_action(&g.real_matrix())).collect();
    let e_actions: Vec<Mat> = std_actions.iter().map(|c| basis.conjugate(c)).collect();

    let annihilate_omega = [0, 1, 2].map(|a| Endo::from_rows(std_actions[a].clone()).rho(&omega).is_zero());
    let preserve_s2 = [0, 1, 2].map(|a| (3..8).all(|r| (0..3).all(|c| e_actions[a][r][c].is_zero())));

    let flat: Vec<Vec<QuadExt>> = e_actions.iter().map(|m| flatten(m)).collect();
    let cyclic = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];
    let consts: Vec<Option<QuadExt>> =
        cyclic.iter().map(|&(a, b, c)| ratio(&flatten(&commutator(&e_actions[a], &e_actions[b])), &flat[c])).collect();
    let structure_constant = match consts.as_slice() {
        [Some(a), Some(b), Some(c)] if a == b && b == c && !a.is_zero() => Some(a.clone()),
        _ => None,
    };

    let (casimir_s2, casimir_s4) = match &structure_constant {
        Some(c) => {
            let mut cas = vec![vec![QuadExt::int(0); 8]; 8];
            for m in &e_actions {
                let sq = linalg::mat_mul(m, m);
                for i in 0..8 {
                    for j in 0..8 {
                        cas[i][j] = &cas[i][j] + &sq[i][j];
                    }
                }
            }
            let c2 = c * c;
            let norm = |x: QuadExt| x.checked_div(&c2).ok();
            (block_scalar(&cas, 0..3).and_then(norm), block_scalar(&cas, 3..8).and_then(norm))
        }
        None => (None, None),
    };

    let stab = omega_stabilizer();
    // Impose preservation of S² on combinations of the stabilizer basis.
    let conjugated: Vec<Mat> =
        stab.iter().map(|flat| basis.conjugate(&flat.chunks(8).map(<[QuadExt]>::to_vec).collect::<Vec<_>>())).collect();
    let mut cond = Vec::new();
    for r in 3..8 {
        for c in 0..3 {
            cond.push(conjugated.iter().map(|m| m[r][c].clone()).collect::<Vec<_>>());
        }
    }
    let sub = linalg::nullspace(&cond, stab.len());
    let sub_flat: Vec<Vec<QuadExt>> = sub
        .iter()
        .map(|coef| {
            let mut acc = vec![QuadExt::int(0); 64];
            for (c, m) in coef.iter().zip(&conjugated) {
                for (a, x) in acc.iter_mut().zip(flatten(m)) {
                    *a = &*a + &(c * &x);
                }
            }
            acc
        })
        .collect();
    let generators_span_full_stabilizer = sub_flat.len() == 3 && linalg::same_span(&sub_flat, &flat);

    StabilizerReport {
        annihilate_omega,
        preserve_s2,
        structure_constant,
        casimir_s2,
        casimir_s4,
        omega_stabilizer_dim: stab.len(),
        generators_span_full_stabilizer,
    }
}

/// The generator of the circle inside the stabilizer fixing `E¹`, as a covector action in
/// `E`-coordinates (unique up to scale).
pub fn u1_generator() -> Option<Mat> {
    let gens = so3_in_e_basis();
    // Column 0 (the image of E¹) must vanish.
    let rows: Mat = (0..8).map(|r| gens.iter().map(|g| g[r][0].clone()).collect()).collect();
    let ns = linalg::nullspace(&rows, 3);
    if ns.len() != 1 {
        return None;
    }
    let mut out = vec![vec![QuadExt::int(0); 8]; 8];
    for (c, g) in ns[0].iter().zip(&gens) {
        for i in 0..8 {
            for j in 0..8 {
                out[i][j] = &out[i][j] + &(c * &g[i][j]);
            }
        }
    }
    Some(out)
}

/// The three generators in `E`-coordinates rescaled to the standard 𝔰𝔬(3) relations
/// `[u₁,u₂] = u₃` (cyclically), so that their weights on `S²` and `S⁴` are integers.
pub fn normalized_so3() -> Option<[Mat; 3]> {
    let gens = so3_in_e_basis();
    let c = ratio(&flatten(&commutator(&gens[0], &gens[1])), &flatten(&gens[2]))?;
    let inv = QuadExt::int(1).checked_div(&c).ok()?;
    Some(gens.map(|g| g.iter().map(|row| row.iter().map(|x| x * &inv).collect()).collect()))
}

fn mat_lin(terms: &[(QuadExt, &Mat)]) -> Mat {
    let mut out = vec![vec![QuadExt::int(0); 8]; 8];
    for (c, m) in terms {
        for i in 0..8 {
            for j in 0..8 {
                out[i][j] = &out[i][j] + &(c * &m[i][j]);
            }
        }
    }
    out
}

/// `exp(θu)` for a normalized generator `u` at the angle with `tan(θ/2) = s`, exactly.
///
/// `u²` has eigenvalues `0, −1, −4`; with the spectral projectors `Πₖ` (polynomials in `u²`)
/// the exponential is `Π₀ + cos θ Π₁ + sin θ uΠ₁ + cos 2θ Π₂ + ½ sin 2θ uΠ₂`, and the
/// half-angle substitution keeps every entry in the coefficient field.
pub fn rational_rotation(u: &Mat, s: &QuadExt) -> Mat {
    let id: Mat = (0..8).map(|i| (0..8).map(|j| QuadExt::int(i64::from(i == j))).collect()).collect();
    let u2 = linalg::mat_mul(u, u);
    let u2p1 = mat_lin(&[(QuadExt::int(1), &u2), (QuadExt::int(1), &id)]);
    let u2p4 = mat_lin(&[(QuadExt::int(1), &u2), (QuadExt::int(4), &id)]);
    let q = |a, b| QuadExt::rat(a, b);
    let pi0 = mat_lin(&[(q(1, 4), &linalg::mat_mul(&u2p1, &u2p4))]);
    let pi1 = mat_lin(&[(q(-1, 3), &linalg::mat_mul(&u2, &u2p4))]);
    let pi2 = mat_lin(&[(q(1, 12), &linalg::mat_mul(&u2, &u2p1))]);
    let j1 = linalg::mat_mul(u, &pi1);
    let j2 = linalg::mat_mul(u, &pi2);
    let one = QuadExt::int(1);
    let denom = &one + &(s * s);
    let cos = (&one - &(s * s)).checked_div(&denom).expect("1 + s² > 0");
    let sin = (&QuadExt::int(2) * s).checked_div(&denom).expect("1 + s² > 0");
    let cos2 = &(&QuadExt::int(2) * &(&cos * &cos)) - &one;
    let half_sin2 = &sin * &cos;
    mat_lin(&[(one, &pi0), (cos, &pi1), (sin, &j1), (cos2, &pi2), (half_sin2, &j2)])
}

/// Whether the covector action `c` (in `E`-coordinates) annihilates a form in `E`-coordinates.
pub fn annihilates(c: &[Vec<QuadExt>], alpha: &Form<QuadExt>) -> bool {
    Endo::from_rows(c.to_vec()).rho(alpha).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_skew() {
        for g in so3_generators() {
            let m = g.real_matrix();
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(m[i][j], -&m[j][i]);
                }
            }
        }
    }

    #[test]
    fn stabilizer_report_holds() {
        let r = so3_stabilizer_check();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn rational_rotations_are_orthogonal_and_preserve_omega() {
        let us = normalized_so3().expect("so(3) relations");
        let omega = super::super::omega::omega_in_e_basis();
        for (k, u) in us.iter().enumerate() {
            let r = rational_rotation(u, &QuadExt::rat(1, 2 + k as i64));
            let rt: Mat = (0..8).map(|i| (0..8).map(|j| r[j][i].clone()).collect()).collect();
            let prod = linalg::mat_mul(&r, &rt);
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(prod[i][j], QuadExt::int(i64::from(i == j)));
                }
            }
            // Orthogonal covector maps act on forms by pullback along the rows.
            let images: Vec<Form<QuadExt>> = (0..8).map(|i| Form::one_form(&r[i])).collect();
            assert_eq!(omega.substitute(&images), omega);
        }
    }

    #[test]
    fn u1_fixes_e1_and_e8() {
        let u = u1_generator().expect("one-dimensional");
        assert!((0..8).all(|r| u[r][0].is_zero() && u[r][7].is_zero()));
        assert!(annihilates(&u, &super::super::omega::omega_in_e_basis()));
    }
}
