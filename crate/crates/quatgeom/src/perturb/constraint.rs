use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Endo, Form};
use crate::linalg;
use crate::scalars::{QuadExt, Ring};

use super::omega::{beta_forms, e_unit, omega_in_e_basis};
use super::stabilizer::{annihilates, normalized_so3, rational_rotation, u1_generator};

/// A covector of `S⁴ = span{E⁴, …, E⁸}`, given by its five coefficients.
pub type S4Vector = [QuadExt; 5];

/// Masks of the five basis 4-forms of `Λ⁴S⁴`.
fn s4_top_masks() -> Vec<u32> {
    (0u32..256).filter(|m| m.count_ones() == 4 && m & 0b111 == 0).collect()
}

fn lift(v: &S4Vector) -> Vec<QuadExt> {
    let mut out = vec![QuadExt::int(0); 8];
    out[3..].clone_from_slice(v);
    out
}

fn one_form(v: &S4Vector) -> Form<QuadExt> {
    Form::one_form(&lift(v))
}

fn coords(f: &Form<QuadExt>) -> Vec<QuadExt> {
    s4_top_masks().into_iter().map(|m| f.coeff(m)).collect()
}

/// `v²∧v³∧β¹ + v³∧v¹∧β² + v¹∧v²∧β³`.
pub fn beta_constraint(v: &[S4Vector; 3]) -> Form<QuadExt> {
    let [b1, b2, b3] = beta_forms();
    let f = v.each_ref().map(one_form);
    f[1].wedge(&f[2]).wedge(&b1).add(&f[2].wedge(&f[0]).wedge(&b2)).add(&f[0].wedge(&f[1]).wedge(&b3))
}

/// The endomorphism `A = Σ vⁱ ⊗ Eᵢ` of covectors in `E`-coordinates (`Eⁱ ↦ vⁱ` for `i ≤ 3`).
pub fn endomorphism(v: &[S4Vector; 3]) -> Endo<QuadExt> {
    (0..3).fold(Endo::zero(8), |acc, i| acc.add(&Endo::rank_one(&lift(&v[i]), i)))
}

/// Verdict of the parametrization checks for one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametrizationReport {
    pub constraint_holds: bool,
    pub rho_squared_vanishes: bool,
    pub square_vanishes: bool,
}

impl ParametrizationReport {
    /// The constraint is equivalent to `ρ(A)²Ω = 0` and implies `A² = 0`.
    pub fn consistent(&self) -> bool {
        self.constraint_holds == self.rho_squared_vanishes && (!self.constraint_holds || self.square_vanishes)
    }
}

pub fn check_parametrization(v: &[S4Vector; 3]) -> ParametrizationReport {
    let a = endomorphism(v);
    let omega = omega_in_e_basis();
    ParametrizationReport {
        constraint_holds: beta_constraint(v).is_zero(),
        rho_squared_vanishes: a.rho(&a.rho(&omega)).is_zero(),
        square_vanishes: a.compose(&a).is_zero(),
    }
}

fn random_s4(rng: &mut ChaCha8Rng, bound: i64) -> S4Vector {
    std::array::from_fn(|_| QuadExt::int(rng.gen_range(-bound..=bound)))
}

/// Images `span{E⁴, E⁵, E⁶}` and `span{E⁴, E⁵, E⁷}`: planes on which the constraint, written
/// in cofactors, drops to rank two.
const ADMISSIBLE_PLANES: [[usize; 3]; 2] = [[0, 1, 2], [0, 1, 3]];

/// A random solution of the constraint with three independent `vⁱ`.
///
/// For fixed `v¹, v²` the constraint is linear in `v³`, but `v³ ↦ v²∧v³∧β¹ + v³∧v¹∧β²`
/// has rank at most four on the five-dimensional `S⁴`, so a generic pair admits no `v³`.
/// Instead fix the image `P = ⟨p₁, p₂, p₃⟩` and write `vⁱ = Σₐ Vᵢₐ pₐ`. Every `vʲ∧vᵏ` then
/// lies in `Λ²P`, with coefficients the cofactors `W = cof V`, and the constraint is linear
/// in `W`: five equations on nine unknowns. Any solution `W` with `det W ≠ 0` comes from
/// `V = W^{-T}`, since `cof(W^{-T}) = W / det W`.
///
/// For a generic `P` this system has full rank and its kernel holds only singular `W`; the
/// admissible images form a single three-dimensional orbit of the stabilizer. So `P` is one
/// of two coordinate planes in that orbit, and the sample is then moved by an exact
/// stabilizer rotation `A ↦ RAR⁻¹`, which preserves both the constraint and `ρ(A)²Ω`.
pub fn random_solution(rng: &mut ChaCha8Rng) -> [S4Vector; 3] {
    let betas = beta_forms();
    let plane = ADMISSIBLE_PLANES[rng.gen_range(0..ADMISSIBLE_PLANES.len())];
    let p: [S4Vector; 3] = plane.map(|k| std::array::from_fn(|m| QuadExt::int(i64::from(m == k))));
    let pf = p.each_ref().map(one_form);
    // Column (i, c): (p_a ∧ p_b) ∧ βⁱ with (a, b, c) cyclic.
    let mut cols = Vec::with_capacity(9);
    for beta in betas.iter() {
        for c in 0..3 {
            let (a, b) = ((c + 1) % 3, (c + 2) % 3);
            cols.push(coords(&pf[a].wedge(&pf[b]).wedge(beta)));
        }
    }
    let system: Vec<Vec<QuadExt>> = (0..5).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let kernel = linalg::nullspace(&system, 9);
    let w_inv = loop {
        let mut w = vec![vec![QuadExt::int(0); 3]; 3];
        for k in &kernel {
            let c = QuadExt::int(rng.gen_range(-3..=3));
            for (idx, x) in k.iter().enumerate() {
                w[idx / 3][idx % 3] = &w[idx / 3][idx % 3] + &(&c * x);
            }
        }
        if let Some(inv) = linalg::inverse(&w) {
            break inv;
        }
    };
    // V = W^{-T}: Vᵢₐ = (W⁻¹)ₐᵢ.
    let v: [S4Vector; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|m| (0..3).fold(QuadExt::int(0), |acc, a| &acc + &(&w_inv[a][i] * &p[a][m])))
    });
    rotate(&v, &random_rotation(rng))
}

/// A stabilizer rotation `R₁(s₁)R₂(s₂)R₃(s₃)` with small rational half-angle tangents.
fn random_rotation(rng: &mut ChaCha8Rng) -> Vec<Vec<QuadExt>> {
    let us = normalized_so3().expect("the stabilizer generators close under bracket");
    us.iter()
        .map(|u| rational_rotation(u, &QuadExt::rat(rng.gen_range(-3..=3), rng.gen_range(1..=4))))
        .reduce(|a, b| linalg::mat_mul(&a, &b))
        .expect("three factors")
}

/// The triple of `RAR⁻¹` for an orthogonal `R` preserving `S²` and `S⁴`.
fn rotate(v: &[S4Vector; 3], r: &[Vec<QuadExt>]) -> [S4Vector; 3] {
    let a = endomorphism(v);
    let rt: Vec<Vec<QuadExt>> = (0..8).map(|i| (0..8).map(|j| r[j][i].clone()).collect()).collect();
    let conj = linalg::mat_mul(&linalg::mat_mul(r, a.rows()), &rt);
    std::array::from_fn(|i| std::array::from_fn(|m| conj[m + 3][i].clone()))
}

/// A random triple violating the constraint.
pub fn random_violation(rng: &mut ChaCha8Rng) -> [S4Vector; 3] {
    loop {
        let v = [random_s4(rng, 3), random_s4(rng, 3), random_s4(rng, 3)];
        if !beta_constraint(&v).is_zero() {
            return v;
        }
    }
}

/// Tally of the seeded constraint/violation trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintTrials {
    pub satisfying: usize,
    pub violating: usize,
    /// Trials where the constraint and `ρ(A)²Ω = 0` disagree.
    pub equivalence_failures: usize,
    /// Satisfying trials with `A² ≠ 0`.
    pub square_failures: usize,
    /// Satisfying trials where `v¹, v², v³` are linearly independent.
    pub rank_three_samples: usize,
}

impl ConstraintTrials {
    pub fn holds(&self) -> bool {
        self.equivalence_failures == 0 && self.square_failures == 0
    }
}

pub fn constraint_trials(seed: u64, per_side: usize) -> ConstraintTrials {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ConstraintTrials {
        satisfying: 0,
        violating: 0,
        equivalence_failures: 0,
        square_failures: 0,
        rank_three_samples: 0,
    };
    for _ in 0..per_side {
        let v = random_solution(&mut rng);
        let rows: Vec<Vec<QuadExt>> = v.iter().map(|x| x.to_vec()).collect();
        if linalg::rank(&rows) == 3 {
            out.rank_three_samples += 1;
        }
        let r = check_parametrization(&v);
        out.satisfying += 1;
        if !r.constraint_holds || !r.rho_squared_vanishes {
            out.equivalence_failures += 1;
        }
        if !r.square_vanishes {
            out.square_failures += 1;
        }
    }
    for _ in 0..per_side {
        let v = random_violation(&mut rng);
        let r = check_parametrization(&v);
        out.violating += 1;
        if r.constraint_holds || r.rho_squared_vanishes {
            out.equivalence_failures += 1;
        }
    }
    out
}

/// The space of circle-invariant nilpotent perturbations.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantPerturbations {
    /// Dimension of the linear family `v¹ ∈ ⟨E⁸⟩`, `v², v³ ∈ ⟨E⁴, E⁵⟩` commuting with the circle.
    pub equivariant_dim: usize,
    /// Endomorphisms spanning the real solutions of the constraint inside that family.
    pub endomorphisms: Vec<Endo<QuadExt>>,
    /// `ρ(A)Ω` for each of them.
    pub forms: Vec<Form<QuadExt>>,
    /// Whether the forms are invariant under the circle.
    pub invariant: bool,
}

impl InvariantPerturbations {
    pub fn dim(&self) -> usize {
        self.forms.len()
    }
}

/// `E⁸ ∧ (E₁ ⨼ Ω)` in `E`-coordinates.
pub fn expected_generator() -> Form<QuadExt> {
    Form::basis(8, 7).wedge(&omega_in_e_basis().contract_vec(&e_unit(0)))
}

/// Whether `a` is a nonzero multiple of `b`.
pub fn proportional(a: &Form<QuadExt>, b: &Form<QuadExt>) -> bool {
    let Some((m, c)) = b.terms().next() else { return false };
    match a.coeff(m).checked_div(c) {
        Ok(r) => !r.is_zero() && *a == b.scale(&r),
        Err(_) => false,
    }
}

/// Solves the circle-invariance conditions and the quadratic constraint.
///
/// The unknowns are `(a, x₄, x₅, y₄, y₅)` with `v¹ = aE⁸`, `v² = x₄E⁴ + x₅E⁵`,
/// `v³ = y₄E⁴ + y₅E⁵`. Equivariance is linear. On the equivariant family write
/// `u = s·u₀ + x·u₁ + y·u₂` with `u₀` the pure `E⁸ ⊗ E₁` direction; the constraint is
/// `2s(x·B₀₁ + y·B₀₂) + C(x·u₁ + y·u₂)`. A functional killing `B₀₁, B₀₂` on which
/// `C(x·u₁ + y·u₂)` is a definite quadratic form forces `x = y = 0` over the reals.
pub fn invariant_perturbation_space() -> InvariantPerturbations {
    let u = u1_generator().expect("the circle generator is unique up to scale");
    let u_endo = Endo::from_rows(u.clone());
    let unknown = |k: usize| -> [S4Vector; 3] {
        let mut v: [S4Vector; 3] = std::array::from_fn(|_| std::array::from_fn(|_| QuadExt::int(0)));
        match k {
            0 => v[0][4] = QuadExt::int(1),
            1 => v[1][0] = QuadExt::int(1),
            2 => v[1][1] = QuadExt::int(1),
            3 => v[2][0] = QuadExt::int(1),
            _ => v[2][1] = QuadExt::int(1),
        }
        v
    };
    let comms: Vec<Vec<QuadExt>> = (0..5)
        .map(|k| u_endo.commutator(&endomorphism(&unknown(k))).rows().iter().flatten().cloned().collect())
        .collect();
    let rows: Vec<Vec<QuadExt>> = (0..64).map(|r| comms.iter().map(|c| c[r].clone()).collect()).collect();
    let family = linalg::nullspace(&rows, 5);
    let equivariant_dim = family.len();

    let to_triple = |coef: &[QuadExt]| -> [S4Vector; 3] {
        let mut v: [S4Vector; 3] = std::array::from_fn(|_| std::array::from_fn(|_| QuadExt::int(0)));
        v[0][4] = coef[0].clone();
        v[1][0] = coef[1].clone();
        v[1][1] = coef[2].clone();
        v[2][0] = coef[3].clone();
        v[2][1] = coef[4].clone();
        v
    };
    let u0: Vec<QuadExt> = (0..5).map(|k| QuadExt::int(i64::from(k == 0))).collect();
    let fail =
        |dim| InvariantPerturbations { equivariant_dim: dim, endomorphisms: vec![], forms: vec![], invariant: false };
    if !linalg::span_contains(&family, &u0) {
        return fail(equivariant_dim);
    }
    // Complement of u₀ inside the family: drop the E⁸ component.
    let mut rest: Vec<Vec<QuadExt>> = family
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g[0] = QuadExt::int(0);
            g
        })
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .collect();
    let mut m = rest.clone();
    let piv = linalg::rref(&mut m);
    rest = m.into_iter().take(piv.len()).collect();

    let c = |v: &[QuadExt]| coords(&beta_constraint(&to_triple(v)));
    let add = |a: &[QuadExt], b: &[QuadExt]| -> Vec<QuadExt> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let half = QuadExt::rat(1, 2);
    let bilinear = |a: &[QuadExt], b: &[QuadExt]| -> Vec<QuadExt> {
        let (cab, ca, cb) = (c(&add(a, b)), c(a), c(b));
        (0..5).map(|i| &(&(&cab[i] - &ca[i]) - &cb[i]) * &half).collect()
    };

    let base_is_solution = c(&u0).iter().all(Ring::is_zero);
    let only_base = match rest.len() {
        0 => true,
        2 => {
            let b01 = bilinear(&u0, &rest[0]);
            let b02 = bilinear(&u0, &rest[1]);
            let (c11, c22, b12) = (c(&rest[0]), c(&rest[1]), bilinear(&rest[0], &rest[1]));
            let dot =
                |l: &[QuadExt], x: &[QuadExt]| l.iter().zip(x).fold(QuadExt::int(0), |acc, (p, q)| &acc + &(p * q));
            linalg::nullspace(&[b01, b02], 5).iter().any(|l| {
                let det = &(&dot(l, &c11) * &dot(l, &c22)) - &(&dot(l, &b12) * &dot(l, &b12));
                !det.is_zero() && det.to_f64() > 0.0
            })
        }
        _ => false,
    };
    if !(base_is_solution && only_base) {
        return fail(equivariant_dim);
    }
    let a = endomorphism(&to_triple(&u0));
    let form = a.rho(&omega_in_e_basis());
    let invariant = annihilates(&u, &form);
    InvariantPerturbations { equivariant_dim, endomorphisms: vec![a], forms: vec![form], invariant }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4(entries: &[(usize, i64)]) -> S4Vector {
        let mut v: S4Vector = std::array::from_fn(|_| QuadExt::int(0));
        for &(i, c) in entries {
            v[i - 4] = QuadExt::int(c);
        }
        v
    }

    #[test]
    fn e8_tensor_e1_is_a_solution() {
        let r = check_parametrization(&[s4(&[(8, 1)]), s4(&[]), s4(&[])]);
        assert!(r.constraint_holds && r.rho_squared_vanishes && r.square_vanishes);
    }

    #[test]
    fn e4_e5_pair_is_consistent() {
        let v = [s4(&[]), s4(&[(4, 1)]), s4(&[(5, 1)])];
        let r = check_parametrization(&v);
        assert!(r.consistent(), "{r:?}");
        let [b1, ..] = beta_forms();
        let direct = Form::basis(8, 3).wedge(&Form::basis(8, 4)).wedge(&b1);
        assert_eq!(r.constraint_holds, direct.is_zero());
    }

    #[test]
    fn seeded_trials_agree() {
        let t = constraint_trials(11, 6);
        assert!(t.holds(), "{t:?}");
        assert!(t.rank_three_samples > 0);
    }

    #[test]
    fn invariant_space_is_a_line() {
        let p = invariant_perturbation_space();
        assert_eq!(p.dim(), 1, "{p:?}");
        assert!(p.invariant);
        assert!(proportional(&p.forms[0], &expected_generator()));
    }
}
