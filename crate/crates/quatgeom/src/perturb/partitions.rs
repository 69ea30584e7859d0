use std::fmt;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exterior::{Endo, Form};
use crate::linalg;
use crate::scalars::{int, Rational, Ring};

/// A partition of 8 (a Young diagram with eight boxes), parts non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition8(Vec<usize>);

impl Partition8 {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok =
            parts.iter().sum::<usize>() == 8 && parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition8(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Nilpotent in Jordan form: each block of size `s` maps `wˢ ↦ wˢ⁻¹ ↦ … ↦ w¹ ↦ 0`
    /// on consecutive coframe covectors.
    pub fn representative(&self) -> Endo<Rational> {
        let mut a = Endo::zero(8);
        let mut base = 0;
        for &s in &self.0 {
            for r in 1..s {
                a.set(base + r - 1, base + r, int(1));
            }
            base += s;
        }
        a
    }

    /// Rank of the representative, `8 − (number of parts)`.
    pub fn rank(&self) -> usize {
        8 - self.0.len()
    }

    /// Nilpotency index, the largest part.
    pub fn index(&self) -> usize {
        self.0[0]
    }
}

impl fmt::Display for Partition8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn partitions_bounded(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..=n.min(max)).rev() {
        for mut rest in partitions_bounded(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// All partitions of 8 in reverse lexicographic order, from `(8)` to `(1⁸)`.
pub fn enumerate_partitions() -> Vec<Partition8> {
    partitions_bounded(8, 8).into_iter().map(Partition8).collect()
}

/// The six diagrams that survive the screening.
pub fn expected_survivors() -> Vec<Partition8> {
    [
        vec![3, 2, 2, 1],
        vec![2, 2, 2, 2],
        vec![2, 2, 2, 1, 1],
        vec![2, 2, 1, 1, 1, 1],
        vec![2, 1, 1, 1, 1, 1, 1],
        vec![1; 8],
    ]
    .into_iter()
    .map(Partition8)
    .collect()
}

fn four_masks() -> Vec<u32> {
    (0u32..256).filter(|m| m.count_ones() == 4).collect()
}

/// Matrix of `ρ(A)²` on the 70 basis 4-forms (column `c` = image of the `c`-th basis form).
pub fn rho_squared_matrix(a: &Endo<Rational>) -> Vec<Vec<Rational>> {
    let masks = four_masks();
    let cols: Vec<Vec<Rational>> = masks
        .iter()
        .map(|&m| {
            let img = a.rho(&a.rho(&Form::monomial(8, m, int(1))));
            masks.iter().map(|&mm| img.coeff(mm)).collect()
        })
        .collect();
    (0..masks.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// A pair of vectors `(v, w)` offered to the witness search.
pub type Bivector = (Vec<Rational>, Vec<Rational>);

/// The fixed candidate set: all coordinate pairs `(e⁰ᵢ, e⁰ⱼ)` (these are also the Jordan-basis
/// pairs of every representative), then `random` pairs with integer entries in `{−2, …, 2}`.
pub fn witness_candidates(seed: u64, random: usize) -> Vec<Bivector> {
    let unit = |i: usize| (0..8).map(|k| int(i64::from(k == i))).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            out.push((unit(i), unit(j)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let v: Vec<Rational> = (0..8).map(|_| int(rng.gen_range(-2..=2))).collect();
        let w: Vec<Rational> = (0..8).map(|_| int(rng.gen_range(-2..=2))).collect();
        out.push((v, w));
    }
    out
}

fn independent(v: &[Rational], w: &[Rational]) -> bool {
    linalg::rank(&[v.to_vec(), w.to_vec()]) == 2
}

fn two_form_coords(f: &Form<Rational>) -> Vec<Rational> {
    (0u32..256).filter(|m| m.count_ones() == 2).map(|m| f.coeff(m)).collect()
}

fn two_form_from(coords: &[Rational]) -> Form<Rational> {
    let mut f = Form::zero(8);
    for (m, c) in (0u32..256).filter(|m| m.count_ones() == 2).zip(coords) {
        if !c.is_zero() {
            f = f.add(&Form::monomial(8, m, c.clone()));
        }
    }
    f
}

/// Whether `((v∧w)⨼α)² = 0` for every `α` in the span of `kernel`.
///
/// By polarization this holds iff `βᵢ ∧ βⱼ = 0` for all `i ≤ j`, where the `βᵢ` run over a
/// basis of the contractions `(v∧w)⨼αᵢ`.
pub fn is_witness(kernel: &[Form<Rational>], v: &[Rational], w: &[Rational]) -> bool {
    let mut rows: Vec<Vec<Rational>> = kernel.iter().map(|a| two_form_coords(&a.contract_bivector(v, w))).collect();
    let piv = linalg::rref(&mut rows);
    let betas: Vec<Form<Rational>> = rows.iter().take(piv.len()).map(|r| two_form_from(r)).collect();
    for i in 0..betas.len() {
        for j in i..betas.len() {
            if !betas[i].wedge(&betas[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Outcome of screening one diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct ScreenResult {
    pub partition: Partition8,
    /// `dim K_Γ` with `K_Γ = ker ρ(A_Γ)²` on `Λ⁴`.
    pub kernel_dim: usize,
    /// The same dimension from a row reduction with reversed pivot order.
    pub kernel_dim_oracle: usize,
    /// Index into the candidate list and the witnessing pair, if found.
    pub witness: Option<(usize, Bivector)>,
}

impl ScreenResult {
    pub fn excluded(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn kernel_screen(partition: &Partition8, candidates: &[Bivector]) -> ScreenResult {
    let a = partition.representative();
    let m = rho_squared_matrix(&a);
    let masks = four_masks();
    let basis = linalg::nullspace(&m, masks.len());
    let reversed: Vec<usize> = (0..masks.len()).rev().collect();
    let mut copy = m.clone();
    let kernel_dim_oracle = masks.len() - linalg::rref_with_order(&mut copy, &reversed).len();
    let kernel: Vec<Form<Rational>> = basis
        .iter()
        .map(|vec| {
            let mut f = Form::zero(8);
            for (c, &mk) in vec.iter().zip(&masks) {
                if !c.is_zero() {
                    f = f.add(&Form::monomial(8, mk, c.clone()));
                }
            }
            f
        })
        .collect();
    let witness = candidates
        .iter()
        .enumerate()
        .find(|(_, (v, w))| independent(v, w) && is_witness(&kernel, v, w))
        .map(|(i, c)| (i, c.clone()));
    ScreenResult { partition: partition.clone(), kernel_dim: basis.len(), kernel_dim_oracle, witness }
}

/// Seed of the random part of the witness candidate set.
pub const WITNESS_SEED: u64 = 7;
/// Number of random candidate pairs.
pub const WITNESS_RANDOM: usize = 200;

/// Screens all 22 diagrams in parallel with the fixed candidate set.
pub fn screen_all() -> Vec<ScreenResult> {
    let candidates = witness_candidates(WITNESS_SEED, WITNESS_RANDOM);
    enumerate_partitions().par_iter().map(|p| kernel_screen(p, &candidates)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_two_partitions() {
        let ps = enumerate_partitions();
        assert_eq!(ps.len(), 22);
        assert_eq!(ps[0].parts(), &[8]);
        assert_eq!(ps[21].parts(), &[1; 8]);
        assert!(ps[21].representative().is_zero());
        let rank_one = Partition8::new(vec![2, 1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(rank_one.rank(), 1);
        assert!(Partition8::new(vec![1, 2, 5]).is_none());
    }

    #[test]
    fn representatives_have_the_right_index() {
        for p in enumerate_partitions() {
            let a = p.representative();
            let mut power = Endo::identity(8);
            for k in 1..=p.index() {
                power = power.compose(&a);
                assert_eq!(power.is_zero(), k == p.index(), "{p} power {k}");
            }
        }
    }

    #[test]
    fn zero_nilpotent_has_full_kernel_and_no_witness() {
        let p = Partition8::new(vec![1; 8]).unwrap();
        let r = kernel_screen(&p, &witness_candidates(WITNESS_SEED, 10));
        assert_eq!(r.kernel_dim, 70);
        assert!(r.witness.is_none());
    }

    #[test]
    fn largest_block_is_excluded() {
        let p = Partition8::new(vec![8]).unwrap();
        let r = kernel_screen(&p, &witness_candidates(WITNESS_SEED, 10));
        assert_eq!(r.kernel_dim, r.kernel_dim_oracle);
        assert!(r.excluded());
    }
}
