use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Ring;

use super::ExteriorError;

/// Largest supported coframe rank.
pub const MAX_RANK: usize = 16;

/// Bit mask of a sorted index subset `i₁ < … < i_p`.
pub type Mask = u32;

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn indices_of(mask: Mask) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// Sign of `e^a ∧ e^b` relative to `e^{a∪b}` for disjoint masks: the parity of the
/// number of pairs `(i ∈ a, j ∈ b)` with `i > j`.
pub fn wedge_sign(a: Mask, b: Mask) -> i64 {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An exterior form over a rank-n coframe `w¹ … wⁿ`, stored sparsely as
/// monomial mask → coefficient. Zero coefficients are never stored.
///
/// Forms need not be homogeneous; [`Form::degree`] reports the degree when they are.
#[derive(Clone, PartialEq)]
pub struct Form<R: Ring> {
    rank: usize,
    terms: BTreeMap<Mask, R>,
}

impl<R: Ring> Form<R> {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        Form { rank, terms: BTreeMap::new() }
    }

    pub fn scalar(rank: usize, c: R) -> Self {
        Form::monomial(rank, 0, c)
    }

    pub fn monomial(rank: usize, mask: Mask, c: R) -> Self {
        let mut f = Form::zero(rank);
        assert!(mask >> rank == 0, "mask outside rank {rank}");
        f.accumulate(mask, c);
        f
    }

    /// The basis covector `wⁱ` (0-based).
    pub fn basis(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        Form::monomial(rank, 1 << i, R::one())
    }

    /// `c · w^{i₁} ∧ … ∧ w^{i_p}` for indices in any order; repeated indices give zero.
    pub fn from_indices(rank: usize, indices: &[usize], c: R) -> Self {
        let mut f = Form::scalar(rank, c);
        for &i in indices {
            f = f.wedge(&Form::basis(rank, i));
        }
        f
    }

    /// The 1-form `Σ coeffs[i] wⁱ`.
    pub fn one_form(coeffs: &[R]) -> Self {
        let mut f = Form::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            f.accumulate(1 << i, c.clone());
        }
        f
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &R)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: Mask) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of `w^{i₁…i_p}` with indices given in increasing order.
    pub fn coeff_of(&self, indices: &[usize]) -> R {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        self.coeff(mask_of(indices))
    }

    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The homogeneous part of degree `p`.
    pub fn part(&self, p: usize) -> Self {
        Form {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == p)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn accumulate(&mut self, mask: Mask, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&mask);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<(), ExteriorError> {
        if self.rank != other.rank {
            Err(ExteriorError::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.accumulate(m, c.clone());
        }
        Ok(out)
    }

    /// Sum; panics on rank mismatch (see [`Form::try_add`]).
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("form rank mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Form<S> {
        let mut out = Form::zero(self.rank);
        for (m, c) in self.terms() {
            out.accumulate(m, f(c));
        }
        out
    }

    pub fn try_wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.check_rank(other)?;
        let mut out = Form::zero(self.rank);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if ma & mb != 0 {
                    continue;
                }
                let prod = ca.mul(cb);
                let prod = if wedge_sign(ma, mb) < 0 { prod.neg() } else { prod };
                out.accumulate(ma | mb, prod);
            }
        }
        Ok(out)
    }

    /// Exterior product; panics on rank mismatch (see [`Form::try_wedge`]).
    pub fn wedge(&self, other: &Self) -> Self {
        self.try_wedge(other).expect("form rank mismatch")
    }

    pub fn wedge_pow(&self, k: u32) -> Self {
        let mut acc = Form::scalar(self.rank, R::one());
        for _ in 0..k {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Interior product with the basis vector `w_i` dual to `wⁱ`.
    pub fn contract(&self, i: usize) -> Self {
        let bit = 1 << i;
        let below = bit - 1;
        let mut out = Form::zero(self.rank);
        for (m, c) in self.terms() {
            if m & bit == 0 {
                continue;
            }
            let c = if (m & below).count_ones() % 2 == 1 { c.neg() } else { c.clone() };
            out.accumulate(m ^ bit, c);
        }
        out
    }

    /// Interior product with the vector `Σ v[i] w_i`.
    pub fn contract_vec(&self, v: &[R]) -> Self {
        assert_eq!(v.len(), self.rank);
        let mut out = Form::zero(self.rank);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (m, c) in self.contract(i).terms() {
                out.accumulate(m, c.mul(vi));
            }
        }
        out
    }

    /// `(v ∧ w) ⨼ α = ι_w(ι_v α)`, i.e. `α(v, w, ·, …)`.
    pub fn contract_bivector(&self, v: &[R], w: &[R]) -> Self {
        self.contract_vec(v).contract_vec(w)
    }

    /// Substitutes each generator `wⁱ ↦ images[i]` (1-forms of any common rank)
    /// and expands; this is the pullback along the dual linear map.
    pub fn substitute(&self, images: &[Form<R>]) -> Form<R> {
        assert_eq!(images.len(), self.rank);
        let target = images.first().map_or(self.rank, |f| f.rank);
        let mut out = Form::zero(target);
        for (m, c) in self.terms() {
            let mut prod = Form::scalar(target, c.clone());
            for i in indices_of(m) {
                prod = prod.wedge(&images[i]);
                if prod.is_zero() {
                    break;
                }
            }
            for (mm, cc) in prod.terms() {
                out.accumulate(mm, cc.clone());
            }
        }
        out
    }

    /// Re-embeds the form in a coframe of a different rank via an index map.
    pub fn reindex(&self, new_rank: usize, map: impl Fn(usize) -> usize) -> Form<R> {
        let mut out = Form::zero(new_rank);
        for (m, c) in self.terms() {
            let idx: Vec<usize> = indices_of(m).into_iter().map(&map).collect();
            out = out.add(&Form::from_indices(new_rank, &idx, c.clone()));
        }
        out
    }

    /// Drops every monomial touching one of the masked generators.
    pub fn restrict_away(&self, dropped: Mask) -> Form<R> {
        Form {
            rank: self.rank,
            terms: self.terms.iter().filter(|(m, _)| *m & dropped == 0).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Largest coefficient magnitude under a float projection.
    pub fn max_abs(&self, f: impl Fn(&R) -> f64) -> f64 {
        self.terms.values().map(|c| f(c).abs()).fold(0.0, f64::max)
    }

    pub fn fmt_with(&self, labels: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if m == 0 {
                    format!("{c:?}")
                } else {
                    let name: Vec<&str> = indices_of(m).into_iter().map(|i| labels[i]).collect();
                    format!("{c:?}·{}", name.join("∧"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<R: Ring> fmt::Debug for Form<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.rank).map(|i| format!("w{i}")).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        write!(f, "Form[{}]", self.fmt_with(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QuadExt;

    type F = Form<QuadExt>;

    #[test]
    fn basic_wedges() {
        let e1 = F::basis(8, 0);
        let e2 = F::basis(8, 1);
        assert_eq!(e1.wedge(&e2), F::from_indices(8, &[0, 1], QuadExt::int(1)));
        assert!(e1.wedge(&e1).is_zero());
        assert_eq!(e2.wedge(&e1), F::from_indices(8, &[0, 1], QuadExt::int(-1)));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = F::basis(8, 0);
        let b = F::basis(9, 0);
        assert_eq!(a.try_wedge(&b), Err(ExteriorError::RankMismatch(8, 9)));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn contraction_of_basis_bivector() {
        let e12 = F::from_indices(8, &[0, 1], QuadExt::int(1));
        assert_eq!(e12.contract(0), F::basis(8, 1));
        assert_eq!(e12.contract(1), F::basis(8, 0).neg());
    }

    #[test]
    fn wedge_sign_counts_inversions() {
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        assert_eq!(wedge_sign(0b110, 0b001), 1);
    }

    #[test]
    fn degree_detection() {
        let f = F::from_indices(8, &[0, 3, 5], QuadExt::int(2));
        assert_eq!(f.degree(), Some(3));
        assert_eq!(F::zero(8).degree(), None);
        assert_eq!(f.add(&F::basis(8, 0)).degree(), None);
    }
}
