use crate::scalars::Ring;

use super::form::Form;

/// An endomorphism of the span of the coframe covectors.
///
/// Column `j` holds the image of `wʲ`: `A(wʲ) = Σᵢ m[i][j] wⁱ`.
#[derive(Clone, PartialEq, Debug)]
pub struct Endo<R: Ring> {
    n: usize,
    m: Vec<Vec<R>>,
}

impl<R: Ring> Endo<R> {
    pub fn zero(n: usize) -> Self {
        Endo { n, m: vec![vec![R::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = Endo::zero(n);
        for i in 0..n {
            e.m[i][i] = R::one();
        }
        e
    }

    pub fn from_rows(m: Vec<Vec<R>>) -> Self {
        let n = m.len();
        assert!(m.iter().all(|r| r.len() == n), "endomorphism matrix must be square");
        Endo { n, m }
    }

    /// The rank-one map `γ ↦ v ∧ (w_j ⨼ γ)` on 1-forms, i.e. `wʲ ↦ v`, written `v ⊗ w_j`.
    pub fn rank_one(v: &[R], j: usize) -> Self {
        let n = v.len();
        let mut e = Endo::zero(n);
        for (i, vi) in v.iter().enumerate() {
            e.m[i][j] = vi.clone();
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.m[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.m[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.m
    }

    /// Image of `wʲ` as a 1-form.
    pub fn image(&self, j: usize) -> Form<R> {
        let col: Vec<R> = (0..self.n).map(|i| self.m[i][j].clone()).collect();
        Form::one_form(&col)
    }

    /// Matrix product: `(self ∘ other)(wʲ) = self(other(wʲ))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Endo::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = R::zero();
                for k in 0..n {
                    if self.m[i][k].is_zero() || other.m[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.m[i][k].mul(&other.m[k][j]));
                }
                out.m[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &R) -> Self {
        Endo { n: self.n, m: self.m.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        Endo { n, m: (0..n).map(|i| (0..n).map(|j| self.m[j][i].clone()).collect()).collect() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|r| r.iter().all(Ring::is_zero))
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        assert_eq!(self.n, other.n);
        Endo {
            n: self.n,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect(),
        }
    }

    /// The derivation `ρ(A)α = Σⱼ A(wʲ) ∧ (w_j ⨼ α)` extending A to all degrees.
    pub fn rho(&self, alpha: &Form<R>) -> Form<R> {
        assert_eq!(self.n, alpha.rank(), "endomorphism and form rank differ");
        let mut out = Form::zero(self.n);
        for j in 0..self.n {
            let img = self.image(j);
            if img.is_zero() {
                continue;
            }
            let c = alpha.contract(j);
            if c.is_zero() {
                continue;
            }
            out = out.add(&img.wedge(&c));
        }
        out
    }

    /// `exp(ρ(A))α` summed until the series terminates (A nilpotent) or `max_terms` is hit.
    pub fn exp_rho(&self, alpha: &Form<R>, max_terms: usize, inv_factorial: impl Fn(usize) -> R) -> Form<R> {
        let mut term = alpha.clone();
        let mut sum = alpha.clone();
        for k in 1..max_terms {
            term = self.rho(&term);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term.scale(&inv_factorial(k)));
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QuadExt;

    #[test]
    fn identity_scales_by_degree() {
        let a = Form::<QuadExt>::from_indices(6, &[0, 2, 5], QuadExt::int(3)).add(&Form::from_indices(
            6,
            &[1, 3, 4],
            QuadExt::sqrt2(),
        ));
        let id = Endo::<QuadExt>::identity(6);
        assert_eq!(id.rho(&a), a.scale(&QuadExt::int(3)));
    }

    #[test]
    fn rank_one_action_matches_wedge_contract() {
        let v: Vec<QuadExt> = (0..5).map(|i| QuadExt::int(i as i64 - 2)).collect();
        let e = Endo::rank_one(&v, 1);
        let a = Form::<QuadExt>::from_indices(5, &[1, 3], QuadExt::int(1));
        let expect = Form::one_form(&v).wedge(&a.contract(1));
        assert_eq!(e.rho(&a), expect);
    }
}
