//! Exterior algebra over a labeled coframe with a pluggable coefficient ring.
//!
//! Monomials are bit masks; signs of reorderings come from popcounts. The same
//! engine runs exact passes (over [`QuadExt`](crate::scalars::QuadExt) or
//! [`TrigPoly`](crate::scalars::TrigPoly)) and numeric passes over `f64`.

mod endo;
mod form;

pub use endo::Endo;
pub use form::{indices_of, mask_of, wedge_sign, Form, Mask, MAX_RANK};

pub use crate::scalars::{Field, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("contraction of a 0-form")]
    DegreeZero,
}

/// Hodge star for the metric making the coframe orthonormal (Riemannian signature):
/// `*w^I = sign(I, Iᶜ) w^{Iᶜ}` so that `α ∧ *α = |α|² vol`.
pub fn hodge_star<R: Ring>(alpha: &Form<R>) -> Form<R> {
    let n = alpha.rank();
    let full: Mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut out = Form::zero(n);
    for (m, c) in alpha.terms() {
        let comp = full ^ m;
        let c = if wedge_sign(m, comp) < 0 { c.neg() } else { c.clone() };
        out.accumulate(comp, c);
    }
    out
}

/// Interior product that rejects 0-forms, matching the strict contract of the operation.
pub fn contract_checked<R: Ring>(v: &[R], alpha: &Form<R>) -> Result<Form<R>, ExteriorError> {
    if alpha.terms().all(|(m, _)| m == 0) {
        return Err(ExteriorError::DegreeZero);
    }
    Ok(alpha.contract_vec(v))
}

/// The volume form `w¹ ∧ … ∧ wⁿ`.
pub fn volume<R: Ring>(rank: usize) -> Form<R> {
    Form::monomial(rank, (1u32 << rank) - 1, R::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QuadExt;

    #[test]
    fn hodge_of_volume_and_unit() {
        let vol = volume::<QuadExt>(8);
        assert_eq!(hodge_star(&vol), Form::scalar(8, QuadExt::int(1)));
        assert_eq!(hodge_star(&Form::scalar(8, QuadExt::int(1))), vol);
    }

    #[test]
    fn hodge_pairing_gives_volume() {
        let a = Form::<QuadExt>::from_indices(8, &[1, 4, 6], QuadExt::int(1));
        assert_eq!(a.wedge(&hodge_star(&a)), volume(8));
    }

    #[test]
    fn contracting_a_function_is_rejected() {
        let f = Form::scalar(3, QuadExt::int(2));
        let v = vec![QuadExt::int(1); 3];
        assert_eq!(contract_checked(&v, &f), Err(ExteriorError::DegreeZero));
    }
}
