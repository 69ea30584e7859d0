use std::collections::HashMap;
use std::sync::Mutex;

use crate::exterior::{indices_of, Form, Mask};
use crate::scalars::{QuadExt, Ring, TrigPoly};

use super::algebra::LieAlgebraData;

/// Coefficient rings on which the invariant complex can act: they carry a
/// t-derivative and contain the structure-constant field.
pub trait Coefficient: Ring {
    fn derivative(&self) -> Self;
    fn from_quadext(q: &QuadExt) -> Self;
}

impl Coefficient for TrigPoly {
    fn derivative(&self) -> Self {
        self.deriv()
    }
    fn from_quadext(q: &QuadExt) -> Self {
        TrigPoly::constant(q.clone())
    }
}

impl Coefficient for QuadExt {
    fn derivative(&self) -> Self {
        QuadExt::int(0)
    }
    fn from_quadext(q: &QuadExt) -> Self {
        q.clone()
    }
}

impl Coefficient for f64 {
    fn derivative(&self) -> Self {
        0.0
    }
    fn from_quadext(q: &QuadExt) -> Self {
        q.to_f64()
    }
}

/// Left-invariant forms on `G × (0, T)`: generators `e¹ … eⁿ` dual to the algebra
/// basis, optionally followed by `dt` (index `n`).
///
/// `d` acts on invariant 1-forms by `deᵏ(X, Y) = −eᵏ([X, Y])`, kills `dt`, and
/// differentiates coefficients in t.
pub struct InvariantComplex {
    alg: LieAlgebraData,
    with_dt: bool,
    d_generators: Vec<Form<QuadExt>>,
    cache: Mutex<HashMap<Mask, Form<QuadExt>>>,
}

impl InvariantComplex {
    pub fn new(alg: LieAlgebraData, with_dt: bool) -> Self {
        let n = alg.dim();
        let rank = n + usize::from(with_dt);
        let c = alg.structure();
        let d_generators = (0..rank)
            .map(|k| {
                let mut f = Form::zero(rank);
                if k < n {
                    for i in 0..n {
                        for j in (i + 1)..n {
                            if !c[i][j][k].is_zero() {
                                f = f.add(&Form::from_indices(rank, &[i, j], -&c[i][j][k]));
                            }
                        }
                    }
                }
                f
            })
            .collect();
        InvariantComplex { alg, with_dt, d_generators, cache: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.alg
    }

    pub fn rank(&self) -> usize {
        self.alg.dim() + usize::from(self.with_dt)
    }

    /// Index of `dt`, when present.
    pub fn dt_index(&self) -> Option<usize> {
        self.with_dt.then(|| self.alg.dim())
    }

    /// `d` of a generator 1-form.
    pub fn d_generator(&self, k: usize) -> &Form<QuadExt> {
        &self.d_generators[k]
    }

    /// `d(w^{i₁} ∧ … ∧ w^{i_p})` via the graded Leibniz rule, memoized per monomial.
    fn d_monomial(&self, mask: Mask) -> Form<QuadExt> {
        if let Some(f) = self.cache.lock().expect("cache poisoned").get(&mask) {
            return f.clone();
        }
        let rank = self.rank();
        let idx = indices_of(mask);
        let out = match idx.split_first() {
            None => Form::zero(rank),
            Some((&first, rest)) => {
                let rest_mask = mask ^ (1 << first);
                let head = self.d_generators[first].wedge(&Form::monomial(rank, rest_mask, QuadExt::int(1)));
                if rest.is_empty() {
                    head
                } else {
                    let tail = Form::basis(rank, first).wedge(&self.d_monomial(rest_mask));
                    head.sub(&tail)
                }
            }
        };
        self.cache.lock().expect("cache poisoned").insert(mask, out.clone());
        out
    }

    /// Exterior derivative of an invariant form with t-dependent coefficients.
    pub fn d<R: Coefficient>(&self, alpha: &Form<R>) -> Form<R> {
        let rank = self.rank();
        assert_eq!(alpha.rank(), rank, "form rank does not match the complex");
        let mut out = Form::zero(rank);
        for (m, c) in alpha.terms() {
            for (mm, cc) in self.d_monomial(m).terms() {
                out = out.add(&Form::monomial(rank, mm, c.mul(&R::from_quadext(cc))));
            }
            if let Some(dt) = self.dt_index() {
                let dc = c.derivative();
                if !dc.is_zero() && m & (1 << dt) == 0 {
                    let mono = Form::monomial(rank, m, dc);
                    out = out.add(&Form::basis(rank, dt).wedge(&mono));
                }
            }
        }
        out
    }

    /// Vector of the complex for an algebra element (zero `∂t` component).
    pub fn vector<R: Coefficient>(&self, x: &[QuadExt]) -> Vec<R> {
        let mut v: Vec<R> = x.iter().map(R::from_quadext).collect();
        if self.with_dt {
            v.push(R::zero());
        }
        v
    }

    /// Lie derivative along a left-invariant field via Cartan's formula `d ι_X + ι_X d`.
    pub fn lie_derivative<R: Coefficient>(&self, x: &[QuadExt], alpha: &Form<R>) -> Form<R> {
        let v = self.vector::<R>(x);
        self.d(&alpha.contract_vec(&v)).add(&self.d(alpha).contract_vec(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_su3;

    #[test]
    fn d_e1_matches_structure_equation() {
        let cx = InvariantComplex::new(build_su3(), true);
        let de1 = cx.d(&Form::<QuadExt>::basis(9, 0));
        let expect = Form::from_indices(9, &[1, 2], QuadExt::int(-1))
            .add(&Form::from_indices(9, &[3, 4], QuadExt::int(-1)))
            .add(&Form::from_indices(9, &[5, 6], QuadExt::int(2)));
        assert_eq!(de1, expect);
    }

    #[test]
    fn t_derivative_enters_through_dt() {
        let cx = InvariantComplex::new(build_su3(), true);
        let c2 = TrigPoly::cos(2, QuadExt::int(1));
        let alpha = Form::from_indices(9, &[5, 6], c2.clone());
        let expect = Form::from_indices(9, &[8, 5, 6], c2.deriv()).add(
            &cx.d(&Form::from_indices(9, &[5, 6], QuadExt::int(1))).map(|q| TrigPoly::constant(q.clone())).scale(&c2),
        );
        assert_eq!(cx.d(&alpha), expect);
    }
}
