use std::sync::OnceLock;

use nalgebra::DMatrix;

use crate::linalg;
use crate::scalars::{Field, QuadExt, Ring};

use super::cmat::CMat;
use super::LieError;

/// A real Lie algebra given by structure constants `[bᵢ, bⱼ] = Σₖ c[i][j][k] bₖ`
/// in a fixed basis, optionally with a concrete matrix realization of that basis.
#[derive(Clone, Debug)]
pub struct LieAlgebraData {
    name: String,
    labels: Vec<String>,
    c: Vec<Vec<Vec<QuadExt>>>,
    /// Nonzero entries of `c[i][j]` as `(k, c[i][j][k])`.
    sparse: Vec<Vec<Vec<(usize, QuadExt)>>>,
    realization: Option<Vec<CMat>>,
    killing_cache: OnceLock<Vec<Vec<QuadExt>>>,
}

fn sparsify(c: &[Vec<Vec<QuadExt>>]) -> Vec<Vec<Vec<(usize, QuadExt)>>> {
    c.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect())
                .collect()
        })
        .collect()
}

/// An algebra element as a coordinate vector.
pub type Element = Vec<QuadExt>;

impl LieAlgebraData {
    pub fn from_structure(name: &str, labels: Vec<String>, c: Vec<Vec<Vec<QuadExt>>>) -> Self {
        let sparse = sparsify(&c);
        LieAlgebraData { name: name.to_string(), labels, c, sparse, realization: None, killing_cache: OnceLock::new() }
    }

    /// Derives the structure constants of a matrix basis exactly.
    ///
    /// Coordinates are read off through the real trace pairing `Re tr(X†Y)`; each
    /// bracket is reconstructed from its coordinates and compared entrywise, so a
    /// basis that is not closed under the bracket is rejected.
    pub fn from_matrices(name: &str, labels: Vec<String>, mats: Vec<CMat>) -> Result<Self, LieError> {
        let n = mats.len();
        let coords = Coordinates::new(&mats)?;
        let mut c = vec![vec![vec![QuadExt::int(0); n]; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let br = mats[i].bracket(&mats[j]);
                let v = coords.of(&br).ok_or_else(|| LieError::NotClosed(labels[i].clone(), labels[j].clone()))?;
                c[j][i] = v.iter().map(|x| -x).collect();
                c[i][j] = v;
            }
        }
        let mut alg = LieAlgebraData::from_structure(name, labels, c);
        alg.realization = Some(mats);
        Ok(alg)
    }

    /// Attaches a matrix basis; consistency is checked by [`Self::realization_violations`].
    pub fn attach_realization(&mut self, mats: Vec<CMat>) {
        assert_eq!(mats.len(), self.dim());
        self.realization = Some(mats);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure(&self) -> &[Vec<Vec<QuadExt>>] {
        &self.c
    }

    pub fn realization(&self) -> Option<&[CMat]> {
        self.realization.as_deref()
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = vec![QuadExt::int(0); self.dim()];
        v[i] = QuadExt::int(1);
        v
    }

    /// Element from `(label, coefficient)` pairs; panics on unknown labels.
    pub fn element(&self, terms: &[(&str, QuadExt)]) -> Element {
        let mut v = vec![QuadExt::int(0); self.dim()];
        for (l, c) in terms {
            let i = self.index(l).unwrap_or_else(|| panic!("no basis element {l} in {}", self.name));
            v[i] = &v[i] + c;
        }
        v
    }

    pub fn bracket(&self, x: &[QuadExt], y: &[QuadExt]) -> Element {
        let n = self.dim();
        let mut out = vec![QuadExt::int(0); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                if self.sparse[i][j].is_empty() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, c) in &self.sparse[i][j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)`: column j holds the coordinates of `[x, bⱼ]`.
    pub fn ad(&self, x: &[QuadExt]) -> Vec<Vec<QuadExt>> {
        let n = self.dim();
        let mut m = vec![vec![QuadExt::int(0); n]; n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.sparse[i][j] {
                    m[*k][j] = &m[*k][j] + &(xi * c);
                }
            }
        }
        m
    }

    pub fn ad_float(&self, x: &[f64]) -> DMatrix<f64> {
        let n = self.dim();
        let cf = self.float_structure();
        DMatrix::from_fn(n, n, |k, j| (0..n).map(|i| x[i] * cf[(i * n + j) * n + k]).sum())
    }

    /// Flattened `c[i][j][k]` as doubles, index `(i·n + j)·n + k`.
    pub fn float_structure(&self) -> Vec<f64> {
        self.c.iter().flatten().flatten().map(QuadExt::to_f64).collect()
    }

    /// Killing form `κ(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing(&self, x: &[QuadExt], y: &[QuadExt]) -> QuadExt {
        let k = self.killing_matrix();
        let mut acc = QuadExt::int(0);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !k[i][j].is_zero() {
                    acc = &acc + &(&(xi * yj) * &k[i][j]);
                }
            }
        }
        acc
    }

    /// Killing form on basis elements: `κᵢⱼ = Σ_{k,l} c[i][k][l]·c[j][l][k]`.
    pub fn killing_matrix(&self) -> &[Vec<QuadExt>] {
        self.killing_cache.get_or_init(|| self.compute_killing_matrix())
    }

    fn compute_killing_matrix(&self) -> Vec<Vec<QuadExt>> {
        let n = self.dim();
        let mut out = vec![vec![QuadExt::int(0); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut acc = QuadExt::int(0);
                for k in 0..n {
                    for (l, cikl) in &self.sparse[i][k] {
                        let cjlk = &self.c[j][*l][k];
                        if !cjlk.is_zero() {
                            acc = &acc + &(cikl * cjlk);
                        }
                    }
                }
                out[j][i] = acc.clone();
                out[i][j] = acc;
            }
        }
        out
    }

    /// `[bᵢ, bⱼ]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Element {
        self.c[i][j].clone()
    }

    /// Number of index triples violating `c[i][j] = −c[j][i]` (0 for a valid algebra).
    pub fn antisymmetry_violations(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !(&self.c[i][j][k] + &self.c[j][i][k]).is_zero() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Number of basis triples with a nonzero Jacobiator `[[x,y],z] + cyclic`.
    pub fn jacobi_violations(&self) -> usize {
        let n = self.dim();
        let mut bad = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let a = self.bracket(&self.bracket_basis(i, j), &self.basis(k));
                    let b = self.bracket(&self.bracket_basis(j, k), &self.basis(i));
                    let c = self.bracket(&self.bracket_basis(k, i), &self.basis(j));
                    if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(&(p + q) + r).is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Number of dual generators `eᵏ` with `d(deᵏ) ≠ 0` in the Chevalley–Eilenberg complex.
    ///
    /// Works on sparse index triples rather than [`crate::exterior::Form`], so it also
    /// covers algebras whose dimension exceeds the dense form rank.
    pub fn d_squared_violations(&self) -> usize {
        let n = self.dim();
        // deᵏ = −Σ_{i<j} c[i][j][k] eⁱ∧eʲ, as (i, j, coefficient).
        let mut de: Vec<Vec<(usize, usize, QuadExt)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                for (k, c) in &self.sparse[i][j] {
                    de[*k].push((i, j, c.neg()));
                }
            }
        }
        let sorted_sign = |mut idx: [usize; 3]| -> Option<([usize; 3], bool)> {
            let mut odd = false;
            for a in 0..3 {
                for b in 0..2 - a {
                    if idx[b] > idx[b + 1] {
                        idx.swap(b, b + 1);
                        odd = !odd;
                    }
                }
            }
            (idx[0] != idx[1] && idx[1] != idx[2]).then_some((idx, odd))
        };
        (0..n)
            .filter(|&k| {
                let mut acc: std::collections::BTreeMap<[usize; 3], QuadExt> = std::collections::BTreeMap::new();
                let mut add = |idx: [usize; 3], c: QuadExt| {
                    if let Some((key, odd)) = sorted_sign(idx) {
                        let c = if odd { c.neg() } else { c };
                        let entry = acc.entry(key).or_insert_with(|| QuadExt::int(0));
                        *entry = &*entry + &c;
                    }
                };
                // d(eⁱ∧eʲ) = deⁱ∧eʲ − eⁱ∧deʲ.
                for (i, j, c) in &de[k] {
                    for (a, b, ci) in &de[*i] {
                        add([*a, *b, *j], c * ci);
                    }
                    for (a, b, cj) in &de[*j] {
                        add([*i, *a, *b], (c * cj).neg());
                    }
                }
                acc.values().any(|v| !v.is_zero())
            })
            .count()
    }

    /// Number of basis pairs whose matrix commutator disagrees with the structure constants.
    pub fn realization_violations(&self) -> Option<usize> {
        let mats = self.realization.as_ref()?;
        let n = self.dim();
        let size = mats[0].dim();
        let mut bad = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = mats[i].bracket(&mats[j]);
                let terms: Vec<(QuadExt, &CMat)> = (0..n).map(|k| (self.c[i][j][k].clone(), &mats[k])).collect();
                if lhs != CMat::combination(size, &terms) {
                    bad += 1;
                }
            }
        }
        Some(bad)
    }

    /// Matrix of an element in the realization.
    pub fn to_matrix(&self, x: &[QuadExt]) -> Option<CMat> {
        let mats = self.realization.as_ref()?;
        let terms: Vec<(QuadExt, &CMat)> = x.iter().cloned().zip(mats.iter()).collect();
        Some(CMat::combination(mats[0].dim(), &terms))
    }

    /// The constant `λ` with `κ(X,Y) = λ·Re tr(XY)` on the realization, if one exists.
    pub fn killing_trace_multiple(&self) -> Option<QuadExt> {
        let mats = self.realization.as_ref()?;
        let k = self.killing_matrix();
        let n = self.dim();
        let mut lambda: Option<QuadExt> = None;
        for i in 0..n {
            for j in 0..n {
                let tr = mats[i].mul(&mats[j]).trace().re;
                match (tr.is_zero(), k[i][j].is_zero()) {
                    (true, true) => continue,
                    (true, false) | (false, true) => return None,
                    (false, false) => {
                        let r = k[i][j].div(&tr)?;
                        match &lambda {
                            None => lambda = Some(r),
                            Some(l) if *l == r => {}
                            Some(_) => return None,
                        }
                    }
                }
            }
        }
        lambda
    }
}

/// Exact coordinate extraction for a linearly independent matrix basis via the
/// inverse Gram matrix of the real trace pairing.
struct Coordinates<'a> {
    basis: &'a [CMat],
    gram_inv: Vec<Vec<QuadExt>>,
}

impl<'a> Coordinates<'a> {
    fn new(basis: &'a [CMat]) -> Result<Self, LieError> {
        let n = basis.len();
        let mut aug: Vec<Vec<QuadExt>> = (0..n)
            .map(|i| {
                let mut row: Vec<QuadExt> = (0..n).map(|j| basis[i].real_inner(&basis[j])).collect();
                row.extend((0..n).map(|j| QuadExt::int(if i == j { 1 } else { 0 })));
                row
            })
            .collect();
        let order: Vec<usize> = (0..n).collect();
        let pivots = linalg::rref_with_order(&mut aug, &order);
        if pivots.len() < n {
            return Err(LieError::DependentBasis);
        }
        let gram_inv = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(Coordinates { basis, gram_inv })
    }

    fn of(&self, m: &CMat) -> Option<Vec<QuadExt>> {
        let n = self.basis.len();
        let rhs: Vec<QuadExt> = self.basis.iter().map(|b| b.real_inner(m)).collect();
        let coords: Vec<QuadExt> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !rhs[j].is_zero() && !self.gram_inv[i][j].is_zero())
                    .fold(QuadExt::int(0), |acc, j| &acc + &(&self.gram_inv[i][j] * &rhs[j]))
            })
            .collect();
        let terms: Vec<(QuadExt, &CMat)> = coords.iter().cloned().zip(self.basis.iter()).collect();
        (CMat::combination(m.dim(), &terms) == *m).then_some(coords)
    }
}
