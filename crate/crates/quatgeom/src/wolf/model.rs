use nalgebra::{DMatrix, DVector};

use crate::liealg::{ad_exp, build_g2, build_sp3, build_su3, build_su4, Element, LieAlgebraData};
use crate::linalg;
use crate::scalars::{qx, QuadExt, Ring};

use super::coframe::{g2_coframe, gr2_coframe, hp2_coframe, CoframeFamily, COLS, DT};
use super::Space;

/// One of the eight-dimensional Wolf spaces `G/K`, presented as a cohomogeneity-one
/// SU(3)-manifold.
///
/// The adapted coframe is stored as eight covectors on the ambient algebra (vanishing on
/// `𝔨`), the SU(3)-action as the images of `e₁ … e₈`, and the orbit map
/// `(g, t) ↦ g·exp(tZ)K` through the normal element `Z ∈ 𝔭`.
#[derive(Clone, Debug)]
pub struct WolfSpaceModel {
    space: Space,
    ambient: LieAlgebraData,
    su3: LieAlgebraData,
    k_basis: Vec<Element>,
    p_basis: Vec<Element>,
    highest_root: Vec<Element>,
    highest_root_centralizer: Vec<Element>,
    adapted_coframe: Vec<Element>,
    su3_embed: Vec<Element>,
    normal: Element,
    killing_scale: QuadExt,
    coframe: CoframeFamily,
}

fn basis_elements(alg: &LieAlgebraData, labels: &[&str]) -> Vec<Element> {
    labels.iter().map(|l| alg.element(&[(l, QuadExt::int(1))])).collect()
}

/// Covectors `c·(coordinate of label)` on the ambient algebra.
fn coordinate_covectors(alg: &LieAlgebraData, spec: &[(&str, QuadExt)]) -> Vec<Element> {
    spec.iter()
        .map(|(l, c)| {
            let mut v = vec![QuadExt::int(0); alg.dim()];
            v[alg.index(l).unwrap_or_else(|| panic!("unknown label {l}"))] = c.clone();
            v
        })
        .collect()
}

fn dot(a: &[QuadExt], b: &[QuadExt]) -> QuadExt {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(QuadExt::int(0), |acc, (x, y)| &acc + &(x * y))
}

fn to_f64(v: &[QuadExt]) -> Vec<f64> {
    v.iter().map(QuadExt::to_f64).collect()
}

impl WolfSpaceModel {
    pub fn build(space: Space) -> Self {
        match space {
            Space::Hp2 => Self::hp2(),
            Space::Gr2C4 => Self::gr2c4(),
            Space::G2So4 => Self::g2so4(),
        }
    }

    fn hp2() -> Self {
        let g = build_sp3();
        let h = |n: i64, d: i64, r: u32| qx(n, d, r);
        let el = |t: &[(&str, QuadExt)]| g.element(t);
        let su3_embed = vec![
            el(&[("A1", QuadExt::int(1)), ("A2", QuadExt::int(-1))]),
            el(&[("P2", h(1, 2, 2)), ("P3", h(-1, 2, 2))]),
            el(&[("P5", h(1, 2, 2)), ("P6", h(1, 2, 2))]),
            el(&[("P2", h(1, 2, 2)), ("P3", h(1, 2, 2))]),
            el(&[("P5", h(1, 2, 2)), ("P6", h(-1, 2, 2))]),
            el(&[("P1", QuadExt::int(1))]),
            el(&[("P4", QuadExt::int(-1))]),
            el(&[("A1", h(1, 3, 3)), ("A2", h(1, 3, 3)), ("A3", h(-2, 3, 3))]),
        ];
        let four_r2 = qx(4, 1, 2);
        let frame: Vec<(&str, QuadExt)> =
            ["P1", "P4", "Q1", "Q4", "P2", "P5", "Q2", "Q5"].iter().map(|l| (*l, four_r2.clone())).collect();
        let sp1 = ["A1", "R1", "R4"];
        let sp2 = ["A2", "A3", "P3", "P6", "Q3", "Q6", "R2", "R3", "R5", "R6"];
        let mut k_labels = sp1.to_vec();
        k_labels.extend_from_slice(&sp2);
        WolfSpaceModel {
            space: Space::Hp2,
            k_basis: basis_elements(&g, &k_labels),
            p_basis: basis_elements(&g, &["P1", "P4", "Q1", "Q4", "P2", "P5", "Q2", "Q5"]),
            highest_root: basis_elements(&g, &sp1),
            highest_root_centralizer: basis_elements(&g, &sp2),
            adapted_coframe: coordinate_covectors(&g, &frame),
            su3_embed,
            normal: el(&[("Q1", QuadExt::int(1))]),
            killing_scale: QuadExt::int(1),
            coframe: hp2_coframe(),
            su3: build_su3(),
            ambient: g,
        }
    }

    fn gr2c4() -> Self {
        let g = build_su4();
        let r = qx(1, 2, 2);
        let el = |t: &[(&str, QuadExt)]| g.element(t);
        let one = || QuadExt::int(1);
        let su3_embed = vec![
            el(&[("A1", one()), ("A2", one())]),
            el(&[("C1", r.clone()), ("C4", r.clone())]),
            el(&[("B1", r.clone()), ("B4", r.clone())]),
            el(&[("C1", r.clone()), ("C4", -&r)]),
            el(&[("B1", r.clone()), ("B4", -&r)]),
            el(&[("C2", one())]),
            el(&[("B2", QuadExt::int(-1))]),
            el(&[("A1", qx(1, 3, 3)), ("A2", qx(-1, 3, 3))]),
        ];
        let frame: Vec<(&str, QuadExt)> =
            ["C1", "B1", "C5", "B5", "C2", "B2", "C6", "B6"].iter().map(|l| (*l, QuadExt::int(4))).collect();
        let sp1 = vec![el(&[("A1", one()), ("A2", one()), ("A3", one())]), el(&[("C3", one())]), el(&[("B3", one())])];
        let centralizer = vec![
            el(&[("A1", one()), ("A3", QuadExt::int(-1))]),
            el(&[("A2", one())]),
            el(&[("C4", one())]),
            el(&[("B4", one())]),
        ];
        let mut k_basis = sp1.clone();
        k_basis.extend(centralizer.iter().cloned());
        WolfSpaceModel {
            space: Space::Gr2C4,
            k_basis,
            p_basis: basis_elements(&g, &["C1", "B1", "C5", "B5", "C2", "B2", "C6", "B6"]),
            highest_root: sp1,
            highest_root_centralizer: centralizer,
            adapted_coframe: coordinate_covectors(&g, &frame),
            su3_embed,
            normal: el(&[("C5", one())]),
            killing_scale: QuadExt::int(1),
            coframe: gr2_coframe(),
            su3: build_su3(),
            ambient: g,
        }
    }

    fn g2so4() -> Self {
        let g = build_g2();
        let r = qx(1, 2, 2);
        let el = |t: &[(&str, QuadExt)]| g.element(t);
        let one = || QuadExt::int(1);
        let su3_embed = vec![
            el(&[("A1", one()), ("A2", one())]),
            el(&[("W2", r.clone()), ("W6", r.clone())]),
            el(&[("Z6", r.clone()), ("Z2", -&r)]),
            el(&[("W2", r.clone()), ("W6", -&r)]),
            el(&[("Z2", -&r), ("Z6", -&r)]),
            el(&[("W5", one())]),
            el(&[("Z5", QuadExt::int(-1))]),
            el(&[("A1", qx(-1, 3, 3)), ("A2", qx(-1, 1, 3))]),
        ];
        let s3 = QuadExt::sqrt3();
        let frame = [
            ("W2", one()),
            ("Z2", one()),
            ("W5", QuadExt::int(-1)),
            ("Z5", QuadExt::int(-1)),
            ("W3", s3.clone()),
            ("Z3", s3.clone()),
            ("W4", -&s3),
            ("Z4", -&s3),
        ];
        let sp1 = vec![el(&[("A1", one()), ("A2", QuadExt::int(2))]), el(&[("W6", one())]), el(&[("Z6", one())])];
        let l1 = basis_elements(&g, &["A1", "W1", "Z1"]);
        WolfSpaceModel {
            space: Space::G2So4,
            k_basis: basis_elements(&g, &["A1", "A2", "W1", "Z1", "W6", "Z6"]),
            p_basis: basis_elements(&g, &["W2", "Z2", "W5", "Z5", "W3", "Z3", "W4", "Z4"]),
            highest_root: sp1,
            highest_root_centralizer: l1,
            adapted_coframe: coordinate_covectors(&g, &frame),
            su3_embed,
            normal: el(&[("W3", one())]),
            killing_scale: QuadExt::int(16),
            coframe: g2_coframe(),
            su3: build_su3(),
            ambient: g,
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn name(&self) -> &'static str {
        self.space.display_name()
    }

    pub fn ambient(&self) -> &LieAlgebraData {
        &self.ambient
    }

    pub fn su3(&self) -> &LieAlgebraData {
        &self.su3
    }

    pub fn k_basis(&self) -> &[Element] {
        &self.k_basis
    }

    pub fn p_basis(&self) -> &[Element] {
        &self.p_basis
    }

    /// Wolf's highest-root 𝔰𝔭(1).
    pub fn highest_root_sp1(&self) -> &[Element] {
        &self.highest_root
    }

    /// The complement of the highest-root 𝔰𝔭(1) in 𝔨, which is its centralizer.
    pub fn highest_root_centralizer(&self) -> &[Element] {
        &self.highest_root_centralizer
    }

    pub fn adapted_coframe(&self) -> &[Element] {
        &self.adapted_coframe
    }

    pub fn su3_embedding(&self) -> &[Element] {
        &self.su3_embed
    }

    pub fn normal_element(&self) -> &Element {
        &self.normal
    }

    /// `λ` such that the frame dual to the adapted coframe is orthonormal for `−κ/λ`.
    pub fn killing_scale(&self) -> &QuadExt {
        &self.killing_scale
    }

    pub fn coframe(&self) -> &CoframeFamily {
        &self.coframe
    }

    pub fn t_end(&self) -> f64 {
        self.space.t_end()
    }

    /// Numerical pullback of the adapted coframe along the orbit map at `t`:
    /// column `j < 8` is `f ∘ pr_𝔭 ∘ Ad(exp(−tZ))` applied to the image of `e_{j+1}`,
    /// and the last column is `f(Z)`, the image of `∂/∂t`.
    pub fn pullback_numeric(&self, t: f64) -> DMatrix<f64> {
        let n = self.ambient.dim();
        let ad = ad_exp(&self.ambient, &to_f64(&self.normal), -t);
        let pcov = DMatrix::from_fn(8, n, |i, k| self.adapted_coframe[i][k].to_f64());
        let mut out = DMatrix::zeros(8, COLS);
        for (j, e) in self.su3_embed.iter().enumerate() {
            let moved = &ad * DVector::from_vec(to_f64(e));
            out.set_column(j, &(&pcov * moved));
        }
        out.set_column(DT, &(&pcov * DVector::from_vec(to_f64(&self.normal))));
        out
    }

    /// Coordinates of `pr_𝔭 Ad(exp(−tZ)) e_j` on the listed 𝔭 basis (8×8, column `j`).
    pub fn p_coordinates_numeric(&self, t: f64) -> DMatrix<f64> {
        let n = self.ambient.dim();
        let ad = ad_exp(&self.ambient, &to_f64(&self.normal), -t);
        let pcov = DMatrix::from_fn(8, n, |i, k| self.p_basis[i][k].to_f64());
        let mut out = DMatrix::zeros(8, 8);
        for (j, e) in self.su3_embed.iter().enumerate() {
            out.set_column(j, &(&pcov * (&ad * DVector::from_vec(to_f64(e)))));
        }
        out
    }

    /// Largest entrywise difference between the numerical pullback and the closed-form coframe.
    pub fn pullback_defect(&self, ts: &[f64]) -> f64 {
        ts.iter().map(|&t| linalg::max_abs(&(self.pullback_numeric(t) - self.coframe.eval(t)))).fold(0.0, f64::max)
    }

    /// Exact coframe on `𝔰𝔲(3)` only (columns `e¹ … e⁸`) at `t = mπ/12`.
    fn orbit_block_pi12(&self, m: i64) -> Vec<Vec<QuadExt>> {
        self.coframe
            .eval_pi12(m)
            .into_iter()
            .map(|mut r| {
                r.truncate(8);
                r
            })
            .collect()
    }

    /// Lie algebra of the stabilizer at `t = mπ/12`: the common kernel in `𝔰𝔲(3)` of
    /// the coframe, as an exact basis.
    pub fn stabilizer_pi12(&self, m: i64) -> Vec<Element> {
        linalg::nullspace(&self.orbit_block_pi12(m), 8)
    }

    /// Common kernel of the coframe on all of `𝔰𝔲(3) ⊕ ℝ` at `t = mπ/12`.
    pub fn full_kernel_pi12(&self, m: i64) -> Vec<Element> {
        linalg::nullspace(&self.coframe.eval_pi12(m), COLS)
    }

    /// Expected stabilizer algebras at `t = 0`, generic `t` and `t = T`, in `𝔰𝔲(3)` coordinates.
    pub fn expected_stabilizer(&self, point: OrbitPoint) -> Vec<Element> {
        let v = |terms: &[(usize, i64)]| {
            let mut e = vec![QuadExt::int(0); 8];
            for &(i, c) in terms {
                e[i - 1] = QuadExt::int(c);
            }
            e
        };
        let u2_start = vec![v(&[(1, 1)]), v(&[(8, 1)]), v(&[(2, 1), (4, -1)]), v(&[(3, 1), (5, -1)])];
        match point {
            OrbitPoint::Generic => vec![v(&[(1, 1)])],
            OrbitPoint::Start => u2_start,
            OrbitPoint::End => match self.space {
                Space::Hp2 => vec![v(&[(1, 1)]), v(&[(6, 1)]), v(&[(7, 1)])],
                Space::Gr2C4 => vec![v(&[(1, 1)]), v(&[(8, 1)]), v(&[(2, 1), (4, 1)]), v(&[(3, 1), (5, 1)])],
                Space::G2So4 => vec![v(&[(1, 1)]), v(&[(2, 1)]), v(&[(3, 1)])],
            },
        }
    }

    /// Multiple of `π/12` at which each orbit point is sampled exactly.
    pub fn orbit_point_pi12(&self, point: OrbitPoint) -> i64 {
        match point {
            OrbitPoint::Start => 0,
            OrbitPoint::Generic => 1,
            OrbitPoint::End => self.space.t_end_pi12(),
        }
    }

    /// Violations of the structural invariants of the model (empty when all hold).
    pub fn invariant_violations(&self) -> Vec<String> {
        let g = &self.ambient;
        let mut bad = Vec::new();
        let n = g.dim();
        if self.p_basis.len() != 8 || self.k_basis.len() + 8 != n {
            bad.push(format!(
                "dimensions: dim 𝔨 = {}, dim 𝔭 = {}, dim 𝔤 = {n}",
                self.k_basis.len(),
                self.p_basis.len()
            ));
        }
        let mut all = self.k_basis.clone();
        all.extend(self.p_basis.iter().cloned());
        if linalg::rank(&all) != n {
            bad.push("𝔨 ⊕ 𝔭 does not span the ambient algebra".into());
        }
        for (i, x) in self.k_basis.iter().enumerate() {
            for y in &self.k_basis[i..] {
                if !linalg::span_contains(&self.k_basis, &g.bracket(x, y)) {
                    bad.push("[𝔨, 𝔨] ⊄ 𝔨".into());
                }
            }
            for y in &self.p_basis {
                if !g.killing(x, y).is_zero() {
                    bad.push("κ(𝔨, 𝔭) ≠ 0".into());
                }
                if !linalg::span_contains(&self.p_basis, &g.bracket(x, y)) {
                    bad.push("[𝔨, 𝔭] ⊄ 𝔭".into());
                }
            }
        }
        // The highest-root 𝔰𝔭(1) and its centralizer commute and together fill 𝔨.
        for x in &self.highest_root {
            for y in &self.highest_root_centralizer {
                if g.bracket(x, y).iter().any(|c| !c.is_zero()) {
                    bad.push("highest-root 𝔰𝔭(1) does not commute with its complement".into());
                }
            }
        }
        let centralizer = self.centralizer_of_highest_root();
        if !linalg::same_span(&centralizer, &self.highest_root_centralizer) {
            bad.push(format!("centralizer of 𝔰𝔭(1) has dimension {}", centralizer.len()));
        }
        // SU(3) embedding is a homomorphism reproducing the structure equations.
        let c = self.su3.structure();
        for i in 0..8 {
            for j in (i + 1)..8 {
                let lhs = g.bracket(&self.su3_embed[i], &self.su3_embed[j]);
                let mut rhs = vec![QuadExt::int(0); n];
                for (k, ck) in c[i][j].iter().enumerate() {
                    if !ck.is_zero() {
                        for (r, x) in rhs.iter_mut().zip(&self.su3_embed[k]) {
                            *r = &*r + &(ck * x);
                        }
                    }
                }
                if lhs != rhs {
                    bad.push(format!("embedding fails on [e{}, e{}]", i + 1, j + 1));
                }
            }
        }
        if !linalg::span_contains(&self.p_basis, &self.normal) {
            bad.push("Z ∉ 𝔭".into());
        }
        if self.su3_embed.iter().any(|e| !g.killing(e, &self.normal).is_zero()) {
            bad.push("Z is not Killing-orthogonal to 𝔰𝔲(3)".into());
        }
        // Adapted coframe vanishes on 𝔨 and is orthonormal for −κ/λ.
        for f in &self.adapted_coframe {
            if self.k_basis.iter().any(|k| !dot(f, k).is_zero()) {
                bad.push("adapted coframe does not vanish on 𝔨".into());
            }
        }
        if let Some(duals) = self.adapted_frame() {
            let minus_inv = -&self.killing_scale.checked_inv().expect("nonzero scale");
            for i in 0..8 {
                for j in 0..8 {
                    let want = QuadExt::int(i64::from(i == j));
                    if &g.killing(&duals[i], &duals[j]) * &minus_inv != want {
                        bad.push(format!("adapted frame not orthonormal at ({}, {})", i + 1, j + 1));
                    }
                }
            }
        } else {
            bad.push("adapted coframe is degenerate on 𝔭".into());
        }
        bad.sort();
        bad.dedup();
        bad
    }

    /// The frame of `𝔭` dual to the adapted coframe.
    pub fn adapted_frame(&self) -> Option<Vec<Element>> {
        // Pairing matrix P[i][j] = fⁱ(p_j); dual vectors are p·P⁻¹.
        let pairing: Vec<Vec<QuadExt>> =
            self.adapted_coframe.iter().map(|f| self.p_basis.iter().map(|p| dot(f, p)).collect()).collect();
        let inv = linalg::inverse(&pairing)?;
        let n = self.ambient.dim();
        Some(
            (0..8)
                .map(|i| {
                    let mut v = vec![QuadExt::int(0); n];
                    for (j, p) in self.p_basis.iter().enumerate() {
                        if !inv[j][i].is_zero() {
                            for (a, b) in v.iter_mut().zip(p) {
                                *a = &*a + &(&inv[j][i] * b);
                            }
                        }
                    }
                    v
                })
                .collect(),
        )
    }

    /// Centralizer of the highest-root 𝔰𝔭(1), computed as a common kernel of `ad`.
    pub fn centralizer_of_highest_root(&self) -> Vec<Element> {
        let rows: Vec<Vec<QuadExt>> = self.highest_root.iter().flat_map(|x| self.ambient.ad(x)).collect();
        linalg::nullspace(&rows, self.ambient.dim())
    }
}

/// The three sampled positions along the orbit interval `[0, T]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitPoint {
    Start,
    Generic,
    End,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn models_satisfy_invariants() {
        for s in Space::ALL {
            let m = WolfSpaceModel::build(s);
            assert_eq!(m.invariant_violations(), Vec::<String>::new(), "{s}");
        }
    }

    #[test]
    fn pullbacks_match_closed_forms() {
        let ts: Vec<f64> = (1..=5).map(|i| 0.13 * i as f64).collect();
        for s in Space::ALL {
            let m = WolfSpaceModel::build(s);
            assert!(m.pullback_defect(&ts) < 1e-10, "{s}: {}", m.pullback_defect(&ts));
        }
    }

    #[test]
    fn stabilizers_are_as_expected() {
        for s in Space::ALL {
            let m = WolfSpaceModel::build(s);
            for p in [OrbitPoint::Start, OrbitPoint::Generic, OrbitPoint::End] {
                let got = m.stabilizer_pi12(m.orbit_point_pi12(p));
                assert!(linalg::same_span(&got, &m.expected_stabilizer(p)), "{s} {p:?}");
            }
        }
    }
}
