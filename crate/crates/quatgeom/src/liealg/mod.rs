//! Lie algebra data, the invariant de Rham complex and adjoint flows.

mod adexp;
mod algebra;
mod classical;
mod cmat;
mod complex;

pub use adexp::{ad_exp, killing_defect};
pub use algebra::{Element, LieAlgebraData};
pub use classical::{
    build_g2, build_g2_with_phases, build_sp3, build_su3, build_su4, g2_generators, su3_from_matrices, su3_matrices,
    G2Generators, G2_ROOT_PHASES,
};
pub use cmat::{CMat, Cx};
pub use complex::{Coefficient, InvariantComplex};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("matrix basis is linearly dependent")]
    DependentBasis,
    #[error("bracket [{0}, {1}] leaves the span of the basis")]
    NotClosed(String, String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{qx, QuadExt, Ring};

    #[test]
    fn su3_equations_agree_with_matrix_commutators() {
        let alg = build_su3();
        assert_eq!(alg.realization_violations(), Some(0));
        assert_eq!(alg.structure(), su3_from_matrices().structure());
        assert_eq!(alg.jacobi_violations(), 0);
        assert_eq!(alg.antisymmetry_violations(), 0);
    }

    #[test]
    fn su3_killing_is_minus_twelve() {
        let alg = build_su3();
        let k = alg.killing_matrix();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(k[i][j], QuadExt::int(if i == j { -12 } else { 0 }));
            }
        }
        assert_eq!(alg.killing_trace_multiple(), Some(QuadExt::int(6)));
    }

    #[test]
    fn classical_algebras_are_valid() {
        for (alg, dim, multiple) in [(build_sp3(), 21, 8), (build_su4(), 15, 8), (build_g2(), 14, 4)] {
            assert_eq!(alg.dim(), dim);
            assert_eq!(alg.jacobi_violations(), 0, "{}", alg.name());
            assert_eq!(alg.realization_violations(), Some(0), "{}", alg.name());
            assert_eq!(alg.killing_trace_multiple(), Some(QuadExt::int(multiple)), "{}", alg.name());
        }
    }

    #[test]
    fn sparse_d_squared_detects_jacobi_failure() {
        for alg in [build_su3(), build_sp3(), build_su4(), build_g2()] {
            assert_eq!(alg.d_squared_violations(), 0, "{}", alg.name());
        }
        // [e₁,e₂] = e₁, [e₁,e₃] = e₂ is antisymmetric but breaks Jacobi.
        let mut c = vec![vec![vec![QuadExt::int(0); 3]; 3]; 3];
        c[0][1][0] = QuadExt::int(1);
        c[1][0][0] = QuadExt::int(-1);
        c[0][2][1] = QuadExt::int(1);
        c[2][0][1] = QuadExt::int(-1);
        let labels = ["a", "b", "c"].map(String::from).to_vec();
        let broken = LieAlgebraData::from_structure("broken", labels, c);
        assert_ne!(broken.jacobi_violations(), 0);
        assert_ne!(broken.d_squared_violations(), 0);
    }

    #[test]
    fn sp3_frame_normalization() {
        let alg = build_sp3();
        let p1 = alg.element(&[("P1", qx(1, 8, 2))]); // P₁/(4√2)
        assert_eq!(alg.killing(&p1, &p1).neg(), QuadExt::int(1));
    }

    #[test]
    fn ad_exp_group_law() {
        let alg = build_su3();
        let z: Vec<f64> = (0..8).map(|i| 0.1 * i as f64 - 0.3).collect();
        let a = ad_exp(&alg, &z, 0.4) * ad_exp(&alg, &z, 0.7);
        let b = ad_exp(&alg, &z, 1.1);
        assert!((a - b).amax() < 1e-12);
        assert!((ad_exp(&alg, &z, 0.0) - nalgebra::DMatrix::identity(8, 8)).amax() == 0.0);
        assert!(killing_defect(&alg, &z, 0.9) < 1e-10);
    }
}
