//! Pinned tolerances of every numeric check. `--tol-scale` multiplies all of them.

/// Closed-form coframes against the numeric `Ad`-pullback.
pub const PULLBACK: f64 = 1e-10;
/// Quaternionic angle of transformed degenerate pairs against `¼`.
pub const ANGLE_ORBIT: f64 = 1e-9;
/// Grid-and-pattern-search maximization against the closed form.
pub const ANGLE_SEARCH: f64 = 1e-6;
/// Gram matrices of the flowed and the perturbed coframe.
pub const KILLING_TRIVIALITY: f64 = 1e-10;
/// Einstein deviation where the metric must be Einstein.
pub const EINSTEIN: f64 = 1e-7;
/// Structure-equation residual of the Levi-Civita solver.
pub const STRUCTURE_RESIDUAL: f64 = 1e-10;
/// Entries of the tabulated G₂/SO(4) Ricci tensor and the scalar curvature formula.
pub const RICCI_TABLE: f64 = 1e-6;
/// Finite-difference oracle against the Cartan solver.
pub const FD_ORACLE: f64 = 1e-3;
/// Contracted second Bianchi identity with `t`-differences.
pub const BIANCHI: f64 = 1e-4;
/// Ricci tensor in a rotated frame.
pub const FRAME_COVARIANCE: f64 = 1e-8;
/// Relative spread of the orbit volume over `sin³(2t)cos²(2t)`.
pub const ORBIT_VOLUME: f64 = 1e-9;
/// The bi-invariant connection `½[X, Y]` and `Ric = 3·Id` on SU(3).
pub const BI_INVARIANT: f64 = 1e-12;

/// Bianchi check difference step in `t`.
pub const BIANCHI_STEP: f64 = 1e-4;
/// The tabulated matrix must be recovered by a signed permutation at this accuracy.
pub const FRAME_MATCH: f64 = 1e-6;
/// Below this Einstein deviation a perturbed G₂/SO(4) metric would count as Einstein.
pub const NON_EINSTEIN_MARGIN: f64 = 0.1;
/// The Killing-flow control on G₂/SO(4) must miss by at least this much.
pub const TRIVIALITY_CONTROL: f64 = 1e-3;
