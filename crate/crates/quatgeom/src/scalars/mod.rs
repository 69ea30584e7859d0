//! Exact coefficient arithmetic: rationals, the field ℚ(√2, √3) and
//! trigonometric polynomials over it.

mod quadext;
mod rational;
mod ring;
mod trigpoly;

pub use quadext::QuadExt;
pub use rational::{int, parse_rational, rat, rational_to_f64, try_rat, Rational};
pub use ring::{Field, Ring, ToFloat};
pub use trigpoly::TrigPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
}

/// Shorthand for `p/q · √n` with `n ∈ {1,2,3,6}`.
pub fn qx(p: i64, q: i64, n: u32) -> QuadExt {
    QuadExt::surd(rat(p, q), n)
}
