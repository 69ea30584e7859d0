use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, is_negative, rat, rational_to_f64, Rational};
use super::ring::{Field, Ring, ToFloat};
use super::ScalarError;

/// An element `a + b√2 + c√3 + d√6` of the biquadratic field ℚ(√2, √3).
///
/// The four rational coordinates are the unique representation with respect to
/// the basis {1, √2, √3, √6}, so equality and zero tests are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        QuadExt { a, b, c, d }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt::new(a, Zero::zero(), Zero::zero(), Zero::zero())
    }

    pub fn int(n: i64) -> Self {
        QuadExt::from_rational(int(n))
    }

    pub fn rat(p: i64, q: i64) -> Self {
        QuadExt::from_rational(rat(p, q))
    }

    pub fn sqrt2() -> Self {
        QuadExt::new(Zero::zero(), One::one(), Zero::zero(), Zero::zero())
    }

    pub fn sqrt3() -> Self {
        QuadExt::new(Zero::zero(), Zero::zero(), One::one(), Zero::zero())
    }

    pub fn sqrt6() -> Self {
        QuadExt::new(Zero::zero(), Zero::zero(), Zero::zero(), One::one())
    }

    /// `q·√n` for `n ∈ {1, 2, 3, 6}`.
    pub fn surd(q: Rational, n: u32) -> Self {
        let z = || <Rational as Zero>::zero();
        match n {
            1 => QuadExt::new(q, z(), z(), z()),
            2 => QuadExt::new(z(), q, z(), z()),
            3 => QuadExt::new(z(), z(), q, z()),
            6 => QuadExt::new(z(), z(), z(), q),
            _ => panic!("√{n} is not a basis surd of ℚ(√2,√3)"),
        }
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b) && Zero::is_zero(&self.c) && Zero::is_zero(&self.d)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuadExt::new(&self.a * q, &self.b * q, &self.c * q, &self.d * q)
    }

    /// Galois conjugate √3 ↦ −√3.
    fn conj3(&self) -> Self {
        QuadExt::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    /// Galois conjugate √2 ↦ −√2.
    fn conj2(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero_value() {
            return Err(ScalarError::DivisionByZero);
        }
        // x·σ₃(x) lies in ℚ(√2); multiplying that by its √2-conjugate lands in ℚ.
        let s3 = self.conj3();
        let r = self * &s3;
        let r2 = r.conj2();
        let norm = &r * &r2;
        debug_assert!(norm.is_rational());
        let inv_norm = num_traits::Inv::inv(norm.a.clone());
        Ok((&s3 * &r2).scale(&inv_norm))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.checked_inv()?)
    }

    fn is_zero_value(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b) && Zero::is_zero(&self.c) && Zero::is_zero(&self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let s2 = std::f64::consts::SQRT_2;
        let s3 = 3f64.sqrt();
        let s6 = 6f64.sqrt();
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b) * s2
            + rational_to_f64(&self.c) * s3
            + rational_to_f64(&self.d) * s6
    }

    /// Exact `cos(mπ/12)`; every such value lies in ℚ(√2, √3).
    pub fn cos_pi12(m: i64) -> Self {
        let m = m.rem_euclid(24);
        // Reduce to the first quadrant using cos(π − x) = −cos x and cos(2π − x) = cos x.
        let (m, sign) = match m {
            0..=6 => (m, 1),
            7..=12 => (12 - m, -1),
            13..=18 => (m - 12, -1),
            _ => (24 - m, 1),
        };
        let q = |p, n| QuadExt::surd(rat(p, 4), n);
        let v = match m {
            0 => QuadExt::int(1),
            1 => &q(1, 6) + &q(1, 2),
            2 => QuadExt::surd(rat(1, 2), 3),
            3 => QuadExt::surd(rat(1, 2), 2),
            4 => QuadExt::rat(1, 2),
            5 => &q(1, 6) - &q(1, 2),
            6 => QuadExt::int(0),
            _ => unreachable!(),
        };
        if sign < 0 {
            -&v
        } else {
            v
        }
    }

    /// Exact `sin(mπ/12)`.
    pub fn sin_pi12(m: i64) -> Self {
        QuadExt::cos_pi12(6 - m)
    }
}

impl Default for QuadExt {
    fn default() -> Self {
        QuadExt::int(0)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        if o.is_zero_value() {
            return self.clone();
        }
        if self.is_zero_value() {
            return o.clone();
        }
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        if o.is_zero_value() {
            return self.clone();
        }
        QuadExt::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

/// Product of basis surds: `√mᵢ·√mⱼ = factor·√m_k` over the basis (1, √2, √3, √6).
const SURD_TABLE: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 2), (3, 1), (2, 2)],
    [(2, 1), (3, 1), (0, 3), (1, 3)],
    [(3, 1), (2, 2), (1, 3), (0, 6)],
];

impl QuadExt {
    fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        let mut out: [Rational; 4] = Default::default();
        for (i, x) in self.components().into_iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in o.components().into_iter().enumerate() {
                if Zero::is_zero(y) {
                    continue;
                }
                let (k, f) = SURD_TABLE[i][j];
                let p = x * y;
                if f == 1 {
                    out[k] += p;
                } else {
                    out[k] += p * int(f);
                }
            }
        }
        let [a, b, c, d] = out;
        QuadExt::new(a, b, c, d)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Add<QuadExt> for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        &self + &o
    }
}

impl Sub<QuadExt> for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        &self - &o
    }
}

impl Mul<QuadExt> for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        &self * &o
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::int(0)
    }
    fn one() -> Self {
        QuadExt::int(1)
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::int(n)
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

impl ToFloat for QuadExt {
    fn to_f64(&self) -> f64 {
        QuadExt::to_f64(self)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [(&self.a, ""), (&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")];
        let mut first = true;
        for (q, s) in parts {
            if Zero::is_zero(q) {
                continue;
            }
            let neg = is_negative(q);
            let mag = if neg { -q } else { q.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if s.is_empty() || !One::is_one(&mag) {
                write!(f, "{mag}")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let s2 = QuadExt::sqrt2();
        let s3 = QuadExt::sqrt3();
        assert_eq!(&s2 * &s2, QuadExt::int(2));
        assert_eq!(&s2 * &s3, QuadExt::sqrt6());
        let one = QuadExt::int(1);
        assert_eq!(&(&one + &s2) * &(&one - &s2), QuadExt::int(-1));
        assert_eq!(&QuadExt::sqrt6() * &QuadExt::sqrt6(), QuadExt::int(6));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = QuadExt::new(rat(1, 3), int(2), int(-1), rat(5, 7));
        let y = x.checked_inv().unwrap();
        assert_eq!(&x * &y, QuadExt::int(1));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(QuadExt::int(0).checked_inv(), Err(ScalarError::DivisionByZero));
        assert!(QuadExt::int(3).checked_div(&QuadExt::int(0)).is_err());
    }

    #[test]
    fn exact_twelfth_angles_match_platform_trig() {
        for m in -30..30 {
            let t = m as f64 * std::f64::consts::PI / 12.0;
            assert!((QuadExt::cos_pi12(m).to_f64() - t.cos()).abs() < 1e-14, "cos m={m}");
            assert!((QuadExt::sin_pi12(m).to_f64() - t.sin()).abs() < 1e-14, "sin m={m}");
        }
    }

    #[test]
    fn display_is_readable() {
        let x = QuadExt::new(rat(1, 2), int(0), int(-1), int(2));
        assert_eq!(x.to_string(), "1/2 - √3 + 2√6");
        assert_eq!(QuadExt::int(0).to_string(), "0");
    }
}
