use std::collections::BTreeMap;
use std::fmt;

use super::quadext::QuadExt;
use super::rational::Rational;
use super::ring::{Ring, ToFloat};

/// A finite Fourier polynomial `Σₖ aₖ cos(kt) + bₖ sin(kt)` with coefficients in ℚ(√2, √3).
///
/// Products are linearised on construction, so two polynomials are equal as
/// functions exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<u32, (QuadExt, QuadExt)>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly::default()
    }

    pub fn constant(c: QuadExt) -> Self {
        let mut p = TrigPoly::zero();
        p.accumulate(0, c, QuadExt::int(0));
        p
    }

    /// `c·cos(kt)`.
    pub fn cos(k: u32, c: QuadExt) -> Self {
        let mut p = TrigPoly::zero();
        p.accumulate(k, c, QuadExt::int(0));
        p
    }

    /// `c·sin(kt)`.
    pub fn sin(k: u32, c: QuadExt) -> Self {
        let mut p = TrigPoly::zero();
        p.accumulate(k, QuadExt::int(0), c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &QuadExt, &QuadExt)> {
        self.terms.iter().map(|(k, (a, b))| (*k, a, b))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// Adds `a·cos(kt) + b·sin(kt)` for a possibly negative frequency, keeping the normal form.
    fn accumulate_signed(&mut self, k: i64, a: QuadExt, b: QuadExt) {
        if k < 0 {
            self.accumulate((-k) as u32, a, -b);
        } else {
            self.accumulate(k as u32, a, b);
        }
    }

    fn accumulate(&mut self, k: u32, a: QuadExt, b: QuadExt) {
        // sin(0·t) vanishes identically.
        let b = if k == 0 { QuadExt::int(0) } else { b };
        let entry = self.terms.entry(k).or_insert_with(|| (QuadExt::int(0), QuadExt::int(0)));
        entry.0 = &entry.0 + &a;
        entry.1 = &entry.1 + &b;
        if Ring::is_zero(&entry.0) && Ring::is_zero(&entry.1) {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (k, a, b) in other.terms() {
            out.accumulate(k, a.clone(), b.clone());
        }
        out
    }

    pub fn neg(&self) -> TrigPoly {
        TrigPoly { terms: self.terms.iter().map(|(k, (a, b))| (*k, (-a, -b))).collect() }
    }

    pub fn sub(&self, other: &TrigPoly) -> TrigPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QuadExt) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for (k, a, b) in self.terms() {
            out.accumulate(k, a * c, b * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> TrigPoly {
        self.scale(&QuadExt::from_rational(q.clone()))
    }

    /// Exact product via the product-to-sum identities.
    pub fn mul(&self, other: &TrigPoly) -> TrigPoly {
        let half = QuadExt::rat(1, 2);
        let zero = || QuadExt::int(0);
        let mut out = TrigPoly::zero();
        for (j, a1, b1) in self.terms() {
            for (k, a2, b2) in other.terms() {
                let (j, k) = (j as i64, k as i64);
                // cos·cos = ½[cos(j−k) + cos(j+k)]
                let cc = &(a1 * a2) * &half;
                // sin·sin = ½[cos(j−k) − cos(j+k)]
                let ss = &(b1 * b2) * &half;
                // sin(jt)cos(kt) = ½[sin(j+k) + sin(j−k)]
                let sc = &(b1 * a2) * &half;
                // cos(jt)sin(kt) = ½[sin(j+k) − sin(j−k)]
                let cs = &(a1 * b2) * &half;
                out.accumulate_signed(j - k, &cc + &ss, zero());
                out.accumulate_signed(j + k, &cc - &ss, zero());
                out.accumulate_signed(j + k, zero(), &sc + &cs);
                out.accumulate_signed(j - k, zero(), &sc - &cs);
            }
        }
        out
    }

    /// Term-wise derivative in t.
    pub fn deriv(&self) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for (k, a, b) in self.terms() {
            if k == 0 {
                continue;
            }
            let kq = QuadExt::int(k as i64);
            out.accumulate(k, &kq * b, -(&kq * a));
        }
        out
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms()
            .map(|(k, a, b)| {
                let (s, c) = (k as f64 * t).sin_cos();
                a.to_f64() * c + b.to_f64() * s
            })
            .sum()
    }

    /// Exact value at `t = mπ/12`.
    pub fn eval_pi12(&self, m: i64) -> QuadExt {
        let mut acc = QuadExt::int(0);
        for (k, a, b) in self.terms() {
            let km = k as i64 * m;
            acc = &acc + &(a * &QuadExt::cos_pi12(km));
            acc = &acc + &(b * &QuadExt::sin_pi12(km));
        }
        acc
    }

    /// `(p(t), p'(t), p''(t)/2, …)` up to `order` Taylor coefficients at t.
    pub fn taylor(&self, t: f64, order: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(order);
        let mut p = self.clone();
        let mut fact = 1.0;
        for n in 0..order {
            if n > 0 {
                fact *= n as f64;
            }
            out.push(p.eval(t) / fact);
            p = p.deriv();
        }
        out
    }

    /// Is `p(−t) = p(t)` identically (no sine terms)?
    pub fn is_even(&self) -> bool {
        self.terms().all(|(_, _, b)| Ring::is_zero(b))
    }

    /// Is `p(−t) = −p(t)` identically (no cosine terms)?
    pub fn is_odd(&self) -> bool {
        self.terms().all(|(_, a, _)| Ring::is_zero(a))
    }

    /// `p(t + s)` as a polynomial in t, for a shift `s = mπ/12` with exact coefficients.
    pub fn shift_pi12(&self, m: i64) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for (k, a, b) in self.terms() {
            let (c, s) = (QuadExt::cos_pi12(k as i64 * m), QuadExt::sin_pi12(k as i64 * m));
            // a cos(kt+ks) + b sin(kt+ks)
            let ca = &(a * &c) + &(b * &s);
            let sa = &(b * &c) - &(a * &s);
            out.accumulate(k, ca, sa);
        }
        out
    }

    /// `p(−t)`.
    pub fn reflect(&self) -> TrigPoly {
        let mut out = TrigPoly::zero();
        for (k, a, b) in self.terms() {
            out.accumulate(k, a.clone(), -b);
        }
        out
    }
}

impl Ring for TrigPoly {
    fn zero() -> Self {
        TrigPoly::zero()
    }
    fn one() -> Self {
        TrigPoly::constant(QuadExt::int(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        TrigPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TrigPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TrigPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        TrigPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        TrigPoly::constant(QuadExt::int(n))
    }
}

impl From<QuadExt> for TrigPoly {
    fn from(c: QuadExt) -> Self {
        TrigPoly::constant(c)
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut piece = |f: &mut fmt::Formatter<'_>, c: &QuadExt, basis: String| -> fmt::Result {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if basis.is_empty() {
                write!(f, "{c}")
            } else {
                write!(f, "({c}){basis}")
            }
        };
        for (k, a, b) in self.terms() {
            if k == 0 {
                piece(f, a, String::new())?;
                continue;
            }
            let arg = if k == 1 { "t".to_string() } else { format!("{k}t") };
            if !Ring::is_zero(a) {
                piece(f, a, format!("cos({arg})"))?;
            }
            if !Ring::is_zero(b) {
                piece(f, b, format!("sin({arg})"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigPoly[{self}]")
    }
}

impl ToFloat for TrigPoly {
    /// Only meaningful for constants; non-constant polynomials report NaN.
    fn to_f64(&self) -> f64 {
        if self.is_constant() {
            self.eval(0.0)
        } else {
            f64::NAN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: u32) -> TrigPoly {
        TrigPoly::cos(k, QuadExt::int(1))
    }
    fn s(k: u32) -> TrigPoly {
        TrigPoly::sin(k, QuadExt::int(1))
    }

    #[test]
    fn double_angle_identities() {
        let expect = TrigPoly::constant(QuadExt::rat(1, 2)).add(&TrigPoly::cos(2, QuadExt::rat(1, 2)));
        assert_eq!(c(1).mul(&c(1)), expect);
        assert_eq!(s(2).mul(&c(2)), TrigPoly::sin(4, QuadExt::rat(1, 2)));
        // sin² + cos² = 1
        assert_eq!(s(3).mul(&s(3)).add(&c(3).mul(&c(3))), TrigPoly::one());
    }

    #[test]
    fn cube_of_cosine() {
        let cube = c(1).mul(&c(1)).mul(&c(1));
        let expect = TrigPoly::cos(1, QuadExt::rat(3, 4)).add(&TrigPoly::cos(3, QuadExt::rat(1, 4)));
        assert_eq!(cube, expect);
        for i in 0..50 {
            let t = -3.0 + 0.123 * i as f64;
            assert!((cube.eval(t) - t.cos().powi(3)).abs() < 1e-13);
        }
    }

    #[test]
    fn derivatives() {
        assert_eq!(c(2).deriv(), TrigPoly::sin(2, QuadExt::int(-2)));
        assert!(TrigPoly::constant(QuadExt::sqrt3()).deriv().is_zero());
    }

    #[test]
    fn evaluation_examples() {
        assert!((c(2).eval(0.0) - 1.0).abs() < 1e-15);
        assert!((s(2).eval(std::f64::consts::FRAC_PI_4) - 1.0).abs() < 1e-15);
        let p = TrigPoly::cos(1, QuadExt::rat(3, 4)).add(&TrigPoly::cos(3, QuadExt::rat(1, 4)));
        assert!((p.eval(0.37) - 0.37f64.cos().powi(3)).abs() < 1e-12);
    }

    #[test]
    fn exact_evaluation_and_shift() {
        let p = s(4).add(&c(2).scale(&QuadExt::sqrt2()));
        for m in -6..18 {
            let t = m as f64 * std::f64::consts::PI / 12.0;
            assert!((p.eval_pi12(m).to_f64() - p.eval(t)).abs() < 1e-13);
        }
        let shifted = p.shift_pi12(3);
        for i in 0..10 {
            let t = 0.1 * i as f64;
            assert!((shifted.eval(t) - p.eval(t + std::f64::consts::FRAC_PI_4)).abs() < 1e-13);
        }
    }

    #[test]
    fn no_zero_pairs_and_no_sine_at_zero_frequency() {
        let p = c(3).sub(&c(3));
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
        let q = s(1).mul(&c(1)).add(&s(2).scale(&QuadExt::rat(-1, 2)));
        assert!(q.is_zero());
    }
}
