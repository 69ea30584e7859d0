use std::fmt;
use std::str::FromStr;

use crate::scalars::{parse_rational, rational_to_f64, QuadExt, Rational, TrigPoly};
use crate::wolf::Space;

use super::HarmonicError;

/// The profile function `h(t)` of a closed perturbation.
///
/// The grammar is closed: `zero`, `cos:k₁:c₁[,k₂:c₂…]` for `h = Σ cᵢ cos(kᵢt)` with even
/// frequencies, and `logsin:c` for `h = c·log sin(2t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HSpec {
    Zero,
    CosSeries(Vec<(u32, Rational)>),
    LogSin2t(Rational),
}

impl HSpec {
    /// `h` as a trigonometric polynomial, when it is one.
    pub fn profile(&self) -> Option<TrigPoly> {
        match self {
            HSpec::Zero => Some(TrigPoly::zero()),
            HSpec::CosSeries(terms) => {
                Some(terms.iter().fold(TrigPoly::zero(), |acc, (k, c)| {
                    acc.add(&TrigPoly::cos(*k, QuadExt::from_rational(c.clone())))
                }))
            }
            HSpec::LogSin2t(_) => None,
        }
    }

    /// `f = h′` as a trigonometric polynomial, when `h` is one.
    pub fn derivative(&self) -> Option<TrigPoly> {
        self.profile().map(|p| p.deriv())
    }

    /// Whether `h` is smooth on the closed interval (false for the logarithmic profile).
    pub fn is_polynomial(&self) -> bool {
        !matches!(self, HSpec::LogSin2t(_))
    }

    pub fn value(&self, t: f64) -> f64 {
        match self {
            HSpec::LogSin2t(c) => rational_to_f64(c) * (2.0 * t).sin().ln(),
            _ => self.profile().map_or(0.0, |p| p.eval(t)),
        }
    }

    /// Taylor coefficients `(f(t), f′(t), f″(t)/2, …)` of `f = h′` at `t`, `order` of them.
    ///
    /// For `h = c·log sin 2t` the series of `f = 2c·cos 2t / sin 2t` comes from dividing the
    /// two trigonometric series, so no finite differences are involved.
    pub fn derivative_taylor(&self, t: f64, order: usize) -> Vec<f64> {
        match self {
            HSpec::LogSin2t(c) => {
                let c = rational_to_f64(c);
                let num = TrigPoly::cos(2, QuadExt::int(2)).taylor(t, order);
                let den = TrigPoly::sin(2, QuadExt::int(1)).taylor(t, order);
                series_divide(&num, &den).into_iter().map(|x| c * x).collect()
            }
            _ => self.derivative().map_or_else(|| vec![0.0; order], |f| f.taylor(t, order)),
        }
    }

    /// Checks that a cosine series is compatible with the second singular orbit of `space`:
    /// `h(T − t) = h(T + t)` needs `sin(kT) = 0` for every frequency.
    pub fn admissible_for(&self, space: Space) -> Result<(), HarmonicError> {
        if let HSpec::CosSeries(terms) = self {
            for (k, _) in terms {
                if (i64::from(*k) * space.t_end_pi12()) % 12 != 0 {
                    return Err(HarmonicError::Inadmissible { k: *k, space });
                }
            }
        }
        Ok(())
    }
}

/// Quotient of two power series, truncated to the length of `num`.
fn series_divide(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut q = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let acc: f64 = (1..=n).map(|k| den.get(k).copied().unwrap_or(0.0) * q[n - k]).sum();
        q.push((num[n] - acc) / den[0]);
    }
    q
}

impl FromStr for HSpec {
    type Err = HarmonicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |why: &str| HarmonicError::Parse { input: s.to_string(), reason: why.to_string() };
        if s == "zero" {
            return Ok(HSpec::Zero);
        }
        if let Some(rest) = s.strip_prefix("logsin:") {
            let c = parse_rational(rest).map_err(|e| bad(&e.to_string()))?;
            return Ok(HSpec::LogSin2t(c));
        }
        if let Some(rest) = s.strip_prefix("cos:") {
            let mut terms = Vec::new();
            for piece in rest.split(',') {
                let (k, c) = piece.split_once(':').ok_or_else(|| bad("expected `k:c` pairs"))?;
                let k: u32 = k.trim().parse().map_err(|_| bad("frequency must be a non-negative integer"))?;
                if k == 0 || !k.is_multiple_of(2) {
                    return Err(bad("frequencies must be even and positive"));
                }
                let c = parse_rational(c).map_err(|e| bad(&e.to_string()))?;
                terms.push((k, c));
            }
            return Ok(HSpec::CosSeries(terms));
        }
        Err(bad("expected `zero`, `cos:k:c[,k:c…]` or `logsin:c`"))
    }
}

impl fmt::Display for HSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HSpec::Zero => f.write_str("zero"),
            HSpec::LogSin2t(c) => write!(f, "logsin:{c}"),
            HSpec::CosSeries(terms) => {
                let parts: Vec<String> = terms.iter().map(|(k, c)| format!("{k}:{c}")).collect();
                write!(f, "cos:{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn grammar_round_trips() {
        for s in ["zero", "cos:4:1/2", "cos:4:1/2,8:1/8", "logsin:-3/2"] {
            assert_eq!(s.parse::<HSpec>().unwrap().to_string(), s);
        }
        assert_eq!("cos:4:1/2".parse::<HSpec>().unwrap(), HSpec::CosSeries(vec![(4, rat(1, 2))]));
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for s in ["", "cos", "cos:3:1", "cos:4", "cos:4:x", "logsin:", "sin:2:1", "cos:0:1"] {
            assert!(s.parse::<HSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn admissibility_depends_on_the_interval() {
        let h: HSpec = "cos:2:1".parse().unwrap();
        assert!(h.admissible_for(Space::G2So4).is_err());
        assert!(h.admissible_for(Space::Gr2C4).is_ok());
        assert!("cos:4:1".parse::<HSpec>().unwrap().admissible_for(Space::Hp2).is_ok());
    }

    #[test]
    fn logsin_series_matches_closed_derivatives() {
        let h = HSpec::LogSin2t(rat(1, 2));
        let t: f64 = 0.3;
        let jet = h.derivative_taylor(t, 3);
        let cot = 1.0 / (2.0 * t).tan();
        let csc2 = 1.0 / (2.0 * t).sin().powi(2);
        assert!((jet[0] - cot).abs() < 1e-13);
        assert!((jet[1] + 2.0 * csc2).abs() < 1e-12);
        assert!((jet[2] - 4.0 * csc2 * cot).abs() < 1e-11);
    }
}
