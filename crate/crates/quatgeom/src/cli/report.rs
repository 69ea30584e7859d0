use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::CliError;

/// Schema version of the JSON report.
pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Recorded,
}

/// A numeric bound, or `"exact"` for structural equalities.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Bound {
    Value(f64),
    Exact(ExactTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactTag {
    Exact,
}

impl Bound {
    pub const EXACT: Bound = Bound::Exact(ExactTag::Exact);
}

/// Outcome of one named verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub max_error: Bound,
    pub tolerance: Bound,
    pub paper_anchor: String,
    pub details: String,
}

impl CheckResult {
    /// A structural check: passes iff `holds`.
    pub fn exact(name: &str, anchor: &str, holds: bool, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            max_error: Bound::EXACT,
            tolerance: Bound::EXACT,
            paper_anchor: anchor.into(),
            details: details.into(),
        }
    }

    /// A numeric check: passes iff every side condition holds and `max_error ≤ tolerance`.
    pub fn measured(
        name: &str,
        anchor: &str,
        max_error: f64,
        tolerance: f64,
        side_conditions: bool,
        details: impl Into<String>,
    ) -> Self {
        let within = max_error.is_finite() && max_error <= tolerance;
        CheckResult {
            name: name.into(),
            status: if within && side_conditions { Status::Pass } else { Status::Fail },
            // Non-finite values have no JSON representation; report them as an infinite miss.
            max_error: Bound::Value(if max_error.is_finite() { max_error } else { f64::MAX }),
            tolerance: Bound::Value(tolerance),
            paper_anchor: anchor.into(),
            details: details.into(),
        }
    }

    /// A value reported without a pass/fail verdict.
    pub fn recorded(name: &str, anchor: &str, value: Option<f64>, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Recorded,
            max_error: value.filter(|v| v.is_finite()).map_or(Bound::EXACT, Bound::Value),
            tolerance: Bound::EXACT,
            paper_anchor: anchor.into(),
            details: details.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// The full verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub recorded: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(seed: u64, mut checks: Vec<CheckResult>, recorded: BTreeMap<String, Value>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { version: REPORT_VERSION.into(), seed, checks, recorded }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Canonical JSON: keys sorted, two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> Result<String, CliError> {
        let value = serde_json::to_value(self)?;
        canonicalize(&value)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable summary, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Recorded => "INFO",
            };
            let err = match c.max_error {
                Bound::Value(v) => format!("{v:.3e}"),
                Bound::Exact(_) => "exact".into(),
            };
            let tol = match c.tolerance {
                Bound::Value(v) => format!(" (tol {v:.1e})"),
                Bound::Exact(_) => String::new(),
            };
            out.push_str(&format!("{status}  {:<44} {err}{tol}  {}\n", c.name, c.details));
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Re-serializes any JSON value canonically. `serde_json` maps are ordered by key, so a
/// parse/serialize round trip is byte-identical.
pub fn canonicalize(value: &Value) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let checks = vec![
            CheckResult::measured("b.numeric", "anchor", 1.0e-12 / 3.0, 1e-10, true, "ok"),
            CheckResult::exact("a.exact", "anchor", false, "broken"),
            CheckResult::recorded("c.info", "anchor", Some(0.1 + 0.2), "value"),
        ];
        let mut recorded = BTreeMap::new();
        recorded.insert("zeta".into(), Value::from(1.5));
        recorded.insert("alpha".into(), serde_json::json!({"y": [1, 2], "x": "s"}));
        Report::new(42, checks, recorded)
    }

    #[test]
    fn checks_are_sorted_and_status_follows_tolerance() {
        let r = sample();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a.exact", "b.numeric", "c.info"]);
        assert_eq!(r.checks[1].status, Status::Pass);
        assert!(!r.all_passed());
        let miss = CheckResult::measured("x", "", 2e-10, 1e-10, true, "");
        assert_eq!(miss.status, Status::Fail);
        let nan = CheckResult::measured("x", "", f64::NAN, 1e-10, true, "");
        assert_eq!(nan.status, Status::Fail);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let text = sample().to_canonical_json().unwrap();
        assert!(text.ends_with("}\n"));
        let parsed = Report::from_json(&text).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(parsed.to_canonical_json().unwrap(), text);
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(canonicalize(&value).unwrap(), text);
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.contains("\"max_error\": \"exact\""));
    }
}
