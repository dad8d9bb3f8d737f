//! Verification results: named checks, witnesses, suite reports, canonical rendering.

mod json;
mod runner;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use json::{scalar_from_json, scalar_to_json, vect_terms_json, ScalarJson};
pub use runner::{Axis, Property};

/// Version of the canonical report schema.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// How the input space of a property is covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    /// Every basis tuple.
    Exhaustive,
    /// Generator values on the designated axes, basis elsewhere, plus seeded full-basis samples.
    Generators { guard_samples: u64, seed: u64 },
    /// Seeded uniform sample of basis tuples.
    Sample { n: u64, seed: u64 },
}

impl Mode {
    pub fn label(&self) -> String {
        match self {
            Mode::Exhaustive => "exhaustive".into(),
            Mode::Generators { guard_samples, seed } => format!("generators(+{guard_samples} samples, seed {seed})"),
            Mode::Sample { n, seed } => format!("sample({n}, seed {seed})"),
        }
    }
}

/// Where a witness input came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Basis,
    Generator,
}

/// A counterexample: the inputs and both sides of the failed identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Human-readable input labels, one per axis.
    pub inputs: Vec<String>,
    /// `(source, index)` per axis, enough to replay the case.
    pub case: Vec<(Source, usize)>,
    /// Which sub-identity failed, for composite checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub lhs: String,
    pub rhs: String,
    /// Exact values: `(label, coefficients)` per nonzero term.
    pub lhs_value: Vec<(String, ScalarJson)>,
    pub rhs_value: Vec<(String, ScalarJson)>,
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub cases_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall time; excluded from canonical json.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for CheckResult {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.status == other.status
            && self.mode == other.mode
            && self.witness == other.witness
            && self.cases_checked == other.cases_checked
            && self.note == other.note
    }
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// A single-case comparison of two rendered values.
    pub fn fact(name: impl Into<String>, ok: bool, actual: impl Into<String>, expected: impl Into<String>) -> Self {
        let (actual, expected) = (actual.into(), expected.into());
        CheckResult {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            mode: Mode::Exhaustive,
            witness: (!ok).then(|| Witness {
                inputs: Vec::new(),
                case: Vec::new(),
                detail: None,
                lhs: actual,
                rhs: expected,
                lhs_value: Vec::new(),
                rhs_value: Vec::new(),
            }),
            cases_checked: 1,
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Skipped,
            mode: Mode::Exhaustive,
            witness: None,
            cases_checked: 0,
            note: Some(reason.into()),
            elapsed: Duration::ZERO,
        }
    }

    /// Conjunction of sub-checks: passes iff all pass; the first failure supplies the witness.
    pub fn all(name: impl Into<String>, parts: Vec<CheckResult>) -> Self {
        let name = name.into();
        let cases = parts.iter().map(|p| p.cases_checked).sum();
        let elapsed = parts.iter().map(|p| p.elapsed).sum();
        let mode = parts.first().map(|p| p.mode).unwrap_or(Mode::Exhaustive);
        match parts.iter().find(|p| p.failed()) {
            Some(f) => {
                let mut w = f.witness.clone().unwrap_or_else(|| Witness {
                    inputs: Vec::new(),
                    case: Vec::new(),
                    detail: None,
                    lhs: String::new(),
                    rhs: String::new(),
                    lhs_value: Vec::new(),
                    rhs_value: Vec::new(),
                });
                w.detail = Some(match w.detail {
                    Some(d) => format!("{}: {d}", f.name),
                    None => f.name.clone(),
                });
                CheckResult { name, status: Status::Fail, mode: f.mode, witness: Some(w), cases_checked: cases, note: None, elapsed }
            }
            None => CheckResult { name, status: Status::Pass, mode, witness: None, cases_checked: cases, note: None, elapsed },
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The same result with the status inverted: used where the expected outcome is a failure.
    ///
    /// An expected failure that did occur becomes a pass that keeps its witness.
    pub fn expect_failure(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self.status = match self.status {
            Status::Fail => Status::Pass,
            Status::Pass => Status::Fail,
            Status::Skipped => Status::Skipped,
        };
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

/// A full suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub p: u32,
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts checks by name and computes the summary.
    pub fn new(p: u32, suite: impl Into<String>, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary { total: checks.len() as u64, ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION,
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            p,
            suite: suite.into(),
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Renders a report. Json output has sorted keys and no timing data.
pub fn render(report: &VerificationReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => json::canonical(report).into_bytes(),
        Format::Text => render_text(report).into_bytes(),
    }
}

/// Inverse of json rendering.
pub fn parse(bytes: &[u8]) -> crate::Result<VerificationReport> {
    let r: VerificationReport =
        serde_json::from_slice(bytes).map_err(|e| crate::Error::Format(format!("report json: {e}")))?;
    if r.schema_version != REPORT_SCHEMA_VERSION {
        return Err(crate::Error::Format(format!("unsupported report schema version {}", r.schema_version)));
    }
    Ok(r)
}

fn render_text(r: &VerificationReport) -> String {
    let mut out = format!("hopfbench {} | p = {} | suite {}\n", r.engine_version, r.p, r.suite);
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        out.push_str(&format!("[{tag}] {} ({}, {} cases)\n", c.name, c.mode.label(), c.cases_checked));
        if let Some(n) = &c.note {
            out.push_str(&format!("       note: {n}\n"));
        }
        if let Some(w) = &c.witness {
            if let Some(d) = &w.detail {
                out.push_str(&format!("       failed: {d}\n"));
            }
            if !w.inputs.is_empty() {
                out.push_str(&format!("       inputs: {}\n", w.inputs.join(", ")));
            }
            out.push_str(&format!("       lhs: {}\n       rhs: {}\n", w.lhs, w.rhs));
        }
    }
    let s = &r.summary;
    out.push_str(&format!("summary: {} total, {} passed, {} failed, {} skipped\n", s.total, s.passed, s.failed, s.skipped));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_skeleton() {
        let r = VerificationReport::new(2, "none", Vec::new());
        let j = String::from_utf8(render(&r, Format::Json)).unwrap();
        assert_eq!(
            j,
            format!(
                "{{\"checks\":[],\"engine_version\":\"{}\",\"p\":2,\"schema_version\":1,\"suite\":\"none\",\"summary\":{{\"failed\":0,\"passed\":0,\"skipped\":0,\"total\":0}}}}\n",
                env!("CARGO_PKG_VERSION")
            )
        );
        assert_eq!(parse(j.as_bytes()).unwrap(), r);
    }

    #[test]
    fn failing_fact_renders_both_sides() {
        let r = VerificationReport::new(2, "x", vec![CheckResult::fact("dim", false, "64", "32")]);
        let t = String::from_utf8(render(&r, Format::Text)).unwrap();
        assert!(t.contains("[FAIL] dim"));
        assert!(t.contains("lhs: 64"));
        assert!(t.contains("rhs: 32"));
        let j = render(&r, Format::Json);
        assert_eq!(parse(&j).unwrap(), r);
    }

    #[test]
    fn conjunction_reports_first_failure() {
        let c = CheckResult::all(
            "all",
            vec![CheckResult::fact("a", true, "1", "1"), CheckResult::fact("b", false, "2", "3"), CheckResult::fact("c", false, "4", "5")],
        );
        assert!(c.failed());
        assert_eq!(c.witness.unwrap().detail.as_deref(), Some("b"));
    }
}
