//! Machine-readable and text renderings of a command run.

use std::fmt::Write as _;

use homhopf_core::foundation::scalar_to_string;
use homhopf_core::report::{CheckReport, Coeffs};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportViolation {
    pub witness: Vec<usize>,
    /// `[[indices], "coefficient"]` pairs.
    pub lhs: Vec<(Vec<usize>, String)>,
    pub rhs: Vec<(Vec<usize>, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEquation {
    pub id: String,
    pub passed: bool,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
    /// `checked/total`
    pub coverage: String,
    pub violations: Vec<ReportViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSection {
    pub name: String,
    pub passed: bool,
    pub equations: Vec<ReportEquation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub status: Status,
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<Value>,
    pub sections: Vec<ReportSection>,
    /// The constructed structure, in the input format.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn coeffs(c: &Coeffs) -> Vec<(Vec<usize>, String)> {
    c.iter().map(|(k, s)| (k.clone(), scalar_to_string(s))).collect()
}

impl ReportSection {
    pub fn from_report(name: &str, r: &CheckReport) -> Self {
        let equations = r
            .items
            .iter()
            .map(|i| ReportEquation {
                id: i.id.clone(),
                passed: i.passed(),
                checked: i.checked,
                skipped: i.skipped,
                failures: i.failures,
                coverage: format!("{}/{}", i.checked, i.checked + i.skipped),
                violations: i
                    .violations
                    .iter()
                    .map(|v| ReportViolation { witness: v.witness.clone(), lhs: coeffs(&v.lhs), rhs: coeffs(&v.rhs) })
                    .collect(),
            })
            .collect();
        ReportSection { name: name.to_string(), passed: r.passed(), equations }
    }

    /// A single yes/no finding.
    pub fn verdict(name: &str, id: &str, ok: bool) -> Self {
        let mut r = CheckReport::new();
        r.assert_true(id, &[], ok);
        Self::from_report(name, &r)
    }
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            status: Status::Pass,
            errors: Vec::new(),
            warnings: Vec::new(),
            dimensions: None,
            sections: Vec::new(),
            structure: None,
            timing_ms: None,
        }
    }

    pub fn push(&mut self, section: ReportSection) {
        self.sections.push(section);
    }

    /// Marks the run as failed by an error, keeping whatever was already reported.
    pub fn error(&mut self, message: impl Into<String>) {
        self.errors.push(message.into());
    }

    /// Status from errors and section outcomes.
    pub fn finish(&mut self) {
        self.status = if !self.errors.is_empty() {
            Status::Error
        } else if self.sections.iter().all(|s| s.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        if let Some(d) = &self.dimensions {
            let _ = writeln!(out, "dimensions: {d}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let (mut equations, mut tuples) = (0, 0);
        for s in &self.sections {
            let _ = writeln!(out, "[{}]", s.name);
            for e in &s.equations {
                equations += 1;
                tuples += e.checked;
                let verdict = if e.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {} ({} checked)", e.id, e.coverage);
                for v in &e.violations {
                    let _ = writeln!(out, "  at {:?}: {} != {}", v.witness, side(&v.lhs), side(&v.rhs));
                }
            }
        }
        for e in &self.errors {
            let _ = writeln!(out, "error: {e}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "time: {t} ms");
        }
        let _ = match self.status {
            Status::Pass => writeln!(out, "ALL CHECKS PASSED ({equations} equations, {tuples} tuples)"),
            Status::Fail => writeln!(out, "CHECKS FAILED"),
            Status::Error => writeln!(out, "ERROR"),
        };
        out
    }
}

fn side(terms: &[(Vec<usize>, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms.iter().map(|(k, c)| format!("{c}·{k:?}")).collect();
    parts.join(" + ")
}

pub fn parse_report(text: &str) -> Result<ReportDocument, serde_json::Error> {
    serde_json::from_str(text)
}
