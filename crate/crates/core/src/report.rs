//! Per-entry reports and their JSON/text renderings.
//!
//! Key order is fixed by field order and constants live in a `BTreeMap`, so
//! equal inputs serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::poly::Polynomial;
use crate::rational::{fmt_rational, Rational};
use crate::triple::TripleExport;
use crate::verify::{Check, Status};

/// A printed polynomial as recorded; `None` marks a coefficient that depends
/// on a constant with no stated value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrintedPolynomial {
    pub label: String,
    pub coeffs: Vec<Option<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryReport {
    pub entry: String,
    pub constants: BTreeMap<String, String>,
    pub derived_f: Vec<String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<TripleExport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub printed: Vec<PrintedPolynomial>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Command-specific fields, such as the spectrum of a composition.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
}

impl EntryReport {
    pub fn new(entry: impl Into<String>) -> Self {
        EntryReport {
            entry: entry.into(),
            constants: BTreeMap::new(),
            derived_f: Vec::new(),
            checks: Vec::new(),
            matrices: None,
            recipe: None,
            printed: Vec::new(),
            notes: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn constant(mut self, name: &str, value: &Rational) -> Self {
        self.constants.insert(name.to_string(), fmt_rational(value));
        self
    }

    pub fn with_constants(mut self, constants: &BTreeMap<String, Rational>) -> Self {
        for (k, v) in constants {
            self.constants.insert(k.clone(), fmt_rational(v));
        }
        self
    }

    pub fn derived(mut self, f: &Polynomial) -> Self {
        self.derived_f = f.coeff_strings();
        self
    }

    pub fn detail(mut self, name: &str, value: impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("details are plain data");
        self.details.insert(name.to_string(), value);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Renders reports as a JSON array (`pretty` for humans, compact otherwise).
pub fn to_json(reports: &[EntryReport], pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(reports)
    } else {
        serde_json::to_string(reports)
    };
    out.expect("reports are always serializable")
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::DeviationDocumented => "deviation-documented",
        Status::InsufficientPoints => "insufficient-points",
    }
}

pub fn to_text(reports: &[EntryReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "== {}", r.entry);
        if let Some(recipe) = &r.recipe {
            let _ = writeln!(out, "   recipe: {recipe}");
        }
        if !r.constants.is_empty() {
            let list: Vec<String> = r.constants.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "   constants: {}", list.join(", "));
        }
        if !r.derived_f.is_empty() {
            let _ = writeln!(out, "   f coefficients (x^0 up): [{}]", r.derived_f.join(", "));
        }
        for c in &r.checks {
            let _ = write!(out, "   [{}] {} (residual {})", status_tag(c.status), c.name, c.residual);
            if let Some(note) = &c.note {
                let _ = write!(out, " -- {note}");
            }
            out.push('\n');
        }
        for (k, v) in &r.details {
            let _ = writeln!(out, "   {k}: {v}");
        }
        for n in &r.notes {
            let _ = writeln!(out, "   note: {n}");
        }
    }
    let failed = reports.iter().filter(|r| r.failed()).count();
    let _ = writeln!(out, "{} entries, {} with failures", reports.len(), failed);
    out
}
