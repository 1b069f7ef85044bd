//! Mechanical verification of a fixed catalog of identities.
//!
//! Each case evaluates both sides of an identity over a parameter grid in
//! exact arithmetic (or by p-adic valuation growth for integral
//! representations) and reports the first point where they differ.

mod catalog;
mod exact;
mod integrals;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use catalog::{catalog, out_of_scope, CATALOG_VERSION};

/// Whether a failing case gates the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    MustPass,
    AuditOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFailConfirmed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFailConfirmed => "expected-fail-confirmed",
        })
    }
}

/// A named integer interval of a case's parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
    /// Index ranges follow `--max-n`; levels, primes and orders do not.
    pub index: bool,
}

impl ParamRange {
    pub const fn index(name: &'static str, lo: i64, hi: i64) -> Self {
        ParamRange {
            name,
            lo,
            hi,
            index: true,
        }
    }

    pub const fn fixed(name: &'static str, lo: i64, hi: i64) -> Self {
        ParamRange {
            name,
            lo,
            hi,
            index: false,
        }
    }
}

/// The effective ranges handed to a check.
#[derive(Debug, Clone)]
pub struct Grid {
    ranges: Vec<ParamRange>,
}

impl Grid {
    pub fn new(ranges: Vec<ParamRange>) -> Self {
        Grid { ranges }
    }

    fn get(&self, name: &str) -> &ParamRange {
        self.ranges
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("case has no range `{name}`"))
    }

    pub fn span(&self, name: &str) -> std::ops::RangeInclusive<i64> {
        let r = self.get(name);
        r.lo..=r.hi
    }

    pub fn hi(&self, name: &str) -> i64 {
        self.get(name).hi
    }

    pub fn lo(&self, name: &str) -> i64 {
        self.get(name).lo
    }
}

/// The first grid point where the two sides differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, serde_json::Value>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(params: &[(&str, i64)], lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Counterexample {
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
                .collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

pub type Outcome = Result<Option<Counterexample>>;

/// One catalog entry.
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub expected: Expectation,
    pub ranges: Vec<ParamRange>,
    pub description: &'static str,
    pub note: Option<&'static str>,
    pub check: fn(&Grid) -> Outcome,
}

impl fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .field("ranges", &self.ranges)
            .finish()
    }
}

impl IdentityCase {
    /// Ranges after applying `--max-n` to the index ranges.
    pub fn effective_ranges(&self, max_n: Option<i64>) -> Vec<ParamRange> {
        self.ranges
            .iter()
            .map(|r| match max_n {
                Some(m) if r.index => ParamRange {
                    hi: m.max(r.lo),
                    ..*r
                },
                _ => *r,
            })
            .collect()
    }

    pub fn run(&self, opts: &AuditOptions) -> AuditResult {
        let ranges = self.effective_ranges(opts.max_n);
        let start = Instant::now();
        let outcome = (self.check)(&Grid::new(ranges.clone()));
        let ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
        let counterexample = match outcome {
            Ok(c) => c,
            Err(e) => Some(Counterexample {
                params: BTreeMap::new(),
                lhs: format!("error: {e}"),
                rhs: String::new(),
            }),
        };
        let status = match (&counterexample, self.expected) {
            (None, _) => Status::Pass,
            (Some(_), Expectation::MustPass) => Status::Fail,
            (Some(_), Expectation::AuditOnly) => Status::ExpectedFailConfirmed,
        };
        AuditResult {
            id: self.id.to_string(),
            expected: self.expected,
            status,
            ranges: ranges
                .iter()
                .map(|r| (r.name.to_string(), [r.lo, r.hi]))
                .collect(),
            counterexample,
            note: self.note.map(str::to_string),
            ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditResult {
    pub id: String,
    pub expected: Expectation,
    pub status: Status,
    pub ranges: BTreeMap<String, [i64; 2]>,
    pub counterexample: Option<Counterexample>,
    pub note: Option<String>,
    pub ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail_confirmed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub version: String,
    pub catalog_version: String,
    pub cases: Vec<AuditResult>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn all_must_pass_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditOptions {
    /// Replaces the upper bound of every index range.
    pub max_n: Option<i64>,
    /// Record wall-clock milliseconds per case; off keeps reports byte-stable.
    pub timings: bool,
}

/// Case selection: everything, or a list of ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// Parse `all` or a comma-separated id list.
    pub fn parse(s: &str) -> Self {
        if s.trim() == "all" {
            Selection::All
        } else {
            Selection::Ids(
                s.split(',')
                    .map(|t| t.trim().to_string())
                    .filter(|t| !t.is_empty())
                    .collect(),
            )
        }
    }
}

/// Resolve a selection against the catalog, preserving catalog order.
pub fn select(selection: &Selection) -> Result<Vec<IdentityCase>> {
    let all = catalog();
    match selection {
        Selection::All => Ok(all),
        Selection::Ids(ids) => {
            if let Some(bad) = ids
                .iter()
                .find(|id| !all.iter().any(|c| c.id == id.as_str()))
            {
                return Err(Error::UnknownCaseId(bad.clone()));
            }
            Ok(all
                .into_iter()
                .filter(|c| ids.iter().any(|id| id == c.id))
                .collect())
        }
    }
}

/// Run the selected cases concurrently and assemble the report in catalog order.
pub fn run_audit(selection: &Selection, opts: &AuditOptions) -> Result<AuditReport> {
    let cases = select(selection)?;
    let cases: Vec<AuditResult> = cases.par_iter().map(|c| c.run(opts)).collect();
    let mut summary = Summary::default();
    for r in &cases {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::ExpectedFailConfirmed => summary.expected_fail_confirmed += 1,
        }
    }
    Ok(AuditReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        catalog_version: CATALOG_VERSION.to_string(),
        cases,
        summary,
    })
}
