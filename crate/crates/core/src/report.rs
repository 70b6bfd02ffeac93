//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::rat;
use crate::error::Error;
use crate::systems::{PainleveType, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The equation families a check can certify; each check carries exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    Pade,
    Jacobi,
    Determinants,
    Contiguity,
    Evolution,
    C0C1,
    Lax,
    Solution,
    BasePoints,
}

impl Equation {
    pub const ALL: [Equation; 9] = [
        Equation::Pade,
        Equation::Jacobi,
        Equation::Determinants,
        Equation::Contiguity,
        Equation::Evolution,
        Equation::C0C1,
        Equation::Lax,
        Equation::Solution,
        Equation::BasePoints,
    ];

    /// Registry tag, e.g. `q-pade` or `D5L2L3`.
    pub fn tag(self, ptype: PainleveType) -> String {
        let t = ptype.tag();
        match self {
            Equation::Pade => "q-pade".into(),
            Equation::Jacobi => "qJacobi".into(),
            Equation::Determinants => format!("{t}D"),
            Equation::Contiguity => format!("{t}L2L3"),
            Equation::Evolution => format!("{t}eq"),
            Equation::C0C1 => format!("{t}C0C1"),
            Equation::Lax => format!("{t}L1L2"),
            Equation::Solution => format!("{t}sol"),
            Equation::BasePoints => "base-points".into(),
        }
    }
}

/// Every tag a report may contain.
pub fn tag_registry() -> Vec<String> {
    let mut out = vec!["q-pade".to_string(), "qJacobi".to_string()];
    for eq in &Equation::ALL[2..8] {
        out.extend(PainleveType::ALL.iter().map(|&t| eq.tag(t)));
    }
    out.push("base-points".into());
    out
}

/// Parameters echoed as exact strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    #[serde(rename = "type")]
    pub ptype: PainleveType,
    pub q: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<String>,
    pub m: u32,
    pub n: u32,
    pub steps: usize,
}

impl InstanceEcho {
    pub fn new(p: &Params, steps: usize) -> Self {
        InstanceEcho {
            ptype: p.ptype,
            q: rat::fmt(&p.q),
            a: p.a.iter().map(rat::fmt).collect(),
            b: p.b.iter().map(rat::fmt).collect(),
            c: p.c.as_ref().map(rat::fmt),
            d: p.d.as_ref().map(rat::fmt),
            m: p.m,
            n: p.n,
            steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub equation_tag: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
}

impl CheckRecord {
    /// Check family: the id without its `[step]` suffix.
    pub fn family(&self) -> &str {
        self.check_id.split('[').next().unwrap_or(&self.check_id)
    }
}

/// An error that stopped a check or the whole instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub stage: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(stage: &str, e: &Error) -> Self {
        ErrorRecord { kind: e.kind().to_string(), stage: stage.to_string(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(checks: &[CheckRecord]) -> Summary {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Summary { total: checks.len(), pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) }
    }
}

impl std::ops::Add for Summary {
    type Output = Summary;

    fn add(self, o: Summary) -> Summary {
        Summary {
            total: self.total + o.total,
            pass: self.pass + o.pass,
            fail: self.fail + o.fail,
            skipped: self.skipped + o.skipped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: InstanceEcho,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ErrorRecord>,
}

impl VerificationReport {
    pub fn new(instance: InstanceEcho) -> Self {
        VerificationReport { instance, checks: Vec::new(), summary: Summary::default(), errors: Vec::new() }
    }

    pub fn push(&mut self, check_id: String, equation_tag: String, status: Status, witness: BTreeMap<String, String>) {
        self.checks.push(CheckRecord { check_id, equation_tag, status, witness });
        self.summary = Summary::of(&self.checks);
    }

    /// 0 when every non-skipped check passes and nothing errored, 1 on a
    /// failed check, 2 on an input or genericity error.
    pub fn exit_code(&self) -> i32 {
        if !self.errors.is_empty() {
            2
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }
}

/// Several instances, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let summary = reports.iter().fold(Summary::default(), |acc, r| acc + r.summary);
        SweepReport { reports, summary }
    }

    pub fn exit_code(&self) -> i32 {
        self.reports.iter().map(VerificationReport::exit_code).max().unwrap_or(0)
    }
}
