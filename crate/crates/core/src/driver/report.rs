//! Serialized certificates. Field order is the JSON key order.

use serde::{Deserialize, Serialize};

use crate::cfrac::CaseParams;
use crate::exactreal::DyadicInterval;

/// Exact decimal endpoints of a dyadic enclosure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: String,
    pub hi: String,
    pub precision_bits: u32,
}

impl Enclosure {
    pub fn from_interval(x: &DyadicInterval) -> Self {
        Enclosure {
            lo: x.lo().to_decimal_string(),
            hi: x.hi().to_decimal_string(),
            precision_bits: x.precision(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    #[serde(rename = "no-admissible-J")]
    NoAdmissibleJ,
    #[serde(rename = "all-J-contradicted")]
    AllJContradicted,
    #[serde(rename = "FAILURE-survivor")]
    FailureSurvivor,
}

/// One candidate index `J` and the quotient that rules it out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub j: usize,
    pub p: String,
    pub q: String,
    pub next_quotient: String,
    pub required_lower_bound: String,
    pub contradicted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseCertificate {
    pub case: CaseParams,
    pub n: String,
    pub lambda: Enclosure,
    pub q_cap: String,
    pub required_lower_bound: String,
    pub quotients_computed: usize,
    pub convergents: Vec<CandidateRecord>,
    pub eliminated: bool,
    pub reason: Reason,
    pub precision_bits: u32,
    pub wall_time_ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainStatus {
    Contradiction,
    NoContradiction,
    Undecidable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainCertificate {
    pub k: u64,
    pub d_threshold: u64,
    pub status: ChainStatus,
    pub lambda_bound: Option<Enclosure>,
    pub exponent: Option<Enclosure>,
    pub lhs: Option<Enclosure>,
    pub rhs: Option<Enclosure>,
    pub precision_bits: Option<u32>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuxCheck {
    pub name: String,
    pub holds: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub k: [u32; 2],
    pub abc_max: u64,
    pub xyz: [u64; 2],
    pub tuples_checked: u64,
    pub solutions: Vec<[u64; 7]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UndecidedCase {
    pub case: CaseParams,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub precision_start: u32,
    pub precision_cap: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Totals {
    pub chains: usize,
    pub chains_contradicted: usize,
    pub cases: usize,
    pub cases_eliminated: usize,
    pub cases_without_admissible_j: usize,
    pub candidates_examined: usize,
    pub survivors: usize,
    pub undecided: usize,
    pub wall_time_ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Incomplete,
}

impl Verdict {
    /// Process exit code for the CLI.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Incomplete => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub params: Params,
    pub chains: Vec<ChainCertificate>,
    pub auxiliary: Vec<AuxCheck>,
    pub search: SearchSummary,
    pub cases: Vec<CaseCertificate>,
    pub undecided: Vec<UndecidedCase>,
    pub totals: Totals,
    pub verdict: Verdict,
}

impl RunReport {
    /// Copy with every timing field zeroed, for comparisons between runs.
    pub fn without_timing(&self) -> RunReport {
        let mut r = self.clone();
        r.totals.wall_time_ms = 0.0;
        for c in &mut r.cases {
            c.wall_time_ms = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(s)
    }
}
