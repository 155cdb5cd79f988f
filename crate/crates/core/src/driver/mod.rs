//! Full verification run: the four elimination chains, auxiliary numeric
//! facts, a small brute-force search and every case of `S`, aggregated into
//! one [`RunReport`].

mod report;

pub use report::{
    AuxCheck, CandidateRecord, CaseCertificate, ChainCertificate, ChainStatus, Enclosure, Params,
    Reason, RunReport, SearchSummary, Totals, UndecidedCase, Verdict,
};

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::bennett::{
    aux_exponential_beats_square, aux_power_fact, hypothesis_check, lambda_cap_value,
    lambda_enclosure, mu_le_sqrt,
};
use crate::cfrac::{verify_case_with, CaseParams, LowerBoundFn};
use crate::elimination::{eliminate_chain, enumerate_cases, standard_chains};
use crate::exactreal::{Precision, DEFAULT_PRECISION_CAP, DEFAULT_START_PRECISION};
use crate::oracle::{search_solutions, SearchMode, SearchRange};
use crate::{Result, VerifyError};


pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable that overrides the worker count.
pub const JOBS_ENV: &str = "VERIFIER_JOBS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub precision_start: u32,
    pub precision_cap: u32,
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            precision_start: DEFAULT_START_PRECISION,
            precision_cap: DEFAULT_PRECISION_CAP,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl VerifyOptions {
    pub fn policy(&self) -> Precision {
        Precision::new(self.precision_start, self.precision_cap)
    }

    fn params(&self) -> Params {
        let p = self.policy();
        Params {
            precision_start: p.start,
            precision_cap: p.cap,
        }
    }
}

pub fn run_chains(policy: &Precision) -> Vec<ChainCertificate> {
    standard_chains()
        .iter()
        .map(|&(k, d)| match eliminate_chain(k, d, policy) {
            Ok(c) => ChainCertificate {
                k,
                d_threshold: d,
                status: if c.contradiction {
                    ChainStatus::Contradiction
                } else {
                    ChainStatus::NoContradiction
                },
                lambda_bound: Some(Enclosure::from_interval(&c.lambda_bound)),
                exponent: Some(Enclosure::from_interval(&c.exponent)),
                lhs: Some(Enclosure::from_interval(&c.lhs)),
                rhs: Some(Enclosure::from_interval(&c.rhs)),
                precision_bits: Some(c.precision_bits),
                error: None,
            },
            Err(e) => ChainCertificate {
                k,
                d_threshold: d,
                status: ChainStatus::Undecidable,
                lambda_bound: None,
                exponent: None,
                lhs: None,
                rhs: None,
                precision_bits: None,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

fn aux(name: &str, r: Result<bool>) -> AuxCheck {
    match r {
        Ok(b) => AuxCheck {
            name: name.into(),
            holds: Some(b),
            error: None,
        },
        Err(e) => AuxCheck {
            name: name.into(),
            holds: None,
            error: Some(e.to_string()),
        },
    }
}

/// Retries a one-sided interval check at rising precision. A `false` at a
/// given precision only means the enclosures still overlap.
fn certified(name: &str, policy: &Precision, check: impl Fn(u32) -> Result<bool>) -> AuxCheck {
    let r = policy
        .escalate(|| name.to_string(), |p| Ok(check(p)?.then_some(true)))
        .map(|(b, _)| b);
    aux(name, r)
}

fn all_of(items: impl Iterator<Item = Result<bool>>) -> Result<bool> {
    let mut ok = true;
    for r in items {
        ok &= r?;
    }
    Ok(ok)
}

/// Numeric side facts the argument relies on, certified on finite ranges.
pub fn run_auxiliary(policy: &Precision) -> Vec<AuxCheck> {
    vec![
        certified("1.99^1.01 > 2", policy, aux_power_fact),
        certified("2^(k-0.6) > k^2 for 7 <= k <= 100", policy, |p| {
            all_of((7..=100).map(|k| aux_exponential_beats_square(k, p)))
        }),
        aux(
            "mu_k <= sqrt(k) for 7 <= k <= 200",
            Ok((7..=200).all(mu_le_sqrt)),
        ),
        aux(
            "Bennett hypothesis at N = 2^k - 1 for 7 <= k <= 64",
            all_of((7..=64u64).map(|k| {
                let n = (BigUint::one() << k as usize) - 1u32;
                hypothesis_check(k, &n, policy).map(|c| c.holds)
            })),
        ),
        certified("Lambda_k(2^k) < Lambda(k) for 7 <= k <= 200", policy, |p| {
            all_of((7..=200u64).map(|k| {
                let d = BigUint::one() << k as usize;
                Ok(match lambda_enclosure(k, &d, p)? {
                    Some(l) => l.certainly_lt(&lambda_cap_value(k, p)?),
                    None => false,
                })
            }))
        }),
        certified("Lambda(k) decreasing for 7 <= k <= 200", policy, |p| {
            let caps = (7..=200u64)
                .map(|k| lambda_cap_value(k, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(caps.windows(2).all(|w| w[1].certainly_lt(&w[0])))
        }),
    ]
}

/// Theorem-mode search over `k in {7, 8}`, `a, b, c <= 3`, `x, y, z in [2, 6]`.
pub fn run_search() -> Result<SearchSummary> {
    let range = SearchRange::uniform(7..=8, 3, 2..=6, SearchMode::Theorem);
    let found = search_solutions(&range, true)?;
    Ok(SearchSummary {
        k: [7, 8],
        abc_max: 3,
        xyz: [2, 6],
        tuples_checked: range.tuple_count(),
        solutions: found.iter().map(|s| s.as_array()).collect(),
    })
}

enum Outcome {
    Done(CaseCertificate),
    Undecided(UndecidedCase),
}

/// Runs everything with the certified `a_{J+1}` bound.
pub fn verify_all(opts: &VerifyOptions) -> Result<RunReport> {
    verify_all_with(opts, None, &crate::cfrac::aj1_lower_bound)
}

/// Like [`verify_all`], reusing certificates from an earlier report made
/// with the same precision parameters. Only missing or undecided cases are
/// recomputed.
pub fn verify_all_resume(opts: &VerifyOptions, previous: &RunReport) -> Result<RunReport> {
    verify_all_with(opts, Some(previous), &crate::cfrac::aj1_lower_bound)
}

pub fn verify_all_with(
    opts: &VerifyOptions,
    previous: Option<&RunReport>,
    lower: &LowerBoundFn,
) -> Result<RunReport> {
    let started = Instant::now();
    let policy = opts.policy();
    let params = opts.params();
    let reusable: HashMap<CaseParams, &CaseCertificate> = previous
        .filter(|p| p.params == params)
        .map(|p| p.cases.iter().map(|c| (c.case, c)).collect())
        .unwrap_or_default();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| VerifyError::Precondition(format!("worker pool: {e}")))?;

    let (chains, auxiliary, search, outcomes) = pool.install(|| {
        let chains = run_chains(&policy);
        let auxiliary = run_auxiliary(&policy);
        let search = run_search();
        let outcomes: Vec<Outcome> = enumerate_cases()
            .par_iter()
            .map(|case| {
                if let Some(c) = reusable.get(case) {
                    return Outcome::Done((*c).clone());
                }
                match verify_case_with(case, &policy, lower) {
                    Ok(cert) => Outcome::Done(cert),
                    Err(e) => Outcome::Undecided(UndecidedCase {
                        case: *case,
                        error: e.to_string(),
                    }),
                }
            })
            .collect();
        (chains, auxiliary, search, outcomes)
    });
    let search = search?;

    let mut cases = Vec::new();
    let mut undecided = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Done(c) => cases.push(c),
            Outcome::Undecided(u) => undecided.push(u),
        }
    }

    let totals = Totals {
        chains: chains.len(),
        chains_contradicted: chains
            .iter()
            .filter(|c| c.status == ChainStatus::Contradiction)
            .count(),
        cases: cases.len() + undecided.len(),
        cases_eliminated: cases.iter().filter(|c| c.eliminated).count(),
        cases_without_admissible_j: cases
            .iter()
            .filter(|c| c.reason == Reason::NoAdmissibleJ)
            .count(),
        candidates_examined: cases.iter().map(|c| c.convergents.len()).sum(),
        survivors: cases.iter().filter(|c| !c.eliminated).count(),
        undecided: undecided.len(),
        wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
    };

    let failed = chains.iter().any(|c| c.status == ChainStatus::NoContradiction)
        || totals.survivors > 0
        || auxiliary.iter().any(|a| a.holds == Some(false))
        || !search.solutions.is_empty();
    let incomplete = chains.iter().any(|c| c.status == ChainStatus::Undecidable)
        || !undecided.is_empty()
        || auxiliary.iter().any(|a| a.holds.is_none());
    let verdict = if failed {
        Verdict::Fail
    } else if incomplete {
        Verdict::Incomplete
    } else {
        Verdict::Pass
    };

    Ok(RunReport {
        version: TOOL_VERSION.to_string(),
        params,
        chains,
        auxiliary,
        search,
        cases,
        undecided,
        totals,
        verdict,
    })
}
