use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{aj1_lower_bound, cf_expand, qj_bound, CaseParams};
use crate::driver::{CandidateRecord, CaseCertificate, Enclosure, Reason};
use crate::elimination::in_s;
use crate::exactreal::{Dyadic, Precision, Rational};
use crate::{Result, VerifyError};

/// Source of the required lower bound on `a_{J+1}` at a given precision.
pub type LowerBoundFn = dyn Fn(&CaseParams, u32) -> Result<Rational> + Sync;

/// Eliminates one case of `S` with the certified `a_{J+1}` bound.
pub fn verify_case(case: &CaseParams, policy: &Precision) -> Result<CaseCertificate> {
    verify_case_with(case, policy, &aj1_lower_bound)
}

/// [`verify_case`] with a substitute lower bound (mutation testing).
///
/// Every even `J >= 2` with `q_J <= q_cap` is a candidate; it is contradicted
/// when the actual `a_{J+1}` does not exceed the bound. Survivors trigger a
/// retry at doubled precision and are reported as failures at the cap.
pub fn verify_case_with(case: &CaseParams, policy: &Precision, lower: &LowerBoundFn) -> Result<CaseCertificate> {
    let started = Instant::now();
    if !in_s(case.k as u64, &case.d()) {
        return Err(VerifyError::Precondition(format!("{case} is not in S")));
    }
    let mut p = policy.start;
    loop {
        let qj = qj_bound(case, &Precision::new(p, policy.cap))?;
        let bits = qj.precision_bits.max(p);
        // compare against exactly the value written into the certificate
        let bound = Dyadic::from_rational_down(&lower(case, bits)?, bits + 64);
        let bound_str = bound.to_decimal_string();
        let bound = bound.to_rational();
        let q_cap = BigInt::from(qj.bound.clone());
        let recs = cf_expand(case, &q_cap)?;
        if !recs.first().is_some_and(|r| r.quotient.is_zero()) {
            return Err(VerifyError::Precondition(format!("{case}: alpha/x is not below 1")));
        }
        let mut examined = Vec::new();
        let mut survivors = 0usize;
        for j in (2..recs.len()).step_by(2) {
            if recs[j].q > q_cap {
                break;
            }
            // the expansion runs past q_cap, so a_{J+1} always exists here
            let next = &recs[j + 1].quotient;
            let survives = Rational::from_integer(next.clone()) > bound;
            survivors += survives as usize;
            examined.push(CandidateRecord {
                j,
                p: recs[j].p.to_string(),
                q: recs[j].q.to_string(),
                next_quotient: next.to_string(),
                required_lower_bound: bound_str.clone(),
                contradicted: !survives,
            });
        }
        if survivors > 0 && p < policy.cap {
            p = (p * 2).min(policy.cap);
            continue;
        }
        let reason = if survivors > 0 {
            Reason::FailureSurvivor
        } else if examined.is_empty() {
            Reason::NoAdmissibleJ
        } else {
            Reason::AllJContradicted
        };
        return Ok(CaseCertificate {
            case: *case,
            n: case.n().to_string(),
            lambda: Enclosure::from_interval(&qj.lambda),
            q_cap: qj.bound.to_string(),
            required_lower_bound: bound_str,
            quotients_computed: recs.len(),
            convergents: examined,
            eliminated: reason != Reason::FailureSurvivor,
            reason,
            precision_bits: bits,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        });
    }
}
