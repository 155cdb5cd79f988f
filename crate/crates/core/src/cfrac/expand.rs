use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::homographic::{floor_homographic, HomographicState};
use super::CaseParams;
use crate::exactreal::{kth_root_interval, rational_kth_root_exact, DyadicInterval, Rational, DEFAULT_START_PRECISION};
use crate::{Result, VerifyError};

/// Hard ceiling on the enclosure precision the engine may request.
const ENGINE_PRECISION_LIMIT: u32 = 1 << 20;

/// One step of the expansion: `a_i` and the convergent `p_i / q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentRecord {
    pub index: usize,
    pub quotient: BigInt,
    pub p: BigInt,
    pub q: BigInt,
}

/// Streaming partial quotients of `r^(1/k)`.
#[derive(Clone, Debug)]
pub struct CfEngine {
    state: HomographicState,
    theta: DyadicInterval,
    // Some(v) while the value is rational and not yet exhausted
    exact: Option<Rational>,
    rational: bool,
    precision: u32,
}

impl CfEngine {
    pub fn new(r: &Rational, k: u32, start_precision: u32) -> Self {
        let exact = rational_kth_root_exact(r, k);
        let precision = start_precision.max(8);
        CfEngine {
            state: HomographicState::identity(r.clone(), k),
            theta: kth_root_interval(r, k, precision),
            rational: exact.is_some(),
            exact,
            precision,
        }
    }

    /// True when `r` is a perfect k-th power and the expansion is finite.
    pub fn is_rational(&self) -> bool {
        self.rational
    }

    /// Current enclosure precision for `theta`.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn next_quotient(&mut self) -> Result<Option<BigInt>> {
        if self.rational {
            let Some(v) = self.exact.take() else {
                return Ok(None);
            };
            let n = v.numer().div_floor(v.denom());
            let frac = v - Rational::from_integer(n.clone());
            if !frac.is_zero() {
                self.exact = Some(frac.recip());
            }
            return Ok(Some(n));
        }
        loop {
            if let Some(n) = floor_homographic(&self.state, &self.theta)? {
                self.state = self.state.step(&n);
                return Ok(Some(n));
            }
            if self.precision >= ENGINE_PRECISION_LIMIT {
                return Err(VerifyError::Undecidable {
                    what: "continued fraction partial quotient".into(),
                    cap_bits: ENGINE_PRECISION_LIMIT,
                });
            }
            self.precision *= 2;
            self.theta = kth_root_interval(&self.state.r, self.state.k, self.precision);
        }
    }
}

/// Convergents of `r^(1/k)` up to and including the first with `q > q_cap`
/// (or the last one, for a rational root).
pub fn expand_radicand(r: &Rational, k: u32, q_cap: &BigInt, start_precision: u32) -> Result<Vec<ConvergentRecord>> {
    let mut engine = CfEngine::new(r, k, start_precision);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p_prev2, mut q_prev2) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::new();
    while let Some(a) = engine.next_quotient()? {
        let p = &a * &p_prev + &p_prev2;
        let q = &a * &q_prev + &q_prev2;
        let done = &q > q_cap;
        out.push(ConvergentRecord {
            index: out.len(),
            quotient: a,
            p: p.clone(),
            q: q.clone(),
        });
        if done {
            break;
        }
        p_prev2 = std::mem::replace(&mut p_prev, p);
        q_prev2 = std::mem::replace(&mut q_prev, q);
    }
    Ok(out)
}

/// First `count` partial quotients (fewer if the expansion terminates).
pub fn partial_quotients(r: &Rational, k: u32, count: usize, start_precision: u32) -> Result<Vec<BigInt>> {
    let mut engine = CfEngine::new(r, k, start_precision);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        match engine.next_quotient()? {
            Some(a) => out.push(a),
            None => break,
        }
    }
    Ok(out)
}

/// Convergents of `alpha / x` for one case, through the first `q_i > q_cap`.
pub fn cf_expand(case: &CaseParams, q_cap: &BigInt) -> Result<Vec<ConvergentRecord>> {
    expand_radicand(&case.radicand(), case.k, q_cap, DEFAULT_START_PRECISION)
}
