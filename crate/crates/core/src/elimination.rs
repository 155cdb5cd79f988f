//! Reduction to the finite exceptional set `S`.
//!
//! For each regime of `k` the master inequality
//! `(uv^2)^(k - 2 lambda - 2) < 2^8 mu_k^2 alpha^(2(k + 2 lambda)) k^-(k - 2 lambda)`
//! is evaluated at its worst admissible point and shown to fail, leaving only
//! `(7, d < 1035 * 2^7)` and `(8, d < 10 * 2^8)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::bennett::{lambda_cap_value, lambda_enclosure, mu, mu_le_sqrt};
use crate::cfrac::CaseParams;
use crate::exactreal::{interval_pow, Dyadic, DyadicInterval, Precision, Rational};
use crate::{Result, VerifyError};

/// Limits of the exceptional set.
pub struct SetSBound;

impl SetSBound {
    /// `1035 * 2^7`.
    pub const K7_LIMIT: u64 = 132_480;
    /// `10 * 2^8`.
    pub const K8_LIMIT: u64 = 2_560;

    pub fn limit(k: u64) -> Option<u64> {
        match k {
            7 => Some(Self::K7_LIMIT),
            8 => Some(Self::K8_LIMIT),
            _ => None,
        }
    }
}

/// `(k, d) ∈ S`.
pub fn in_s(k: u64, d: &BigUint) -> bool {
    SetSBound::limit(k).is_some_and(|lim| d < &BigUint::from(lim))
}

/// Certified evaluation of one elimination chain.
#[derive(Clone, Debug)]
pub struct EliminationChain {
    pub k: u64,
    pub d_threshold: u64,
    /// Enclosure of the `lambda` bound used (`Lambda(10)` or `Lambda_k(D_min)`).
    pub lambda_bound: DyadicInterval,
    /// `k - 2 lambda - 2`, with `lambda` pinned at the bound's upper endpoint.
    pub exponent: DyadicInterval,
    pub lhs: DyadicInterval,
    pub rhs: DyadicInterval,
    pub contradiction: bool,
    pub precision_bits: u32,
}

/// The four regimes: `k >= 10` (evaluated at `k = 10`), `k = 9`, and `k = 8, 7`
/// outside `S`.
pub fn standard_chains() -> [(u64, u64); 4] {
    [(10, 1 << 10), (9, 1 << 9), (8, SetSBound::K8_LIMIT), (7, SetSBound::K7_LIMIT)]
}

fn chain_at(k: u64, d_min: u64, p: u32) -> Result<Option<EliminationChain>> {
    let w = p;
    // For k >= 10 the bound is Lambda(10) and mu_k^2 is replaced by k, which
    // covers every k >= 10 at once; smaller k use their own Lambda_k(D_min).
    let (lambda_bound, mu_sq) = if k >= 10 {
        if !mu_le_sqrt(k) {
            return Err(VerifyError::Precondition(format!("mu_{k} <= sqrt({k}) fails")));
        }
        (lambda_cap_value(10, w)?, DyadicInterval::from_int(k, w))
    } else {
        let Some(l) = lambda_enclosure(k, &BigUint::from(d_min), w)? else {
            return Ok(None);
        };
        let m = mu(k, w).enclosure;
        (l, m.mul(&m))
    };
    let lam = DyadicInterval::point(lambda_bound.hi().clone(), w);
    let kk = DyadicInterval::from_int(k, w);
    let exponent = kk.sub(&lam.shl(1)).sub(&DyadicInterval::from_int(2, w));
    if !exponent.certainly_positive() {
        let best = kk
            .sub(&DyadicInterval::point(lambda_bound.lo().clone(), w).shl(1))
            .sub(&DyadicInterval::from_int(2, w));
        if !best.hi().is_positive() {
            return Err(VerifyError::Precondition(format!(
                "chain exponent k - 2 lambda - 2 not positive for k = {k}"
            )));
        }
        return Ok(None);
    }
    let uv2 = DyadicInterval::from_int(d_min - 1, w);
    let lhs = interval_pow(&uv2, &exponent)?;

    // alpha^k = 1 + 1/(D_min - 1), raised to 2 + 4 lambda / k
    let alpha_k = DyadicInterval::from_rational(
        &(Rational::one() + Rational::new(1.into(), (d_min - 1).into())),
        w,
    );
    let alpha_exp = DyadicInterval::from_int(2, w).add(&lam.shl(2).div(&kk).expect("k > 0"));
    let k_exp = kk.sub(&lam.shl(1)).neg();
    let rhs = DyadicInterval::from_int(256, w)
        .mul(&mu_sq)
        .mul(&interval_pow(&alpha_k, &alpha_exp)?)
        .mul(&interval_pow(&kk, &k_exp)?);

    // lambda is pinned at its upper endpoint, so a failed comparison only
    // says the enclosure is too coarse; it never certifies the opposite.
    if !lhs.certainly_gt(&rhs) {
        return Ok(None);
    }
    Ok(Some(EliminationChain {
        k,
        d_threshold: d_min,
        lambda_bound: lambda_bound.with_precision(p),
        exponent: exponent.with_precision(p),
        lhs: lhs.with_precision(p),
        rhs: rhs.with_precision(p),
        contradiction: true,
        precision_bits: p,
    }))
}

/// Evaluates the master inequality for one regime at its worst case
/// `uv^2 = D_min - 1`.
pub fn eliminate_chain(k: u64, d_min: u64, policy: &Precision) -> Result<EliminationChain> {
    if k < 7 || d_min < (1 << k.min(62)) {
        return Err(VerifyError::Precondition(format!(
            "chain needs k >= 7 and D_min >= 2^k (got k = {k}, D_min = {d_min})"
        )));
    }
    let (chain, _) = policy.escalate(
        || format!("elimination chain k = {k}, D_min = {d_min}"),
        |p| chain_at(k, d_min, p),
    )?;
    Ok(chain)
}

/// Every `(k, a, c, x)` with `x >= 2` and `(k, a^2 c x^k) ∈ S`, ordered by
/// `(k, x, a, c)`.
pub fn enumerate_cases() -> Vec<CaseParams> {
    let mut out = Vec::new();
    for k in [7u32, 8] {
        let limit = SetSBound::limit(k as u64).unwrap();
        let mut x = 2u64;
        while x.pow(k) < limit {
            let xk = x.pow(k);
            let mut a = 1u64;
            while a * a * xk < limit {
                let max_c = (limit - 1) / (a * a * xk);
                out.extend((1..=max_c).map(|c| CaseParams::new(k, a, c, x)));
                a += 1;
            }
            x += 1;
        }
    }
    out
}

/// True when the dyadic endpoint lies strictly above the rational anchor.
pub fn exceeds(d: &Dyadic, anchor: &Rational) -> bool {
    &d.to_rational() > anchor
}
