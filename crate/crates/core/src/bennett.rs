//! Quantities from Bennett's effective approximation lemma for
//! `(1 + 1/N)^(1/n)`: `mu_n`, the lemma's hypothesis, and the exponents
//! `Lambda_K(D)` and `Lambda(K)` as certified enclosures.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::exactreal::{
    interval_ln, interval_pow, kth_root_interval, DyadicInterval, Precision, Rational,
};
use crate::{Result, VerifyError};

const GUARD: u32 = 24;

/// `mu_n = prod_{p | n} p^(1/(p-1))`.
#[derive(Clone, Debug)]
pub struct MuValue {
    pub n: u64,
    /// Distinct prime divisors of `n` (ascending) with exponent `1/(p-1)`.
    pub factors: Vec<(u64, Rational)>,
    pub enclosure: DyadicInterval,
}

pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn mu(n: u64, precision: u32) -> MuValue {
    assert!(n >= 2, "mu_n needs n >= 2");
    let primes = distinct_prime_factors(n);
    let w = precision + GUARD;
    let mut enclosure = DyadicInterval::from_int(1, w);
    let mut factors = Vec::with_capacity(primes.len());
    for &p in &primes {
        factors.push((p, Rational::new(1.into(), (p - 1).into())));
        let root = kth_root_interval(&Rational::from_integer(p.into()), (p - 1) as u32, w);
        enclosure = enclosure.mul(&root);
    }
    MuValue {
        n,
        factors,
        enclosure: enclosure.with_precision(precision),
    }
}

/// Exact decision of `mu_k <= sqrt(k)`.
///
/// With `L = lcm(p - 1)` over the primes `p | k` both sides are raised to the
/// power `2L`, giving `prod p^(2L/(p-1)) <= k^L` in integers.
pub fn mu_le_sqrt(k: u64) -> bool {
    assert!(k >= 2);
    let primes = distinct_prime_factors(k);
    let l = primes.iter().fold(1u64, |acc, &p| acc.lcm(&(p - 1)));
    let lhs = primes.iter().fold(BigUint::one(), |acc, &p| {
        acc * num_traits::pow(BigUint::from(p), (2 * l / (p - 1)) as usize)
    });
    let rhs = num_traits::pow(BigUint::from(k), l as usize);
    lhs <= rhs
}

/// `(sqrt(N) + sqrt(N + 1))^2` is kept as `sqrt(N) + sqrt(N + 1)`.
fn root_sum(big_n: &BigUint, precision: u32) -> DyadicInterval {
    let a = kth_root_interval(&Rational::from_integer(big_n.clone().into()), 2, precision);
    let b = kth_root_interval(
        &Rational::from_integer((big_n + 1u32).into()),
        2,
        precision,
    );
    a.add(&b)
}

/// Outcome of the lemma's hypothesis test, with the precision that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCertificate {
    pub n: u64,
    pub big_n: BigUint,
    pub holds: bool,
    pub precision_bits: u32,
}

/// Decides `(sqrt(N) + sqrt(N+1))^(2(n-2)) > (n mu_n)^n`.
pub fn hypothesis_check(n: u64, big_n: &BigUint, policy: &Precision) -> Result<HypothesisCertificate> {
    if n < 3 || big_n.bits() == 0 {
        return Err(VerifyError::Precondition(format!(
            "hypothesis needs n >= 3 and N >= 1 (got n = {n}, N = {big_n})"
        )));
    }
    let (holds, precision_bits) = policy.escalate(
        || format!("Bennett hypothesis for n = {n}, N = {big_n}"),
        |p| {
            let w = p + GUARD;
            let lhs = root_sum(big_n, w).powi(2 * (n as i64 - 2)).expect("positive");
            let rhs = mu(n, w)
                .enclosure
                .mul_int(n)
                .powi(n as i64)
                .expect("positive");
            Ok(if lhs.certainly_gt(&rhs) {
                Some(true)
            } else if lhs.certainly_lt(&rhs) {
                Some(false)
            } else {
                None
            })
        },
    )?;
    Ok(HypothesisCertificate {
        n,
        big_n: big_n.clone(),
        holds,
        precision_bits,
    })
}

/// The exponent `lambda = Lambda_k(D)` together with the cap `Lambda(k)`.
#[derive(Clone, Debug)]
pub struct LambdaBundle {
    pub k: u64,
    pub d: BigUint,
    pub lambda: DyadicInterval,
    pub lambda_cap: DyadicInterval,
    pub precision_bits: u32,
}

impl LambdaBundle {
    /// Certified `k - 2 lambda > 0`.
    pub fn exponent_gap_positive(&self) -> bool {
        DyadicInterval::from_int(self.k, self.lambda.precision())
            .sub(&self.lambda.shl(1))
            .certainly_positive()
    }
}

/// `Lambda_K(D) = 2 + 2 ln(K mu_K) / (2 ln(sqrt(D-1) + sqrt(D)) - ln(K mu_K))`.
///
/// `None` when the denominator enclosure straddles zero at this precision.
pub fn lambda_enclosure(k: u64, d: &BigUint, precision: u32) -> Result<Option<DyadicInterval>> {
    let w = precision + GUARD;
    let kmu = mu(k, w).enclosure.mul_int(k);
    let ln_kmu = interval_ln(&kmu)?;
    let ln_roots = interval_ln(&root_sum(&(d - 1u32), w))?;
    let denom = ln_roots.shl(1).sub(&ln_kmu);
    if !denom.certainly_positive() {
        return Ok(None);
    }
    let frac = ln_kmu.shl(1).div(&denom).expect("positive denominator");
    Ok(Some(
        frac.add(&DyadicInterval::from_int(2, w))
            .with_precision(precision),
    ))
}

/// `Lambda(K) = 2 + 6 ln K / (2 (K + 1) ln 2 - 3 ln K)`.
pub fn lambda_cap_value(k: u64, precision: u32) -> Result<DyadicInterval> {
    if k < 7 {
        return Err(VerifyError::Precondition(format!("Lambda(K) needs K >= 7, got {k}")));
    }
    let w = precision + GUARD;
    let ln_k = interval_ln(&DyadicInterval::from_int(k, w))?;
    let ln_2 = interval_ln(&DyadicInterval::from_int(2, w))?;
    let denom = ln_2.mul_int(2 * (k + 1)).sub(&ln_k.mul_int(3));
    let frac = ln_k
        .mul_int(6)
        .div(&denom)
        .ok_or_else(|| VerifyError::Domain(format!("Lambda({k}) denominator not positive")))?;
    Ok(frac
        .add(&DyadicInterval::from_int(2, w))
        .with_precision(precision))
}

/// `lambda = Lambda_k(D)` for `D >= 2^k`, escalating only if the denominator
/// cannot be separated from zero.
pub fn lambda_case(k: u64, d: &BigUint, policy: &Precision) -> Result<LambdaBundle> {
    if k < 7 {
        return Err(VerifyError::Precondition(format!("lambda needs k >= 7, got {k}")));
    }
    if d < &(BigUint::one() << k as usize) {
        return Err(VerifyError::Precondition(format!("lambda needs D >= 2^{k}, got {d}")));
    }
    let (lambda, bits) = policy.escalate(
        || format!("Lambda_{k}({d}) denominator sign"),
        |p| lambda_enclosure(k, d, p),
    )?;
    Ok(LambdaBundle {
        k,
        d: d.clone(),
        lambda_cap: lambda_cap_value(k, bits)?,
        lambda,
        precision_bits: bits,
    })
}

/// Certified `1.99^1.01 > 2`.
pub fn aux_power_fact(precision: u32) -> Result<bool> {
    let base = DyadicInterval::from_rational(&Rational::new(199.into(), 100.into()), precision);
    let e = DyadicInterval::from_rational(&Rational::new(101.into(), 100.into()), precision);
    Ok(interval_pow(&base, &e)?.certainly_gt(&DyadicInterval::from_int(2, precision)))
}

/// Certified `2^(k - 0.6) > k^2`.
pub fn aux_exponential_beats_square(k: u64, precision: u32) -> Result<bool> {
    let e = DyadicInterval::from_rational(
        &(Rational::from_integer(k.into()) - Rational::new(3.into(), 5.into())),
        precision,
    );
    let lhs = interval_pow(&DyadicInterval::from_int(2, precision), &e)?;
    let rhs = DyadicInterval::from_int(k * k, precision);
    Ok(lhs.certainly_gt(&rhs))
}
