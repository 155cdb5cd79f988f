//! Upper bound on the convergent denominator `q_J` and lower bound on the
//! next partial quotient `a_{J+1}` that a solution would force.

use num_bigint::{BigInt, BigUint};

use super::CaseParams;
use crate::bennett::mu;
use crate::exactreal::{interval_pow, kth_root_interval, DyadicInterval, Precision, Rational};
use crate::{Result, VerifyError};

/// Certified `q_J` ceiling for one case.
#[derive(Clone, Debug)]
pub struct QjBound {
    pub bound: BigUint,
    pub lambda: DyadicInterval,
    pub precision_bits: u32,
}

/// `(16 mu_k alpha N / (a c) C^(1-k))^(2 / (k - 2 lambda))` at one precision.
fn qj_bound_at(case: &CaseParams, lambda: &DyadicInterval, p: u32) -> Result<Option<BigUint>> {
    let k = case.k as i64;
    let lam = lambda.with_precision(p);
    let gap = DyadicInterval::from_int(k, p).sub(&lam.shl(1));
    if !gap.certainly_positive() {
        return Ok(None);
    }
    let base = mu(case.k as u64, p)
        .enclosure
        .mul_int(16)
        .mul(&case.alpha(p))
        .mul(&DyadicInterval::from_rational(
            &Rational::new(case.n().into(), BigInt::from(case.a) * case.c),
            p,
        ))
        .mul(&case.c_const(p).powi(1 - k).expect("C > 0"));
    let exponent = DyadicInterval::from_int(2, p).div(&gap).expect("positive gap");
    let value = interval_pow(&base, &exponent)?;
    let ceil = value.hi().ceil();
    Ok(Some(ceil.max(BigInt::from(1)).to_biguint().expect("positive")))
}

/// `q_J` bound with a caller-supplied enclosure of `lambda`.
pub fn qj_bound_for_lambda(case: &CaseParams, lambda: &DyadicInterval, policy: &Precision) -> Result<QjBound> {
    let (bound, bits) = policy.escalate(
        || format!("k - 2 lambda > 0 for {case}"),
        |p| qj_bound_at(case, lambda, p),
    )?;
    Ok(QjBound {
        bound,
        lambda: lambda.clone(),
        precision_bits: bits,
    })
}

/// Ceiling of a certified upper bound for `q_J <= z^2`.
pub fn qj_bound(case: &CaseParams, policy: &Precision) -> Result<QjBound> {
    let ((bound, lambda), bits) = policy.escalate(
        || format!("k - 2 lambda > 0 for {case}"),
        |p| {
            let lambda = case.lambda(&Precision::new(p, policy.cap))?.lambda;
            Ok(qj_bound_at(case, &lambda, p)?.map(|b| (b, lambda)))
        },
    )?;
    Ok(QjBound {
        bound,
        lambda,
        precision_bits: bits,
    })
}

/// Certified lower endpoint of
/// `(k a c x)/(2 alpha) (sqrt(k N) / (a^(3/k) c^(2/k) x))^(k-4) C^(k-1) - 2`.
pub fn aj1_lower_bound(case: &CaseParams, precision: u32) -> Result<Rational> {
    if case.k < 7 {
        return Err(VerifyError::Precondition(format!("a_(J+1) bound needs k >= 7, got {}", case.k)));
    }
    let p = precision;
    let k = case.k;
    let int = |n: BigUint| Rational::from_integer(n.into());
    let sqrt_kn = kth_root_interval(&int(case.n() * k), 2, p);
    let a_root = kth_root_interval(&int(BigUint::from(case.a).pow(3)), k, p);
    let c_root = kth_root_interval(&int(BigUint::from(case.c).pow(2)), k, p);
    let z_floor = sqrt_kn
        .div(&a_root.mul(&c_root).mul_int(case.x))
        .expect("positive");
    let lead = DyadicInterval::from_int(BigInt::from(k) * case.a * case.c * case.x, p)
        .div(&case.alpha(p).shl(1))
        .expect("alpha > 0");
    let value = lead
        .mul(&z_floor.powi(k as i64 - 4).expect("positive"))
        .mul(&case.c_const(p).powi(k as i64 - 1).expect("positive"))
        .sub(&DyadicInterval::from_int(2, p));
    Ok(value.lo().to_rational())
}
