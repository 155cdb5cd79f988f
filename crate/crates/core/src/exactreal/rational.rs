use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::Signed;

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Exact ordering of `q` against the real `r^(1/k)`.
///
/// Decided by comparing `q^k` with `r`; a negative `q` is always below the
/// positive root.
pub fn rat_cmp_kth_root(q: &Rational, r: &Rational, k: u32) -> Ordering {
    assert!(r.is_positive(), "radicand must be positive");
    assert!(k >= 1, "root index must be positive");
    if !q.is_positive() {
        return Ordering::Less;
    }
    // q^k vs r  <=>  qn^k * rd vs rn * qd^k
    let lhs = num_traits::pow(q.numer().clone(), k as usize) * r.denom();
    let rhs = r.numer() * num_traits::pow(q.denom().clone(), k as usize);
    lhs.cmp(&rhs)
}

/// Largest `m` with `m^k <= n`.
pub fn integer_kth_root_floor(n: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1, "root index must be positive");
    n.nth_root(k)
}

/// Returns the exact root when `n` is a perfect k-th power.
pub fn is_perfect_kth_power(n: &BigUint, k: u32) -> Option<BigUint> {
    let m = integer_kth_root_floor(n, k);
    (num_traits::pow(m.clone(), k as usize) == *n).then_some(m)
}

/// `r^(1/k)` when it is rational. `r` must be positive.
pub fn rational_kth_root_exact(r: &Rational, k: u32) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    let num = r.numer().to_biguint()?;
    let den = r.denom().to_biguint()?;
    // lowest terms: r is a k-th power iff numerator and denominator both are
    let p = is_perfect_kth_power(&num, k)?;
    let q = is_perfect_kth_power(&den, k)?;
    Some(Rational::new(
        BigInt::from_biguint(Sign::Plus, p),
        BigInt::from_biguint(Sign::Plus, q),
    ))
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
pub(crate) fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}
