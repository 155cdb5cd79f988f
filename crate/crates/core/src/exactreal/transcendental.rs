//! Outward-rounded `ln`, `exp`, real powers and k-th roots.
//!
//! `ln` reduces its argument to `s` in `[3/4, 3/2]` by powers of two and sums
//! `2 atanh((s - 1)/(s + 1))`; `exp` halves its argument below `2^-12`, sums
//! the Taylor series and squares back. Both series are closed with an explicit
//! symmetric tail bound, and internal work is carried at guard precision
//! before the final rounding.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use super::rational::{integer_kth_root_floor, rat, rat_cmp_kth_root};
use super::{Dyadic, DyadicInterval, Rational};
use crate::{Result, VerifyError};

const GUARD_BITS: u32 = 32;

fn tail(bound: &Dyadic, precision: u32) -> DyadicInterval {
    let r = bound.shl(1);
    DyadicInterval::new(-&r, r, precision)
}

/// `atanh(y) = sum y^(2i+1)/(2i+1)` for `|y| <= 1/3`.
fn atanh_series(y: &Rational, precision: u32) -> DyadicInterval {
    if y.is_zero() {
        return DyadicInterval::from_int(0, precision);
    }
    let yv = DyadicInterval::from_rational(y, precision);
    let y2 = yv.mul(&yv);
    let mut term = yv.clone();
    let mut sum = yv;
    let stop = -(precision as i64) - 4;
    let mut i: u64 = 1;
    loop {
        term = term.mul(&y2);
        let mag = term.abs().hi().clone();
        if mag.magnitude_exponent() < stop {
            // |y| <= 1/3 so the remaining tail is below twice the next term
            return sum.add(&tail(&mag, precision));
        }
        let scaled = term
            .div(&DyadicInterval::from_int(2 * i + 1, precision))
            .expect("odd divisor");
        sum = sum.add(&scaled);
        i += 1;
    }
}

fn ln2(precision: u32) -> DyadicInterval {
    atanh_series(&rat(1, 3), precision).shl(1)
}

/// Enclosure of `ln t` for a positive dyadic point.
fn ln_point(t: &Dyadic, precision: u32) -> DyadicInterval {
    debug_assert!(t.is_positive());
    // t = 2^j * s with s in [1, 2)
    let mut j = t.magnitude_exponent() - 1;
    let mut s = t.shl(-j).to_rational();
    if s > rat(3, 2) {
        s /= rat(2, 1);
        j += 1;
    }
    let jbits = 64 - j.unsigned_abs().leading_zeros();
    let w = precision + GUARD_BITS + jbits;
    let y = (&s - rat(1, 1)) / (&s + rat(1, 1));
    let mut acc = atanh_series(&y, w).shl(1);
    if j != 0 {
        acc = acc.add(&ln2(w).mul_int(j));
    }
    acc.with_precision(precision)
}

/// Enclosure of `exp d` for a dyadic point.
fn exp_point(d: &Dyadic, precision: u32) -> DyadicInterval {
    if d.is_zero() {
        return DyadicInterval::from_int(1, precision);
    }
    let halvings = (d.magnitude_exponent() + 12).max(0);
    let w = precision + GUARD_BITS + halvings as u32;
    let t = DyadicInterval::point(d.shl(-halvings), w);
    let one = DyadicInterval::from_int(1, w);
    let mut sum = one.add(&t);
    let mut term = t.clone();
    let stop = -(w as i64) - 4;
    let mut n: u64 = 2;
    loop {
        term = term
            .mul(&t)
            .div(&DyadicInterval::from_int(n, w))
            .expect("positive divisor");
        let mag = term.abs().hi().clone();
        if mag.magnitude_exponent() < stop {
            // |t| < 2^-12: the tail is below twice the current term
            sum = sum.add(&tail(&mag, w));
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    for _ in 0..halvings {
        sum = sum.mul(&sum);
    }
    sum.with_precision(precision)
}

/// Enclosure of `{ ln t : t in x }`.
pub fn interval_ln(x: &DyadicInterval) -> Result<DyadicInterval> {
    if !x.lo().is_positive() {
        return Err(VerifyError::Domain(format!(
            "ln of interval with lower endpoint {}",
            x.lo()
        )));
    }
    let p = x.precision();
    if x.is_point() {
        return Ok(ln_point(x.lo(), p));
    }
    let lo = ln_point(x.lo(), p);
    let hi = ln_point(x.hi(), p);
    Ok(DyadicInterval::new(lo.lo().clone(), hi.hi().clone(), p))
}

/// Enclosure of `{ exp t : t in x }`.
pub fn interval_exp(x: &DyadicInterval) -> DyadicInterval {
    let p = x.precision();
    if x.is_point() {
        return exp_point(x.lo(), p);
    }
    let lo = exp_point(x.lo(), p);
    let hi = exp_point(x.hi(), p);
    DyadicInterval::new(lo.lo().clone(), hi.hi().clone(), p)
}

/// Enclosure of `{ t^s : t in x, s in e }`.
///
/// Point integer exponents go through binary powering; everything else is
/// `exp(e * ln x)` evaluated with guard bits.
pub fn interval_pow(x: &DyadicInterval, e: &DyadicInterval) -> Result<DyadicInterval> {
    if !x.lo().is_positive() {
        return Err(VerifyError::Domain(format!(
            "power of interval with lower endpoint {}",
            x.lo()
        )));
    }
    let p = x.precision().max(e.precision());
    if e.is_point() && e.lo().exponent() >= 0 {
        let n = e.lo().floor();
        if let Ok(n) = i64::try_from(n) {
            let r = x.with_precision(p + GUARD_BITS).powi(n).expect("positive base");
            return Ok(r.with_precision(p));
        }
    }
    let emag = e.abs().hi().magnitude_exponent().max(0) as u32;
    let xmag = x.hi().magnitude_exponent().unsigned_abs().max(x.lo().magnitude_exponent().unsigned_abs());
    let w = p + GUARD_BITS + emag + (64 - xmag.leading_zeros());
    let l = interval_ln(&x.with_precision(w))?;
    let prod = e.with_precision(w).mul(&l);
    Ok(interval_exp(&prod).with_precision(p))
}

/// Enclosure of `r^(1/k)` with width at most `2^-precision * r^(1/k)`.
///
/// Built from an exact integer root of `r * 2^(kP)`; both endpoints are then
/// confirmed with [`rat_cmp_kth_root`].
pub fn kth_root_interval(r: &Rational, k: u32, precision: u32) -> DyadicInterval {
    assert!(r.is_positive(), "k-th root of non-positive rational");
    assert!(k >= 1);
    let num = r.numer().to_biguint().expect("positive");
    let den = r.denom().to_biguint().expect("positive");
    // -log2(root) <= (bits(den) + 1 - bits(num)) / k
    let deficit = (den.bits() as i64 + 1 - num.bits() as i64).max(0);
    let frac_bits = precision as i64 + 2 + (deficit + k as i64 - 1) / k as i64;
    let scaled_num: BigUint = num.clone() << (k as i64 * frac_bits) as usize;
    let root = integer_kth_root_floor(&(&scaled_num / &den), k);
    let exact = num_traits::pow(root.clone(), k as usize) * &den == scaled_num;
    let to_dyadic = |m: BigUint| Dyadic::new(BigInt::from_biguint(Sign::Plus, m), -frac_bits);
    let lo = to_dyadic(root.clone());
    let hi = if exact {
        lo.clone()
    } else {
        to_dyadic(root + BigUint::one())
    };
    assert_ne!(rat_cmp_kth_root(&lo.to_rational(), r, k), std::cmp::Ordering::Greater);
    assert_ne!(rat_cmp_kth_root(&hi.to_rational(), r, k), std::cmp::Ordering::Less);
    DyadicInterval::exact_endpoints(lo, hi, precision)
}
