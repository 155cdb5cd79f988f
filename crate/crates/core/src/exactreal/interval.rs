use std::fmt;

use num_bigint::BigInt;

use super::{Dyadic, Rational};

/// Closed interval `[lo, hi]` with dyadic endpoints.
///
/// `precision` is the number of significant bits each endpoint is rounded to
/// after an operation; results of binary operations carry the larger of the
/// two operand precisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    precision: u32,
}

impl DyadicInterval {
    /// Builds `[lo, hi]` rounded outward to `precision` bits.
    pub fn new(lo: Dyadic, hi: Dyadic, precision: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval {
            lo: lo.round_down(precision),
            hi: hi.round_up(precision),
            precision,
        }
    }

    /// Endpoints taken as given, without rounding to `precision`.
    pub(crate) fn exact_endpoints(lo: Dyadic, hi: Dyadic, precision: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval { lo, hi, precision }
    }

    pub fn point(d: Dyadic, precision: u32) -> Self {
        Self::new(d.clone(), d, precision)
    }

    pub fn from_int<T: Into<BigInt>>(n: T, precision: u32) -> Self {
        Self::point(Dyadic::from_int(n), precision)
    }

    pub fn from_rational(q: &Rational, precision: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational_down(q, precision),
            hi: Dyadic::from_rational_up(q, precision),
            precision,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Same endpoints, re-rounded (outward) to a new working precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::new(self.lo.clone(), self.hi.clone(), precision)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &DyadicInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Certified `self < other` for every pair of points.
    pub fn certainly_lt(&self, other: &DyadicInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_gt(&self, other: &DyadicInterval) -> bool {
        self.lo > other.hi
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Enlarges both ends by `ulps` units in the last place at the working precision.
    pub fn widen_ulps(&self, ulps: i64) -> Self {
        let ulp = |d: &Dyadic| {
            let e = if d.is_zero() {
                -(self.precision as i64)
            } else {
                d.magnitude_exponent() - self.precision as i64
            };
            Dyadic::new(BigInt::from(ulps), e)
        };
        DyadicInterval {
            lo: &self.lo - &ulp(&self.lo),
            hi: &self.hi + &ulp(&self.hi),
            precision: self.precision,
        }
    }

    /// Convex hull of two enclosures.
    pub fn hull(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            precision: self.precision.max(other.precision),
        }
    }

    pub fn add(&self, rhs: &DyadicInterval) -> Self {
        Self::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi, self.prec_with(rhs))
    }

    pub fn sub(&self, rhs: &DyadicInterval) -> Self {
        Self::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo, self.prec_with(rhs))
    }

    pub fn neg(&self) -> Self {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
            precision: self.precision,
        }
    }

    pub fn mul(&self, rhs: &DyadicInterval) -> Self {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self::new(lo, hi, self.prec_with(rhs))
    }

    /// Division; `None` when the divisor encloses zero.
    pub fn div(&self, rhs: &DyadicInterval) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let p = self.prec_with(rhs);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div_round(b, p, false))
            .min()
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div_round(b, p, true))
            .max()
            .unwrap();
        Some(DyadicInterval {
            lo,
            hi,
            precision: p,
        })
    }

    pub fn recip(&self) -> Option<Self> {
        DyadicInterval::from_int(1, self.precision).div(self)
    }

    /// Exact scaling by `2^shift`.
    pub fn shl(&self, shift: i64) -> Self {
        DyadicInterval {
            lo: self.lo.shl(shift),
            hi: self.hi.shl(shift),
            precision: self.precision,
        }
    }

    pub fn mul_int<T: Into<BigInt>>(&self, n: T) -> Self {
        self.mul(&DyadicInterval::from_int(n, self.precision))
    }

    /// Interval of `|t|` for `t` in `self`.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            DyadicInterval {
                lo: Dyadic::zero(),
                hi: self.hi.clone().max(-&self.lo),
                precision: self.precision,
            }
        }
    }

    /// Integer power by binary powering; negative exponents need `0 ∉ self`.
    pub fn powi(&self, n: i64) -> Option<Self> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        // even powers of a sign-straddling interval start at zero
        if n % 2 == 0 && n > 0 && self.contains_zero() {
            let top = self.hi.clone().max(-&self.lo);
            let m = DyadicInterval::point(top, self.precision).powi(n)?;
            return Some(DyadicInterval {
                lo: Dyadic::zero(),
                hi: m.hi,
                precision: m.precision,
            });
        }
        let mut result = DyadicInterval::from_int(1, self.precision);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Some(result)
    }

    /// Endpoints as (approximate) floats, for display only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }

    fn prec_with(&self, rhs: &DyadicInterval) -> u32 {
        self.precision.max(rhs.precision)
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_f64_pair();
        write!(f, "[{lo:.12e}, {hi:.12e}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactreal::rational::rat;
    use proptest::prelude::*;

    fn iv(a: (i64, i64), b: (i64, i64), p: u32) -> DyadicInterval {
        let lo = Dyadic::from_rational_down(&rat(a.0, a.1), p);
        let hi = Dyadic::from_rational_up(&rat(b.0, b.1), p);
        DyadicInterval::new(lo, hi, p)
    }

    #[test]
    fn division_by_straddling_interval_fails() {
        let x = iv((1, 1), (2, 1), 64);
        let y = iv((-1, 1), (1, 1), 64);
        assert!(x.div(&y).is_none());
    }

    #[test]
    fn even_power_of_straddle_starts_at_zero() {
        let x = iv((-2, 1), (1, 1), 64);
        let sq = x.powi(2).unwrap();
        assert!(sq.lo().is_zero());
        assert_eq!(sq.hi(), &Dyadic::from_int(4));
    }

    #[test]
    fn negative_power() {
        let x = DyadicInterval::from_int(2, 64);
        let inv = x.powi(-3).unwrap();
        assert!(inv.contains_rational(&rat(1, 8)));
    }

    fn arb_iv() -> impl Strategy<Value = (Rational, Rational)> {
        (-1000i64..1000, 1i64..100, 0i64..1000, 1i64..100).prop_map(|(a, b, w, d)| {
            let lo = rat(a, b);
            let hi = &lo + rat(w, d);
            (lo, hi)
        })
    }

    fn build(lo: &Rational, hi: &Rational, p: u32) -> DyadicInterval {
        DyadicInterval::new(
            Dyadic::from_rational_down(lo, p),
            Dyadic::from_rational_up(hi, p),
            p,
        )
    }

    proptest! {
        #[test]
        fn arithmetic_contains_sampled_points(
            (alo, ahi) in arb_iv(), (blo, bhi) in arb_iv(),
            s in 0u32..=8, t in 0u32..=8, p in 8u32..96
        ) {
            let a = build(&alo, &ahi, p);
            let b = build(&blo, &bhi, p);
            let fa = &alo + (&ahi - &alo) * rat(s as i64, 8);
            let fb = &blo + (&bhi - &blo) * rat(t as i64, 8);
            prop_assert!(a.add(&b).contains_rational(&(&fa + &fb)));
            prop_assert!(a.sub(&b).contains_rational(&(&fa - &fb)));
            prop_assert!(a.mul(&b).contains_rational(&(&fa * &fb)));
            if let Some(q) = a.div(&b) {
                prop_assert!(q.contains_rational(&(&fa / &fb)));
            }
            if let Some(c) = a.powi(3) {
                prop_assert!(c.contains_rational(&(&fa * &fa * &fa)));
            }
        }

        #[test]
        fn rational_enclosure_is_within_two_ulps(n in 1i64..1_000_000, d in 1i64..1_000_000, p in 8u32..128) {
            let q = rat(n, d);
            let x = DyadicInterval::from_rational(&q, p);
            prop_assert!(x.contains_rational(&q));
            let ulp = Dyadic::new(BigInt::from(1), x.hi().magnitude_exponent() - p as i64);
            prop_assert!(x.width() <= &ulp + &ulp);
        }
    }
}
