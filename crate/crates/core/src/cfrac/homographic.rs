use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactreal::{rat_cmp_kth_root, DyadicInterval, Rational};
use crate::{Result, VerifyError};

/// `(A theta + B) / (C theta + D)` with `theta = r^(1/k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomographicState {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub r: Rational,
    pub k: u32,
}

fn sign_of(n: &BigInt) -> Ordering {
    n.cmp(&BigInt::zero())
}

impl HomographicState {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt, r: Rational, k: u32) -> Self {
        assert!(r.is_positive(), "radicand must be positive");
        HomographicState { a, b, c, d, r, k }
    }

    /// The state for `theta` itself.
    pub fn identity(r: Rational, k: u32) -> Self {
        Self::new(1.into(), 0.into(), 0.into(), 1.into(), r, k)
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Exact sign of `p theta + q`.
    pub fn sign_linear(&self, p: &BigInt, q: &BigInt) -> Ordering {
        if p.is_zero() {
            return sign_of(q);
        }
        // p theta + q = p (theta - t) with t = -q/p
        let t = Rational::new(-q, p.clone());
        let theta_vs_t = rat_cmp_kth_root(&t, &self.r, self.k).reverse();
        if p.is_positive() {
            theta_vs_t
        } else {
            theta_vs_t.reverse()
        }
    }

    /// Exact ordering of the represented value against the integer `n`.
    pub fn cmp_int(&self, n: &BigInt) -> Result<Ordering> {
        let den = self.sign_linear(&self.c, &self.d);
        if den == Ordering::Equal {
            return Err(VerifyError::DegenerateState);
        }
        let num = self.sign_linear(&(&self.a - n * &self.c), &(&self.b - n * &self.d));
        Ok(if den == Ordering::Greater { num } else { num.reverse() })
    }

    /// Interval image of the state for an enclosure of `theta`; `None` when
    /// the denominator enclosure meets zero.
    pub fn evaluate(&self, theta: &DyadicInterval) -> Option<DyadicInterval> {
        let p = theta.precision();
        let num = theta.mul(&DyadicInterval::from_int(self.a.clone(), p))
            .add(&DyadicInterval::from_int(self.b.clone(), p));
        let den = theta.mul(&DyadicInterval::from_int(self.c.clone(), p))
            .add(&DyadicInterval::from_int(self.d.clone(), p));
        num.div(&den)
    }

    /// Replaces the value `v` by `1 / (v - n)`.
    pub fn step(&self, n: &BigInt) -> Self {
        HomographicState {
            a: self.c.clone(),
            b: self.d.clone(),
            c: &self.a - n * &self.c,
            d: &self.b - n * &self.d,
            r: self.r.clone(),
            k: self.k,
        }
    }
}

/// Certified `floor` of the state's value.
///
/// The candidate comes from an interval evaluation; it is accepted only
/// after the exact tests `value >= n` and `value < n + 1`. Returns `None`
/// when `theta` is too coarse to propose a candidate.
pub fn floor_homographic(s: &HomographicState, theta: &DyadicInterval) -> Result<Option<BigInt>> {
    if s.determinant().is_zero() {
        return Err(VerifyError::DegenerateState);
    }
    let Some(v) = s.evaluate(theta) else {
        return Ok(None);
    };
    let lo = v.lo().floor();
    if v.hi().floor() - &lo > BigInt::from(1) {
        return Ok(None);
    }
    let mut n = lo;
    while s.cmp_int(&n)? == Ordering::Less {
        n -= 1;
    }
    while s.cmp_int(&(&n + 1))? != Ordering::Less {
        n += 1;
    }
    Ok(Some(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactreal::kth_root_interval;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn floor_of(s: &HomographicState) -> BigInt {
        let theta = kth_root_interval(&s.r, s.k, 128);
        floor_homographic(s, &theta).unwrap().unwrap()
    }

    #[test]
    fn floor_examples() {
        let alpha = HomographicState::identity(r(128, 127), 7);
        assert_eq!(floor_of(&alpha), 1.into());
        let half_alpha = HomographicState::new(1.into(), 0.into(), 0.into(), 2.into(), r(128, 127), 7);
        assert_eq!(floor_of(&half_alpha), 0.into());
        // theta = 1/2 exactly; still handled by the exact tests
        let exact = HomographicState::identity(r(1, 128), 7);
        assert_eq!(floor_of(&exact), 0.into());
        // 1 / (1/2) = 2, the boundary case value - n = 0
        assert_eq!(floor_of(&exact.step(&0.into())), 2.into());
    }

    #[test]
    fn degenerate_state_rejected() {
        let s = HomographicState::new(2.into(), 4.into(), 1.into(), 2.into(), r(2, 1), 2);
        let theta = kth_root_interval(&s.r, 2, 64);
        assert_eq!(floor_homographic(&s, &theta), Err(VerifyError::DegenerateState));
    }

    #[test]
    fn sign_linear_matches_numeric() {
        let s = HomographicState::identity(r(2, 1), 2);
        // sqrt 2 = 1.41421...
        assert_eq!(s.sign_linear(&1.into(), &(-1).into()), Ordering::Greater);
        assert_eq!(s.sign_linear(&2.into(), &(-3).into()), Ordering::Less);
        assert_eq!(s.sign_linear(&(-5).into(), &7.into()), Ordering::Less);
        assert_eq!(s.sign_linear(&(-7).into(), &10.into()), Ordering::Greater);
        assert_eq!(s.sign_linear(&0.into(), &(-7).into()), Ordering::Less);
    }
}
