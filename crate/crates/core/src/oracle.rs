//! Independent cross-checks: direct search for solutions, the `u v^2`,
//! `u w^2` decomposition, and exact-rational spot checks of the identities
//! and inequalities used in the argument.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactreal::{is_perfect_kth_power, Rational};
use crate::{Result, VerifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// `k >= 7`, `x, y, z >= 2`, `a, b, c >= 1`.
    Theorem,
    /// Any `k >= 2`; results are reported, never asserted.
    Exploration,
}

#[derive(Clone, Debug)]
pub struct SearchRange {
    pub k: RangeInclusive<u32>,
    pub a: RangeInclusive<u64>,
    pub b: RangeInclusive<u64>,
    pub c: RangeInclusive<u64>,
    pub x: RangeInclusive<u64>,
    pub y: RangeInclusive<u64>,
    pub z: RangeInclusive<u64>,
    pub mode: SearchMode,
}

impl SearchRange {
    /// Same bound for `a, b, c` and for `x, y, z`.
    pub fn uniform(k: RangeInclusive<u32>, abc_max: u64, xyz: RangeInclusive<u64>, mode: SearchMode) -> Self {
        SearchRange {
            k,
            a: 1..=abc_max,
            b: 1..=abc_max,
            c: 1..=abc_max,
            x: xyz.clone(),
            y: xyz.clone(),
            z: xyz,
            mode,
        }
    }

    fn validate(&self) -> Result<()> {
        let min_k = match self.mode {
            SearchMode::Theorem => 7,
            SearchMode::Exploration => 2,
        };
        let ok = *self.k.start() >= min_k
            && [&self.a, &self.b, &self.c].iter().all(|r| *r.start() >= 1)
            && [&self.x, &self.y, &self.z].iter().all(|r| *r.start() >= 2);
        if ok {
            Ok(())
        } else {
            Err(VerifyError::Precondition(format!(
                "search range violates {:?} mode bounds: {self:?}",
                self.mode
            )))
        }
    }

    pub fn tuple_count(&self) -> u64 {
        let len = |r: &RangeInclusive<u64>| (r.end() + 1).saturating_sub(*r.start());
        let kl = (*self.k.end() as u64 + 1).saturating_sub(*self.k.start() as u64);
        kl * len(&self.a) * len(&self.b) * len(&self.c) * len(&self.x) * len(&self.y) * len(&self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    pub k: u32,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Solution {
    pub fn as_array(&self) -> [u64; 7] {
        [self.k as u64, self.a, self.b, self.c, self.x, self.y, self.z]
    }

    /// `a^2 x^k = b^2 y^k`, where both sides of the equation agree trivially.
    pub fn is_symmetric(&self) -> bool {
        BigUint::from(self.a).pow(2) * BigUint::from(self.x).pow(self.k)
            == BigUint::from(self.b).pow(2) * BigUint::from(self.y).pow(self.k)
    }
}

/// `(a^2 c x^k - 1)(b^2 c y^k - 1) == (a b c z^k - 1)^2` as written.
pub fn equation_holds(s: &Solution) -> bool {
    let big = |n: u64| BigInt::from(n);
    let xk = big(s.x).pow(s.k);
    let yk = big(s.y).pow(s.k);
    let zk = big(s.z).pow(s.k);
    let lhs = (big(s.a).pow(2) * s.c * xk - 1u32) * (big(s.b).pow(2) * s.c * yk - 1u32);
    let rhs = (big(s.a) * s.b * s.c * zk - 1u32).pow(2);
    lhs == rhs
}

/// The same equation after expanding both sides and cancelling the constant.
pub fn equation_holds_expanded(s: &Solution) -> bool {
    let big = |n: u64| BigInt::from(n);
    let (a, b, c) = (big(s.a), big(s.b), big(s.c));
    let xk = big(s.x).pow(s.k);
    let yk = big(s.y).pow(s.k);
    let zk = big(s.z).pow(s.k);
    let abc = &a * &b * &c;
    // a^2 b^2 c^2 x^k y^k - a^2 c x^k - b^2 c y^k = (abc)^2 z^2k - 2 abc z^k
    let left = &abc * &abc * &xk * &yk - &a * &a * &c * &xk - &b * &b * &c * &yk;
    let right = &abc * &abc * &zk * &zk - BigInt::from(2) * &abc * &zk;
    left == right
}

/// Exhaustive search over a finite box, partitioned over `(k, a)`.
///
/// A solution forces `a^2 c x^k ≡ 0 (mod b)`, which prunes the `y, z` loops.
pub fn search_solutions(range: &SearchRange, require_neq: bool) -> Result<Vec<Solution>> {
    range.validate()?;
    let outer: Vec<(u32, u64)> = range
        .k
        .clone()
        .flat_map(|k| range.a.clone().map(move |a| (k, a)))
        .collect();
    let mut found: Vec<Solution> = outer
        .par_iter()
        .flat_map_iter(|&(k, a)| {
            let mut local = Vec::new();
            for b in range.b.clone() {
                for c in range.c.clone() {
                    for x in range.x.clone() {
                        let d = BigUint::from(a).pow(2) * c * BigUint::from(x).pow(k);
                        if !(d % b).is_zero() {
                            continue;
                        }
                        for y in range.y.clone() {
                            for z in range.z.clone() {
                                let s = Solution { k, a, b, c, x, y, z };
                                if equation_holds(&s) && !(require_neq && s.is_symmetric()) {
                                    local.push(s);
                                }
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    found.sort();
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvwTriple {
    pub u: BigUint,
    pub v: BigUint,
    pub w: BigUint,
}

/// Product of the primes dividing `n` to an odd power.
pub fn squarefree_part(n: &BigUint) -> BigUint {
    assert!(!n.is_zero());
    let mut rest = n.clone();
    let mut out = BigUint::one();
    let mut p = 2u64;
    // past p^3 > rest the cofactor has at most two prime factors above p
    while BigUint::from(p).pow(3) <= rest {
        let bp = BigUint::from(p);
        let mut odd = false;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            odd = !odd;
        }
        if odd {
            out *= &bp;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() && is_perfect_kth_power(&rest, 2).is_none() {
        out *= rest;
    }
    out
}

/// Writes `M = u v^2`, `N = u w^2` with `u` minimal.
pub fn uvw_decompose(m: &BigUint, n: &BigUint) -> Result<UvwTriple> {
    if m.is_zero() || n.is_zero() {
        return Err(VerifyError::Precondition("M and N must be positive".into()));
    }
    let g = m.gcd(n);
    let (mp, np) = (m / &g, n / &g);
    // M N is a square iff the coprime cofactors M/g and N/g both are
    let (Some(ms), Some(ns)) = (is_perfect_kth_power(&mp, 2), is_perfect_kth_power(&np, 2)) else {
        return Err(VerifyError::NotASquare(format!("{m} * {n} = {}", m * n)));
    };
    let u = squarefree_part(&g);
    let t = (&g / &u).sqrt();
    let triple = UvwTriple {
        v: &t * ms,
        w: &t * ns,
        u,
    };
    debug_assert_eq!(&triple.u * &triple.v * &triple.w, (m * n).sqrt());
    Ok(triple)
}

/// Truth values of the exact identities and inequalities for one `(u, v, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// `alpha^k - beta^k` equals the closed form.
    pub closed_form: bool,
    /// `alpha^k > beta^k`.
    pub positive: bool,
    /// `alpha^k - beta^k < 2 alpha^k / (uvw + 1)`.
    pub upper_bound: bool,
    /// `uv^2 + uw^2 = (uv^2 + 1)(uw^2 + 1) - (uvw + 1)^2 + 2uvw`.
    pub sum_identity: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.closed_form && self.positive && self.upper_bound && self.sum_identity
    }
}

pub fn check_identities(u: u64, v: u64, w: u64) -> Result<IdentityReport> {
    if u == 0 || v == 0 || w <= v {
        return Err(VerifyError::Precondition(format!(
            "identities need u, v >= 1 and w > v (got {u}, {v}, {w})"
        )));
    }
    let (u, v, w) = (BigInt::from(u), BigInt::from(v), BigInt::from(w));
    let q = |n: BigInt| Rational::from_integer(n);
    let uv2 = &u * &v * &v;
    let uw2 = &u * &w * &w;
    let uvw = &u * &v * &w;
    let alpha_k = Rational::one() + Rational::new(BigInt::one(), uv2.clone());
    let beta_k = Rational::new((&uv2 + 1u32) * (&uw2 + 1u32), (&uvw + 1u32).pow(2));
    let diff = &alpha_k - &beta_k;
    let closed = Rational::new(
        &uv2 * (BigInt::from(2) * &uvw - &uv2) + (BigInt::from(2) * &uvw + 1u32),
        &uv2 * (&uvw + 1u32).pow(2),
    );
    let cap = q(BigInt::from(2)) * &alpha_k / q(&uvw + 1u32);
    let sum_lhs = &uv2 + &uw2;
    let sum_rhs = (&uv2 + 1u32) * (&uw2 + 1u32) - (&uvw + 1u32).pow(2) + BigInt::from(2) * &uvw;
    Ok(IdentityReport {
        closed_form: diff == closed,
        positive: diff > Rational::zero(),
        upper_bound: diff < cap,
        sum_identity: sum_lhs == sum_rhs,
    })
}

/// Probe of the two lower bounds on `w` and `z` for a synthetic tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlbReport {
    /// `w^2 > k^k u^(k-2) v^(2(k-1))`.
    pub w_lower_bound: bool,
    /// `x` with `a^2 c x^k = u v^2 + 1`, when it exists.
    pub x: Option<BigUint>,
    /// `z > sqrt(k u v^2) a^(-3/k) c^(-2/k) x^(-1)`, decided as
    /// `(z x)^(2k) a^6 c^4 > (k u v^2)^k`.
    pub z_lower_bound: Option<bool>,
}

#[allow(clippy::too_many_arguments)]
pub fn check_wlb(u: u64, v: u64, w: u64, a: u64, b: u64, c: u64, z: u64, k: u32) -> Result<WlbReport> {
    let big = BigUint::from;
    let (u, v, w, a, b, c, z) = (big(u), big(v), big(w), big(a), big(b), big(c), big(z));
    let abczk = &a * &b * &c * z.pow(k);
    if &u * &v * &w + 1u32 != abczk {
        return Err(VerifyError::Inconsistent(format!(
            "uvw + 1 = {} but abcz^k = {abczk}",
            &u * &v * &w + 1u32
        )));
    }
    let kk = big(k as u64);
    let w_lower_bound =
        &w * &w > kk.pow(k) * u.pow(k - 2) * v.pow(2 * (k - 1u32));
    let uv2 = &u * &v * &v;
    let a2c = &a * &a * &c;
    let x = if ((&uv2 + 1u32) % &a2c).is_zero() {
        is_perfect_kth_power(&((&uv2 + 1u32) / &a2c), k)
    } else {
        None
    };
    let z_lower_bound = x.as_ref().map(|x| {
        (&z * x).pow(2 * k) * a.pow(6) * c.pow(4) > (&kk * &uv2).pow(k)
    });
    Ok(WlbReport {
        w_lower_bound,
        x,
        z_lower_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bu(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn symmetric_tuple_found_only_without_filter() {
        let range = SearchRange::uniform(7..=7, 1, 2..=2, SearchMode::Theorem);
        let all = search_solutions(&range, false).unwrap();
        assert_eq!(all, vec![Solution { k: 7, a: 1, b: 1, c: 1, x: 2, y: 2, z: 2 }]);
        assert!(search_solutions(&range, true).unwrap().is_empty());
    }

    #[test]
    fn theorem_mode_small_box_is_empty() {
        let range = SearchRange::uniform(7..=7, 3, 2..=6, SearchMode::Theorem);
        assert!(search_solutions(&range, true).unwrap().is_empty());
    }

    #[test]
    fn theorem_mode_rejects_small_k() {
        let range = SearchRange::uniform(4..=7, 2, 2..=3, SearchMode::Theorem);
        assert!(search_solutions(&range, true).is_err());
        let explore = SearchRange::uniform(4..=4, 2, 2..=4, SearchMode::Exploration);
        assert!(search_solutions(&explore, true).is_ok());
    }

    #[test]
    fn decompose_examples() {
        let t = uvw_decompose(&bu(12), &bu(27)).unwrap();
        assert_eq!((t.u, t.v, t.w), (bu(3), bu(2), bu(3)));
        let t = uvw_decompose(&bu(4), &bu(9)).unwrap();
        assert_eq!((t.u, t.v, t.w), (bu(1), bu(2), bu(3)));
        assert!(matches!(uvw_decompose(&bu(2), &bu(3)), Err(VerifyError::NotASquare(_))));
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(squarefree_part(&bu(1)), bu(1));
        assert_eq!(squarefree_part(&bu(72)), bu(2));
        // 1000003^2 * 6: the large prime square survives only as a square
        assert_eq!(squarefree_part(&(bu(1_000_003).pow(2) * 6u32)), bu(6));
        assert_eq!(squarefree_part(&(bu(1_000_003) * bu(1_000_033))), bu(1_000_003) * bu(1_000_033));
    }

    #[test]
    fn identity_examples() {
        let r = check_identities(1, 1, 2).unwrap();
        assert!(r.all());
        assert!(check_identities(3, 2, 3).unwrap().all());
        assert!(matches!(check_identities(1, 2, 2), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn wlb_probe() {
        // uvw + 1 = 128 = abc z^7 with a = b = c = 1, z = 2
        let r = check_wlb(127, 1, 1, 1, 1, 1, 2, 7).unwrap();
        assert_eq!(r.x, Some(bu(2)));
        assert!(r.z_lower_bound.is_some());
        assert!(matches!(check_wlb(1, 1, 1, 1, 1, 1, 2, 7), Err(VerifyError::Inconsistent(_))));
    }

    /// Fraction-free brute factorization used as the decomposition oracle.
    fn brute_squarefree(mut n: u64) -> u64 {
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                out *= p;
            }
            p += 1;
        }
        out * n
    }

    proptest! {
        #[test]
        fn decompose_round_trip(u in 1u64..5000, v in 1u64..3000, w in 1u64..3000) {
            let m = bu(u) * bu(v) * bu(v);
            let n = bu(u) * bu(w) * bu(w);
            let t = uvw_decompose(&m, &n).unwrap();
            prop_assert_eq!(&t.u * &t.v * &t.v, m.clone());
            prop_assert_eq!(&t.u * &t.w * &t.w, n.clone());
            prop_assert_eq!(&t.u * &t.v * &t.w, (&m * &n).sqrt());
            prop_assert_eq!(t.u, bu(brute_squarefree(u * v * v)));
        }

        #[test]
        fn two_evaluation_orders_agree(
            k in 2u32..9, a in 1u64..4, b in 1u64..4, c in 1u64..4,
            x in 2u64..7, y in 2u64..7, z in 2u64..7
        ) {
            let s = Solution { k, a, b, c, x, y, z };
            prop_assert_eq!(equation_holds(&s), equation_holds_expanded(&s));
        }
    }
}
