use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bennett::{lambda_case, LambdaBundle};
use crate::exactreal::{kth_root_interval, DyadicInterval, Precision, Rational};
use crate::Result;

/// One `(k, a, c, x)` with `x >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseParams {
    pub k: u32,
    pub a: u64,
    pub c: u64,
    pub x: u64,
}

impl CaseParams {
    pub fn new(k: u32, a: u64, c: u64, x: u64) -> Self {
        assert!(k >= 1 && a >= 1 && c >= 1 && x >= 2, "invalid case ({k}, {a}, {c}, {x})");
        CaseParams { k, a, c, x }
    }

    /// `a^2 c x^k`.
    pub fn d(&self) -> BigUint {
        BigUint::from(self.a).pow(2) * self.c * BigUint::from(self.x).pow(self.k)
    }

    /// `N = a^2 c x^k - 1` (`= u v^2`).
    pub fn n(&self) -> BigUint {
        self.d() - 1u32
    }

    /// `a^2 c`.
    pub fn a2c(&self) -> BigUint {
        BigUint::from(self.a).pow(2) * self.c
    }

    /// `r = a^2 c / N`, the radicand with `r^(1/k) = alpha / x`.
    pub fn radicand(&self) -> Rational {
        Rational::new(self.a2c().into(), self.n().into())
    }

    /// `alpha^k = 1 + 1/N`.
    pub fn alpha_pow_k(&self) -> Rational {
        Rational::one() + Rational::new(1.into(), self.n().into())
    }

    pub fn alpha(&self, precision: u32) -> DyadicInterval {
        kth_root_interval(&self.alpha_pow_k(), self.k, precision)
    }

    /// `C = ((2^k a c - 2) / (2^k a c))^(1/k)`.
    pub fn c_const(&self, precision: u32) -> DyadicInterval {
        let t = (BigUint::one() << self.k as usize) * self.a * self.c;
        let r = Rational::new((&t - 2u32).into(), t.into());
        kth_root_interval(&r, self.k, precision)
    }

    pub fn lambda(&self, policy: &Precision) -> Result<LambdaBundle> {
        lambda_case(self.k as u64, &self.d(), policy)
    }
}

impl fmt::Display for CaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, a={}, c={}, x={})", self.k, self.a, self.c, self.x)
    }
}
