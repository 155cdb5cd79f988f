use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Exact dyadic rational `mantissa * 2^exponent`.
///
/// Kept normalized: the mantissa is odd, or zero with exponent zero, so
/// structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        Dyadic {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Self::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// `e` with `2^(e-1) <= |self| < 2^e`; zero maps to `i64::MIN`.
    pub fn magnitude_exponent(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.bits() as i64
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Multiplies by `2^shift` exactly.
    pub fn shl(&self, shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + shift,
        }
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            Rational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // keep 64 leading bits, then scale
        let excess = self.bits() as i64 - 64;
        let (m, e) = if excess > 0 {
            (&self.mantissa >> excess as usize, self.exponent + excess)
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(e.clamp(-2000, 2000) as i32)
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as usize
        } else {
            self.mantissa
                .div_floor(&(BigInt::one() << (-self.exponent) as usize))
        }
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Rounds toward `-inf` to at most `prec` significant bits.
    pub fn round_down(&self, prec: u32) -> Self {
        self.round(prec, false)
    }

    /// Rounds toward `+inf` to at most `prec` significant bits.
    pub fn round_up(&self, prec: u32) -> Self {
        self.round(prec, true)
    }

    fn round(&self, prec: u32, up: bool) -> Self {
        let prec = prec.max(2) as u64;
        let bits = self.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let div = BigInt::one() << shift as usize;
        let m = if up {
            -((-&self.mantissa).div_floor(&div))
        } else {
            self.mantissa.div_floor(&div)
        };
        Dyadic::new(m, self.exponent + shift as i64)
    }

    /// `q` rounded toward `-inf` with about `prec` significant bits.
    pub fn from_rational_down(q: &Rational, prec: u32) -> Self {
        Self::quotient(q.numer(), q.denom(), prec, false)
    }

    /// `q` rounded toward `+inf` with about `prec` significant bits.
    pub fn from_rational_up(q: &Rational, prec: u32) -> Self {
        Self::quotient(q.numer(), q.denom(), prec, true)
    }

    /// `self / other` rounded in the requested direction.
    pub fn div_round(&self, other: &Dyadic, prec: u32, up: bool) -> Self {
        assert!(!other.is_zero(), "division by zero");
        let q = Self::quotient(&self.mantissa, &other.mantissa, prec, up);
        q.shl(self.exponent - other.exponent)
    }

    fn quotient(num: &BigInt, den: &BigInt, prec: u32, up: bool) -> Self {
        assert!(!den.is_zero(), "division by zero");
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        // scale so the integer quotient carries at least prec bits
        let shift = prec as i64 + 2 - (num.bits() as i64 - den.bits() as i64);
        let (n, d) = if shift >= 0 {
            (num << shift as usize, den)
        } else {
            (num, den << (-shift) as usize)
        };
        let m = if up {
            -((-n).div_floor(&d))
        } else {
            n.div_floor(&d)
        };
        Dyadic::new(m, -shift).round(prec, up)
    }

    /// Exact decimal expansion (dyadics always terminate in base ten).
    pub fn to_decimal_string(&self) -> String {
        if self.exponent >= 0 {
            return (&self.mantissa << self.exponent as usize).to_string();
        }
        let digits = (-self.exponent) as usize;
        // m / 2^d = m * 5^d / 10^d
        let scaled = &self.mantissa * num_traits::pow(BigInt::from(5u32), digits);
        let neg = scaled.is_negative();
        let mut s = scaled.abs().to_string();
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        let split = s.len() - digits;
        let (int_part, frac_part) = s.split_at(split);
        let frac_part = frac_part.trim_end_matches('0');
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(int_part);
        if !frac_part.is_empty() {
            out.push('.');
            out.push_str(frac_part);
        }
        out
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.signum(), other.signum());
        if a != b || a == 0 {
            return a.cmp(&b);
        }
        let e = self.exponent.min(other.exponent);
        let lhs = &self.mantissa << (self.exponent - e) as usize;
        let rhs = &other.mantissa << (other.exponent - e) as usize;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl std::ops::Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let m = (&self.mantissa << (self.exponent - e) as usize)
            + (&rhs.mantissa << (rhs.exponent - e) as usize);
        Dyadic::new(m, e)
    }
}

impl std::ops::Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}
