//! Exact rationals and rigorous dyadic interval arithmetic.
//!
//! Every irrational quantity in the crate is carried as a [`DyadicInterval`]
//! whose endpoints are rounded outward after each primitive operation. Exact
//! decisions (k-th root comparisons, integer roots) live in [`rational`].

mod dyadic;
mod interval;
mod precision;
mod rational;
mod transcendental;

pub use dyadic::Dyadic;
pub use interval::DyadicInterval;
pub use precision::{Precision, DEFAULT_PRECISION_CAP, DEFAULT_START_PRECISION};
pub use rational::{
    integer_kth_root_floor, is_perfect_kth_power, rat_cmp_kth_root, rational_kth_root_exact,
    Rational,
};
pub use transcendental::{interval_exp, interval_ln, interval_pow, kth_root_interval};
