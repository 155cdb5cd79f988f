//! Certified re-execution of the computational content of the proof that
//! `(a^2 c x^k - 1)(b^2 c y^k - 1) = (a b c z^k - 1)^2` has no solutions with
//! `x, y, z > 1`, `k >= 7` and `a^2 x^k != b^2 y^k`.
//!
//! The crate is split by stage:
//!
//! * [`exactreal`]: exact rationals, dyadic interval enclosures, `ln`/`exp`/`pow`
//!   with outward rounding, and exact k-th root comparisons.
//! * [`bennett`]: `mu_n`, the approximation-lemma hypothesis and the exponents
//!   `Lambda_K(D)` and `Lambda(K)`.
//! * [`elimination`]: the exceptional set `S` and the four per-`k` chains that
//!   rule out everything outside it.
//! * [`cfrac`]: exact continued fractions of `(a^2 c / (a^2 c x^k - 1))^(1/k)`
//!   and the per-case elimination.
//! * [`oracle`]: brute-force search and exact identity spot checks.
//! * [`driver`]: orchestration and JSON certificates.

pub mod bennett;
pub mod cfrac;
pub mod driver;
pub mod elimination;
mod error;
pub mod exactreal;
pub mod oracle;

pub use cfrac::{CaseParams, ConvergentRecord, HomographicState};
pub use driver::{CaseCertificate, Reason, RunReport, Verdict};
pub use error::{Result, VerifyError};
pub use exactreal::{Dyadic, DyadicInterval, Precision, Rational};
