//! Exact continued fractions of `alpha / x = (a^2 c / (a^2 c x^k - 1))^(1/k)`
//! and the per-case elimination over `S`.
//!
//! Partial quotients are decided by exact k-th power comparisons; interval
//! arithmetic only proposes candidates.

mod bounds;
mod case;
mod expand;
mod homographic;
mod verify;

pub use bounds::{aj1_lower_bound, qj_bound, qj_bound_for_lambda, QjBound};
pub use case::CaseParams;
pub use expand::{cf_expand, expand_radicand, partial_quotients, CfEngine, ConvergentRecord};
pub use homographic::{floor_homographic, HomographicState};
pub use verify::{verify_case, verify_case_with, LowerBoundFn};
