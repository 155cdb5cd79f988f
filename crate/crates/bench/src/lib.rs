//! Inputs shared by the benchmarks.

use dioph_verify::CaseParams;

/// A spread of cases: the smallest and largest `D` for `k = 7`, a `c > 1`
/// case, and the cheapest `k = 8` case.
pub fn representative_cases() -> Vec<CaseParams> {
    vec![
        CaseParams::new(7, 1, 1, 2),
        CaseParams::new(7, 1, 1034, 2),
        CaseParams::new(7, 3, 2, 3),
        CaseParams::new(8, 3, 1, 2),
    ]
}
