//! Shared inputs for the criterion benchmarks.

use rattet_core::RationalAngle;

/// Angles with the denominators that dominate the sporadic search.
pub fn sample_angles() -> Vec<RationalAngle> {
    [(1, 3), (2, 5), (3, 7), (4, 15), (11, 21), (7, 30), (25, 42)]
        .into_iter()
        .map(|(n, d)| RationalAngle::new(n, d))
        .collect()
}
