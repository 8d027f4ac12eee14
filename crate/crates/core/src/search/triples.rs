use serde::{Deserialize, Serialize};

use super::{axes, DenominatorProfile};
use crate::exact::RationalAngle;
use crate::geometry::{triple_residual, RawQuadruple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSearch {
    /// Solutions of `cos p cos q + cos r = 0` with `p ≥ q`, off the trivial family.
    pub nontrivial: Vec<[RationalAngle; 3]>,
    /// Solutions with `p = π/2` or `q = π/2` (which force `r = π/2`).
    pub trivial: usize,
}

/// Maps a solution of `cos p cos q + cos r = 0` to `(a, b, c)` in `[0, π/2]`
/// with `cos a cos b = cos c`, using `cos(π − x) = −cos x`.
pub fn reduce_to_acute(t: [RationalAngle; 3]) -> [RationalAngle; 3] {
    let half = RationalAngle::half_pi();
    let [p, q, r] = t;
    let (a, fa) = if p > half { (p.supplement(), true) } else { (p, false) };
    let (b, fb) = if q > half { (q.supplement(), true) } else { (q, false) };
    // an even number of flips leaves cos p cos q = −cos r
    let c = if fa == fb { r.supplement() } else { r };
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    [a, b, c]
}

/// The quadruple machinery restricted to `r = s`, over the union grid.
pub fn search_triples() -> TripleSearch {
    let profile = DenominatorProfile::union();
    let (a_axis, b_axis, c_axis) = axes(&profile);
    let half = RationalAngle::half_pi();
    let mut nontrivial = Vec::new();
    let mut trivial = 0;
    for &a in &a_axis {
        for &b in b_axis.iter().take_while(|&&b| b < a) {
            if a + b >= RationalAngle::integer(2) {
                continue;
            }
            for &c in &c_axis {
                let x = RawQuadruple { a, b, c, d: c };
                if !x.cosine_sum().is_zero() {
                    continue;
                }
                let (p, q) = ((a + b) * num_rational::Ratio::new(1, 2), (a - b) * num_rational::Ratio::new(1, 2));
                debug_assert!(triple_residual(p, q, c).is_zero());
                if p == half || q == half {
                    trivial += 1;
                } else {
                    nontrivial.push([p, q, c]);
                }
            }
        }
    }
    nontrivial.sort();
    TripleSearch { nontrivial, trivial }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smiths_reduction() {
        let a = RationalAngle::new;
        assert_eq!(reduce_to_acute([a(1, 4), a(1, 4), a(2, 3)]), [a(1, 4), a(1, 4), a(1, 3)]);
        assert_eq!(reduce_to_acute([a(3, 4), a(1, 4), a(1, 3)]), [a(1, 4), a(1, 4), a(1, 3)]);
        assert_eq!(reduce_to_acute([a(3, 4), a(3, 4), a(2, 3)]), [a(1, 4), a(1, 4), a(1, 3)]);
    }
}
