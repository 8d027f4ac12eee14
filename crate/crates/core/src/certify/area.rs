//! Area bookkeeping for tilings of a link triangle by spherical Coxeter triangles.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

type Q = Ratio<i64>;

/// Coxeter triangles `Δ(2, 3, n)` for `n = 3, 4, 5`; the `Δ(2, 2, n)` are
/// handled by the diameter bound instead.
pub const SMALL_TRIANGLES: [[i64; 3]; 3] = [[2, 3, 3], [2, 3, 4], [2, 3, 5]];

/// Excess `π/a + π/b + π/c − π` in units of π.
pub fn coxeter_triangle_excess(m: [i64; 3]) -> Q {
    m.iter().map(|&x| Q::new(1, x)).sum::<Q>() - Q::one()
}

/// Areas of [`SMALL_TRIANGLES`] scaled to coprime integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaNormalization {
    /// Area `π/scale` is one unit.
    pub scale: i64,
    pub coefficients: [i64; 3],
}

pub fn area_normalization() -> AreaNormalization {
    let ex = SMALL_TRIANGLES.map(coxeter_triangle_excess);
    let scale = ex.iter().fold(1i64, |acc, e| acc.lcm(e.denom()));
    let coefficients = ex.map(|e| (e * scale).to_integer());
    AreaNormalization { scale, coefficients }
}

/// Nonnegative `(k, l, m)` with `c₀k + c₁l + c₂m = target` for the normalized
/// coefficients, using the fewest triangles (ties go to larger `k`, then `l`).
/// A non-integral target has no solution.
pub fn area_diophantine(target: Q) -> Option<(i64, i64, i64)> {
    if !target.is_integer() || target < Q::zero() {
        return None;
    }
    let n = target.to_integer();
    let [c0, c1, c2] = area_normalization().coefficients;
    let mut best: Option<(i64, i64, i64)> = None;
    for k in (0..=n / c0).rev() {
        for l in (0..=(n - c0 * k) / c1).rev() {
            let rest = n - c0 * k - c1 * l;
            if rest % c2 == 0 {
                let cand = (k, l, rest / c2);
                let size = |t: (i64, i64, i64)| t.0 + t.1 + t.2;
                if best.map_or(true, |b| size(cand) < size(b)) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_ten_five_two() {
        let n = area_normalization();
        assert_eq!(n.scale, 60);
        assert_eq!(n.coefficients, [10, 5, 2]);
    }

    #[test]
    fn diophantine_examples() {
        assert_eq!(area_diophantine(Q::new(20, 3)), None);
        assert_eq!(area_diophantine(Q::from_integer(17)), Some((1, 1, 1)));
        assert_eq!(area_diophantine(Q::from_integer(1)), None);
        assert_eq!(area_diophantine(Q::from_integer(4)), Some((0, 0, 2)));
    }
}
