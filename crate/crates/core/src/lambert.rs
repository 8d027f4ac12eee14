//! Spherical Lambert cubes with rational essential angles.
//!
//! A cube `L(a, b, c)` with all other dihedral angles right exists when
//! `π/2 < a, b, c < π` and `cos²a + cos²b + cos²c = 1`; its volume is
//! `¼(π²/2 − (π−a)² − (π−b)² − (π−c)²)`.

use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certify::coxeter::{coxeter_catalog, VolumeRule};
use crate::exact::{CyclotomicNumber, RationalAngle};
use crate::geometry::{is_realizable, quadruple_residual, volume, PythagoreanQuadruple, VolumeCoefficient};
use crate::search::{axes, conway_jones_items, DenominatorProfile};

type Q = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambertError {
    #[error("essential angle {0} is outside (π/2, π)")]
    OutOfWindow(RationalAngle),
    #[error("{0:?} does not satisfy the cube relation")]
    NotACube([RationalAngle; 3]),
    #[error("companion of {cube:?} has volume {got}, the cube has {want}")]
    CompanionMismatch { cube: [RationalAngle; 3], got: String, want: String },
    #[error("companion {0} is not realizable")]
    CompanionNotRealizable(PythagoreanQuadruple),
}

/// Essential angles sorted in decreasing order; the cube's symmetries permute them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambertCube {
    pub a: RationalAngle,
    pub b: RationalAngle,
    pub c: RationalAngle,
}

impl LambertCube {
    /// Checks the realizability window only; the cube relation is checked by
    /// [`lambert_volume`].
    pub fn new(a: RationalAngle, b: RationalAngle, c: RationalAngle) -> Result<Self, LambertError> {
        for x in [a, b, c] {
            if !(x > RationalAngle::half_pi() && x < RationalAngle::pi()) {
                return Err(LambertError::OutOfWindow(x));
            }
        }
        let mut v = [a, b, c];
        v.sort_by(|x, y| y.cmp(x));
        Ok(LambertCube { a: v[0], b: v[1], c: v[2] })
    }

    pub fn from_pairs(v: [(i64, i64); 3]) -> Result<Self, LambertError> {
        let [a, b, c] = v.map(|(n, d)| RationalAngle::new(n, d));
        Self::new(a, b, c)
    }

    pub fn angles(&self) -> [RationalAngle; 3] {
        [self.a, self.b, self.c]
    }

    /// Every dihedral angle is a rational multiple of π (the essential ones by
    /// construction, the rest are right angles).
    pub fn all_angles_rational(&self) -> bool {
        true
    }
}

/// `cos²a + cos²b + cos²c − 1`, exactly.
pub fn lambert_residual(a: RationalAngle, b: RationalAngle, c: RationalAngle) -> CyclotomicNumber {
    [a, b, c].into_iter().map(|x| CyclotomicNumber::cos_pi(x).square()).sum::<CyclotomicNumber>() - CyclotomicNumber::one()
}

/// `(cos 2a + cos 2b + cos 2c + 1)/2`, the same quantity after halving the squares.
pub fn doubled_residual(a: RationalAngle, b: RationalAngle, c: RationalAngle) -> CyclotomicNumber {
    let two = Q::from_integer(2);
    let s: CyclotomicNumber = [a, b, c].into_iter().map(|x| CyclotomicNumber::cos_pi(x * two)).sum();
    (s + CyclotomicNumber::one()).scale_ratio(1, 2)
}

pub fn lambert_volume(l: &LambertCube) -> Result<VolumeCoefficient, LambertError> {
    if !lambert_residual(l.a, l.b, l.c).is_zero() {
        return Err(LambertError::NotACube(l.angles()));
    }
    let dev: Q = l.angles().iter().map(|x| (Q::one() - x.ratio()) * (Q::one() - x.ratio())).sum();
    Ok(VolumeCoefficient { value: (Q::new(1, 2) - dev) / 4 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambertSearch {
    pub cubes: Vec<LambertCube>,
    /// Unordered triples of folded double angles examined.
    pub candidates: usize,
    /// The only parametric vanishing sum has three terms and value 0, so it
    /// cannot produce a three-term sum equal to −1.
    pub no_continuous_family: bool,
}

/// Unordered triples `y1 ≥ y2 ≥ y3` in `(0, 1)` over the union grid with
/// `cos πy1 + cos πy2 + cos πy3 = target`.
///
/// Three-term sums with a rational value only involve the denominators of the
/// Conway–Jones list of length at most 3, all of which the union grid carries.
pub fn three_term_solutions(target: Q) -> (Vec<[RationalAngle; 3]>, usize) {
    let (_, _, ys) = axes(&DenominatorProfile::union());
    let t = CyclotomicNumber::from_rational(BigRational::new((*target.numer()).into(), (*target.denom()).into()));
    let tf = *target.numer() as f64 / *target.denom() as f64;
    let cosf: Vec<f64> = ys.iter().map(|y| y.to_f64().cos()).collect();
    let mut out = Vec::new();
    let mut candidates = 0;
    for i in 0..ys.len() {
        for j in 0..=i {
            for k in 0..=j {
                candidates += 1;
                if (cosf[i] + cosf[j] + cosf[k] - tf).abs() > 1e-8 {
                    continue;
                }
                let s: CyclotomicNumber = [ys[i], ys[j], ys[k]].into_iter().map(CyclotomicNumber::cos_pi).sum();
                if (s - t.clone()).is_zero() {
                    out.push([ys[i], ys[j], ys[k]]);
                }
            }
        }
    }
    (out, candidates)
}

/// Writes `2a = 2π − πy` with `y ∈ (0, 1)`, so `cos 2a = cos πy` and the
/// relation becomes a three-term sum equal to −1.
pub fn search_lambert() -> LambertSearch {
    let (sols, candidates) = three_term_solutions(-Q::one());
    let mut cubes: Vec<LambertCube> = sols
        .into_iter()
        .map(|ys| {
            let [a, b, c] = ys.map(|y| RationalAngle::from_ratio(Q::one() - y.ratio() / 2));
            LambertCube::new(a, b, c).expect("folded angles lie in the window")
        })
        .collect();
    cubes.sort();
    cubes.dedup();
    let no_continuous_family = conway_jones_items()
        .iter()
        .filter(|it| it.terms.iter().any(|t| t.2))
        .all(|it| it.terms.len() == 3 && it.value != -Q::one());
    LambertSearch { cubes, candidates, no_continuous_family }
}

pub fn search_rational_lambert_cubes() -> Vec<LambertCube> {
    search_lambert().cubes
}

/// How a companion's volume was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VolumePath {
    /// The quadruple equation holds and the angle formula applies.
    AngleFormula,
    /// Product of a dihedral group of rational order `k` with two reflections.
    DihedralProduct {
        #[serde(with = "crate::exact::angle::ratio_serde")]
        k: Q,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Companion {
    pub cube: LambertCube,
    pub tetrahedron: PythagoreanQuadruple,
    pub volume: VolumeCoefficient,
    pub path: VolumePath,
}

/// Tetrahedron `(π/2, π/2, π/2, θ)` with `θ = 4·Vol/π`, which has the cube's
/// volume; each is checked by whichever volume route applies.
pub fn companion_of(cube: &LambertCube) -> Result<Companion, LambertError> {
    let want = lambert_volume(cube)?;
    let theta = RationalAngle::from_ratio(want.value * 4);
    let h = RationalAngle::half_pi();
    let t = PythagoreanQuadruple::new(h, h, h, theta).map_err(|_| LambertError::OutOfWindow(theta))?;
    if !is_realizable(&t).realizable() {
        return Err(LambertError::CompanionNotRealizable(t));
    }
    let (got, path) = if quadruple_residual(&t).is_zero() {
        (volume(&t).expect("realizable solution"), VolumePath::AngleFormula)
    } else {
        let row = coxeter_catalog().into_iter().find(|e| e.volume == VolumeRule::OneDihedral).expect("row present");
        let k = theta.ratio().recip();
        (VolumeCoefficient { value: row.volume.eval(k, Q::zero()) }, VolumePath::DihedralProduct { k })
    };
    if got != want {
        return Err(LambertError::CompanionMismatch { cube: cube.angles(), got: got.to_string(), want: want.to_string() });
    }
    Ok(Companion { cube: *cube, tetrahedron: t, volume: got, path })
}

pub fn companion_tetrahedra() -> Result<Vec<Companion>, LambertError> {
    search_rational_lambert_cubes().iter().map(companion_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_examples() {
        let a = RationalAngle::new;
        assert!(lambert_residual(a(3, 4), a(2, 3), a(2, 3)).is_zero());
        assert!(lambert_residual(a(2, 3), a(3, 5), a(4, 5)).is_zero());
        let h = a(1, 2);
        assert_eq!(lambert_residual(h, h, h), CyclotomicNumber::from_integer(-1));
    }

    #[test]
    fn volumes_and_window() {
        let l1 = LambertCube::from_pairs([(3, 4), (2, 3), (2, 3)]).unwrap();
        assert_eq!(lambert_volume(&l1).unwrap(), VolumeCoefficient::new(31, 576));
        assert!(LambertCube::from_pairs([(1, 2), (2, 3), (2, 3)]).is_err());
        let bad = LambertCube::from_pairs([(3, 4), (3, 4), (3, 4)]).unwrap();
        assert!(matches!(lambert_volume(&bad), Err(LambertError::NotACube(_))));
    }
}
