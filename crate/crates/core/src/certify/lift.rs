//! Block-diagonal lift of a tetrahedron to a simplex in `Sⁿ`.
//!
//! Appending `n − 3` mutually orthogonal facets orthogonal to the original
//! four gives a simplex cut out by `n − 3` further hemispheres, so its share of
//! `Sⁿ` is the original share halved `n − 3` times.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::CertifyError;
use crate::exact::CyclotomicNumber;
use crate::ring::leading_minor;

type Q = Ratio<i64>;

/// `G` in the top-left corner, identity elsewhere: size `n + 1`.
pub fn lift_gram(g: &[Vec<CyclotomicNumber>], n: usize) -> Result<Vec<Vec<CyclotomicNumber>>, CertifyError> {
    if n < 3 || g.len() != 4 {
        return Err(CertifyError::BadLift(format!("need a 4×4 matrix and n ≥ 3, got {}×{} and n = {n}", g.len(), g.len())));
    }
    Ok((0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| match (i < 4, j < 4) {
                    (true, true) => g[i][j].clone(),
                    _ if i == j => CyclotomicNumber::one(),
                    _ => CyclotomicNumber::zero(),
                })
                .collect()
        })
        .collect())
}

/// Signs of all leading principal minors.
pub fn minor_signs(g: &[Vec<CyclotomicNumber>]) -> Vec<i8> {
    (1..=g.len()).map(|k| leading_minor(g, k).sign().expect("Gram minors are real")).collect()
}

/// Share of `Sⁿ` given the share `f3` of `S³`.
pub fn lifted_volume_fraction(f3: Q, n: u32) -> Result<Q, CertifyError> {
    if n < 3 {
        return Err(CertifyError::BadLift(format!("n = {n} is below 3")));
    }
    if !(f3 > Q::zero() && f3 < Q::one()) {
        return Err(CertifyError::BadLift(format!("fraction {f3} is not in (0, 1)")));
    }
    Ok(f3 / Q::from_integer(1i64 << (n - 3)))
}

/// Shares of `Sⁿ` of two lifted tetrahedra, with their Gram matrices checked
/// positive definite after lifting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedPair {
    pub n: u32,
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub first: Q,
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub second: Q,
    pub positive_definite: bool,
}

impl LiftedPair {
    pub fn volumes_agree(&self) -> bool {
        self.first == self.second
    }
}

/// Volumes are coefficients of π², converted to shares of `2π²`.
pub fn lift_pair(
    g1: &[Vec<CyclotomicNumber>],
    v1: Q,
    g2: &[Vec<CyclotomicNumber>],
    v2: Q,
    n: u32,
) -> Result<LiftedPair, CertifyError> {
    let pd = |g: &[Vec<CyclotomicNumber>]| -> Result<bool, CertifyError> {
        Ok(minor_signs(&lift_gram(g, n as usize)?).iter().all(|&s| s > 0))
    };
    let positive_definite = pd(g1)? && pd(g2)?;
    Ok(LiftedPair {
        n,
        first: lifted_volume_fraction(v1 / 2, n)?,
        second: lifted_volume_fraction(v2 / 2, n)?,
        positive_definite,
    })
}
