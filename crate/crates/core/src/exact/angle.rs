use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational multiple of π, stored as the reduced fraction `num/den`.
///
/// Zero is `0/1`; the sign always lives in `num`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle(Ratio<i64>);

impl RationalAngle {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        RationalAngle(Ratio::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        RationalAngle(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        RationalAngle(Ratio::zero())
    }

    pub fn pi() -> Self {
        RationalAngle(Ratio::one())
    }

    pub fn half_pi() -> Self {
        RationalAngle::new(1, 2)
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        RationalAngle(r)
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn num(&self) -> i64 {
        *self.0.numer()
    }

    pub fn den(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The search-layer denominator: `None` stands for the ∞ sentinel of the zero angle.
    pub fn search_den(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.den())
        }
    }

    /// `π - self`.
    pub fn supplement(&self) -> Self {
        RationalAngle(Ratio::one() - self.0)
    }

    /// Strictly between 0 and π.
    pub fn in_open_unit(&self) -> bool {
        self.0 > Ratio::zero() && self.0 < Ratio::one()
    }

    /// Representative of the same angle modulo 2π in `[0, 2)`.
    pub fn reduced_mod_two_pi(&self) -> Self {
        let two = 2 * self.den();
        RationalAngle::new(self.num().mod_floor(&two), self.den())
    }

    pub fn abs(&self) -> Self {
        RationalAngle(self.0.abs())
    }

    /// Radians, not units of π.
    pub fn to_f64(&self) -> f64 {
        self.num() as f64 / self.den() as f64 * std::f64::consts::PI
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den() == 1 {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π", self)
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational multiple of pi")]
pub struct ParseAngleError(pub String);

/// Accepts `n`, `n/d`, with optional surrounding whitespace.
impl FromStr for RationalAngle {
    type Err = ParseAngleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseAngleError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(RationalAngle::integer).map_err(|_| err()),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                Ok(RationalAngle::new(n, d))
            }
        }
    }
}

impl Add for RationalAngle {
    type Output = RationalAngle;
    fn add(self, rhs: Self) -> Self {
        RationalAngle(self.0 + rhs.0)
    }
}

impl Sub for RationalAngle {
    type Output = RationalAngle;
    fn sub(self, rhs: Self) -> Self {
        RationalAngle(self.0 - rhs.0)
    }
}

impl Neg for RationalAngle {
    type Output = RationalAngle;
    fn neg(self) -> Self {
        RationalAngle(-self.0)
    }
}

impl Mul<Ratio<i64>> for RationalAngle {
    type Output = RationalAngle;
    fn mul(self, rhs: Ratio<i64>) -> Self {
        RationalAngle(self.0 * rhs)
    }
}

impl From<Ratio<i64>> for RationalAngle {
    fn from(r: Ratio<i64>) -> Self {
        RationalAngle(r)
    }
}

#[derive(Serialize, Deserialize)]
struct Fraction {
    num: i64,
    den: i64,
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Fraction { num: self.num(), den: self.den() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = Fraction::deserialize(d)?;
        if f.den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        let a = RationalAngle::new(f.num, f.den);
        if a.num() != f.num {
            return Err(serde::de::Error::custom("fraction is not reduced"));
        }
        Ok(a)
    }
}

/// Serde helper for plain `Ratio<i64>` values stored as `{"num", "den"}`.
pub mod ratio_serde {
    use super::Fraction;
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        Fraction { num: *r.numer(), den: *r.denom() }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let f = Fraction::deserialize(d)?;
        if f.den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        let r = Ratio::new(f.num, f.den);
        if *r.numer() != f.num {
            return Err(serde::de::Error::custom("fraction is not reduced"));
        }
        Ok(r)
    }
}

/// Parses `n` or `n/d` into a reduced `Ratio<i64>`.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>, ParseAngleError> {
    s.parse::<RationalAngle>().map(|a| a.ratio())
}

/// Formats a ratio as `n` or `n/d`.
pub fn format_ratio(r: &Ratio<i64>) -> String {
    RationalAngle::from_ratio(*r).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let a = RationalAngle::new(6, -8);
        assert_eq!((a.num(), a.den()), (-3, 4));
        let z = RationalAngle::new(0, 7);
        assert_eq!((z.num(), z.den()), (0, 1));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["1/2", "-3/4", "5", "0", "25/42"] {
            let a: RationalAngle = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert!("1/0".parse::<RationalAngle>().is_err());
        assert!("x".parse::<RationalAngle>().is_err());
        assert_eq!("4/6".parse::<RationalAngle>().unwrap(), RationalAngle::new(2, 3));
    }

    #[test]
    fn json_is_a_num_den_object() {
        let a = RationalAngle::new(13, 18);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"num":13,"den":18}"#);
        assert_eq!(serde_json::from_str::<RationalAngle>(&j).unwrap(), a);
        assert!(serde_json::from_str::<RationalAngle>(r#"{"num":2,"den":4}"#).is_err());
        assert!(serde_json::from_str::<RationalAngle>(r#"{"num":1,"den":0}"#).is_err());
    }

    #[test]
    fn reduction_mod_two_pi() {
        assert_eq!(RationalAngle::new(-1, 3).reduced_mod_two_pi(), RationalAngle::new(5, 3));
        assert_eq!(RationalAngle::new(7, 3).reduced_mod_two_pi(), RationalAngle::new(1, 3));
        assert_eq!(RationalAngle::new(1, 1).supplement(), RationalAngle::zero());
    }
}
