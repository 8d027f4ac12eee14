use std::cmp::{max, min, Ordering};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Extra bits carried internally by the transcendental routines.
const GUARD: u32 = 32;

/// Bits of π computed once and shared read-only.
const PI_TABLE_BITS: u32 = 4096;

pub fn floor_shr(x: &BigInt, n: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << n))
}

pub fn ceil_shr(x: &BigInt, n: u32) -> BigInt {
    x.div_ceil(&(BigInt::one() << n))
}

/// A closed interval `[lo, hi] · 2^-prec` with dyadic endpoints.
///
/// Every operation rounds outward, so the true value is never lost.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedInterval {
    #[serde(with = "bigint_string")]
    lo: BigInt,
    #[serde(with = "bigint_string")]
    hi: BigInt,
    prec: u32,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl SignedInterval {
    /// Panics if `lo > hi`.
    pub fn from_raw(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        SignedInterval { lo, hi, prec }
    }

    pub fn zero(prec: u32) -> Self {
        SignedInterval { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_integer(1, prec)
    }

    pub fn from_integer(n: i64, prec: u32) -> Self {
        let v = BigInt::from(n) << prec;
        SignedInterval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        SignedInterval {
            lo: scaled.div_floor(q.denom()),
            hi: scaled.div_ceil(q.denom()),
            prec,
        }
    }

    /// Smallest dyadic interval at `prec` bits containing `[a, b]`.
    pub fn from_rational_bounds(a: &BigRational, b: &BigRational, prec: u32) -> Self {
        let lo = Self::from_rational(a, prec).lo;
        let hi = Self::from_rational(b, prec).hi;
        Self::from_raw(lo, hi, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_raw(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_raw(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn mid_f64(&self) -> f64 {
        let m: BigInt = &self.lo + &self.hi;
        ratio_to_f64(&m, self.prec + 1)
    }

    pub fn lo_f64(&self) -> f64 {
        ratio_to_f64(&self.lo, self.prec)
    }

    pub fn hi_f64(&self) -> f64 {
        ratio_to_f64(&self.hi, self.prec)
    }

    /// Re-expresses the interval at `prec` bits, rounding outward when coarsening.
    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = prec - self.prec;
                SignedInterval { lo: &self.lo << s, hi: &self.hi << s, prec }
            }
            Ordering::Less => {
                let s = self.prec - prec;
                SignedInterval { lo: floor_shr(&self.lo, s), hi: ceil_shr(&self.hi, s), prec }
            }
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let p = max(self.prec, other.prec);
        (self.with_prec(p), other.with_prec(p))
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != Sign::Plus && self.hi.sign() != Sign::Minus
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo() <= x && x <= &self.hi()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// `Some(±1)` when the interval excludes zero, `Some(0)` for the point zero.
    pub fn sign(&self) -> Option<i8> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.hi < b.lo
    }

    pub fn hull(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        SignedInterval { lo: min(a.lo, b.lo), hi: max(a.hi, b.hi), prec: a.prec }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let (a, b) = self.aligned(other);
        let lo = max(a.lo, b.lo);
        let hi = min(a.hi, b.hi);
        (lo <= hi).then_some(SignedInterval { lo, hi, prec: a.prec })
    }

    /// Upper bound on `|x|` in raw units.
    fn mag_raw(&self) -> BigInt {
        max(self.lo.abs(), self.hi.abs())
    }

    pub fn abs(&self) -> Self {
        if self.lo.sign() != Sign::Minus {
            self.clone()
        } else if self.hi.sign() != Sign::Plus {
            -self.clone()
        } else {
            SignedInterval { lo: BigInt::zero(), hi: self.mag_raw(), prec: self.prec }
        }
    }

    pub fn square(&self) -> Self {
        let a = self.abs();
        SignedInterval {
            lo: floor_shr(&(&a.lo * &a.lo), a.prec),
            hi: ceil_shr(&(&a.hi * &a.hi), a.prec),
            prec: a.prec,
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        self.clone() * SignedInterval::from_rational(q, self.prec)
    }

    pub fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        let d = BigInt::from(n);
        let (a, b) = (self.lo.div_floor(&d), self.hi.div_ceil(&d));
        if n > 0 {
            SignedInterval { lo: a, hi: b, prec: self.prec }
        } else {
            SignedInterval { lo: self.hi.div_floor(&d), hi: self.lo.div_ceil(&d), prec: self.prec }
        }
    }

    /// `None` if the divisor may vanish.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.contains_zero() {
            return None;
        }
        let (a, b) = self.aligned(other);
        let p = a.prec;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for x in [&a.lo, &a.hi] {
            for y in [&b.lo, &b.hi] {
                let n = x << p;
                let f = n.div_floor(y);
                let c = n.div_ceil(y);
                lo = Some(match lo {
                    Some(l) => min(l, f),
                    None => f,
                });
                hi = Some(match hi {
                    Some(h) => max(h, c),
                    None => c,
                });
            }
        }
        Some(SignedInterval { lo: lo.unwrap(), hi: hi.unwrap(), prec: p })
    }

    /// Square root of the non-negative part; `None` if the interval is entirely negative.
    pub fn sqrt(&self) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        let lo = if self.lo.is_positive() { (&self.lo << self.prec).sqrt() } else { BigInt::zero() };
        let n = &self.hi << self.prec;
        let mut hi = n.sqrt();
        if &hi * &hi < n {
            hi += 1;
        }
        Some(SignedInterval { lo, hi, prec: self.prec })
    }

    pub fn pi(prec: u32) -> Self {
        static TABLE: OnceLock<SignedInterval> = OnceLock::new();
        if prec <= PI_TABLE_BITS {
            TABLE.get_or_init(|| machin_pi(PI_TABLE_BITS)).with_prec(prec)
        } else {
            machin_pi(prec)
        }
    }

    /// Enclosure of `cos(πq)`.
    pub fn cos_pi(q: &BigRational, prec: u32) -> Self {
        let (negate, use_sin, r) = reduce_pi_multiple(q);
        let w = prec + GUARD;
        let y = SignedInterval::pi(w).mul_rational(&r);
        let (c, s) = taylor_cos_sin(&y);
        let v = if use_sin { s } else { c };
        let v = if negate { -v } else { v };
        v.with_prec(prec).clamp_unit()
    }

    /// Enclosure of `sin(πq)`.
    pub fn sin_pi(q: &BigRational, prec: u32) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        SignedInterval::cos_pi(&(half - q), prec)
    }

    /// Enclosure of `{cos(πy) : a ≤ y ≤ b}`.
    pub fn cos_pi_range(a: &BigRational, b: &BigRational, prec: u32) -> Self {
        assert!(a <= b, "empty range");
        let mut out = SignedInterval::cos_pi(a, prec).hull(&SignedInterval::cos_pi(b, prec));
        // extrema sit at the integers inside [a, b]
        let first = a.ceil().to_integer();
        let last = b.floor().to_integer();
        let one = BigInt::one() << prec;
        if first < last {
            out.lo = -one.clone();
            out.hi = one;
        } else if first == last {
            if first.is_even() {
                out.hi = one;
            } else {
                out.lo = -one;
            }
        }
        out
    }

    /// Enclosure of `{sin(πy) : a ≤ y ≤ b}`.
    pub fn sin_pi_range(a: &BigRational, b: &BigRational, prec: u32) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        SignedInterval::cos_pi_range(&(&half - b), &(&half - a), prec)
    }

    /// Enclosure of `cos(x)` over the interval `x` (radians).
    pub fn cos(&self) -> Self {
        let prec = self.prec;
        let lo_pt = SignedInterval { lo: self.lo.clone(), hi: self.lo.clone(), prec };
        let hi_pt = SignedInterval { lo: self.hi.clone(), hi: self.hi.clone(), prec };
        let mut out = cos_narrow(&lo_pt).hull(&cos_narrow(&hi_pt));
        // extrema at kπ inside the interval
        let pi = SignedInterval::pi(prec + GUARD).with_prec(prec);
        let k0 = (self.lo_f64() / std::f64::consts::PI).floor() as i64 - 1;
        let k1 = (self.hi_f64() / std::f64::consts::PI).ceil() as i64 + 1;
        for k in k0..=k1 {
            let kp = pi.clone() * SignedInterval::from_integer(k, prec);
            if kp.intersect(self).is_some() {
                if k.rem_euclid(2) == 0 {
                    out.hi = BigInt::one() << prec;
                } else {
                    out.lo = -(BigInt::one() << prec);
                }
            }
        }
        out.clamp_unit()
    }

    pub fn sin(&self) -> Self {
        let half_pi = SignedInterval::pi(self.prec + GUARD).div_int(2).with_prec(self.prec);
        (half_pi - self.clone()).cos()
    }

    /// Enclosure of `arccos` over the interval, which is clamped to `[-1, 1]`.
    pub fn acos(&self) -> Self {
        let prec = self.prec;
        let one = BigInt::one() << prec;
        let lo = self.lo.clone().clamp(-one.clone(), one.clone());
        let hi = self.hi.clone().clamp(-one.clone(), one);
        let upper = acos_point(&lo, prec);
        let lower = acos_point(&hi, prec);
        SignedInterval { lo: lower.lo, hi: upper.hi, prec }
    }

    fn clamp_unit(mut self) -> Self {
        let one = BigInt::one() << self.prec;
        if self.hi > one {
            self.hi = one.clone();
        }
        if self.lo < -one.clone() {
            self.lo = -one;
        }
        if self.lo > self.hi {
            std::mem::swap(&mut self.lo, &mut self.hi);
        }
        self
    }
}

fn ratio_to_f64(x: &BigInt, prec: u32) -> f64 {
    let bits = x.bits() as i64;
    let shift = (bits - 60).max(0) as u32;
    let m = (x >> shift).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(shift as i32 - prec as i32)
}

/// Reduces `cos(πq)` to `±cos(πr)` or `±sin(πr)` with `0 ≤ r ≤ 1/4`.
/// Returns `(negate, use_sin, r)`.
fn reduce_pi_multiple(q: &BigRational) -> (bool, bool, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut r = q - (q / &two).floor() * &two;
    if r > one {
        r = &two - r;
    }
    let mut negate = false;
    if r > half {
        r = one - r;
        negate = true;
    }
    if r > quarter {
        (negate, true, half - r)
    } else {
        (negate, false, r)
    }
}

/// Taylor enclosures of `(cos y, sin y)` for `|y| < 1`.
fn taylor_cos_sin(y: &SignedInterval) -> (SignedInterval, SignedInterval) {
    let p = y.prec;
    let y2 = y.square();
    let unit = BigInt::one();

    let mut cos = SignedInterval::one(p);
    let mut term = SignedInterval::one(p);
    let mut k: i64 = 1;
    loop {
        term = (term * y2.clone()).div_int((2 * k - 1) * (2 * k));
        if k % 2 == 1 {
            cos = cos - term.clone();
        } else {
            cos = cos + term.clone();
        }
        if term.mag_raw() <= unit {
            break;
        }
        k += 1;
    }
    let tail = term.mag_raw() + 1;
    cos.lo -= &tail;
    cos.hi += &tail;

    let mut sin = y.clone();
    let mut term = y.clone();
    let mut k: i64 = 1;
    loop {
        term = (term * y2.clone()).div_int((2 * k) * (2 * k + 1));
        if k % 2 == 1 {
            sin = sin - term.clone();
        } else {
            sin = sin + term.clone();
        }
        if term.mag_raw() <= unit {
            break;
        }
        k += 1;
    }
    let tail = term.mag_raw() + 1;
    sin.lo -= &tail;
    sin.hi += &tail;
    (cos, sin)
}

/// `cos` of a narrow interval of moderate magnitude.
fn cos_narrow(x: &SignedInterval) -> SignedInterval {
    let prec = x.prec;
    let w = prec + GUARD;
    let xw = x.with_prec(w);
    let k = (x.mid_f64() / std::f64::consts::FRAC_PI_2).round() as i64;
    let half_pi = SignedInterval::pi(w).div_int(2);
    let y = xw - half_pi * SignedInterval::from_integer(k, w);
    let (c, s) = taylor_cos_sin(&y);
    let v = match k.rem_euclid(4) {
        0 => c,
        1 => -s,
        2 => -c,
        _ => s,
    };
    v.with_prec(prec).clamp_unit()
}

/// Bisection for `arccos(v · 2^-prec)`, `v` within `[-1, 1]`.
fn acos_point(v: &BigInt, prec: u32) -> SignedInterval {
    let w = prec + 8;
    let one = BigInt::one() << prec;
    let pi = SignedInterval::pi(w);
    if *v >= one {
        return SignedInterval::zero(prec);
    }
    if *v <= -one {
        return pi.with_prec(prec);
    }
    let target = SignedInterval::from_raw(v.clone(), v.clone(), prec).with_prec(w);
    let mut lo = BigInt::zero();
    let mut hi = pi.hi.clone();
    while &hi - &lo > BigInt::from(2) {
        let m: BigInt = (&lo + &hi) >> 1u32;
        let c = cos_narrow(&SignedInterval { lo: m.clone(), hi: m.clone(), prec: w });
        if c.lo > target.hi {
            lo = m;
        } else if c.hi < target.lo {
            hi = m;
        } else {
            break;
        }
    }
    SignedInterval { lo, hi, prec: w }.with_prec(prec)
}

/// `atan(1/x) · 2^w` truncated, with its error bound in raw units.
fn atan_inv(x: u64, w: u32) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut p = (BigInt::one() << w) / &x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let t = &p / BigInt::from(2 * k + 1);
        if t.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        p = &p / &x2;
        k += 1;
    }
    (sum, 2 * k + 2)
}

fn machin_pi(prec: u32) -> SignedInterval {
    let w = prec + 16;
    let (a, ea) = atan_inv(5, w);
    let (b, eb) = atan_inv(239, w);
    let v = a * 16 - b * 4;
    let err = BigInt::from(16 * ea + 4 * eb);
    SignedInterval { lo: &v - &err, hi: &v + &err, prec: w }.with_prec(prec)
}

impl Add for SignedInterval {
    type Output = SignedInterval;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = self.aligned(&rhs);
        SignedInterval { lo: a.lo + b.lo, hi: a.hi + b.hi, prec: a.prec }
    }
}

impl Sub for SignedInterval {
    type Output = SignedInterval;
    fn sub(self, rhs: Self) -> Self {
        let (a, b) = self.aligned(&rhs);
        SignedInterval { lo: a.lo - b.hi, hi: a.hi - b.lo, prec: a.prec }
    }
}

impl Neg for SignedInterval {
    type Output = SignedInterval;
    fn neg(self) -> Self {
        SignedInterval { lo: -self.hi, hi: -self.lo, prec: self.prec }
    }
}

impl Mul for SignedInterval {
    type Output = SignedInterval;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.aligned(&rhs);
        let p = a.prec;
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        SignedInterval { lo: floor_shr(lo, p), hi: ceil_shr(hi, p), prec: p }
    }
}

impl fmt::Debug for SignedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.20e}, {:.20e}]@{}", self.lo_f64(), self.hi_f64(), self.prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    // 100 digits of π, an independent constant.
    const PI_DIGITS: &str = "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

    fn pi_oracle() -> BigRational {
        let n: BigInt = PI_DIGITS.parse().unwrap();
        BigRational::new(n, BigInt::from(10).pow(PI_DIGITS.len() as u32 - 1))
    }

    #[test]
    fn floor_and_ceil_shifts_round_outward() {
        let x = BigInt::from(-5);
        assert_eq!(floor_shr(&x, 1), BigInt::from(-3));
        assert_eq!(ceil_shr(&x, 1), BigInt::from(-2));
        assert_eq!(floor_shr(&BigInt::from(5), 1), BigInt::from(2));
        assert_eq!(ceil_shr(&BigInt::from(5), 1), BigInt::from(3));
    }

    #[test]
    fn pi_encloses_reference_digits() {
        for prec in [53, 64, 200, 300] {
            let pi = SignedInterval::pi(prec);
            let oracle = pi_oracle();
            let slack = BigRational::new(BigInt::one(), BigInt::from(10).pow(99));
            assert!(pi.lo() <= &oracle + &slack && &oracle - &slack <= pi.hi(), "prec {prec}");
            assert!(pi.width() < BigRational::new(BigInt::from(64), BigInt::one() << prec));
        }
    }

    #[test]
    fn cos_pi_special_values() {
        let p = 128;
        let c = SignedInterval::cos_pi(&q(1, 3), p);
        assert!(c.contains(&q(1, 2)));
        let c = SignedInterval::cos_pi(&q(1, 2), p);
        assert!(c.contains(&q(0, 1)));
        let c = SignedInterval::cos_pi(&q(1, 1), p);
        assert!(c.contains(&q(-1, 1)));
        // cos(π/4)^2 = 1/2
        let c = SignedInterval::cos_pi(&q(1, 4), p);
        assert!(c.square().contains(&q(1, 2)));
        assert!(c.width() < q(1, 1 << 60));
        // cos(-7π/3) = 1/2
        assert!(SignedInterval::cos_pi(&q(-7, 3), p).contains(&q(1, 2)));
    }

    #[test]
    fn sqrt_encloses_root() {
        let two = SignedInterval::from_integer(2, 128);
        let r = two.sqrt().unwrap();
        assert!(r.square().contains(&q(2, 1)));
        assert!(SignedInterval::from_integer(-1, 10).sqrt().is_none());
    }

    #[test]
    fn range_cos_includes_interior_extrema() {
        let r = SignedInterval::cos_pi_range(&q(-1, 10), &q(1, 10), 64);
        assert!(r.contains(&q(1, 1)));
        let r = SignedInterval::cos_pi_range(&q(9, 10), &q(11, 10), 64);
        assert!(r.contains(&q(-1, 1)));
        let r = SignedInterval::cos_pi_range(&q(1, 10), &q(2, 10), 64);
        assert!(r.hi() < q(1, 1) && r.lo() > q(0, 1));
        let r = SignedInterval::cos_pi_range(&q(0, 1), &q(3, 1), 64);
        assert!(r.contains(&q(1, 1)) && r.contains(&q(-1, 1)));
    }

    #[test]
    fn radian_cos_and_acos_agree() {
        let p = 96;
        let x = SignedInterval::pi(p).div_int(3);
        assert!(x.cos().contains(&q(1, 2)));
        let a = SignedInterval::from_rational(&q(1, 2), p).acos();
        let third = SignedInterval::pi(p).div_int(3);
        assert!(a.intersect(&third).is_some());
        assert!(a.width() < BigRational::new(BigInt::one(), BigInt::one() << 80u32));
        let wide = SignedInterval::from_rational_bounds(&q(3, 1), &q(4, 1), 64).cos();
        assert!(wide.contains(&q(-1, 1)));
    }

    #[test]
    fn division_excludes_zero_divisor() {
        let a = SignedInterval::from_integer(1, 64);
        let b = SignedInterval::from_integer(3, 64);
        assert!(a.checked_div(&b).unwrap().contains(&q(1, 3)));
        let z = SignedInterval::from_rational_bounds(&q(-1, 2), &q(1, 2), 64);
        assert!(a.checked_div(&z).is_none());
    }

    #[test]
    fn serializes_as_strings() {
        let a = SignedInterval::from_rational(&q(-1, 3), 8);
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"lo":"-86","hi":"-85","prec":8}"#);
        assert_eq!(serde_json::from_str::<SignedInterval>(&j).unwrap(), a);
    }
}
