use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::angle::RationalAngle;

/// Largest field order handled; anything beyond is a programming error.
pub const MAX_ORDER: u32 = 2520;

/// `Φ_n(x) = x^phi + Σ c_j x^j`, stored sparsely without the leading term.
struct CyclotomicPoly {
    phi: usize,
    low: Vec<(usize, i64)>,
}

fn table() -> &'static [OnceLock<CyclotomicPoly>] {
    static TABLE: OnceLock<Vec<OnceLock<CyclotomicPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=MAX_ORDER).map(|_| OnceLock::new()).collect())
}

fn cyclotomic_poly(n: u32) -> &'static CyclotomicPoly {
    assert!(n >= 1 && n <= MAX_ORDER, "cyclotomic order {n} exceeds the supported cap {MAX_ORDER}");
    table()[n as usize].get_or_init(|| compute_cyclotomic(n as usize))
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}`, multiplying before dividing.
fn compute_cyclotomic(n: usize) -> CyclotomicPoly {
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut poly: Vec<i64> = vec![1];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // exact division by x^d - 1, from the top coefficient down
            let deg = poly.len() - 1;
            let qdeg = deg - d;
            let mut q = vec![0i64; qdeg + 1];
            for k in (d..=deg).rev() {
                let above = if k <= qdeg { q[k] } else { 0 };
                q[k - d] = poly[k] + above;
            }
            poly = q;
        }
    }
    let phi = poly.len() - 1;
    debug_assert_eq!(poly[phi], 1);
    let low = poly[..phi].iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, c)).collect();
    CyclotomicPoly { phi, low }
}

/// Orders `n ≡ 2 (mod 4)` give the same field as `n/2`; never store them.
fn canonical_order(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Maps `ζ_n^k` to `(sign, exponent)` at the canonical order of `n`.
fn canonical_root(n: u32, k: i64) -> (bool, usize) {
    let n_i = n as i64;
    let k = k.rem_euclid(n_i);
    if n % 4 == 2 {
        // ζ_{2m}^k = (-1)^k ζ_m^{k(m+1)/2}
        let m = n_i / 2;
        let e = (k * ((m + 1) / 2)).rem_euclid(m);
        (k % 2 == 1, e as usize)
    } else {
        (false, k as usize)
    }
}

/// Reduces a dense power-basis vector modulo `Φ_n`.
fn reduce(mut dense: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let poly = cyclotomic_poly(n);
    let phi = poly.phi;
    for i in (phi..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut dense[i], BigRational::zero());
        for &(j, a) in &poly.low {
            let slot = &mut dense[i - phi + j];
            match a {
                1 => *slot -= &c,
                -1 => *slot += &c,
                _ => *slot -= &c * BigRational::from_integer(BigInt::from(a)),
            }
        }
    }
    dense.truncate(phi);
    dense.resize(phi, BigRational::zero());
    dense
}

/// An element of `ℚ(ζ_N)` in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
///
/// Rational elements always carry order 1 and orders `≡ 2 (mod 4)` never occur,
/// so equal elements of equal order have identical coefficients.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CyclotomicNumber { order: 1, coeffs: vec![q] }
    }

    /// `Σ c · ζ_n^k` over the given terms.
    pub fn from_terms(n: u32, terms: &[(BigRational, i64)]) -> Self {
        let order = canonical_order(n);
        let mut dense = vec![BigRational::zero(); order as usize];
        for (c, k) in terms {
            let (neg, e) = canonical_root(n, *k);
            if neg {
                dense[e] -= c;
            } else {
                dense[e] += c;
            }
        }
        Self::finish(order, reduce(dense, order))
    }

    pub fn root_of_unity(k: i64, n: u32) -> Self {
        Self::from_terms(n, &[(BigRational::one(), k)])
    }

    /// `cos(a) = (ζ_{2d}^n + ζ_{2d}^{-n}) / 2` for `a = nπ/d`.
    pub fn cos_pi(a: RationalAngle) -> Self {
        let n = 2 * a.den();
        assert!(canonical_order(n as u32) <= MAX_ORDER, "angle denominator {} too large", a.den());
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Self::from_terms(n as u32, &[(half.clone(), a.num()), (half, -a.num())])
    }

    pub fn sin_pi(a: RationalAngle) -> Self {
        Self::cos_pi(RationalAngle::half_pi() - a)
    }

    fn finish(order: u32, coeffs: Vec<BigRational>) -> Self {
        if order != 1 && coeffs[1..].iter().all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap();
            return CyclotomicNumber { order: 1, coeffs: vec![c] };
        }
        CyclotomicNumber { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    /// The same element expressed at order `n`, a multiple of the current order.
    pub fn embed(&self, n: u32) -> Self {
        let n = canonical_order(n);
        if n == self.order {
            return self.clone();
        }
        assert!(n % self.order == 0, "order {} does not divide {}", self.order, n);
        let step = (n / self.order) as usize;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * step] = c.clone();
            }
        }
        CyclotomicNumber { order: n, coeffs: reduce(dense, n) }
    }

    fn common_order(&self, other: &Self) -> u32 {
        let l = self.order.lcm(&other.order);
        assert!(l <= MAX_ORDER, "cyclotomic order {l} exceeds the supported cap {MAX_ORDER}");
        l
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as usize;
        let mut dense = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(n - i) % n] = c.clone();
        }
        Self::finish(self.order, reduce(dense, self.order))
    }

    /// Real under the identity embedding.
    pub fn is_real(&self) -> bool {
        self.order == 1 || self.conj() == *self
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let n = self.common_order(other);
        let a = self.embed(n);
        let b = other.embed(n);
        let coeffs = a
            .coeffs
            .into_iter()
            .zip(b.coeffs)
            .map(|(x, y)| if negate { x - y } else { x + y })
            .collect();
        Self::finish(n, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let n = self.common_order(other);
        let a = self.embed(n);
        let b = other.embed(n);
        let len = n as usize;
        let mut dense = vec![BigRational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[(i + j) % len] += x * y;
                }
            }
        }
        Self::finish(n, reduce(dense, n))
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() != other.is_rational() {
            return false;
        }
        let n = self.common_order(other);
        self.embed(n).coeffs == other.embed(n).coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "ζ{}^{}", self.order, i)?;
            } else {
                write!(f, "{a}·ζ{}^{}", self.order, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                $body(self, rhs)
            }
        }
        impl $trait<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                $body(&self, &rhs)
            }
        }
        impl $trait<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CyclotomicNumber, b: &CyclotomicNumber| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CyclotomicNumber, b: &CyclotomicNumber| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CyclotomicNumber, b: &CyclotomicNumber| a.mul_impl(b));

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -self.clone()
    }
}

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(CyclotomicNumber::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(n: i64, d: i64) -> RationalAngle {
        RationalAngle::new(n, d)
    }

    fn cos(n: i64, d: i64) -> CyclotomicNumber {
        CyclotomicNumber::cos_pi(ang(n, d))
    }

    /// Dense integer polynomial product, used as an independent oracle.
    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn dense(n: usize) -> Vec<i64> {
        let p = cyclotomic_poly(n as u32);
        let mut v = vec![0; p.phi + 1];
        v[p.phi] = 1;
        for &(j, c) in &p.low {
            v[j] = c;
        }
        v
    }

    #[test]
    fn cyclotomic_polynomials_multiply_to_x_n_minus_one() {
        for n in [1usize, 2, 6, 12, 30, 105, 210, 420] {
            let mut prod = vec![1i64];
            for d in (1..=n).filter(|d| n % d == 0) {
                prod = poly_mul(&prod, &dense(d));
            }
            let mut expect = vec![0i64; n + 1];
            expect[0] = -1;
            expect[n] = 1;
            assert_eq!(prod, expect, "n = {n}");
        }
        // Φ_105 is the first with a coefficient of magnitude 2
        assert!(cyclotomic_poly(105).low.iter().any(|&(_, c)| c == -2));
    }

    #[test]
    fn special_cosines() {
        assert_eq!(cos(1, 3), CyclotomicNumber::from_ratio(1, 2));
        assert!(cos(1, 3).is_rational());
        assert!(cos(1, 2).is_zero());
        assert_eq!(cos(1, 1), CyclotomicNumber::from_integer(-1));
        assert_eq!(cos(0, 1), CyclotomicNumber::one());
        assert!(!cos(1, 5).is_rational());
    }

    #[test]
    fn cos_pi_over_5_satisfies_minimal_polynomial() {
        let x = cos(1, 5);
        let four = CyclotomicNumber::from_integer(4);
        let two = CyclotomicNumber::from_integer(2);
        let val = &(&four * &x.square()) - &(&two * &x) - CyclotomicNumber::one();
        assert!(val.is_zero());
        assert!(x.is_real());
    }

    #[test]
    fn roots_of_unity_at_orders_two_mod_four() {
        // ζ_6 = -ζ_3^2, ζ_6^3 = -1
        assert_eq!(CyclotomicNumber::root_of_unity(3, 6), CyclotomicNumber::from_integer(-1));
        let z6 = CyclotomicNumber::root_of_unity(1, 6);
        assert_eq!(z6.order(), 3);
        let mut p = CyclotomicNumber::one();
        for _ in 0..6 {
            p = &p * &z6;
        }
        assert_eq!(p, CyclotomicNumber::one());
        assert_eq!(CyclotomicNumber::root_of_unity(1, 2), CyclotomicNumber::from_integer(-1));
    }

    #[test]
    fn conjugation_and_reality() {
        let z = CyclotomicNumber::root_of_unity(1, 5);
        assert!(!z.is_real());
        assert!((&z + &z.conj()).is_real());
        assert_eq!(&z * &z.conj(), CyclotomicNumber::one());
    }

    #[test]
    fn mixed_order_equality() {
        // cos(2π/5) at order 5 equals the same value embedded at order 60
        let c = cos(2, 5);
        assert_eq!(c.embed(60), c);
        assert_eq!(c.embed(60).order(), 60);
    }

    #[test]
    #[should_panic(expected = "exceeds the supported cap")]
    fn order_cap_is_enforced() {
        let a = CyclotomicNumber::root_of_unity(1, 2048);
        let b = CyclotomicNumber::root_of_unity(1, 3);
        let _ = a * b;
    }
}
