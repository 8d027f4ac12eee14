//! Determinants over any commutative ring of exact, interval or jet values.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::{CyclotomicNumber, SignedInterval};

pub trait Ring:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Additive identity compatible with `self` (same precision or jet order).
    fn zero_like(&self) -> Self;
    /// Exactly zero; used only to skip work.
    fn is_exact_zero(&self) -> bool;
}

impl Ring for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero()
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for SignedInterval {
    fn zero_like(&self) -> Self {
        SignedInterval::zero(self.prec())
    }
    fn is_exact_zero(&self) -> bool {
        self.sign() == Some(0)
    }
}

/// Laplace expansion along the first row, skipping zero entries.
///
/// Panics on an empty or non-square matrix.
pub fn det<T: Ring>(m: &[Vec<T>]) -> T {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "det needs a non-empty square matrix");
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols)
}

fn det_rec<T: Ring>(m: &[Vec<T>], row: usize, cols: &[usize]) -> T {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc: Option<T> = None;
    for (i, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_exact_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest);
        if minor.is_exact_zero() {
            continue;
        }
        let term = entry.clone() * minor;
        acc = Some(match acc {
            None if i % 2 == 0 => term,
            None => -term,
            Some(a) if i % 2 == 0 => a + term,
            Some(a) => a - term,
        });
    }
    acc.unwrap_or_else(|| m[row][cols[0]].zero_like())
}

/// Leading principal minor of size `k`.
pub fn leading_minor<T: Ring>(m: &[Vec<T>], k: usize) -> T {
    let sub: Vec<Vec<T>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
    det(&sub)
}

/// Truncated Taylor series `c_0 + c_1 τ + … + c_K τ^K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    pub coeffs: Vec<T>,
}

impl<T: Ring> Jet<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "jet needs at least one coefficient");
        Jet { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl<T: Ring> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: Self) -> Self {
        Jet { coeffs: self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<T: Ring> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, rhs: Self) -> Self {
        Jet { coeffs: self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<T: Ring> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Self {
        Jet { coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl<T: Ring> Mul for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: Self) -> Self {
        let k = self.coeffs.len().min(rhs.coeffs.len());
        let mut out: Vec<T> = Vec::with_capacity(k);
        for n in 0..k {
            let mut acc = self.coeffs[0].zero_like();
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                if a.is_exact_zero() || b.is_exact_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone();
            }
            out.push(acc);
        }
        Jet { coeffs: out }
    }
}

impl<T: Ring> Ring for Jet<T> {
    fn zero_like(&self) -> Self {
        let z = self.coeffs[0].zero_like();
        Jet { coeffs: vec![z; self.coeffs.len()] }
    }
    fn is_exact_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_exact_zero)
    }
}

/// `1/k!` as an exact rational.
pub fn inv_factorial(k: usize) -> BigRational {
    let f: BigInt = (1..=k as u64).map(BigInt::from).product();
    BigRational::new(BigInt::from(1), f)
}
