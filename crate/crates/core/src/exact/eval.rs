use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::cyclotomic::CyclotomicNumber;
use super::interval::SignedInterval;

/// Starting precision for sign refinement.
pub const SIGN_START_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("element is not real under the identity embedding: {0}")]
    NotReal(String),
    #[error("precision must be at least 53 bits, got {0}")]
    PrecisionTooLow(u32),
}

impl CyclotomicNumber {
    /// Certified enclosure of the real part of the identity embedding
    /// `ζ_N ↦ exp(2πi/N)` at `bits` bits.
    pub fn float_eval(&self, bits: u32) -> Result<SignedInterval, EvalError> {
        if bits < 53 {
            return Err(EvalError::PrecisionTooLow(bits));
        }
        if let Some(q) = self.as_rational() {
            return Ok(SignedInterval::from_rational(q, bits));
        }
        let w = bits + 16;
        let n = BigInt::from(self.order());
        let mut acc = SignedInterval::zero(w);
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = BigRational::new(BigInt::from(2 * i), n.clone());
            let term = SignedInterval::cos_pi(&angle, w).mul_rational(c);
            acc = acc + term;
        }
        Ok(acc.with_prec(bits))
    }

    /// Exact sign of a real element: zero test first, then interval refinement
    /// with doubling precision until zero is excluded.
    pub fn sign(&self) -> Result<i8, EvalError> {
        if let Some(q) = self.as_rational() {
            return Ok(if q.is_zero() {
                0
            } else if q > &BigRational::zero() {
                1
            } else {
                -1
            });
        }
        if !self.is_real() {
            return Err(EvalError::NotReal(format!("{self:?}")));
        }
        if self.is_zero() {
            return Ok(0);
        }
        let mut bits = SIGN_START_BITS;
        loop {
            let iv = self.float_eval(bits)?;
            if iv.is_positive() {
                return Ok(1);
            }
            if iv.is_negative() {
                return Ok(-1);
            }
            bits *= 2;
        }
    }

    /// Nearest `f64`; for diagnostics and prefilters only.
    pub fn to_f64(&self) -> f64 {
        self.float_eval(64).map(|iv| iv.mid_f64()).unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalAngle;

    fn cos(n: i64, d: i64) -> CyclotomicNumber {
        CyclotomicNumber::cos_pi(RationalAngle::new(n, d))
    }

    #[test]
    fn rational_evaluates_to_point() {
        let half = CyclotomicNumber::from_ratio(1, 2);
        let iv = half.float_eval(64).unwrap();
        assert_eq!(iv.lo(), iv.hi());
        assert_eq!(iv.lo(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn cos_quarter_pi_is_tight_at_64_bits() {
        let iv = cos(1, 4).float_eval(64).unwrap();
        assert!(iv.width() < BigRational::new(1.into(), BigInt::from(1u64 << 60)));
        // independent oracle: the square is one half
        assert!(iv.square().contains(&BigRational::new(1.into(), 2.into())));
        assert!((iv.mid_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn cos_13_pi_over_18_is_below_threshold() {
        let iv = cos(13, 18).float_eval(128).unwrap();
        assert!(iv.hi() < BigRational::new((-64).into(), 100.into()));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(CyclotomicNumber::zero().sign().unwrap(), 0);
        assert_eq!(cos(1, 5).sign().unwrap(), 1);
        let x = cos(1, 5) - cos(2, 5) - CyclotomicNumber::from_ratio(1, 2);
        assert_eq!(x.sign().unwrap(), 0);
        assert_eq!(cos(4, 7).sign().unwrap(), -1);
        let z = CyclotomicNumber::root_of_unity(1, 5);
        assert!(matches!(z.sign(), Err(EvalError::NotReal(_))));
    }

    #[test]
    fn low_precision_is_rejected() {
        assert_eq!(cos(1, 5).float_eval(32), Err(EvalError::PrecisionTooLow(32)));
    }
}
