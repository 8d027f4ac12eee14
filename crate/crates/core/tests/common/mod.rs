//! Sampling loops shared by the property suite and the acceptance target.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rattet_core::exact::{RationalAngle, SignedInterval};
use rattet_core::geometry::{residual_of, RawQuadruple};
use rattet_core::search::{axes, passes_prefilter, DenominatorProfile, DEFAULT_TOLERANCE};

/// Denominators dividing 420 keep every expression in the field of order 840.
pub const DENS: [i64; 16] = [1, 2, 3, 4, 5, 6, 7, 10, 12, 14, 15, 20, 21, 30, 35, 42];

pub fn big(a: RationalAngle) -> BigRational {
    BigRational::new(BigInt::from(a.num()), BigInt::from(a.den()))
}

/// Residual signs of random quadruples, exact against a 256-bit enclosure
/// built from interval cosines. Returns `(disagreements, undecided)`.
pub fn sign_agreement(samples: usize, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    let mut undecided = 0;
    for _ in 0..samples {
        let [p, q, r, s] = [(); 4].map(|_| {
            let d = DENS[rng.gen_range(0..DENS.len())];
            RationalAngle::new(rng.gen_range(0..2 * d), d)
        });
        let exact = residual_of(p, q, r, s).sign().unwrap();
        let c = |a: RationalAngle| SignedInterval::cos_pi(&big(a), 256);
        let half = BigRational::new(1.into(), 2.into());
        let enc = c(p) * c(q) + (c(r) + c(s)).mul_rational(&half);
        match enc.sign() {
            Some(sg) if sg != exact => disagreements += 1,
            Some(_) => {}
            None if exact == 0 => {}
            None => undecided += 1,
        }
    }
    (disagreements, undecided)
}

/// Draws union-grid tuples until `rejects` fail the float prefilter and
/// returns how many of those rejects are exact zeros.
pub fn prefilter_false_negatives(rejects: usize, seed: u64) -> usize {
    let (a_axis, b_axis, c_axis) = axes(&DenominatorProfile::union());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |v: &Vec<RationalAngle>, rng: &mut ChaCha8Rng| v[rng.gen_range(0..v.len())];
    let (mut seen, mut zeros) = (0, 0);
    while seen < rejects {
        let x = RawQuadruple {
            a: pick(&a_axis, &mut rng),
            b: pick(&b_axis, &mut rng),
            c: pick(&c_axis, &mut rng),
            d: pick(&c_axis, &mut rng),
        };
        if passes_prefilter(&x, DEFAULT_TOLERANCE) {
            continue;
        }
        seen += 1;
        if x.cosine_sum().is_zero() {
            zeros += 1;
        }
    }
    zeros
}
