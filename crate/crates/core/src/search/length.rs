//! Rational length of a cosine sum and the Conway–Jones list.

use num_rational::{BigRational, Ratio};

use crate::exact::{CyclotomicNumber, RationalAngle};
use crate::geometry::RawQuadruple;

/// Largest size of a rational sub-sum of `Σ cos` none of whose proper
/// sub-sums is rational; `None` when no sub-sum is rational. A value of 4
/// means the whole sum is rational and nothing smaller is.
pub fn rational_length(x: &RawQuadruple) -> Option<u8> {
    let cos = x.angles().map(CyclotomicNumber::cos_pi);
    let rational: Vec<bool> = (0u8..16)
        .map(|mask| mask != 0 && (0..4).filter(|i| mask >> i & 1 == 1).map(|i| cos[i].clone()).sum::<CyclotomicNumber>().is_rational())
        .collect();
    let minimal = |mask: u8| {
        rational[mask as usize]
            && (1..mask).all(|sub| sub & mask != sub || !rational[sub as usize])
    };
    (1u8..16).filter(|&m| minimal(m)).map(|m| m.count_ones() as u8).max()
}

/// One entry of the list: `Σ sign · cos(offset + t)` (the `t` only in item 2).
#[derive(Clone, Debug)]
pub struct ConwayJonesItem {
    pub index: u8,
    pub terms: Vec<(i8, RationalAngle, bool)>,
    /// Printed value of the sum.
    pub value: Ratio<i64>,
}

impl ConwayJonesItem {
    pub fn evaluate(&self, t: RationalAngle) -> CyclotomicNumber {
        self.terms
            .iter()
            .map(|&(sign, off, uses_t)| {
                let a = if uses_t { off + t } else { off };
                let c = CyclotomicNumber::cos_pi(a);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            })
            .sum()
    }

    pub fn value_as_cyclotomic(&self) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(BigRational::new((*self.value.numer()).into(), (*self.value.denom()).into()))
    }
}

pub fn conway_jones_items() -> Vec<ConwayJonesItem> {
    let a = RationalAngle::new;
    let fixed = |v: &[(i8, i64, i64)]| v.iter().map(|&(s, n, d)| (s, a(n, d), false)).collect::<Vec<_>>();
    let zero = Ratio::new(0, 1);
    let half = Ratio::new(1, 2);
    vec![
        ConwayJonesItem { index: 1, terms: fixed(&[(1, 1, 3), (-1, 1, 3)]), value: zero },
        ConwayJonesItem {
            index: 2,
            terms: vec![(-1, a(0, 1), true), (1, a(1, 3), true), (1, a(-1, 3), true)],
            value: zero,
        },
        ConwayJonesItem { index: 3, terms: fixed(&[(1, 1, 5), (-1, 2, 5), (-1, 1, 3)]), value: zero },
        ConwayJonesItem { index: 4, terms: fixed(&[(1, 1, 7), (-1, 2, 7), (1, 3, 7), (-1, 1, 3)]), value: zero },
        ConwayJonesItem { index: 5, terms: fixed(&[(1, 1, 5), (-1, 1, 15), (1, 4, 15), (-1, 1, 3)]), value: zero },
        ConwayJonesItem { index: 6, terms: fixed(&[(-1, 2, 5), (1, 2, 15), (-1, 7, 15), (-1, 1, 3)]), value: zero },
        ConwayJonesItem { index: 7, terms: fixed(&[(1, 1, 7), (1, 3, 7), (-1, 1, 21), (1, 8, 21)]), value: half },
        ConwayJonesItem { index: 8, terms: fixed(&[(1, 1, 7), (-1, 2, 7), (1, 2, 21), (-1, 5, 21)]), value: half },
        ConwayJonesItem { index: 9, terms: fixed(&[(-1, 2, 7), (1, 3, 7), (1, 4, 21), (1, 10, 21)]), value: half },
        ConwayJonesItem { index: 10, terms: fixed(&[(-1, 1, 15), (1, 2, 15), (1, 4, 15), (-1, 7, 15)]), value: half },
    ]
}

/// The search never looks for zeros of rational length 4: the only such
/// sums are items 7–10 up to sign, and each equals 1/2 exactly.
pub fn length_four_skip_justified() -> bool {
    conway_jones_items().iter().filter(|it| it.index >= 7).all(|it| {
        let v = it.evaluate(RationalAngle::zero());
        !v.is_zero() && v == it.value_as_cyclotomic()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(v: [(i64, i64); 4]) -> RawQuadruple {
        RawQuadruple::from_pairs(v).unwrap()
    }

    #[test]
    fn rational_length_examples() {
        assert_eq!(rational_length(&raw([(1, 3), (2, 3), (1, 2), (1, 2)])), Some(1));
        assert_eq!(rational_length(&raw([(1, 5), (3, 5), (2, 3), (1, 2)])), Some(2));
        // cos π/7 + cos 5π/7 + cos 3π/7 = 1/2
        assert_eq!(rational_length(&raw([(1, 7), (5, 7), (3, 7), (2, 3)])), Some(3));
        assert_eq!(rational_length(&raw([(1, 7), (1, 5), (2, 7), (1, 9)])), None);
    }

    #[test]
    fn items_evaluate_to_printed_values() {
        for it in conway_jones_items() {
            let v = it.evaluate(RationalAngle::new(1, 11));
            assert_eq!(v, it.value_as_cyclotomic(), "item {}", it.index);
        }
        assert!(length_four_skip_justified());
    }
}
