mod common;

use common::{big, DENS};
use proptest::prelude::*;
use rattet_core::exact::{CyclotomicNumber, RationalAngle, SignedInterval};
use rattet_core::geometry::{abcd_to_pqrs, pqrs_to_abcd, residual_of, volume_formula, PythagoreanQuadruple};
use rattet_core::io::{Payload, Provenance, ResultRecord};
use rattet_core::search::SporadicSolution;

fn angle() -> impl Strategy<Value = RationalAngle> {
    (0..DENS.len(), 0i64..84).prop_map(|(i, n)| RationalAngle::new(n % (2 * DENS[i]), DENS[i]))
}

fn open_angle() -> impl Strategy<Value = RationalAngle> {
    (0..DENS.len(), 1i64..84).prop_filter_map("inside (0, π)", |(i, n)| {
        let d = DENS[i];
        (n % d != 0).then(|| RationalAngle::new(n % d, d))
    })
}

fn elem() -> impl Strategy<Value = CyclotomicNumber> {
    (angle(), angle(), -5i64..6).prop_map(|(a, b, k)| {
        CyclotomicNumber::cos_pi(a) + CyclotomicNumber::sin_pi(b).scale_ratio(k, 3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cosine_matches_libm(a in angle()) {
        let exact = CyclotomicNumber::cos_pi(a).to_f64();
        prop_assert!((exact - a.to_f64().cos()).abs() < 1e-12);
        let enc = SignedInterval::cos_pi(&big(a), 128);
        prop_assert!(enc.lo_f64() <= a.to_f64().cos() + 1e-15 && a.to_f64().cos() - 1e-15 <= enc.hi_f64());
    }

    #[test]
    fn field_laws(x in elem(), y in elem(), z in elem()) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert!((x.clone() - x.clone()).is_zero());
    }

    #[test]
    fn pythagorean_identity(a in angle()) {
        let c = CyclotomicNumber::cos_pi(a);
        let s = CyclotomicNumber::sin_pi(a);
        prop_assert_eq!(c.square() + s.square(), CyclotomicNumber::one());
    }

    #[test]
    fn canonicalization_is_idempotent(p in open_angle(), q in open_angle(), r in open_angle(), s in open_angle()) {
        let c = PythagoreanQuadruple::new(p, q, r, s).unwrap();
        prop_assert_eq!(PythagoreanQuadruple::new(c.p, c.q, c.r, c.s).unwrap(), c);
        prop_assert_eq!(PythagoreanQuadruple::new(q, p, s, r).unwrap(), c);
        prop_assert_eq!(volume_formula(&PythagoreanQuadruple::new(q, p, s, r).unwrap()), volume_formula(&c));
    }

    #[test]
    fn change_of_variables_round_trips(p in open_angle(), q in open_angle(), r in open_angle(), s in open_angle()) {
        let c = PythagoreanQuadruple::new(p, q, r, s).unwrap();
        let raw = pqrs_to_abcd(&c);
        prop_assert_eq!(abcd_to_pqrs(&raw), Some(c));
        // cos a + cos b = 2 cos p cos q, so the raw sum is twice the residual
        prop_assert_eq!(raw.cosine_sum(), residual_of(c.p, c.q, c.r, c.s).scale_ratio(2, 1));
    }

    #[test]
    fn residual_symmetries(p in open_angle(), q in open_angle(), r in open_angle(), s in open_angle()) {
        let base = residual_of(p, q, r, s);
        prop_assert_eq!(residual_of(q, p, r, s), base.clone());
        prop_assert_eq!(residual_of(p, q, s, r), base.clone());
        prop_assert_eq!(residual_of(p.supplement(), q.supplement(), r, s), base);
    }

    #[test]
    fn angle_serde_round_trip(a in angle(), b in angle()) {
        let json = serde_json::to_string(&[a, b]).unwrap();
        let back: [RationalAngle; 2] = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, [a, b]);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}

#[test]
fn exact_sign_agrees_with_256_bit_enclosure() {
    assert_eq!(common::sign_agreement(10_000, 0x5157), (0, 0));
}

/// Grid tuples rejected by the float prefilter are never exact zeros.
#[test]
fn prefilter_rejects_are_never_zeros() {
    assert_eq!(common::prefilter_false_negatives(100_000, 0xC05), 0);
}

#[test]
fn record_round_trip_is_byte_identical() {
    use rattet_core::io::fixtures::sporadic_rows;
    let prov = Provenance { run_id: "r1".into(), config_hash: "ab".repeat(32), timestamp: "1700000000".into() };
    for row in sporadic_rows() {
        let rec = ResultRecord {
            payload: Payload::Sporadic(SporadicSolution {
                quadruple: row.quadruple,
                lengths: row.lengths,
                volume: row.volume,
            }),
            provenance: prov.clone(),
        };
        let json = rec.to_json();
        assert!(!json.contains('.'), "no decimal points in {json}");
        let back = ResultRecord::from_json(&json).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.to_json(), json);
    }
}
