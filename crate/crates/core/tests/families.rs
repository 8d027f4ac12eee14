use num_rational::Ratio;
use rattet_core::families::{
    builtin_families, family_csv, instantiate, member_of, parse_family_csv, twin_pairs, verify_domain,
    verify_identity, FamilyDomain, MembershipRule, Params,
};
use rattet_core::geometry::{is_realizable, PythagoreanQuadruple};
use rattet_core::io::fixtures;

type Q = Ratio<i64>;

#[test]
fn builtin_table_matches_fixture() {
    let parsed = parse_family_csv(fixtures::FAMILY_TABLE).unwrap();
    assert_eq!(parsed, builtin_families());
    assert_eq!(family_csv(&parsed), fixtures::FAMILY_TABLE);
}

#[test]
fn all_identities_hold() {
    for f in builtin_families() {
        let r = verify_identity(&f).unwrap_or_else(|e| panic!("{e}"));
        assert!(r.samples_t as i64 > 2 * r.degree_t);
        assert!(f.dimension() == 1 || r.samples_u as i64 > 2 * r.degree_u);
    }
}

#[test]
fn all_domains_certified() {
    for f in builtin_families() {
        let cert = verify_domain(&f).unwrap();
        assert!(cert.certified(), "family {}: {:?}", f.id, cert.failures);
        if f.dimension() == 1 {
            assert!(cert.tightenings.is_empty(), "family {}", f.id);
        } else {
            assert!(!cert.polygons.is_empty());
        }
    }
}

#[test]
fn all_right_point_lies_in_every_two_parameter_family() {
    let right = PythagoreanQuadruple::all_right();
    for f in builtin_families().into_iter().filter(|f| f.dimension() == 2) {
        let p = member_of(&right, &f, MembershipRule::Domain).expect("all-right member");
        let expected = match f.domain {
            FamilyDomain::A => Params::tu(Q::new(1, 2), Q::new(0, 1)),
            _ => Params::tu(Q::new(0, 1), Q::new(1, 2)),
        };
        assert_eq!(p, expected, "family {}", f.id);
        let c = is_realizable(&right);
        assert_eq!((c.g3_sign, c.g4_sign), (1, 1));
    }
}

#[test]
fn twins_flagged() {
    let pairs = twin_pairs(&builtin_families());
    for pair in [(16, 17), (35, 36), (37, 38), (39, 40), (41, 42)] {
        assert!(pairs.contains(&pair), "{pair:?}");
    }
}

#[test]
fn smiths_triple_arises_from_a_family() {
    // r = s inside family 11 forces t = 0: (π/4, π/4, 2π/3, 2π/3)
    let f = &builtin_families()[10];
    let (q, _) = instantiate(f, Params::t(Q::new(0, 1))).unwrap();
    assert_eq!(q, PythagoreanQuadruple::from_pairs([(1, 4), (1, 4), (2, 3), (2, 3)]).unwrap());
}
