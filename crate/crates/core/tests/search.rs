use std::collections::BTreeSet;

use rattet_core::exact::RationalAngle;
use rattet_core::geometry::{is_realizable, PythagoreanQuadruple, RawQuadruple};
use rattet_core::io::fixtures::sporadic_rows;
use rattet_core::search::{
    enumerate_candidates, reduce_to_acute, run_sporadic_search, search_triples, DenominatorProfile, SearchConfig,
};

fn config(profile: DenominatorProfile, workers: usize) -> SearchConfig {
    SearchConfig { profile, workers, ..SearchConfig::default() }
}

#[test]
fn per_length_search_reproduces_the_sporadic_table() {
    let report = run_sporadic_search(&config(DenominatorProfile::per_length(), 0));
    assert_eq!(report.candidate_count, 22418);
    assert_eq!(report.raw_solution_count, 307);
    assert_eq!(report.realizable_count, 117);
    let expected = sporadic_rows();
    assert_eq!(report.sporadic_after_family_filter.len(), expected.len());
    let got: std::collections::BTreeMap<_, _> =
        report.sporadic_after_family_filter.iter().map(|s| (s.quadruple, s)).collect();
    assert_eq!(got.len(), expected.len());
    for row in &expected {
        let s = got.get(&row.quadruple).unwrap_or_else(|| panic!("row {} missing", row.no));
        assert_eq!(s.lengths, row.lengths, "row {}", row.no);
        assert_eq!(s.volume, row.volume, "row {}", row.no);
    }
    // every family hit is realizable and the two stages partition the realizable set
    assert_eq!(report.family_members.len() + expected.len(), report.realizable_count);
    assert_eq!(report.orbit.canonical, report.realizable_count);
}

#[test]
fn union_profile_finds_the_same_sporadic_set() {
    let per_length = run_sporadic_search(&config(DenominatorProfile::per_length(), 0));
    let union = run_sporadic_search(&config(DenominatorProfile::union(), 0));
    assert_eq!(union.candidate_count, 111804);
    assert_eq!(union.raw_solution_count, 790);
    assert_eq!(union.realizable_count, 208);
    assert_eq!(union.sporadic_after_family_filter, per_length.sporadic_after_family_filter);
}

/// Brute force over the small grid with a naive cosine sum: independent of the
/// pipeline's candidate generator and prefilter.
#[test]
fn l0_only_count_matches_brute_force() {
    let profile = DenominatorProfile::l0_only();
    let report = run_sporadic_search(&config(profile, 1));
    let pts: Vec<RationalAngle> = (0..12).map(|k| RationalAngle::new(k, 6)).collect();
    let mut zeros = BTreeSet::new();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                for &d in &pts {
                    let x = RawQuadruple { a, b, c, d };
                    let admissible = a > RationalAngle::zero()
                        && b < a
                        && a + b < RationalAngle::integer(2)
                        && c.in_open_unit()
                        && d.in_open_unit()
                        && d <= c
                        && b < RationalAngle::integer(1)
                        && x.angles().iter().all(|t| [1, 2, 3].contains(&t.den()));
                    if admissible && x.cosine_sum().is_zero() {
                        zeros.insert(x);
                    }
                }
            }
        }
    }
    assert_eq!(report.raw_solution_count, zeros.len());
    assert_eq!(enumerate_candidates(&profile).filter(|x| zeros.contains(x)).count(), zeros.len());
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let one = run_sporadic_search(&config(DenominatorProfile::per_length(), 1));
    let four = run_sporadic_search(&config(DenominatorProfile::per_length(), 4));
    assert_eq!(one, four);
    assert_eq!(serde_json::to_string(&one.sporadic_after_family_filter).unwrap(),
        serde_json::to_string(&four.sporadic_after_family_filter).unwrap());
}

#[test]
fn stages_shrink_monotonically() {
    let r = run_sporadic_search(&config(DenominatorProfile::per_length(), 0));
    assert!(r.prefilter_passes >= r.raw_solution_count);
    assert!(r.raw_solution_count >= r.realizable_count);
    assert!(r.realizable_count >= r.sporadic_after_family_filter.len());
    for s in &r.sporadic_after_family_filter {
        assert!(is_realizable(&s.quadruple).realizable());
    }
    assert_eq!(r.rational_lengths.iter().sum::<usize>(), r.raw_solution_count);
}

#[test]
fn only_nontrivial_triple_is_smiths() {
    let t = search_triples();
    assert_eq!(t.nontrivial.len(), 3);
    assert!(t.trivial > 0);
    let smith = [RationalAngle::new(1, 4), RationalAngle::new(1, 4), RationalAngle::new(1, 3)];
    for x in &t.nontrivial {
        assert_eq!(reduce_to_acute(*x), smith);
    }
    let q = PythagoreanQuadruple::from_pairs([(1, 4), (1, 4), (2, 3), (2, 3)]).unwrap();
    assert!(is_realizable(&q).realizable());
}
