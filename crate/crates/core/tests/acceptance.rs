//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see them.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::Ratio;
use rattet_core::certify::{
    area_diophantine, coxeter_catalog, diameter_certificate, lift_pair, nondecomposability_certificate_with,
    LinkTriangle, ObstructionCertificate, SpherePoint,
};
use rattet_core::exact::RationalAngle;
use rattet_core::families::{builtin_families, instantiate, verify_domain, verify_identity, Params};
use rattet_core::geometry::{edge_lengths, gram_matrix, volume, EdgeLengths, PythagoreanQuadruple, VolumeCoefficient};
use rattet_core::io::fixtures::{lambert_rows, sporadic_rows};
use rattet_core::io::{Payload, Provenance, ResultRecord};
use rattet_core::lambert::{companion_tetrahedra, lambert_volume, search_lambert, LambertCube};
use rattet_core::search::{
    conway_jones_items, reduce_to_acute, run_sporadic_search, search_triples, DenominatorProfile, SearchConfig,
    SearchReport,
};

type Q = Ratio<i64>;

fn a(n: i64, d: i64) -> RationalAngle {
    RationalAngle::new(n, d)
}

fn example() -> PythagoreanQuadruple {
    PythagoreanQuadruple::from_pairs([(5, 18), (2, 9), (13, 18), (11, 18)]).unwrap()
}

/// Runs a criterion, turning panics into a FAIL line with the message.
fn criterion(n: u8, name: &str, check: impl FnOnce() -> Result<String, String>) -> bool {
    let start = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(msg)
    });
    let secs = start.elapsed().as_secs_f64();
    match &out {
        Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} ({secs:.1} s)"),
        Err(detail) => println!("criterion {n:>2} FAIL  {name}: {detail} ({secs:.1} s)"),
    }
    out.is_ok()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1(report: &SearchReport) -> Result<String, String> {
    let expected = sporadic_rows();
    let got: BTreeMap<PythagoreanQuadruple, (EdgeLengths, VolumeCoefficient)> = report
        .sporadic_after_family_filter
        .iter()
        .map(|s| (s.quadruple, (s.lengths, s.volume)))
        .collect();
    ensure(got.len() == expected.len(), format!("{} rows, expected {}", got.len(), expected.len()))?;
    for row in &expected {
        let (l, v) = got.get(&row.quadruple).ok_or(format!("row {} missing", row.no))?;
        ensure(*l == row.lengths && *v == row.volume, format!("row {} lengths or volume differ", row.no))?;
    }
    Ok(format!(
        "{} rows equal the golden table, {} ms, worker threads: {}",
        got.len(),
        report.timing.elapsed_ms,
        report.timing.workers
    ))
}

fn c2(report: &SearchReport) -> Result<String, String> {
    ensure(report.sporadic_after_family_filter.len() == 59, "final set is not the 59 rows")?;
    let o = &report.orbit;
    ensure(
        o.canonical == report.realizable_count && report.realizable_count == report.family_members.len() + 59,
        "orbit accounting inconsistent",
    )?;
    Ok(format!(
        "realizable before family subtraction {} (172 expected, not reproduced); \
         orbit counts: canonical {}, without r/s swap {}, without p/q swap {}, without either {}; \
         raw zeros {}, family members {}",
        report.realizable_count,
        o.canonical,
        o.without_rs_swap,
        o.without_pq_swap,
        o.without_either_swap,
        report.raw_solution_count,
        report.family_members.len()
    ))
}

fn c3() -> Result<String, String> {
    let fams = builtin_families();
    let mut tightened = 0;
    for f in &fams {
        verify_identity(f).map_err(|e| e.to_string())?;
        let d = verify_domain(f).map_err(|e| e.to_string())?;
        ensure(d.certified(), format!("family {} domain: {:?}", f.id, d.failures))?;
        tightened += usize::from(!d.tightenings.is_empty());
    }
    let (q, v) = instantiate(&fams[10], Params::t(Q::new(1, 18))).map_err(|e| e.to_string())?;
    ensure(q == example(), format!("family 11 at t = 1/18 gives {q}"))?;
    ensure(v == VolumeCoefficient::new(1, 162), format!("volume {v}"))?;
    let e = edge_lengths(&q).map_err(|e| e.to_string())?;
    ensure(e.as_array() == [a(5, 18), a(2, 9), a(5, 18), a(7, 18)], "edge lengths differ")?;
    Ok(format!("{}/42 identities and domains verified ({tightened} domains tightened); family 11 at t = 1/18 has volume 1/162", fams.len()))
}

fn c4() -> Result<String, String> {
    for it in conway_jones_items() {
        let want = if it.index <= 6 { Q::new(0, 1) } else { Q::new(1, 2) };
        ensure(it.value == want, format!("item {} printed value", it.index))?;
        for t in [a(0, 1), a(1, 7), a(3, 11)] {
            let v = it.evaluate(t);
            ensure(v == it.value_as_cyclotomic(), format!("item {} at t = {t}", it.index))?;
        }
    }
    Ok("items 1 to 6 vanish, items 7 to 10 equal 1/2".into())
}

fn c5() -> Result<String, String> {
    let right = volume(&PythagoreanQuadruple::all_right()).map_err(|e| e.to_string())?;
    let row11 = coxeter_catalog()[10].volume.eval(Q::from_integer(0), Q::from_integer(0));
    ensure(right.value == row11 && row11 == Q::new(1, 8), "all-right volume")?;
    let rows = sporadic_rows();
    for (no, want) in [(1, Q::new(7, 90)), (4, Q::new(7, 720)), (30, Q::new(49, 450))] {
        let row = rows.iter().find(|r| r.no == no).unwrap();
        let v = volume(&row.quadruple).map_err(|e| e.to_string())?;
        ensure(v.value == want && v == row.volume, format!("row {no}: {v}"))?;
    }
    Ok("all-right 1/8, rows 1, 4, 30 give 7/90, 7/720, 49/450".into())
}

fn c6() -> Result<String, String> {
    let t = search_triples();
    let reduced: std::collections::BTreeSet<_> = t.nontrivial.iter().map(|x| reduce_to_acute(*x)).collect();
    let smith = [a(1, 4), a(1, 4), a(1, 3)];
    ensure(reduced.len() == 1 && reduced.contains(&smith), format!("reduced set {reduced:?}"))?;
    ensure(t.nontrivial.contains(&[a(1, 4), a(1, 4), a(2, 3)]), "(π/4, π/4, 2π/3) missing")?;
    ensure(t.trivial > 0, "trivial family not seen")?;
    Ok(format!("{} sign variants of (π/4, π/4, 2π/3), {} trivial solutions excluded", t.nontrivial.len(), t.trivial))
}

fn c7() -> Result<String, String> {
    let s = search_lambert();
    let want: Vec<LambertCube> =
        lambert_rows().iter().map(|r| LambertCube::new(r.angles[0], r.angles[1], r.angles[2]).unwrap()).collect();
    ensure(s.cubes == want, format!("cubes {:?}", s.cubes))?;
    ensure(s.no_continuous_family, "parametric item not excluded")?;
    let comps = companion_tetrahedra().map_err(|e| e.to_string())?;
    for ((cube, row), comp) in s.cubes.iter().zip(lambert_rows()).zip(&comps) {
        let v = lambert_volume(cube).map_err(|e| e.to_string())?;
        ensure(v == row.volume && comp.volume == v, format!("volume of {cube:?}"))?;
    }
    Ok("exactly two cubes, volumes 31/576 and 17/360, companions agree".into())
}

fn c8() -> Result<String, String> {
    let center = SpherePoint { longitude: a(4, 25), latitude: a(0, 1) };
    let t = LinkTriangle::new(a(5, 18), a(2, 9), a(11, 18)).map_err(|e| e.to_string())?;
    let d = diameter_certificate(&t, center, a(1, 4)).map_err(|e| e.to_string())?;
    ensure(d.inside, "a vertex lies outside the disc")?;
    ensure(area_diophantine(Q::new(20, 3)).is_none(), "20/3 solvable")?;
    let cert = nondecomposability_certificate_with(&example(), Some(center)).map_err(|e| e.to_string())?;
    let prov = Provenance { run_id: "acceptance".into(), config_hash: String::new(), timestamp: "0".into() };
    let json = ResultRecord { payload: Payload::Certificate(Box::new(cert)), provenance: prov }.to_json();
    let back = ResultRecord::from_json(&json).map_err(|e| e.to_string())?;
    let Payload::Certificate(c) = back.payload else { return Err("wrong record kind".into()) };
    let c: ObstructionCertificate = *c;
    c.recheck().map_err(|e| e.to_string())?;
    Ok(format!("disc certified at {} bits, 10k + 5l + 2m = 20/3 infeasible, recheck from JSON passed", d.bits))
}

fn c9() -> Result<String, String> {
    let t_prime = PythagoreanQuadruple::from_pairs([(1, 2), (1, 2), (1, 9), (1, 9)]).unwrap();
    let vt = volume(&example()).map_err(|e| e.to_string())?.value;
    let vp = coxeter_catalog()[8].volume.eval(Q::from_integer(9), Q::from_integer(9));
    let (gt, gp) = (gram_matrix(&example()).into_entries(), gram_matrix(&t_prime).into_entries());
    let mut shares = Vec::new();
    for n in 3..=8 {
        let p = lift_pair(&gt, vt, &gp, vp, n).map_err(|e| e.to_string())?;
        ensure(p.volumes_agree() && p.positive_definite, format!("n = {n}"))?;
        shares.push(p.first.to_string());
    }
    Ok(format!("shares of Sⁿ for n = 3..8: {}", shares.join(", ")))
}

fn c10() -> Result<String, String> {
    let false_neg = common::prefilter_false_negatives(100_000, 0xC05);
    ensure(false_neg == 0, format!("{false_neg} rejected exact zeros"))?;
    let (dis, und) = common::sign_agreement(10_000, 0x5157);
    ensure(dis == 0 && und == 0, format!("{dis} disagreements, {und} undecided"))?;
    for row in sporadic_rows() {
        let rec = ResultRecord {
            payload: Payload::Sporadic(rattet_core::search::SporadicSolution {
                quadruple: row.quadruple,
                lengths: row.lengths,
                volume: row.volume,
            }),
            provenance: Provenance { run_id: "x".into(), config_hash: "y".into(), timestamp: "0".into() },
        };
        let json = rec.to_json();
        let again = ResultRecord::from_json(&json).map_err(|e| e.to_string())?.to_json();
        ensure(again == json, "record round trip changed bytes")?;
    }
    let cfg = |workers| SearchConfig { workers, ..SearchConfig::default() };
    let one = run_sporadic_search(&cfg(1));
    let many = run_sporadic_search(&cfg(8));
    ensure(one == many, "reports differ between 1 and 8 workers")?;
    Ok(format!(
        "1e5 rejects with no zeros, 1e4 signs agree, 59 records round trip, 1 and 8 workers identical ({} ms single-threaded)",
        one.timing.elapsed_ms
    ))
}

#[test]
fn acceptance() {
    let report = run_sporadic_search(&SearchConfig { profile: DenominatorProfile::per_length(), ..SearchConfig::default() });
    let results = [
        criterion(1, "sporadic table", || c1(&report)),
        criterion(2, "raw-stage count", || c2(&report)),
        criterion(3, "family verification", c3),
        criterion(4, "vanishing-sum list", c4),
        criterion(5, "volume cross-checks", c5),
        criterion(6, "rational triples", c6),
        criterion(7, "Lambert cubes", c7),
        criterion(8, "obstruction certificate", c8),
        criterion(9, "lift", c9),
        criterion(10, "property suites", c10),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
