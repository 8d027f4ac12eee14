//! One function per subcommand; each prints a short summary and writes its tables.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde_json::json;

use rattet_core::certify::{
    coxeter_catalog, coxeter_csv, lift_pair, nondecomposability_certificate, nondecomposability_certificate_with,
    SpherePoint,
};
use rattet_core::exact::angle::format_ratio;
use rattet_core::exact::RationalAngle;
use rattet_core::families::{
    builtin_families, family_csv, instantiate, parse_family_csv, verify_domain, verify_identity,
};
use rattet_core::geometry::{gram_matrix, volume, volume_in_range, PythagoreanQuadruple};
use rattet_core::io::fixtures::{lambert_rows, sporadic_rows, FAMILY_TABLE, COXETER};
use rattet_core::io::{sporadic_csv, FamilyInstance, FamilyRecord, Payload, TripleRecord};
use rattet_core::lambert::{companion_tetrahedra, search_lambert, VolumePath};
use rattet_core::search::{reduce_to_acute, run_sporadic_search, search_triples, SearchReport, SporadicSolution};

use crate::config::{Effective, Format, Membership, Profile, Stage};
use crate::output::Sink;
use crate::CliError;

type Q = Ratio<i64>;

fn invariants(r: &SearchReport) -> Result<(), CliError> {
    let fail = |m: &str| Err(CliError::Invariant(m.to_string()));
    if !(r.candidate_count >= r.prefilter_passes
        && r.prefilter_passes >= r.raw_solution_count
        && r.raw_solution_count >= r.realizable_count)
    {
        return fail("stage counts are not decreasing");
    }
    if r.realizable_count != r.family_members.len() + r.sporadic_after_family_filter.len() {
        return fail("family members and sporadic rows do not partition the realizable set");
    }
    if r.rational_lengths.iter().sum::<usize>() != r.raw_solution_count {
        return fail("rational-length histogram does not cover every zero");
    }
    if !r.sporadic_after_family_filter.iter().all(|s| volume_in_range(&s.volume)) {
        return fail("a sporadic volume is outside (0, 2)");
    }
    Ok(())
}

fn matches_fixture(rows: &[SporadicSolution]) -> Result<(), CliError> {
    let got: BTreeSet<_> = rows.iter().map(|s| (s.quadruple, s.lengths, s.volume)).collect();
    let want: BTreeSet<_> = sporadic_rows().into_iter().map(|r| (r.quadruple, r.lengths, r.volume)).collect();
    if got != want {
        let missing = want.difference(&got).count();
        let extra = got.difference(&want).count();
        return Err(CliError::Mismatch(format!("sporadic table differs from the golden rows ({missing} missing, {extra} extra)")));
    }
    Ok(())
}

pub fn search(cfg: &Effective) -> Result<(), CliError> {
    let sink = Sink::new(cfg)?;
    let report = run_sporadic_search(&cfg.search_config());
    invariants(&report)?;
    println!(
        "candidates {}, prefilter passes {}, zeros {}, realizable {}, family members {}, sporadic {} ({} ms, {} threads)",
        report.candidate_count,
        report.prefilter_passes,
        report.raw_solution_count,
        report.realizable_count,
        report.family_members.len(),
        report.sporadic_after_family_filter.len(),
        report.timing.elapsed_ms,
        report.timing.workers,
    );
    sink.write_json("search_summary.json", &json!({ "provenance": sink.provenance(), "report": report }))?;

    let sporadic: Vec<_> =
        report.sporadic_after_family_filter.iter().map(|s| sink.record(Payload::Sporadic(s.clone()))).collect();
    match cfg.stage {
        Stage::Raw => {
            println!("raw stage: {} exact zeros, {} realizable (172 expected, not reproduced; see README)", report.raw_solution_count, report.realizable_count);
        }
        Stage::Realizable => {
            let mut recs: Vec<_> = report
                .family_members
                .iter()
                .map(|h| {
                    let v = volume(&h.quadruple).expect("realizable member");
                    sink.record(Payload::FamilyInstance(FamilyInstance {
                        family: h.family,
                        params: h.params,
                        quadruple: h.quadruple,
                        volume: v,
                    }))
                })
                .collect();
            recs.extend(sporadic);
            let path = sink.write_records("realizable.jsonl", &recs)?;
            println!("wrote {}", path.display());
        }
        Stage::Sporadic => {
            let path = match cfg.format {
                Format::Json => sink.write_records("sporadic.jsonl", &sporadic)?,
                Format::Csv => sink.write_text("sporadic.csv", &sporadic_csv(&report.sporadic_after_family_filter))?,
            };
            println!("wrote {}", path.display());
        }
    }
    let comparable = matches!(cfg.profile, Profile::PerLength | Profile::Union) && cfg.membership == Membership::PrintedCurve;
    if comparable {
        matches_fixture(&report.sporadic_after_family_filter)?;
        println!("sporadic set equals the 59 golden rows");
    }
    Ok(())
}

pub fn triples(cfg: &Effective) -> Result<(), CliError> {
    let sink = Sink::new(cfg)?;
    let t = search_triples();
    let recs: Vec<TripleRecord> =
        t.nontrivial.iter().map(|x| TripleRecord { angles: *x, reduced: reduce_to_acute(*x) }).collect();
    let path = match cfg.format {
        Format::Json => {
            let r: Vec<_> = recs.iter().map(|x| sink.record(Payload::Triple(x.clone()))).collect();
            sink.write_records("triples.jsonl", &r)?
        }
        Format::Csv => {
            let mut s = String::from("p,q,r,reduced_p,reduced_q,reduced_r\n");
            for x in &recs {
                let [a, b, c] = x.angles;
                let [d, e, f] = x.reduced;
                s.push_str(&format!("{a},{b},{c},{d},{e},{f}\n"));
            }
            sink.write_text("triples.csv", &s)?
        }
    };
    for x in &recs {
        println!("({}, {}, {}) reduces to ({}, {}, {})", x.angles[0], x.angles[1], x.angles[2], x.reduced[0], x.reduced[1], x.reduced[2]);
    }
    println!("{} trivial solutions with a right angle excluded; wrote {}", t.trivial, path.display());
    let reduced: BTreeSet<_> = recs.iter().map(|x| x.reduced).collect();
    let smith = [RationalAngle::new(1, 4), RationalAngle::new(1, 4), RationalAngle::new(1, 3)];
    if reduced.len() != 1 || !reduced.contains(&smith) {
        return Err(CliError::Mismatch(format!("nontrivial triples reduce to {reduced:?}")));
    }
    Ok(())
}

pub fn families(cfg: &Effective, only: Option<u8>) -> Result<(), CliError> {
    let all = builtin_families();
    let fixture = parse_family_csv(FAMILY_TABLE).map_err(CliError::Invariant)?;
    if fixture != all {
        return Err(CliError::Mismatch("built-in family table differs from the golden family rows".into()));
    }
    let chosen: Vec<_> = match only {
        Some(id) => {
            let f = all.iter().find(|f| f.id == id).ok_or_else(|| CliError::Usage(format!("no family {id}")))?;
            vec![f.clone()]
        }
        None => all,
    };
    let sink = Sink::new(cfg)?;
    let mut recs = Vec::new();
    for f in &chosen {
        let id = verify_identity(f).map_err(|e| CliError::Mismatch(format!("family {}: {e}", f.id)))?;
        let dom = verify_domain(f).map_err(|e| CliError::Mismatch(format!("family {}: {e}", f.id)))?;
        if !dom.certified() {
            return Err(CliError::Mismatch(format!("family {} domain: {:?}", f.id, dom.failures)));
        }
        if !dom.tightenings.is_empty() {
            println!("family {}: realizable only on part of its printed domain, tightening recorded", f.id);
        }
        recs.push(sink.record(Payload::Family(Box::new(FamilyRecord::new(f, id, dom)))));
    }
    if only.is_none() || only == Some(11) {
        let (q, v) = instantiate(&builtin_families()[10], rattet_core::families::Params::t(Q::new(1, 18)))
            .map_err(|e| CliError::Mismatch(format!("family 11: {e}")))?;
        println!("family 11 at t = 1/18: {q}, volume {v}");
    }
    let path = match cfg.format {
        Format::Json => sink.write_records("families.jsonl", &recs)?,
        Format::Csv => sink.write_text("families.csv", &family_csv(&chosen))?,
    };
    println!("{}/{} verified; wrote {}", chosen.len(), chosen.len(), path.display());
    Ok(())
}

pub fn lambert(cfg: &Effective) -> Result<(), CliError> {
    let sink = Sink::new(cfg)?;
    let s = search_lambert();
    let comps = companion_tetrahedra().map_err(|e| CliError::Mismatch(e.to_string()))?;
    let rows = lambert_rows();
    let golden: Vec<_> = rows.iter().map(|r| (r.angles, r.volume)).collect();
    let found: Vec<_> = comps.iter().map(|c| (c.cube.angles(), c.volume)).collect();
    if golden != found || !s.no_continuous_family {
        return Err(CliError::Mismatch(format!("Lambert cubes {found:?} differ from the golden pair")));
    }
    for c in &comps {
        let via = match c.path {
            VolumePath::AngleFormula => "the angle formula".to_string(),
            VolumePath::DihedralProduct { k } => format!("the dihedral-product formula with k = {}", format_ratio(&k)),
        };
        println!("L({}, {}, {}) volume {}, companion {} via {via}", c.cube.a, c.cube.b, c.cube.c, c.volume, c.tetrahedron);
    }
    let path = match cfg.format {
        Format::Json => {
            let recs: Vec<_> = comps.iter().map(|c| sink.record(Payload::Lambert(c.clone()))).collect();
            sink.write_records("lambert.jsonl", &recs)?
        }
        Format::Csv => {
            let mut t = String::from("a,b,c,vol,companion_s\n");
            for c in &comps {
                t.push_str(&format!("{},{},{},{},{}\n", c.cube.a, c.cube.b, c.cube.c, c.volume, c.tetrahedron.s));
            }
            sink.write_text("lambert.csv", &t)?
        }
    };
    println!("wrote {}", path.display());
    Ok(())
}

fn parse_quadruple(s: &str) -> Result<PythagoreanQuadruple, CliError> {
    let parts: Vec<RationalAngle> = s
        .split(',')
        .map(|x| x.trim().parse::<RationalAngle>().map_err(|e| CliError::Usage(format!("`{x}`: {e:?}"))))
        .collect::<Result<_, _>>()?;
    let [p, q, r, t] = <[RationalAngle; 4]>::try_from(parts).map_err(|_| CliError::Usage("need four angles".into()))?;
    PythagoreanQuadruple::new(p, q, r, t).map_err(|e| CliError::Usage(e.to_string()))
}

fn example() -> PythagoreanQuadruple {
    PythagoreanQuadruple::from_pairs([(5, 18), (2, 9), (13, 18), (11, 18)]).expect("valid")
}

pub fn certify(cfg: &Effective, paper_example: bool, quadruple: Option<&str>, lift: Option<u32>) -> Result<(), CliError> {
    if !paper_example && quadruple.is_none() && lift.is_none() {
        return Err(CliError::Usage("give --paper-example, --quadruple or --lift".into()));
    }
    let sink = Sink::new(cfg)?;
    if paper_example || quadruple.is_some() {
        let cert = if paper_example {
            let center = SpherePoint { longitude: RationalAngle::new(4, 25), latitude: RationalAngle::zero() };
            nondecomposability_certificate_with(&example(), Some(center))
        } else {
            nondecomposability_certificate(&parse_quadruple(quadruple.expect("checked"))?)
        }
        .map_err(|e| CliError::Mismatch(e.to_string()))?;
        cert.recheck().map_err(|e| CliError::Invariant(e.to_string()))?;
        let d = &cert.diameter;
        println!(
            "certificate for {}: link ({}, {}, {}) at vertex {}, disc of radius {} around ({}, {}) certified at {} bits, area target {} has no tiling",
            cert.quadruple, d.triangle.alpha, d.triangle.beta, d.triangle.gamma, cert.vertex, d.radius, d.center.longitude, d.center.latitude, d.bits, cert.area.target
        );
        let path = match cfg.format {
            Format::Json => sink.write_records("certificate.jsonl", &[sink.record(Payload::Certificate(Box::new(cert)))])?,
            Format::Csv => {
                let [a, b, c] = d.triangle.angles();
                let t = format!(
                    "vertex,alpha,beta,gamma,center_longitude,center_latitude,radius,bits,area_target\n{},{a},{b},{c},{},{},{},{},{}\n",
                    cert.vertex, d.center.longitude, d.center.latitude, d.radius, d.bits, format_ratio(&cert.area.target)
                );
                sink.write_text("certificate.csv", &t)?
            }
        };
        println!("wrote {}", path.display());
    }
    if let Some(n_max) = lift {
        if n_max < 3 {
            return Err(CliError::Usage(format!("--lift {n_max} is below 3")));
        }
        let t = example();
        let t_prime = PythagoreanQuadruple::from_pairs([(1, 2), (1, 2), (1, 9), (1, 9)]).expect("valid");
        let vt = volume(&t).map_err(|e| CliError::Invariant(e.to_string()))?.value;
        let vp = coxeter_catalog()[8].volume.eval(Q::from_integer(9), Q::from_integer(9));
        let (gt, gp) = (gram_matrix(&t).into_entries(), gram_matrix(&t_prime).into_entries());
        let mut pairs = Vec::new();
        for n in 3..=n_max {
            let p = lift_pair(&gt, vt, &gp, vp, n).map_err(|e| CliError::Usage(e.to_string()))?;
            if !(p.volumes_agree() && p.positive_definite) {
                return Err(CliError::Mismatch(format!("lifted volumes differ at n = {n}")));
            }
            println!("n = {n}: both lifts fill {} of the sphere", p.first);
            pairs.push(p);
        }
        let path = sink.write_json("lift.json", &json!({ "provenance": sink.provenance(), "pairs": pairs }))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

pub fn catalog(cfg: &Effective) -> Result<(), CliError> {
    let cat = coxeter_catalog();
    let csv = coxeter_csv(&cat);
    if csv != COXETER {
        return Err(CliError::Mismatch("Coxeter catalog differs from the golden table".into()));
    }
    for e in &cat {
        println!("{:>2}  {:<12} {} π²", e.index, e.name, e.volume.text());
    }
    let sink = Sink::new(cfg)?;
    let path = match cfg.format {
        Format::Json => sink.write_json("coxeter.json", &json!({ "provenance": sink.provenance(), "entries": cat }))?,
        Format::Csv => sink.write_text("coxeter.csv", &csv)?,
    };
    println!("wrote {}", path.display());
    Ok(())
}
