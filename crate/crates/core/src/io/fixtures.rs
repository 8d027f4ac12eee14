//! Golden tables shipped with the crate.

use serde::Deserialize;

use crate::exact::RationalAngle;
use crate::geometry::{EdgeLengths, PythagoreanQuadruple, VolumeCoefficient};

pub const SPORADIC_TABLE: &str = include_str!("../../fixtures/sporadic.csv");
pub const FAMILY_TABLE: &str = include_str!("../../fixtures/families.csv");

/// One row of the sporadic table, as printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicRow {
    pub no: u32,
    pub quadruple: PythagoreanQuadruple,
    pub lengths: EdgeLengths,
    pub volume: VolumeCoefficient,
}

#[derive(Deserialize)]
struct RawRow {
    no: u32,
    p: String,
    q: String,
    r: String,
    s: String,
    lp: String,
    lq: String,
    lr: String,
    ls: String,
    vol: String,
}

fn angle(s: &str) -> RationalAngle {
    s.parse().unwrap_or_else(|e| panic!("bad fixture fraction: {e:?}"))
}

/// Parses the 59-row sporadic fixture. Printed angles are already canonical.
pub fn sporadic_rows() -> Vec<SporadicRow> {
    let mut rdr = csv::Reader::from_reader(SPORADIC_TABLE.as_bytes());
    rdr.deserialize::<RawRow>()
        .map(|r| {
            let r = r.expect("embedded fixture parses");
            let printed = [&r.p, &r.q, &r.r, &r.s].map(|x| angle(x));
            let [p, q, rr, s] = printed;
            let quadruple = PythagoreanQuadruple::new(p, q, rr, s).expect("fixture angles in range");
            assert_eq!(quadruple.angles(), printed, "fixture row {} is not canonical", r.no);
            SporadicRow {
                no: r.no,
                quadruple,
                lengths: EdgeLengths { lp: angle(&r.lp), lq: angle(&r.lq), lr: angle(&r.lr), ls: angle(&r.ls) },
                volume: VolumeCoefficient { value: angle(&r.vol).ratio() },
            }
        })
        .collect()
}

pub const LAMBERT: &str = include_str!("../../fixtures/lambert.csv");
pub const COXETER: &str = include_str!("../../fixtures/coxeter.csv");

/// A printed cube with its volume and the angle `s` of its companion `(π/2, π/2, π/2, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambertRow {
    pub angles: [RationalAngle; 3],
    pub volume: VolumeCoefficient,
    pub companion_s: RationalAngle,
}

#[derive(Deserialize)]
struct RawLambert {
    a: String,
    b: String,
    c: String,
    vol: String,
    companion_s: String,
}

pub fn lambert_rows() -> Vec<LambertRow> {
    let mut rdr = csv::Reader::from_reader(LAMBERT.as_bytes());
    rdr.deserialize::<RawLambert>()
        .map(|r| {
            let r = r.expect("embedded fixture parses");
            LambertRow {
                angles: [&r.a, &r.b, &r.c].map(|x| angle(x)),
                volume: VolumeCoefficient { value: angle(&r.vol).ratio() },
                companion_s: angle(&r.companion_s),
            }
        })
        .collect()
}
