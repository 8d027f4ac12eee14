//! Persisted results: one tagged record per line of output.
//!
//! Angles are `{"num", "den"}` multiples of π and volumes multiples of π²;
//! nothing is stored as a float.

use serde::{Deserialize, Serialize};

use crate::certify::ObstructionCertificate;
use crate::exact::RationalAngle;
use crate::families::{DomainCertificate, FamilySpec, IdentityReport, Params};
use crate::geometry::{PythagoreanQuadruple, VolumeCoefficient};
use crate::lambert::Companion;
use crate::search::SporadicSolution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub run_id: String,
    /// Hex SHA-256 of the canonical JSON of the effective configuration.
    pub config_hash: String,
    /// Seconds since the Unix epoch, as a decimal string.
    pub timestamp: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub id: u8,
    /// Angle forms as in the family fixture, e.g. `1/2 pi + t`.
    pub angles: [String; 4],
    pub volume: String,
    pub identity: IdentityReport,
    pub domain: DomainCertificate,
}

impl FamilyRecord {
    pub fn new(f: &FamilySpec, identity: IdentityReport, domain: DomainCertificate) -> Self {
        FamilyRecord {
            id: f.id,
            angles: f.angles.map(|a| a.to_text(1)),
            volume: f.volume.to_text(2),
            identity,
            domain,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: u8,
    pub params: Params,
    pub quadruple: PythagoreanQuadruple,
    pub volume: VolumeCoefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub angles: [RationalAngle; 3],
    /// Representative with every angle in `(0, π/2]`.
    pub reduced: [RationalAngle; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    Sporadic(SporadicSolution),
    Family(Box<FamilyRecord>),
    FamilyInstance(FamilyInstance),
    Lambert(Companion),
    Certificate(Box<ObstructionCertificate>),
    Triple(TripleRecord),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    #[serde(flatten)]
    pub payload: Payload,
    pub provenance: Provenance,
}

impl ResultRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Sporadic rows in the column layout of the golden table, numbered from 1.
pub fn sporadic_csv(rows: &[SporadicSolution]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["no", "p", "q", "r", "s", "lp", "lq", "lr", "ls", "vol"]).expect("in-memory write");
    for (i, s) in rows.iter().enumerate() {
        let mut rec = vec![(i + 1).to_string()];
        rec.extend(s.quadruple.angles().iter().map(|a| a.to_string()));
        rec.extend(s.lengths.as_array().iter().map(|a| a.to_string()));
        rec.push(s.volume.to_string());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
