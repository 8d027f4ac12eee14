//! The 42 continuous families: transcription, identity and domain
//! verification, membership and instantiation.

mod domain;
mod identity;
mod membership;
mod poly;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::RationalAngle;

pub use domain::{
    verify_domain, BoundaryPoint, DomainCertificate, IntervalCell, PolygonCell, Tightening,
};
pub use identity::{verify_identity, IdentityReport};
pub use membership::{instantiate, member_of, MembershipRule};
pub use poly::{ParsePolyError, Poly2};

type Q = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("family {family}: residual does not vanish at t = {t}, u = {u}")]
    IdentityFails { family: u8, t: String, u: String },
    #[error("family {family}: volume polynomial {table} differs from the angle formula {derived}")]
    VolumeMismatch { family: u8, table: String, derived: String },
    #[error("family {family}: parameters t = {t}, u = {u} lie outside the domain")]
    OutOfDomain { family: u8, t: String, u: String },
    #[error("family {family}: instance is not a valid tetrahedron: {reason}")]
    Degenerate { family: u8, reason: String },
    #[error("family {family}: {reason}")]
    Unsupported { family: u8, reason: String },
}

/// Parameter point; `u` is zero and ignored for one-parameter families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Params {
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub t: Q,
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub u: Q,
}

impl Params {
    pub fn t(t: Q) -> Self {
        Params { t, u: Q::zero() }
    }

    pub fn tu(t: Q, u: Q) -> Self {
        Params { t, u }
    }
}

/// `a·t + b·u + c ≥ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LinearConstraint {
    pub a: Q,
    pub b: Q,
    pub c: Q,
}

impl LinearConstraint {
    fn new(a: i64, b: i64, c: Q) -> Self {
        LinearConstraint { a: Q::from_integer(a), b: Q::from_integer(b), c }
    }

    pub fn value(&self, p: Params) -> Q {
        self.a * p.t + self.b * p.u + self.c
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FamilyDomain {
    /// `lo ≤ t ≤ hi`.
    Interval {
        #[serde(with = "crate::exact::angle::ratio_serde")]
        lo: Q,
        #[serde(with = "crate::exact::angle::ratio_serde")]
        hi: Q,
    },
    /// `0 ≤ u ≤ 1/2`, `0 ≤ t ≤ 1`, `t ≥ u`.
    A,
    /// `0 ≤ u ≤ 1`, `0 ≤ t ≤ 1/2`, `t ≤ u`.
    B,
}

impl FamilyDomain {
    pub fn dimension(&self) -> usize {
        match self {
            FamilyDomain::Interval { .. } => 1,
            _ => 2,
        }
    }

    pub fn constraints(&self) -> Vec<LinearConstraint> {
        let half = Q::new(1, 2);
        let one = Q::from_integer(1);
        let zero = Q::zero();
        match *self {
            FamilyDomain::Interval { lo, hi } => {
                vec![LinearConstraint::new(1, 0, -lo), LinearConstraint::new(-1, 0, hi)]
            }
            FamilyDomain::A => vec![
                LinearConstraint::new(0, 1, zero),
                LinearConstraint::new(0, -1, half),
                LinearConstraint::new(-1, 0, one),
                LinearConstraint::new(1, -1, zero),
            ],
            FamilyDomain::B => vec![
                LinearConstraint::new(1, 0, zero),
                LinearConstraint::new(-1, 0, half),
                LinearConstraint::new(0, -1, one),
                LinearConstraint::new(-1, 1, zero),
            ],
        }
    }

    /// Closed domain membership.
    pub fn contains(&self, p: Params) -> bool {
        if self.dimension() == 1 && !p.u.is_zero() {
            return false;
        }
        self.constraints().iter().all(|c| c.value(p) >= Q::zero())
    }

    /// Vertices of the closed domain, counter-clockwise for the polygons.
    pub fn vertices(&self) -> Vec<Params> {
        let q = |n, d| Q::new(n, d);
        match *self {
            FamilyDomain::Interval { lo, hi } => vec![Params::t(lo), Params::t(hi)],
            FamilyDomain::A => vec![
                Params::tu(q(0, 1), q(0, 1)),
                Params::tu(q(1, 1), q(0, 1)),
                Params::tu(q(1, 1), q(1, 2)),
                Params::tu(q(1, 2), q(1, 2)),
            ],
            FamilyDomain::B => vec![
                Params::tu(q(0, 1), q(0, 1)),
                Params::tu(q(1, 2), q(1, 2)),
                Params::tu(q(1, 2), q(1, 1)),
                Params::tu(q(0, 1), q(1, 1)),
            ],
        }
    }

    fn fixture_text(&self) -> String {
        match self {
            FamilyDomain::Interval { lo, hi } => format!(
                "{}..{}",
                crate::exact::angle::format_ratio(lo),
                crate::exact::angle::format_ratio(hi)
            ),
            FamilyDomain::A => "A".into(),
            FamilyDomain::B => "B".into(),
        }
    }
}

/// One family: four affine angle forms, a volume polynomial and a domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub id: u8,
    /// Forms for `(p, q, r, s)` in units of π.
    pub angles: [Poly2; 4],
    /// Volume in units of π².
    pub volume: Poly2,
    pub domain: FamilyDomain,
}

impl FamilySpec {
    pub fn dimension(&self) -> usize {
        self.domain.dimension()
    }

    /// Angles at a parameter point, in printed order and not canonicalized.
    pub fn angles_at(&self, p: Params) -> [RationalAngle; 4] {
        self.angles.map(|f| RationalAngle::from_ratio(f.eval(p.t, p.u)))
    }

    /// Same angle forms after exchanging `r` and `s`.
    pub fn is_twin_of(&self, other: &FamilySpec) -> bool {
        let [p, q, r, s] = self.angles;
        self.id != other.id && other.angles == [p, q, s, r] && self.domain == other.domain
    }
}

/// Rows: id, forms `[12α, 2β, γ]` for `α + βt + γu`, volume `144·[1, t, u, t², tu, u²]`.
const TABLE: [(u8, [[i64; 3]; 4], [i64; 6]); 42] = [
    (1, [[6, 2, 0], [6, 0, 0], [6, 0, 0], [6, 0, 0]], [18, 72, 0, 72, 0, 0]),
    (2, [[9, -1, 0], [3, -1, 0], [4, -2, 0], [4, 2, 0]], [13, -72, 0, -36, 0, 0]),
    (3, [[6, 2, 0], [6, 0, 0], [4, 2, 0], [8, -2, 0]], [16, 96, 0, 0, 0, 0]),
    (4, [[6, 0, 0], [2, 2, 0], [8, -2, 0], [4, 2, 0]], [0, 48, 0, 0, 0, 0]),
    (5, [[8, -2, 0], [4, 0, 0], [4, 2, 0], [6, 0, 0]], [15, -48, 0, 36, 0, 0]),
    (6, [[6, 0, 0], [6, -2, 0], [4, 2, 0], [8, -2, 0]], [16, -48, 0, 0, 0, 0]),
    (7, [[4, 2, 0], [4, 0, 0], [6, 0, 0], [8, -2, 0]], [3, 24, 0, 36, 0, 0]),
    (8, [[8, 0, 0], [4, -2, 0], [6, 0, 0], [4, -2, 0]], [15, -96, 0, 36, 0, 0]),
    (9, [[8, 0, 0], [4, 2, 0], [4, 2, 0], [6, 0, 0]], [15, 96, 0, 36, 0, 0]),
    (10, [[6, 0, 0], [6, -2, 0], [4, -2, 0], [8, 2, 0]], [16, -96, 0, 0, 0, 0]),
    (11, [[3, 1, 0], [3, -1, 0], [8, 2, 0], [8, -2, 0]], [1, 0, 0, -36, 0, 0]),
    (12, [[6, 2, 0], [6, 0, 0], [4, -2, 0], [8, 2, 0]], [16, 48, 0, 0, 0, 0]),
    (13, [[6, 0, 0], [2, 2, 0], [6, 0, 0], [6, 0, 0]], [2, 24, 0, 72, 0, 0]),
    (14, [[6, 0, 0], [6, -2, 0], [6, 0, 0], [6, 0, 0]], [18, -72, 0, 72, 0, 0]),
    (15, [[4, 0, 0], [4, -2, 0], [8, 2, 0], [6, 0, 0]], [3, -24, 0, 36, 0, 0]),
    (16, [[9, 1, 0], [3, 1, 0], [4, -2, 0], [4, 2, 0]], [13, 72, 0, -36, 0, 0]),
    (17, [[9, 1, 0], [3, 1, 0], [4, 2, 0], [4, -2, 0]], [13, 72, 0, -36, 0, 0]),
    (18, [[3, 1, 0], [3, -1, 0], [8, -2, 0], [8, 2, 0]], [1, 0, 0, -36, 0, 0]),
    (19, [[8, 2, 0], [4, 0, 0], [4, -2, 0], [6, 0, 0]], [15, 48, 0, 36, 0, 0]),
    (20, [[6, 0, 0], [2, -2, 0], [6, 0, 0], [6, 0, 0]], [2, -24, 0, 72, 0, 0]),
    (21, [[8, 0, 0], [4, 2, 0], [6, 0, 0], [4, 2, 0]], [15, 96, 0, 36, 0, 0]),
    (22, [[9, -1, 0], [3, -1, 0], [4, 2, 0], [4, -2, 0]], [13, -72, 0, -36, 0, 0]),
    (23, [[6, 0, 0], [6, -2, 0], [8, -2, 0], [4, 2, 0]], [16, -48, 0, 0, 0, 0]),
    (24, [[6, 0, 0], [2, 2, 0], [4, 2, 0], [8, -2, 0]], [0, 48, 0, 0, 0, 0]),
    (25, [[6, 2, 0], [6, 0, 0], [8, 2, 0], [4, -2, 0]], [16, 48, 0, 0, 0, 0]),
    (26, [[9, 1, 0], [9, -1, 0], [8, -2, 0], [8, 2, 0]], [73, 0, 0, -36, 0, 0]),
    (27, [[4, 2, 0], [4, 0, 0], [8, -2, 0], [6, 0, 0]], [3, 24, 0, 36, 0, 0]),
    (28, [[8, -2, 0], [4, 0, 0], [6, 0, 0], [4, 2, 0]], [15, -48, 0, 36, 0, 0]),
    (29, [[4, 0, 0], [4, -2, 0], [6, 0, 0], [8, 2, 0]], [3, -24, 0, 36, 0, 0]),
    (30, [[6, 0, 0], [6, -2, 0], [8, 2, 0], [4, -2, 0]], [16, -96, 0, 0, 0, 0]),
    (31, [[8, 2, 0], [4, 0, 0], [6, 0, 0], [4, -2, 0]], [15, 48, 0, 36, 0, 0]),
    (32, [[8, 0, 0], [4, -2, 0], [4, -2, 0], [6, 0, 0]], [15, -96, 0, 36, 0, 0]),
    (33, [[6, 2, 0], [6, 0, 0], [8, -2, 0], [4, 2, 0]], [16, 96, 0, 0, 0, 0]),
    (34, [[9, 1, 0], [9, -1, 0], [8, 2, 0], [8, -2, 0]], [73, 0, 0, -36, 0, 0]),
    (35, [[6, 0, 0], [6, 0, -1], [12, -2, 0], [0, 2, 0]], [0, 72, -72, -72, 0, 72]),
    (36, [[6, 0, 0], [6, 0, -1], [0, 2, 0], [12, -2, 0]], [0, 72, -72, -72, 0, 72]),
    (37, [[6, 0, 1], [6, 0, 0], [12, -2, 0], [0, 2, 0]], [0, 72, 72, -72, 0, 72]),
    (38, [[6, 0, 1], [6, 0, 0], [0, 2, 0], [12, -2, 0]], [0, 72, 72, -72, 0, 72]),
    (39, [[6, 0, 0], [6, -2, 0], [12, 0, -1], [0, 0, 1]], [0, -72, 72, 72, 0, -72]),
    (40, [[6, 0, 0], [6, -2, 0], [0, 0, 1], [12, 0, -1]], [0, -72, 72, 72, 0, -72]),
    (41, [[6, 2, 0], [6, 0, 0], [12, 0, -1], [0, 0, 1]], [0, 72, 72, 72, 0, -72]),
    (42, [[6, 2, 0], [6, 0, 0], [0, 0, 1], [12, 0, -1]], [0, 72, 72, 72, 0, -72]),
];

/// Families 1 to 42, transcribed in a compact integer encoding.
pub fn builtin_families() -> Vec<FamilySpec> {
    let one_param = FamilyDomain::Interval { lo: Q::zero(), hi: Q::new(1, 6) };
    TABLE
        .iter()
        .map(|&(id, forms, vol)| {
            let angles = forms.map(|[a, b, g]| Poly2::affine(Q::new(a, 12), Q::new(b, 2), Q::from_integer(g)));
            let v = vol.map(|x| Q::new(x, 144));
            let volume = Poly2 { c: v[0], t: v[1], u: v[2], tt: v[3], tu: v[4], uu: v[5] };
            let domain = match id {
                1..=34 => one_param,
                35..=38 => FamilyDomain::A,
                _ => FamilyDomain::B,
            };
            FamilySpec { id, angles, volume, domain }
        })
        .collect()
}

/// Pairs `(i, j)`, `i < j`, of families that differ only by `r ↔ s`.
pub fn twin_pairs(families: &[FamilySpec]) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for (i, f) in families.iter().enumerate() {
        for g in &families[i + 1..] {
            if f.is_twin_of(g) {
                out.push((f.id, g.id));
            }
        }
    }
    out
}

/// Parses the family fixture (`no,p,q,r,s,domain,vol`).
pub fn parse_family_csv(text: &str) -> Result<Vec<FamilySpec>, String> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let field = |i: usize| rec.get(i).ok_or_else(|| format!("missing column {i}"));
        let id: u8 = field(0)?.parse().map_err(|e| format!("bad id: {e}"))?;
        let mut angles = [Poly2::default(); 4];
        for (k, slot) in angles.iter_mut().enumerate() {
            *slot = Poly2::parse(field(k + 1)?, 1).map_err(|e| e.to_string())?;
        }
        let domain = match field(5)? {
            "A" => FamilyDomain::A,
            "B" => FamilyDomain::B,
            other => {
                let (lo, hi) = other.split_once("..").ok_or_else(|| format!("bad domain {other}"))?;
                let p = |s: &str| crate::exact::angle::parse_ratio(s).map_err(|e| e.0);
                FamilyDomain::Interval { lo: p(lo)?, hi: p(hi)? }
            }
        };
        let volume = Poly2::parse(field(6)?, 2).map_err(|e| e.to_string())?;
        out.push(FamilySpec { id, angles, volume, domain });
    }
    Ok(out)
}

/// Inverse of [`parse_family_csv`].
pub fn family_csv(families: &[FamilySpec]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["no", "p", "q", "r", "s", "domain", "vol"]).expect("in-memory write");
    for f in families {
        let mut row = vec![f.id.to_string()];
        row.extend(f.angles.iter().map(|a| a.to_text(1)));
        row.push(f.domain.fixture_text());
        row.push(f.volume.to_text(2));
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
