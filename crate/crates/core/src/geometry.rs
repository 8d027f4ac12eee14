//! Gram matrices, realizability, volumes and edge lengths of ℤ₂-symmetric
//! spherical tetrahedra with dihedral angles `(p, q, r, s)`.
//!
//! Layout: facets 1, 2 meet at `r`, facets 3, 4 at `s`; the pairs (1,3), (2,4)
//! carry `p` and (1,4), (2,3) carry `q`.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::angle::ratio_serde;
use crate::exact::{CyclotomicNumber, RationalAngle};
use crate::ring::{det, leading_minor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("angle {0} is outside the open interval (0, π)")]
    AngleOutOfRange(RationalAngle),
    #[error("{0} does not satisfy the quadruple equation (residual {1})")]
    NotPythagorean(PythagoreanQuadruple, String),
    #[error("{0} is not realizable (G3 sign {1}, G4 sign {2})")]
    NotRealizable(PythagoreanQuadruple, i8, i8),
    #[error("raw angle {0} is outside its range")]
    RawOutOfRange(RationalAngle),
}

/// Dihedral angles in canonical form `p ≥ q`, `r ≥ s`, all in `(0, π)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PythagoreanQuadruple {
    pub p: RationalAngle,
    pub q: RationalAngle,
    pub r: RationalAngle,
    pub s: RationalAngle,
}

impl PythagoreanQuadruple {
    /// Canonicalizes by the two isometric swaps `p ↔ q` and `r ↔ s`.
    pub fn new(
        p: RationalAngle,
        q: RationalAngle,
        r: RationalAngle,
        s: RationalAngle,
    ) -> Result<Self, GeometryError> {
        for a in [p, q, r, s] {
            if !a.in_open_unit() {
                return Err(GeometryError::AngleOutOfRange(a));
            }
        }
        let (p, q) = if p >= q { (p, q) } else { (q, p) };
        let (r, s) = if r >= s { (r, s) } else { (s, r) };
        Ok(PythagoreanQuadruple { p, q, r, s })
    }

    /// Shorthand taking `(num, den)` pairs.
    pub fn from_pairs(v: [(i64, i64); 4]) -> Result<Self, GeometryError> {
        let [p, q, r, s] = v.map(|(n, d)| RationalAngle::new(n, d));
        Self::new(p, q, r, s)
    }

    pub fn angles(&self) -> [RationalAngle; 4] {
        [self.p, self.q, self.r, self.s]
    }

    pub fn all_right() -> Self {
        let h = RationalAngle::half_pi();
        PythagoreanQuadruple { p: h, q: h, r: h, s: h }
    }
}

impl fmt::Display for PythagoreanQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.p, self.q, self.r, self.s)
    }
}

impl fmt::Debug for PythagoreanQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Angles of the four-cosine sum `cos a + cos b + cos c + cos d`.
///
/// Ranges: `a ∈ (0, 2π)`, `b ∈ [0, π)`, `c, d ∈ (0, π)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct RawQuadruple {
    pub a: RationalAngle,
    pub b: RationalAngle,
    pub c: RationalAngle,
    pub d: RationalAngle,
}

impl RawQuadruple {
    pub fn new(
        a: RationalAngle,
        b: RationalAngle,
        c: RationalAngle,
        d: RationalAngle,
    ) -> Result<Self, GeometryError> {
        let zero = RationalAngle::zero();
        if !(a > zero && a < RationalAngle::integer(2)) {
            return Err(GeometryError::RawOutOfRange(a));
        }
        if !(b >= zero && b < RationalAngle::pi()) {
            return Err(GeometryError::RawOutOfRange(b));
        }
        for x in [c, d] {
            if !x.in_open_unit() {
                return Err(GeometryError::RawOutOfRange(x));
            }
        }
        Ok(RawQuadruple { a, b, c, d })
    }

    pub fn from_pairs(v: [(i64, i64); 4]) -> Result<Self, GeometryError> {
        let [a, b, c, d] = v.map(|(n, d)| RationalAngle::new(n, d));
        Self::new(a, b, c, d)
    }

    pub fn angles(&self) -> [RationalAngle; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `cos a + cos b + cos c + cos d`, exactly.
    pub fn cosine_sum(&self) -> CyclotomicNumber {
        self.angles().into_iter().map(CyclotomicNumber::cos_pi).sum()
    }
}

/// `cos p cos q + cos((r+s)/2) cos((r-s)/2)`, evaluated as `cos p cos q + (cos r + cos s)/2`.
pub fn quadruple_residual(q: &PythagoreanQuadruple) -> CyclotomicNumber {
    residual_of(q.p, q.q, q.r, q.s)
}

/// Residual for arbitrary angles, not necessarily in canonical range.
pub fn residual_of(p: RationalAngle, q: RationalAngle, r: RationalAngle, s: RationalAngle) -> CyclotomicNumber {
    let cos = CyclotomicNumber::cos_pi;
    let half_sum = (cos(r) + cos(s)).scale_ratio(1, 2);
    cos(p) * cos(q) + half_sum
}

/// `cos p cos q + cos r`.
pub fn triple_residual(p: RationalAngle, q: RationalAngle, r: RationalAngle) -> CyclotomicNumber {
    let cos = CyclotomicNumber::cos_pi;
    cos(p) * cos(q) + cos(r)
}

/// `p = (a+b)/2, q = (a-b)/2, r = c, s = d`; `None` when a result leaves `(0, π)`.
pub fn abcd_to_pqrs(x: &RawQuadruple) -> Option<PythagoreanQuadruple> {
    let half = Ratio::new(1, 2);
    let p = (x.a + x.b) * half;
    let q = (x.a - x.b) * half;
    PythagoreanQuadruple::new(p, q, x.c, x.d).ok()
}

/// Inverse of [`abcd_to_pqrs`] on canonical quadruples.
pub fn pqrs_to_abcd(q: &PythagoreanQuadruple) -> RawQuadruple {
    RawQuadruple { a: q.p + q.q, b: q.p - q.q, c: q.r, d: q.s }
}

/// Symmetric 4×4 Gram matrix with unit diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    entries: Vec<Vec<CyclotomicNumber>>,
}

impl GramMatrix {
    pub fn entries(&self) -> &[Vec<CyclotomicNumber>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.entries[i][j]
    }

    pub fn into_entries(self) -> Vec<Vec<CyclotomicNumber>> {
        self.entries
    }

    /// Leading principal minor `G_k`, `1 ≤ k ≤ 4`.
    pub fn minor(&self, k: usize) -> CyclotomicNumber {
        leading_minor(&self.entries, k)
    }

    pub fn det(&self) -> CyclotomicNumber {
        det(&self.entries)
    }
}

/// Gram matrix from the four cosines; shared by exact, interval and jet callers.
pub fn gram_layout<T: Clone + std::ops::Neg<Output = T>>(one: T, cp: T, cq: T, cr: T, cs: T) -> Vec<Vec<T>> {
    let (p, q, r, s) = (-cp, -cq, -cr, -cs);
    vec![
        vec![one.clone(), r.clone(), p.clone(), q.clone()],
        vec![r, one.clone(), q.clone(), p.clone()],
        vec![p.clone(), q.clone(), one.clone(), s.clone()],
        vec![q, p, s, one],
    ]
}

pub fn gram_matrix(q: &PythagoreanQuadruple) -> GramMatrix {
    gram_matrix_of(q.p, q.q, q.r, q.s)
}

pub fn gram_matrix_of(p: RationalAngle, q: RationalAngle, r: RationalAngle, s: RationalAngle) -> GramMatrix {
    let cos = CyclotomicNumber::cos_pi;
    GramMatrix { entries: gram_layout(CyclotomicNumber::one(), cos(p), cos(q), cos(r), cos(s)) }
}

/// Exact signs of the two non-trivial corner minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityCertificate {
    pub g3_sign: i8,
    pub g4_sign: i8,
}

impl RealizabilityCertificate {
    /// Positive definite; a vanishing minor counts as degenerate.
    pub fn realizable(&self) -> bool {
        self.g3_sign > 0 && self.g4_sign > 0
    }
}

/// `G1 = 1` and `G2 = sin² r > 0` hold automatically; only `G3`, `G4` are decided.
pub fn is_realizable(q: &PythagoreanQuadruple) -> RealizabilityCertificate {
    let g = gram_matrix(q);
    let sign = |x: CyclotomicNumber| x.sign().expect("Gram minors are real");
    RealizabilityCertificate { g3_sign: sign(g.minor(3)), g4_sign: sign(g.det()) }
}

/// Volume as a rational multiple of π².
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VolumeCoefficient {
    #[serde(with = "ratio_serde")]
    pub value: Ratio<i64>,
}

impl VolumeCoefficient {
    pub fn new(num: i64, den: i64) -> Self {
        VolumeCoefficient { value: Ratio::new(num, den) }
    }

    /// Fraction of the volume `2π²` of the whole 3-sphere.
    pub fn sphere_fraction(&self) -> Ratio<i64> {
        self.value / 2
    }
}

impl fmt::Display for VolumeCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exact::angle::format_ratio(&self.value))
    }
}

impl fmt::Debug for VolumeCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π²", self)
    }
}

/// Edge lengths as rational multiples of π.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct EdgeLengths {
    pub lp: RationalAngle,
    pub lq: RationalAngle,
    pub lr: RationalAngle,
    pub ls: RationalAngle,
}

impl EdgeLengths {
    pub fn as_array(&self) -> [RationalAngle; 4] {
        [self.lp, self.lq, self.lr, self.ls]
    }
}

fn check_hypotheses(q: &PythagoreanQuadruple) -> Result<(), GeometryError> {
    let res = quadruple_residual(q);
    if !res.is_zero() {
        return Err(GeometryError::NotPythagorean(*q, format!("{res:?}")));
    }
    let cert = is_realizable(q);
    if !cert.realizable() {
        return Err(GeometryError::NotRealizable(*q, cert.g3_sign, cert.g4_sign));
    }
    Ok(())
}

/// Volume from the angle formula; computed in rationals only, and refused
/// unless the quadruple equation holds and the Gram matrix is positive definite.
pub fn volume(q: &PythagoreanQuadruple) -> Result<VolumeCoefficient, GeometryError> {
    check_hypotheses(q)?;
    Ok(volume_formula(q))
}

/// The angle formula without its hypotheses checked.
pub fn volume_formula(q: &PythagoreanQuadruple) -> VolumeCoefficient {
    let two = Ratio::from_integer(2);
    let half = Ratio::new(1, 2);
    let (p, qq, r, s) = (q.p.ratio(), q.q.ratio(), q.r.ratio(), q.s.ratio());
    let v = half * (r * (two - r) * half + p * p + qq * qq + s * (two - s) * half - Ratio::one());
    VolumeCoefficient { value: v }
}

/// `(p, q, π - r, π - s)` under the same hypotheses as [`volume`].
pub fn edge_lengths(q: &PythagoreanQuadruple) -> Result<EdgeLengths, GeometryError> {
    check_hypotheses(q)?;
    Ok(EdgeLengths { lp: q.p, lq: q.q, lr: q.r.supplement(), ls: q.s.supplement() })
}

/// Zero volume and negative values are flagged by callers; this only tests the range.
pub fn volume_in_range(v: &VolumeCoefficient) -> bool {
    v.value > Ratio::zero() && v.value < Ratio::from_integer(2)
}
