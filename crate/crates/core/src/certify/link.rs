//! Vertex links of a tetrahedron and certified bounds on their geometry.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::CertifyError;
use crate::exact::{RationalAngle, SignedInterval};
use crate::geometry::PythagoreanQuadruple;

/// Precision ladder for certified comparisons.
pub const START_BITS: u32 = 64;
pub const MAX_BITS: u32 = 1024;

fn big(r: Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// A spherical triangle given by its angles `(α, β, γ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkTriangle {
    pub alpha: RationalAngle,
    pub beta: RationalAngle,
    pub gamma: RationalAngle,
}

impl LinkTriangle {
    /// Each angle in `(0, π)` and the sum above π.
    pub fn new(alpha: RationalAngle, beta: RationalAngle, gamma: RationalAngle) -> Result<Self, CertifyError> {
        let t = LinkTriangle { alpha, beta, gamma };
        if !t.angles().iter().all(|a| a.in_open_unit()) {
            return Err(CertifyError::NotSpherical(t.angles()));
        }
        // the dual triangle must also be proper: each angle plus π exceeds the other two
        let [a, b, c] = t.angles().map(|x| x.ratio());
        let one = Ratio::one();
        if a + b + c <= one || b + c >= a + one || a + c >= b + one || a + b >= c + one {
            return Err(CertifyError::NotSpherical(t.angles()));
        }
        Ok(t)
    }

    pub fn angles(&self) -> [RationalAngle; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// Angle excess `α + β + γ − π` as a multiple of π; equals the area.
    pub fn excess(&self) -> Ratio<i64> {
        self.alpha.ratio() + self.beta.ratio() + self.gamma.ratio() - Ratio::one()
    }
}

/// Links at the four vertices, vertex `i` being opposite facet `i` in the
/// Gram layout: the first two see `(p, q, s)`, the last two `(p, q, r)`.
pub fn vertex_links(q: &PythagoreanQuadruple) -> [[RationalAngle; 3]; 4] {
    [[q.p, q.q, q.s], [q.p, q.q, q.s], [q.p, q.q, q.r], [q.p, q.q, q.r]]
}

/// Cosine of the side opposite `x` from the dual law of cosines.
fn side_cos(x: RationalAngle, y: RationalAngle, z: RationalAngle, bits: u32) -> Option<SignedInterval> {
    let c = |a: RationalAngle| SignedInterval::cos_pi(&big(a.ratio()), bits);
    let s = |a: RationalAngle| SignedInterval::sin_pi(&big(a.ratio()), bits);
    (c(x) + c(y) * c(z)).checked_div(&(s(y) * s(z)))
}

/// Enclosures (radians) of the sides opposite `α`, `β`, `γ`.
pub fn link_triangle_sides(t: &LinkTriangle, bits: u32) -> [SignedInterval; 3] {
    let [a, b, c] = t.angles();
    [(a, b, c), (b, a, c), (c, a, b)]
        .map(|(x, y, z)| side_cos(x, y, z, bits).expect("angles in (0, π) have nonzero sines").acos())
}

/// A point on the unit 2-sphere, `(cos φ cos θ, cos φ sin θ, sin φ)` for
/// longitude `θ` and latitude `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpherePoint {
    pub longitude: RationalAngle,
    pub latitude: RationalAngle,
}

impl SpherePoint {
    pub fn coords(&self, bits: u32) -> [SignedInterval; 3] {
        let c = |a: RationalAngle| SignedInterval::cos_pi(&big(a.ratio()), bits);
        let s = |a: RationalAngle| SignedInterval::sin_pi(&big(a.ratio()), bits);
        let (lon, lat) = (self.longitude, self.latitude);
        [c(lat) * c(lon), c(lat) * s(lon), s(lat)]
    }
}

/// Vertices placed with `A = (1, 0, 0)` carrying `α`, `B = (cos ℓγ, sin ℓγ, 0)`
/// carrying `β`, and `C` above the `xy`-plane; every coordinate is positive
/// once all sides are below π/2.
pub fn place_vertices(t: &LinkTriangle, bits: u32) -> [[SignedInterval; 3]; 3] {
    let [_, lb, lg] = link_triangle_sides(t, bits);
    let z = SignedInterval::zero(bits);
    let one = SignedInterval::one(bits);
    let ca = SignedInterval::cos_pi(&big(t.alpha.ratio()), bits);
    let sa = SignedInterval::sin_pi(&big(t.alpha.ratio()), bits);
    let a = [one, z.clone(), z.clone()];
    let b = [lg.cos(), lg.sin(), z];
    let c = [lb.cos(), lb.sin() * ca, lb.sin() * sa];
    [a, b, c]
}

fn dot(u: &[SignedInterval; 3], v: &[SignedInterval; 3]) -> SignedInterval {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterCertificate {
    pub triangle: LinkTriangle,
    pub center: SpherePoint,
    pub radius: RationalAngle,
    /// Precision at which every distance separated from the radius.
    pub bits: u32,
    /// Enclosures of the three vertex-to-center distances, in radians.
    pub distances: Vec<SignedInterval>,
    pub inside: bool,
}

/// Decides whether every vertex lies strictly within `radius` of `center`.
/// Precision doubles up to [`MAX_BITS`]; a tie that never separates is an error.
pub fn diameter_certificate(
    t: &LinkTriangle,
    center: SpherePoint,
    radius: RationalAngle,
) -> Result<DiameterCertificate, CertifyError> {
    let mut bits = START_BITS;
    loop {
        let verts = place_vertices(t, bits);
        let p = center.coords(bits);
        let rad = SignedInterval::pi(bits).mul_rational(&big(radius.ratio()));
        let distances: Vec<SignedInterval> = verts.iter().map(|v| dot(v, &p).acos()).collect();
        let all_below = distances.iter().all(|d| d.strictly_below(&rad));
        let some_above = distances.iter().any(|d| rad.strictly_below(d));
        if all_below || some_above {
            return Ok(DiameterCertificate { triangle: *t, center, radius, bits, distances, inside: all_below });
        }
        if bits >= MAX_BITS {
            return Err(CertifyError::Inconclusive { what: "vertex distances", bits });
        }
        bits *= 2;
    }
}

/// Coarse search for a center on the `xy`-plane side of the triangle: grid
/// points with denominators up to `max_den`, screened in `f64` then certified.
pub fn find_center(t: &LinkTriangle, radius: RationalAngle, max_den: i64) -> Option<DiameterCertificate> {
    let verts = place_vertices(t, START_BITS).map(|v| v.map(|x| x.mid_f64()));
    let r = radius.to_f64();
    let mut cands: Vec<(f64, SpherePoint)> = Vec::new();
    for d in 1..=max_den {
        for lon in 0..=d / 2 {
            for lat in 0..=d / 2 {
                let pt = SpherePoint { longitude: RationalAngle::new(lon, d), latitude: RationalAngle::new(lat, d) };
                let (th, ph) = (pt.longitude.to_f64(), pt.latitude.to_f64());
                let c = [ph.cos() * th.cos(), ph.cos() * th.sin(), ph.sin()];
                let worst = verts
                    .iter()
                    .map(|v| (v[0] * c[0] + v[1] * c[1] + v[2] * c[2]).clamp(-1.0, 1.0).acos())
                    .fold(0.0, f64::max);
                if worst < r {
                    cands.push((worst, pt));
                }
            }
        }
    }
    cands.sort_by(|a, b| a.0.total_cmp(&b.0));
    cands
        .into_iter()
        .take(8)
        .filter_map(|(_, pt)| diameter_certificate(t, pt, radius).ok())
        .find(|c| c.inside)
}
