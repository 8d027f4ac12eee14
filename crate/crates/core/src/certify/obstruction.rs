//! Certificate that a tetrahedron is not a union of spherical Coxeter tetrahedra.
//!
//! Pieces meeting at a vertex tile its link triangle by Coxeter triangles.
//! A triangle inside a disc of radius π/4 has diameter below π/2, which rules
//! out every `Δ(2, 2, n)` (two of its sides are π/2); the remaining pieces
//! `Δ(2, 3, n)` must then match the area exactly.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::area::{area_diophantine, area_normalization, AreaNormalization};
use super::link::{diameter_certificate, find_center, vertex_links, DiameterCertificate, LinkTriangle, SpherePoint};
use super::CertifyError;
use crate::exact::RationalAngle;
use crate::geometry::{is_realizable, PythagoreanQuadruple};

type Q = Ratio<i64>;

/// Radius of the enclosing disc; diameter below `2·radius = π/2`.
pub fn disc_radius() -> RationalAngle {
    RationalAngle::new(1, 4)
}

/// Denominator bound for the fallback center search.
const CENTER_SEARCH_DEN: i64 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaCheck {
    /// Area of the link triangle in units of π.
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub excess: Q,
    pub normalization: AreaNormalization,
    /// `excess · scale`, the right-hand side of the tiling equation.
    #[serde(with = "crate::exact::angle::ratio_serde")]
    pub target: Q,
    pub solution: Option<(i64, i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub quadruple: PythagoreanQuadruple,
    /// Vertex (opposite this facet) whose link is used.
    pub vertex: usize,
    pub diameter: DiameterCertificate,
    pub area: AreaCheck,
}

pub fn area_check(t: &LinkTriangle) -> AreaCheck {
    let normalization = area_normalization();
    let excess = t.excess();
    let target = excess * normalization.scale;
    AreaCheck { excess, normalization, target, solution: area_diophantine(target) }
}

fn try_vertex(
    q: &PythagoreanQuadruple,
    vertex: usize,
    center: Option<SpherePoint>,
) -> Result<ObstructionCertificate, CertifyError> {
    let [a, b, c] = vertex_links(q)[vertex];
    let t = LinkTriangle::new(a, b, c)?;
    let area = area_check(&t);
    if area.solution.is_some() {
        return Err(CertifyError::NoCertificate(format!("link at vertex {vertex} admits an area tiling")));
    }
    let given = match center {
        Some(p) => Some(diameter_certificate(&t, p, disc_radius())?).filter(|d| d.inside),
        None => None,
    };
    let diameter = given
        .or_else(|| find_center(&t, disc_radius(), CENTER_SEARCH_DEN))
        .ok_or_else(|| CertifyError::NoCertificate(format!("no disc of radius π/4 holds the link at vertex {vertex}")))?;
    Ok(ObstructionCertificate { quadruple: *q, vertex, diameter, area })
}

/// Tries each vertex; `center` is attempted before a grid search for one.
pub fn nondecomposability_certificate_with(
    q: &PythagoreanQuadruple,
    center: Option<SpherePoint>,
) -> Result<ObstructionCertificate, CertifyError> {
    if !is_realizable(q).realizable() {
        return Err(CertifyError::NotRealizable(*q));
    }
    let mut last = CertifyError::NoCertificate("no vertex tried".into());
    for v in 0..4 {
        match try_vertex(q, v, center) {
            Ok(c) => return Ok(c),
            Err(e) => last = e,
        }
    }
    Err(last)
}

pub fn nondecomposability_certificate(q: &PythagoreanQuadruple) -> Result<ObstructionCertificate, CertifyError> {
    nondecomposability_certificate_with(q, None)
}

impl ObstructionCertificate {
    /// Re-derives every claim from the stored inputs alone.
    pub fn recheck(&self) -> Result<(), CertifyError> {
        let fail = |m: &str| Err(CertifyError::RecheckFailed(m.to_string()));
        if !is_realizable(&self.quadruple).realizable() {
            return fail("quadruple is not realizable");
        }
        let [a, b, c] = vertex_links(&self.quadruple).get(self.vertex).copied().ok_or(CertifyError::RecheckFailed("vertex index".into()))?;
        let t = LinkTriangle::new(a, b, c)?;
        if t != self.diameter.triangle {
            return fail("triangle is not the stated vertex link");
        }
        if self.diameter.radius != disc_radius() {
            return fail("radius is not π/4");
        }
        let d = diameter_certificate(&t, self.diameter.center, self.diameter.radius)?;
        if !d.inside {
            return fail("a vertex lies outside the disc");
        }
        let area = area_check(&t);
        if area != self.area || area.solution.is_some() {
            return fail("area equation is solvable or differs from the record");
        }
        Ok(())
    }
}
