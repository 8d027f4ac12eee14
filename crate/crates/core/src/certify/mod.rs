//! Coxeter catalog, the non-decomposability certificate and the lift to `Sⁿ`.

pub mod area;
pub mod coxeter;
pub mod lift;
pub mod link;
pub mod obstruction;

use crate::exact::RationalAngle;
use crate::geometry::PythagoreanQuadruple;

pub use area::{area_diophantine, area_normalization, AreaNormalization};
pub use coxeter::{coxeter_catalog, coxeter_csv, CoxeterEntry, Label, VolumeRule};
pub use lift::{lift_gram, lift_pair, lifted_volume_fraction, LiftedPair};
pub use link::{diameter_certificate, find_center, link_triangle_sides, DiameterCertificate, LinkTriangle, SpherePoint};
pub use obstruction::{nondecomposability_certificate, nondecomposability_certificate_with, AreaCheck, ObstructionCertificate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("angles {0:?} do not form a spherical triangle")]
    NotSpherical([RationalAngle; 3]),
    #[error("{what} still ambiguous at {bits} bits")]
    Inconclusive { what: &'static str, bits: u32 },
    #[error("{0} is not realizable")]
    NotRealizable(PythagoreanQuadruple),
    #[error("no certificate: {0}")]
    NoCertificate(String),
    #[error("recheck failed: {0}")]
    RecheckFailed(String),
    #[error("lift: {0}")]
    BadLift(String),
}
