//! Exact classification machinery for rational spherical tetrahedra whose
//! volume is a rational multiple of π².

pub mod certify;
pub mod exact;
pub mod families;
pub mod geometry;
pub mod io;
pub mod lambert;
pub mod ring;
pub mod search;

pub use exact::{CyclotomicNumber, RationalAngle, SignedInterval};
