//! Rational angles, cyclotomic numbers and certified interval enclosures.

pub mod angle;
pub mod cyclotomic;
pub mod eval;
pub mod interval;

pub use angle::RationalAngle;
pub use cyclotomic::CyclotomicNumber;
pub use interval::SignedInterval;
