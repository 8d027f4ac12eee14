//! Record formats and embedded fixtures.

pub mod fixtures;
pub mod record;

pub use record::{sporadic_csv, FamilyInstance, FamilyRecord, Payload, Provenance, ResultRecord, TripleRecord};
