//! Decisions and reports built on top of the doubling construction.

pub mod automorphisms;
pub mod census;
pub mod division;
pub mod iso;
pub mod structure;
pub mod subgroups;
pub mod wene;

pub use automorphisms::{
    aut_bounds_check, enumerate_automorphisms, oracle_automorphisms, AutBounds, AutGroupReport,
    AutomorphismDescriptor, Descriptor,
};
pub use census::{census, census_with_limit, CensusClass, CensusEntry, CensusReport};
pub use division::{division_decide, DivisionDecide};
pub use iso::{iso_search, iso_test, verify_iso_witness, Iso, IsoVerdict};
pub use structure::{group_structure, GroupShape, LabelingVerdict, StructureReport};
pub use subgroups::{subgroups, SubgroupReport};
pub use wene::{wene_inner_check, WeneReport};
