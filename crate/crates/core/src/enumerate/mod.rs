//! Exhaustive generation up to isomorphism, closure generation, and census.

pub mod census;
pub mod closure;
pub mod iposets;
pub mod posets;

pub use census::{census, census_with, CensusClass, CensusOptions, CensusTable};
pub use closure::{generate_gp_closure, gp_closure, gp_generators, hierarchy, Ops};
pub(crate) use iposets::enumerate_iposets_unbounded;
pub use iposets::{enumerate_iposets, enumerate_iposets_capped, iposets_of, IPOSET_CAP, IPOSET_EXTENDED_CAP};
pub use posets::{enumerate_posets, enumerate_posets_capped, POSET_CAP, POSET_EXTENDED_CAP};
