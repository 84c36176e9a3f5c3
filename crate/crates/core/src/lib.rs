//! Posets with interfaces (iposets).
//!
//! An iposet is a finite strict partial order whose minimal and maximal
//! points may carry numbered source and target interfaces. Iposets compose
//! sequentially by gluing targets to sources ([`glue`]) and in parallel by
//! disjoint union ([`par`]). The gluing-parallel class is everything built
//! from the empty iposet and the four singletons by those two operations.
//!
//! The crate provides the data model, both compositions, canonical forms and
//! isomorphism, recognition of interval orders, series-parallel posets, step
//! sequences and gluing-parallel iposets, isomorphism-free enumeration, and
//! a search for minimal forbidden induced subposets.

pub mod algebra;
pub mod enumerate;
pub mod error;
pub mod forbidden;
pub mod format;
pub mod iposet;
pub mod recognition;

pub use algebra::{
    canonical_form, glue, glue_many, is_isomorphic, par, par_many, subsumes, CanonicalKey,
};
pub use error::{Error, Result};
pub use iposet::{symmetry_from_permutation, InterfaceOrder, Iposet, Poset, MAX_POINTS};
pub use recognition::{gp_level, gp_term, is_gp, GpTerm};
