//! Compositions, isomorphism, subsumption and canonical forms.

pub mod canonical;
pub mod compose;
pub mod matching;

pub use canonical::{canonical_form, canonical_labeling, canonical_relabel, CanonicalKey, Labeling};
pub use compose::{
    commute_symmetries, find_refinement, glue, glue_many, par, par_many, verify_lax_interchange,
    Interchange, Side,
};
pub use matching::{automorphisms, find_embedding, is_isomorphic, subsumes, BijectionWitness};
