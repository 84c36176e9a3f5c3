//! Class membership: interval orders, series-parallel posets, step
//! sequences and gluing-parallel iposets.

pub mod charfn;
pub mod gp;
pub mod interval;
pub mod sp;
pub mod term;

pub use charfn::{
    enumerate_char_fns, middle_orders, quick_reject_gluing, split_by_char_fn, split_with_maps,
    CharFn, Phase, Split,
};
pub use gp::{build_witness, gp_level, gp_term, is_gp, GpConfig, GpRecognizer};
pub use interval::{interval_representation, is_interval_order, is_step_sequence, IntervalRep};
pub use sp::{is_n_free, is_sp, n_poset};
pub use term::GpTerm;
