//! Gluing-parallel recognition, certificates and hierarchy levels.
//!
//! An iposet with at least two points is gp iff it is a parallel product or
//! a non-trivial gluing of two smaller gp-iposets. Parallel splits follow
//! connected components; gluing splits come from characteristic functions
//! plus a numbering of the cut. Results are memoized by canonical key.

use std::sync::OnceLock;

use dashmap::DashMap;

use crate::algebra::{canonical_form, canonical_relabel, glue, par, CanonicalKey};
use crate::iposet::{bits, full_mask, Iposet};
use crate::recognition::charfn::{enumerate_char_fns, middle_orders, quick_reject_gluing, split_unchecked};
use crate::recognition::interval::is_interval_order;
use crate::recognition::term::GpTerm;

/// Search switches. The defaults are sound; `discrete_shortcut` and
/// `interval_shortcut` use known membership results, `quick_reject` a known
/// necessary condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GpConfig {
    /// Discrete and interface consistent implies gp.
    pub discrete_shortcut: bool,
    /// Interval order and interface consistent implies gp.
    pub interval_shortcut: bool,
    pub quick_reject: bool,
}

impl Default for GpConfig {
    fn default() -> Self {
        GpConfig {
            discrete_shortcut: true,
            interval_shortcut: true,
            quick_reject: true,
        }
    }
}

impl GpConfig {
    /// Plain exhaustive search with no membership shortcuts.
    pub fn exhaustive() -> Self {
        GpConfig {
            discrete_shortcut: false,
            interval_shortcut: false,
            quick_reject: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Levels {
    glue: u32,
    par: u32,
}

/// Memoizing recognizer; safe to share between threads.
#[derive(Debug, Default)]
pub struct GpRecognizer {
    config: GpConfig,
    memo: DashMap<CanonicalKey, bool>,
    levels: DashMap<CanonicalKey, Option<Levels>>,
}

/// Ways to write `p` as `a ⊗ b` with both parts nonempty.
pub(crate) fn par_splits(p: &Iposet) -> Vec<(Iposet, Iposet)> {
    let comps = p.component_masks();
    let c = comps.len();
    if c < 2 {
        return Vec::new();
    }
    let s_idx: Vec<u64> = comps
        .iter()
        .map(|&m| p.sources().enumerate().filter(|&(_, x)| m >> x & 1 == 1).fold(0, |a, (k, _)| a | 1 << k))
        .collect();
    let t_idx: Vec<u64> = comps
        .iter()
        .map(|&m| p.targets().enumerate().filter(|&(_, x)| m >> x & 1 == 1).fold(0, |a, (k, _)| a | 1 << k))
        .collect();
    let all = full_mask(p.len());
    let mut out = Vec::new();
    for pick in 1..(1u64 << c) - 1 {
        let (mut pts, mut s, mut t) = (0u64, 0u64, 0u64);
        for i in bits(pick) {
            pts |= comps[i];
            s |= s_idx[i];
            t |= t_idx[i];
        }
        if s == full_mask(s.count_ones() as usize) && t == full_mask(t.count_ones() as usize) {
            out.push((p.restrict_keep(pts), p.restrict_keep(all & !pts)));
        }
    }
    out
}

/// Non-trivial gluing decompositions `p ≅ q ∗ r` over all characteristic
/// functions and cut numberings.
fn glue_splits(p: &Iposet) -> impl Iterator<Item = (Iposet, Iposet)> + '_ {
    enumerate_char_fns(p).flat_map(move |phi| {
        middle_orders(p, &phi)
            .into_iter()
            .map(move |mid| {
                let s = split_unchecked(p, &phi, &mid);
                (s.first, s.second)
            })
            .collect::<Vec<_>>()
    })
}

impl GpRecognizer {
    pub fn new(config: GpConfig) -> Self {
        GpRecognizer {
            config,
            memo: DashMap::new(),
            levels: DashMap::new(),
        }
    }

    pub fn config(&self) -> GpConfig {
        self.config
    }

    pub fn is_gp(&self, p: &Iposet) -> bool {
        if p.len() <= 1 {
            return true;
        }
        if !p.is_interface_consistent() {
            return false;
        }
        if self.config.discrete_shortcut && p.is_discrete() {
            return true;
        }
        if self.config.interval_shortcut && is_interval_order(p) {
            return true;
        }
        let key = canonical_form(p);
        if let Some(v) = self.memo.get(&key) {
            return *v;
        }
        let result = self.search(p);
        self.memo.insert(key, result);
        result
    }

    fn search(&self, p: &Iposet) -> bool {
        if par_splits(p).iter().any(|(a, b)| self.is_gp(a) && self.is_gp(b)) {
            return true;
        }
        if self.config.quick_reject && quick_reject_gluing(p) {
            return false;
        }
        glue_splits(p).any(|(q, r)| self.is_gp(&q) && self.is_gp(&r))
    }

    /// A term evaluating to an iposet isomorphic to `p`, or `None` if `p`
    /// is not gp. The term depends only on the isomorphism class of `p`.
    pub fn term(&self, p: &Iposet) -> Option<GpTerm> {
        if !self.is_gp(p) {
            return None;
        }
        Some(self.term_of_gp(&canonical_relabel(p)))
    }

    fn term_of_gp(&self, p: &Iposet) -> GpTerm {
        match p.len() {
            0 => return GpTerm::Empty,
            1 => return GpTerm::singleton(p.dom() == 1, p.cod() == 1),
            _ => {}
        }
        if p.is_discrete() {
            let order = p
                .interface_order()
                .expect("gp-iposets are interface consistent")
                .linear_extension();
            let (src, tgt) = (p.source_mask(), p.target_mask());
            return order
                .into_iter()
                .map(|x| GpTerm::singleton(src >> x & 1 == 1, tgt >> x & 1 == 1))
                .reduce(GpTerm::par)
                .unwrap();
        }
        for (a, b) in par_splits(p) {
            if self.is_gp(&a) && self.is_gp(&b) {
                return GpTerm::par(self.term_of_gp(&a), self.term_of_gp(&b));
            }
        }
        for (q, r) in glue_splits(p) {
            if self.is_gp(&q) && self.is_gp(&r) {
                return GpTerm::glue(self.term_of_gp(&q), self.term_of_gp(&r));
            }
        }
        unreachable!("is_gp accepted an iposet without a decomposition")
    }

    /// Least `i` with `p` in `S_i`, where `S_0` holds the empty iposet and the
    /// singletons and `S_{i+1}` is the glue-closure of the par-closure of
    /// `S_i`. `None` iff `p` is not gp.
    pub fn level(&self, p: &Iposet) -> Option<u32> {
        self.levels_of(p).map(|l| l.glue)
    }

    fn levels_of(&self, p: &Iposet) -> Option<Levels> {
        if p.len() <= 1 {
            return Some(Levels { glue: 0, par: 0 });
        }
        if !self.is_gp(p) {
            return None;
        }
        let key = canonical_form(p);
        if let Some(v) = self.levels.get(&key) {
            return *v;
        }
        // Least level at which p is a parallel product of smaller parts.
        let par_split = par_splits(p)
            .iter()
            .filter_map(|(a, b)| Some(self.levels_of(a)?.par.max(self.levels_of(b)?.par)))
            .min();
        let glue_split = glue_splits(p)
            .filter_map(|(q, r)| Some(self.levels_of(&q)?.glue.max(self.levels_of(&r)?.glue).max(1)))
            .min();
        let g = [par_split.map(|l| l + 1), glue_split]
            .into_iter()
            .flatten()
            .min()
            .expect("gp-iposets with two or more points decompose");
        let levels = Some(Levels {
            glue: g,
            par: par_split.map_or(g, |l| l.min(g)),
        });
        self.levels.insert(key, levels);
        levels
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

fn shared() -> &'static GpRecognizer {
    static SHARED: OnceLock<GpRecognizer> = OnceLock::new();
    SHARED.get_or_init(GpRecognizer::default)
}

/// Membership in the gp class, using a process-wide memo.
pub fn is_gp(p: &Iposet) -> bool {
    shared().is_gp(p)
}

pub fn gp_term(p: &Iposet) -> Option<GpTerm> {
    shared().term(p)
}

pub fn gp_level(p: &Iposet) -> Option<u32> {
    shared().level(p)
}

/// `P_1 = • ∗ •` and `P_{n+1} = • ∗ (P_n ⊗ P_n)`.
pub fn build_witness(n: usize) -> Iposet {
    assert!(n >= 1, "witnesses start at 1");
    let point = Iposet::discrete(1);
    let mut w = glue(&point, &point).unwrap();
    for _ in 1..n {
        w = glue(&point, &par(&w, &w).unwrap()).unwrap();
    }
    w
}
