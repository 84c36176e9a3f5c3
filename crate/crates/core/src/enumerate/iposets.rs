//! Interface choices on a fixed poset, one per automorphism orbit.

use rayon::prelude::*;

use crate::algebra::automorphisms;
use crate::enumerate::posets::poset_levels;
use crate::error::{Error, Result};
use crate::iposet::{bits, Iposet, Poset};

/// Default bound for iposet enumeration.
pub const IPOSET_CAP: usize = 7;
/// Bound with the extended flag.
pub const IPOSET_EXTENDED_CAP: usize = 8;

pub fn enumerate_iposets(n: usize) -> Result<Vec<Iposet>> {
    enumerate_iposets_capped(n, IPOSET_CAP)
}

pub fn enumerate_iposets_capped(n: usize, cap: usize) -> Result<Vec<Iposet>> {
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    Ok(iposets_of_all(poset_levels(n).last().unwrap()))
}

pub(crate) fn enumerate_iposets_unbounded(n: usize) -> Result<Vec<Iposet>> {
    enumerate_iposets_capped(n, IPOSET_EXTENDED_CAP)
}

pub(crate) fn iposets_of_all(posets: &[Poset]) -> Vec<Iposet> {
    posets
        .par_iter()
        .map(iposets_of)
        .collect::<Vec<_>>()
        .concat()
}

/// Every iposet with underlying poset `p`, one per isomorphism class.
///
/// Source sequences are grown one point at a time, choosing only orbit
/// representatives under the stabilizer of the points chosen so far; target
/// sequences continue from the stabilizer of the full source sequence.
pub fn iposets_of(p: &Poset) -> Vec<Iposet> {
    let group = automorphisms(p);
    let mut out = Vec::new();
    let mut sources = Vec::new();
    grow(p, p.minimal_mask(), &group, &mut sources, &mut |src, stab| {
        let mut targets = Vec::new();
        grow(p, p.maximal_mask(), stab, &mut targets, &mut |tgt, _| {
            out.push(p.with_interfaces(src, tgt).expect("interfaces on extremal points"));
        });
    });
    out
}

fn grow(
    p: &Poset,
    pool: u64,
    stab: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize], &[Vec<usize>]),
) {
    emit(chosen, stab);
    let free = chosen.iter().fold(pool, |m, &x| m & !(1 << x));
    let mut seen = 0u64;
    for x in bits(free) {
        if seen >> x & 1 == 1 {
            continue;
        }
        for g in stab {
            seen |= 1 << g[x];
        }
        let next: Vec<Vec<usize>> = stab.iter().filter(|g| g[x] == x).cloned().collect();
        chosen.push(x);
        grow(p, pool, &next, chosen, emit);
        chosen.pop();
    }
}
