//! Isomorphism-free generation of posets by canonical augmentation.
//!
//! Each poset on `n` points arises from one on `n - 1` points by adding a new
//! maximal point above an order ideal. Ideals are taken up to automorphisms
//! of the parent, and a child is kept only when the new point lies in the
//! orbit of the canonically chosen maximal point, so every class is
//! produced exactly once without a global table.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::canonical::{canonical_labeling, refine_colors};
use crate::error::{Error, Result};
use crate::iposet::{bits, map_mask, Iposet, Poset, Rows, Seq};

/// Default bound for poset enumeration.
pub const POSET_CAP: usize = 8;
/// Bound with the extended flag.
pub const POSET_EXTENDED_CAP: usize = 10;

pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    enumerate_posets_capped(n, POSET_CAP)
}

pub fn enumerate_posets_capped(n: usize, cap: usize) -> Result<Vec<Poset>> {
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    Ok(poset_levels(n).pop().unwrap())
}

/// Representatives for every size `0..=max_n`.
pub(crate) fn poset_levels(max_n: usize) -> Vec<Vec<Poset>> {
    let mut levels = vec![vec![Iposet::empty()]];
    for _ in 0..max_n {
        let next = extend_level(levels.last().unwrap());
        levels.push(next);
    }
    levels
}

pub(crate) fn extend_level(parents: &[Poset]) -> Vec<Poset> {
    parents
        .par_iter()
        .map(children)
        .collect::<Vec<_>>()
        .concat()
}

/// All order ideals (down-closed sets) of `p`.
pub(crate) fn ideals(p: &Iposet) -> Vec<u64> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.down_set(x).count_ones());
    let mut out = Vec::new();
    ideals_rec(p, &order, 0, 0, &mut out);
    out.sort_unstable();
    out
}

fn ideals_rec(p: &Iposet, order: &[usize], i: usize, cur: u64, out: &mut Vec<u64>) {
    if i == order.len() {
        out.push(cur);
        return;
    }
    let x = order[i];
    ideals_rec(p, order, i + 1, cur, out);
    if p.down_set(x) & !cur == 0 {
        ideals_rec(p, order, i + 1, cur | 1 << x, out);
    }
}

/// One ideal from each orbit under the group generated by `generators`.
pub(crate) fn ideal_orbit_reps(ideals: &[u64], generators: &[Vec<usize>]) -> Vec<u64> {
    if generators.is_empty() {
        return ideals.to_vec();
    }
    let index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..ideals.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        for (i, &m) in ideals.iter().enumerate() {
            let j = index[&map_mask(m, g)];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..ideals.len())
        .filter(|&i| find(&mut parent, i) == i)
        .map(|i| ideals[i])
        .collect()
}

fn children(parent: &Poset) -> Vec<Poset> {
    let m = parent.len();
    let generators = if m == 0 {
        Vec::new()
    } else {
        canonical_labeling(parent).generators
    };
    let reps = ideal_orbit_reps(&ideals(parent), &generators);
    let mut out = Vec::new();
    for d in reps {
        let mut up: Rows = Rows::from_slice(parent.up_rows());
        for x in bits(d) {
            up[x] |= 1 << m;
        }
        up.push(0);
        let child = Iposet::from_parts(up, Seq::new(), Seq::new());
        if new_point_is_canonical(&child, m) {
            out.push(child);
        }
    }
    out
}

/// The new point `m` must share an orbit with the maximal point that comes
/// last in the canonical labelling.
fn new_point_is_canonical(child: &Poset, m: usize) -> bool {
    let maximal = child.maximal_mask();
    let colors = refine_colors(child);
    let top = bits(maximal).map(|x| colors[x]).max().unwrap();
    if colors[m] != top {
        return false;
    }
    let candidates: u64 = bits(maximal).filter(|&x| colors[x] == top).fold(0, |a, x| a | 1 << x);
    if candidates.count_ones() == 1 {
        return true;
    }
    let lab = canonical_labeling(child);
    let pos = lab.position();
    let chosen = bits(candidates).max_by_key(|&x| pos[x]).unwrap();
    lab.orbit[chosen] == lab.orbit[m]
}
