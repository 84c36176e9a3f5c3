//! Series-parallel posets.

use crate::algebra::find_embedding;
use crate::iposet::{bits, full_mask, Iposet};

/// The four-point poset `N`: `0 < 1`, `2 < 1`, `2 < 3`.
pub fn n_poset() -> Iposet {
    Iposet::poset(4, &[(0, 1), (2, 1), (2, 3)]).expect("N is a poset")
}

/// Series-parallel: built from single points by serial and parallel
/// composition. Decided by recursive decomposition.
pub fn is_sp(p: &Iposet) -> bool {
    sp_rec(p, full_mask(p.len()))
}

/// No induced copy of `N`.
pub fn is_n_free(p: &Iposet) -> bool {
    find_embedding(p, &n_poset()).is_none()
}

fn groups(mask: u64, adj: impl Fn(usize) -> u64) -> Vec<u64> {
    let mut left = mask;
    let mut out = Vec::new();
    while left != 0 {
        let mut g = left & left.wrapping_neg();
        loop {
            let grown = bits(g).fold(g, |m, x| m | (adj(x) & mask));
            if grown == g {
                break;
            }
            g = grown;
        }
        out.push(g);
        left &= !g;
    }
    out
}

fn sp_rec(p: &Iposet, mask: u64) -> bool {
    if mask.count_ones() <= 1 {
        return true;
    }
    let parallel = groups(mask, |x| p.up_set(x) | p.down_set(x));
    if parallel.len() > 1 {
        return parallel.into_iter().all(|g| sp_rec(p, g));
    }
    let serial = groups(mask, |x| !(p.up_set(x) | p.down_set(x) | 1 << x));
    if serial.len() == 1 {
        return false;
    }
    // Blocks must be totally ordered one after another.
    for (i, &a) in serial.iter().enumerate() {
        for &b in &serial[i + 1..] {
            let a_below = bits(a).all(|x| p.up_set(x) & b == b);
            let b_below = bits(b).all(|x| p.up_set(x) & a == a);
            if !a_below && !b_below {
                return false;
            }
        }
    }
    serial.into_iter().all(|g| sp_rec(p, g))
}
