//! Interval orders, their interval representations, and step sequences.

use crate::error::{Error, Result};
use crate::iposet::{bits, full_mask, Iposet};

/// For all `w < y` and `x < z`: `w < z` or `x < y`.
pub fn is_interval_order(p: &Iposet) -> bool {
    let n = p.len();
    (0..n).all(|w| {
        bits(p.up_set(w)).all(|y| {
            // every z above x must then be above w
            (0..n).all(|x| p.lt(x, y) || p.up_set(x) & !p.up_set(w) == 0)
        })
    })
}

/// Incomparability (on distinct points) is transitive.
pub fn is_step_sequence(p: &Iposet) -> bool {
    let n = p.len();
    let all = full_mask(n);
    let inc = |x: usize| all & !(p.up_set(x) | p.down_set(x) | 1 << x);
    (0..n).all(|x| bits(inc(x)).all(|y| inc(y) & !(1 << x) & !inc(x) == 0))
}

/// Endpoint maps into the linear order `0..len`, with `0` as bottom and
/// `len - 1` as top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    pub len: usize,
    pub begin: Vec<usize>,
    pub end: Vec<usize>,
}

impl IntervalRep {
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len - 1
    }

    /// Checks every representation property against `p`.
    pub fn represents(&self, p: &Iposet) -> bool {
        let n = p.len();
        if self.begin.len() != n || self.end.len() != n || self.len < 3 {
            return false;
        }
        let (src, tgt) = (p.source_mask(), p.target_mask());
        (0..n).all(|x| {
            self.begin[x] <= self.end[x]
                && self.end[x] < self.len
                && (self.begin[x] == self.bottom()) == (src >> x & 1 == 1)
                && (self.end[x] == self.top()) == (tgt >> x & 1 == 1)
                && self.begin[x] < self.top()
                && self.end[x] > self.bottom()
                && (0..n).all(|y| p.lt(x, y) == (self.end[x] < self.begin[y]))
        })
    }
}

/// Builds the representation from the chain of distinct strict down-sets:
/// `x` begins at the rank of its own down-set and ends at the last down-set
/// not containing it. Sources are then moved to bottom and targets to top.
pub fn interval_representation(p: &Iposet) -> Result<IntervalRep> {
    let n = p.len();
    let mut downs: Vec<u64> = (0..n).map(|x| p.down_set(x)).collect();
    downs.sort_by_key(|d| d.count_ones());
    downs.dedup();
    if downs.windows(2).any(|w| w[0] & !w[1] != 0) {
        return Err(Error::NotIntervalOrder);
    }
    let k = downs.len().saturating_sub(1);
    let (src, tgt) = (p.source_mask(), p.target_mask());
    let mut begin = vec![0; n];
    let mut end = vec![0; n];
    for x in 0..n {
        let b = downs.iter().position(|&d| d == p.down_set(x)).unwrap();
        let e = downs.iter().rposition(|&d| d >> x & 1 == 0).unwrap();
        begin[x] = if src >> x & 1 == 1 { 0 } else { b + 1 };
        end[x] = if tgt >> x & 1 == 1 { k + 2 } else { e + 1 };
    }
    Ok(IntervalRep {
        len: k + 3,
        begin,
        end,
    })
}
