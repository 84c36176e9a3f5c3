//! Characteristic functions: candidate gluing decompositions `P = Q ∗ R`.
//!
//! Past points lie only in `Q`, Future points only in `R`, and Cut points
//! form the shared interface (targets of `Q`, sources of `R`).

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::iposet::{bits, Iposet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    Past,
    Cut,
    Future,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharFn {
    phases: Vec<Phase>,
    past: u64,
    cut: u64,
    future: u64,
}

impl CharFn {
    pub fn new(phases: Vec<Phase>) -> Self {
        let mut masks = [0u64; 3];
        for (x, &ph) in phases.iter().enumerate() {
            masks[ph as usize] |= 1 << x;
        }
        CharFn {
            phases,
            past: masks[0],
            cut: masks[1],
            future: masks[2],
        }
    }

    fn from_masks(n: usize, past: u64, cut: u64) -> Self {
        let phases = (0..n)
            .map(|x| {
                if past >> x & 1 == 1 {
                    Phase::Past
                } else if cut >> x & 1 == 1 {
                    Phase::Cut
                } else {
                    Phase::Future
                }
            })
            .collect();
        CharFn::new(phases)
    }

    pub fn phase(&self, x: usize) -> Phase {
        self.phases[x]
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn past(&self) -> u64 {
        self.past
    }

    pub fn cut(&self) -> u64 {
        self.cut
    }

    pub fn future(&self) -> u64 {
        self.future
    }

    /// Checks all conditions, including non-triviality.
    pub fn validate(&self, p: &Iposet) -> Result<()> {
        if self.phases.len() != p.len() {
            return Err(Error::InvalidCharFn("wrong number of points"));
        }
        if p.source_mask() & self.future != 0 || p.target_mask() & self.past != 0 {
            return Err(Error::InvalidCharFn("interface point in the wrong phase"));
        }
        for x in bits(self.past) {
            if self.future & !p.up_set(x) != 0 {
                return Err(Error::InvalidCharFn("past point not below a future point"));
            }
        }
        for x in bits(self.cut | self.future) {
            if p.up_set(x) & self.past != 0 {
                return Err(Error::InvalidCharFn("point below a past point"));
            }
        }
        for x in bits(self.cut) {
            if p.down_set(x) & (self.future | self.cut) != 0 {
                return Err(Error::InvalidCharFn("cut point above a cut or future point"));
            }
        }
        if self.past == 0 || self.future == 0 {
            return Err(Error::InvalidCharFn("trivial decomposition"));
        }
        Ok(())
    }
}

/// All non-trivial characteristic functions of `p`, in a fixed order.
pub fn enumerate_char_fns(p: &Iposet) -> impl Iterator<Item = CharFn> {
    let mut out = Vec::new();
    let n = p.len();
    let (src, tgt) = (p.source_mask(), p.target_mask());
    let mut masks = [0u64; 3];
    char_fn_rec(p, 0, n, src, tgt, &mut masks, &mut |m| {
        out.push(CharFn::from_masks(n, m[0], m[1]))
    });
    out.into_iter()
}

fn char_fn_rec(
    p: &Iposet,
    x: usize,
    n: usize,
    src: u64,
    tgt: u64,
    m: &mut [u64; 3],
    sink: &mut dyn FnMut(&[u64; 3]),
) {
    if x == n {
        if m[0] != 0 && m[2] != 0 {
            sink(m);
        }
        return;
    }
    let (up, down) = (p.up_set(x), p.down_set(x));
    let [past, cut, future] = *m;
    let bit = 1u64 << x;
    let ok = [
        tgt & bit == 0 && down & (cut | future) == 0 && future & !up == 0,
        (up | down) & cut == 0 && up & past == 0 && down & future == 0,
        src & bit == 0 && up & (past | cut) == 0 && past & !down == 0,
    ];
    for (ph, &allowed) in ok.iter().enumerate() {
        if allowed {
            m[ph] |= bit;
            char_fn_rec(p, x + 1, n, src, tgt, m, sink);
            m[ph] &= !bit;
        }
    }
}

/// Cheap necessary test for a non-trivial gluing decomposition: every point
/// with a largest up-set must lie below every point with a largest down-set.
/// Returns true when that fails, i.e. no decomposition exists.
pub fn quick_reject_gluing(p: &Iposet) -> bool {
    let n = p.len();
    let max_up = (0..n).map(|x| p.up_set(x).count_ones()).max().unwrap_or(0);
    let max_down = (0..n).map(|x| p.down_set(x).count_ones()).max().unwrap_or(0);
    let b: u64 = (0..n)
        .filter(|&y| p.down_set(y).count_ones() == max_down)
        .fold(0, |m, y| m | 1 << y);
    (0..n)
        .filter(|&x| p.up_set(x).count_ones() == max_up)
        .any(|x| b & !p.up_set(x) != 0)
}

/// Orders of the cut points compatible with the source numbering and the
/// target numbering of `p`.
pub fn middle_orders(p: &Iposet, phi: &CharFn) -> Vec<Vec<usize>> {
    let cut = phi.cut();
    let pts: SmallVec<[usize; 16]> = bits(cut).collect();
    let mut before = [0u64; 64];
    for seq in [p.source_seq(), p.target_seq()] {
        let on_cut: SmallVec<[usize; 16]> = seq
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| cut >> x & 1 == 1)
            .collect();
        for w in on_cut.windows(2) {
            before[w[1]] |= 1 << w[0];
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(pts.len());
    extensions(&pts, &before, 0, &mut cur, &mut out);
    out
}

fn extensions(pts: &[usize], before: &[u64; 64], placed: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == pts.len() {
        out.push(cur.clone());
        return;
    }
    for &x in pts {
        if placed >> x & 1 == 0 && before[x] & !placed == 0 {
            cur.push(x);
            extensions(pts, before, placed | 1 << x, cur, out);
            cur.pop();
        }
    }
}

/// The two factors of a decomposition together with their point maps into `p`.
#[derive(Clone, Debug)]
pub struct Split {
    pub first: Iposet,
    pub second: Iposet,
    /// `first_points[i]` is the point of `p` that is point `i` of `first`.
    pub first_points: Vec<usize>,
    pub second_points: Vec<usize>,
}

impl Split {
    /// Map from points of `glue(first, second)` to points of `p`.
    pub fn glue_point_map(&self) -> Vec<usize> {
        let mut map = self.first_points.clone();
        let src = self.second.source_mask();
        map.extend(
            self.second_points
                .iter()
                .enumerate()
                .filter(|&(i, _)| src >> i & 1 == 0)
                .map(|(_, &x)| x),
        );
        map
    }
}

/// Cuts `p` into `q` on Past ∪ Cut and `r` on Cut ∪ Future, with the cut
/// points numbered by `middle` as targets of `q` and sources of `r`.
pub fn split_by_char_fn(p: &Iposet, phi: &CharFn, middle: &[usize]) -> Result<(Iposet, Iposet)> {
    split_with_maps(p, phi, middle).map(|s| (s.first, s.second))
}

pub fn split_with_maps(p: &Iposet, phi: &CharFn, middle: &[usize]) -> Result<Split> {
    phi.validate(p)?;
    let cut = phi.cut();
    let listed = middle.iter().try_fold(0u64, |m, &x| {
        if x < p.len() && m >> x & 1 == 0 {
            Ok(m | 1 << x)
        } else {
            Err(Error::InvalidCharFn("middle order is not a permutation of the cut"))
        }
    })?;
    if listed != cut {
        return Err(Error::InvalidCharFn("middle order is not a permutation of the cut"));
    }
    let rank = |x: usize| middle.iter().position(|&y| y == x).unwrap();
    for seq in [p.source_seq(), p.target_seq()] {
        let ranks: SmallVec<[usize; 16]> = seq
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| cut >> x & 1 == 1)
            .map(rank)
            .collect();
        if ranks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::IncompatibleOrdering);
        }
    }
    Ok(split_unchecked(p, phi, middle))
}

pub(crate) fn split_unchecked(p: &Iposet, phi: &CharFn, middle: &[usize]) -> Split {
    let (first, first_points) = p.restrict_with(
        phi.past() | phi.cut(),
        p.sources(),
        middle.iter().copied(),
    );
    let (second, second_points) = p.restrict_with(
        phi.cut() | phi.future(),
        middle.iter().copied(),
        p.targets(),
    );
    Split {
        first,
        second,
        first_points,
        second_points,
    }
}
