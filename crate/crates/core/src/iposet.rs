//! The iposet data model and its structural predicates.
//!
//! An [`Iposet`] is a strict partial order on the points `0..n` together with
//! two ordered, injective interface sequences: sources (minimal points) and
//! targets (maximal points). The full transitive relation is stored as one
//! `u64` bitset row per point, so `n <= 64`.

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 64;

pub(crate) type Rows = SmallVec<[u64; 12]>;
pub(crate) type Seq = SmallVec<[u8; 8]>;

#[inline]
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Iposet {
    /// `up[x]` has bit `y` iff `x < y`.
    up: Rows,
    /// `down[y]` has bit `x` iff `x < y`.
    down: Rows,
    sources: Seq,
    targets: Seq,
}

/// A poset is an iposet with empty interfaces.
pub type Poset = Iposet;

fn check_interface(n: usize, seq: &[usize]) -> Result<u64> {
    let mut seen = 0u64;
    for &x in seq {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x, n });
        }
        if seen >> x & 1 == 1 {
            return Err(Error::DuplicateInterfacePoint(x));
        }
        seen |= 1 << x;
    }
    Ok(seen)
}

impl Iposet {
    /// Builds an iposet from any generating set of pairs; the relation is
    /// transitively closed here.
    pub fn new(
        n: usize,
        pairs: &[(usize, usize)],
        sources: &[usize],
        targets: &[usize],
    ) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::Overflow(n));
        }
        let mut up: Rows = smallvec::smallvec![0; n];
        for &(a, b) in pairs {
            for i in [a, b] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            up[a] |= 1 << b;
        }
        for k in 0..n {
            let row = up[k];
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= row;
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| up[x] >> x & 1 == 1) {
            return Err(Error::CycleDetected(x));
        }
        Self::from_closed_rows(up, sources, targets)
    }

    /// Builds from an already transitive, irreflexive relation.
    pub(crate) fn from_closed_rows(up: Rows, sources: &[usize], targets: &[usize]) -> Result<Self> {
        let n = up.len();
        check_interface(n, sources)?;
        check_interface(n, targets)?;
        let down = transpose(&up);
        for &s in sources {
            if down[s] != 0 {
                return Err(Error::NotMinimal(s));
            }
        }
        for &t in targets {
            if up[t] != 0 {
                return Err(Error::NotMaximal(t));
            }
        }
        Ok(Iposet {
            up,
            down,
            sources: sources.iter().map(|&x| x as u8).collect(),
            targets: targets.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Trusted constructor for internal operations that preserve every invariant.
    pub(crate) fn from_parts(up: Rows, sources: Seq, targets: Seq) -> Self {
        let down = transpose(&up);
        let p = Iposet {
            up,
            down,
            sources,
            targets,
        };
        debug_assert!(p.validate().is_ok(), "{:?}", p.validate());
        p
    }

    pub fn poset(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs, &[], &[])
    }

    pub fn empty() -> Self {
        Self::from_parts(Rows::new(), Seq::new(), Seq::new())
    }

    /// The discrete poset `[n]`.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self::from_parts(smallvec::smallvec![0; n], Seq::new(), Seq::new())
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let up = (0..n).map(|i| full_mask(n) & !full_mask(i + 1)).collect();
        Self::from_parts(up, Seq::new(), Seq::new())
    }

    /// The glue unit on `n` interface points.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        let seq: Seq = (0..n as u8).collect();
        Self::from_parts(smallvec::smallvec![0; n], seq.clone(), seq)
    }

    /// Re-checks every invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if n > MAX_POINTS {
            return Err(Error::Overflow(n));
        }
        for x in 0..n {
            if self.up[x] >> x & 1 == 1 || self.up[x] & !full_mask(n) != 0 {
                return Err(Error::CycleDetected(x));
            }
            for y in bits(self.up[x]) {
                if self.up[y] & !self.up[x] != 0 {
                    return Err(Error::CycleDetected(x));
                }
            }
        }
        if transpose(&self.up) != self.down {
            return Err(Error::CycleDetected(0));
        }
        let src: Vec<usize> = self.sources().collect();
        let tgt: Vec<usize> = self.targets().collect();
        Iposet::from_closed_rows(self.up.clone(), &src, &tgt).map(|_| ())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// Number of sources.
    #[inline]
    pub fn dom(&self) -> usize {
        self.sources.len()
    }

    /// Number of targets.
    #[inline]
    pub fn cod(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        (self.up[x] | self.down[x]) >> y & 1 == 1
    }

    /// Strict up-set of `x` as a bitmask.
    #[inline]
    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    /// Strict down-set of `x` as a bitmask.
    #[inline]
    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    pub(crate) fn up_rows(&self) -> &[u64] {
        &self.up
    }

    pub fn sources(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.sources.iter().map(|&x| x as usize)
    }

    pub fn targets(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.targets.iter().map(|&x| x as usize)
    }

    pub fn source(&self, k: usize) -> usize {
        self.sources[k] as usize
    }

    pub fn target(&self, k: usize) -> usize {
        self.targets[k] as usize
    }

    pub(crate) fn source_seq(&self) -> &[u8] {
        &self.sources
    }

    pub(crate) fn target_seq(&self) -> &[u8] {
        &self.targets
    }

    pub fn source_mask(&self) -> u64 {
        self.sources.iter().fold(0, |m, &x| m | 1 << x)
    }

    pub fn target_mask(&self) -> u64 {
        self.targets.iter().fold(0, |m, &x| m | 1 << x)
    }

    /// Interface index of `x` as a source.
    pub fn source_index(&self, x: usize) -> Option<usize> {
        self.sources.iter().position(|&s| s as usize == x)
    }

    /// Interface index of `x` as a target.
    pub fn target_index(&self, x: usize) -> Option<usize> {
        self.targets.iter().position(|&t| t as usize == x)
    }

    pub fn minimal_mask(&self) -> u64 {
        (0..self.len()).filter(|&x| self.down[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn maximal_mask(&self) -> u64 {
        (0..self.len()).filter(|&x| self.up[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All pairs `(x, y)` with `x < y`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| bits(self.up[x]).map(move |y| (x, y)))
            .collect()
    }

    pub fn has_interfaces(&self) -> bool {
        !self.sources.is_empty() || !self.targets.is_empty()
    }

    /// Same order with both interfaces dropped.
    pub fn underlying(&self) -> Poset {
        Iposet {
            up: self.up.clone(),
            down: self.down.clone(),
            sources: Seq::new(),
            targets: Seq::new(),
        }
    }

    /// Same order with new interfaces.
    pub fn with_interfaces(&self, sources: &[usize], targets: &[usize]) -> Result<Self> {
        Self::from_closed_rows(self.up.clone(), sources, targets)
    }

    /// Reversed order with sources and targets exchanged.
    pub fn opposite(&self) -> Self {
        Iposet {
            up: self.down.clone(),
            down: self.up.clone(),
            sources: self.targets.clone(),
            targets: self.sources.clone(),
        }
    }

    /// Renames point `x` to `perm[x]`; `perm` must be a bijection on `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.len();
        if perm.len() != n || !is_permutation(perm) {
            return Err(Error::NotABijection);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut up: Rows = smallvec::smallvec![0; n];
        for x in 0..n {
            up[perm[x]] = map_mask(self.up[x], perm);
        }
        let sources = self.sources.iter().map(|&x| perm[x as usize] as u8).collect();
        let targets = self.targets.iter().map(|&x| perm[x as usize] as u8).collect();
        Self::from_parts(up, sources, targets)
    }

    pub fn is_discrete(&self) -> bool {
        self.up.iter().all(|&r| r == 0)
    }

    /// Discrete with every point a target.
    pub fn is_starter(&self) -> bool {
        self.is_discrete() && self.cod() == self.len()
    }

    /// Discrete with every point a source.
    pub fn is_terminator(&self) -> bool {
        self.is_discrete() && self.dom() == self.len()
    }

    pub fn is_symmetry(&self) -> bool {
        self.is_starter() && self.is_terminator()
    }

    /// Sources and targets order the points they share in the same way.
    pub fn is_interface_consistent(&self) -> bool {
        let both = self.source_mask() & self.target_mask();
        if both.count_ones() < 2 {
            return true;
        }
        let mut last_target_index = None;
        for &s in &self.sources {
            if both >> s & 1 == 1 {
                let t = self.target_index(s as usize);
                if t < last_target_index {
                    return false;
                }
                last_target_index = t;
            }
        }
        true
    }

    pub fn interface_order(&self) -> Result<InterfaceOrder> {
        if !self.is_interface_consistent() {
            return Err(Error::NotInterfaceConsistent);
        }
        let n = self.len();
        let mut rel: Rows = smallvec::smallvec![0; n];
        for seq in [&self.sources, &self.targets] {
            for (i, &x) in seq.iter().enumerate() {
                for &y in &seq[i + 1..] {
                    rel[x as usize] |= 1 << y;
                }
            }
        }
        // The union of the two chains is closed to make it transitive.
        for k in 0..n {
            let row = rel[k];
            for i in 0..n {
                if rel[i] >> k & 1 == 1 {
                    rel[i] |= row;
                }
            }
        }
        Ok(InterfaceOrder { rel })
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Components of the comparability graph, each a bitmask, ordered by least point.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = full_mask(self.len());
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = bits(comp).fold(comp, |m, x| m | self.up[x] | self.down[x]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    /// Restriction of the order to `subset`, renumbered in increasing index order.
    pub fn induced_subposet(&self, subset: &[usize]) -> Result<Poset> {
        let mut mask = 0u64;
        for &x in subset {
            if x >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    n: self.len(),
                });
            }
            mask |= 1 << x;
        }
        Ok(self.restrict(mask).0)
    }

    /// Restriction to `mask` with interfaces dropped, plus the new-to-old point map.
    pub(crate) fn restrict(&self, mask: u64) -> (Poset, Vec<usize>) {
        let old: Vec<usize> = bits(mask).collect();
        let mut new_of = [u8::MAX; MAX_POINTS];
        for (i, &x) in old.iter().enumerate() {
            new_of[x] = i as u8;
        }
        let up = old
            .iter()
            .map(|&x| bits(self.up[x] & mask).fold(0u64, |m, y| m | 1 << new_of[y]))
            .collect();
        (Self::from_parts(up, Seq::new(), Seq::new()), old)
    }

    /// Restriction to `mask` with the given interfaces (old point indices),
    /// plus the new-to-old point map.
    pub(crate) fn restrict_with(
        &self,
        mask: u64,
        sources: impl IntoIterator<Item = usize>,
        targets: impl IntoIterator<Item = usize>,
    ) -> (Iposet, Vec<usize>) {
        let (mut q, old) = self.restrict(mask);
        let mut new_of = [u8::MAX; MAX_POINTS];
        for (i, &x) in old.iter().enumerate() {
            new_of[x] = i as u8;
        }
        q.sources = sources.into_iter().map(|x| new_of[x]).collect();
        q.targets = targets.into_iter().map(|x| new_of[x]).collect();
        debug_assert!(q.validate().is_ok(), "{:?}", q.validate());
        (q, old)
    }

    /// Restriction to `mask` keeping the interface points inside it in their
    /// original relative order.
    pub(crate) fn restrict_keep(&self, mask: u64) -> Iposet {
        let s: SmallVec<[usize; 8]> = self.sources().filter(|&x| mask >> x & 1 == 1).collect();
        let t: SmallVec<[usize; 8]> = self.targets().filter(|&x| mask >> x & 1 == 1).collect();
        self.restrict_with(mask, s, t).0
    }

    /// Removes one point, dropping interfaces.
    pub fn delete_point(&self, x: usize) -> Poset {
        self.restrict(full_mask(self.len()) & !(1 << x)).0
    }
}

/// The order `≺` induced on interface points by source and target numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceOrder {
    rel: Rows,
}

impl InterfaceOrder {
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.rel[x] >> y & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.rel.len())
            .flat_map(|x| bits(self.rel[x]).map(move |y| (x, y)))
            .collect()
    }

    /// Points in an order extending `≺`, ties broken by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.rel.len();
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let x = (0..n)
                .find(|&x| placed >> x & 1 == 0 && (0..n).all(|y| placed >> y & 1 == 1 || !self.precedes(y, x)))
                .expect("interface order is acyclic");
            placed |= 1 << x;
            out.push(x);
        }
        out
    }
}

pub(crate) fn transpose(up: &[u64]) -> Rows {
    let mut down: Rows = smallvec::smallvec![0; up.len()];
    for (x, &row) in up.iter().enumerate() {
        for y in bits(row) {
            down[y] |= 1 << x;
        }
    }
    down
}

#[inline]
pub(crate) fn map_mask(mask: u64, perm: &[usize]) -> u64 {
    bits(mask).fold(0, |m, y| m | 1 << perm[y])
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = 0u64;
    perm.len() <= MAX_POINTS
        && perm.iter().all(|&p| {
            let fresh = p < perm.len() && seen >> p & 1 == 0;
            seen |= 1u64.checked_shl(p as u32).unwrap_or(0);
            fresh
        })
}

/// Discrete iposet with sources `0..n` and `t⁻¹ ∘ s = perm`.
pub fn symmetry_from_permutation(perm: &[usize]) -> Result<Iposet> {
    if !is_permutation(perm) {
        return Err(Error::NotABijection);
    }
    let n = perm.len();
    let mut targets = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        targets[p] = i;
    }
    let sources: Vec<usize> = (0..n).collect();
    Iposet::new(n, &[], &sources, &targets)
}
