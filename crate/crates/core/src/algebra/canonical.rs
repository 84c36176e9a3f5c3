//! Canonical forms.
//!
//! Points are first partitioned by iterated color refinement, seeded with
//! interface positions and up/down degrees. A depth-first search then fills
//! the color blocks position by position, keeping only the candidates whose
//! relation to the already placed prefix is least. The least leaf gives the
//! key; leaves equal to it give automorphisms, from which orbits follow.

use smallvec::SmallVec;

use crate::iposet::{bits, Iposet};

/// Byte string that depends only on the isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(SmallVec<[u8; 44]>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of points of the encoded iposet.
    pub fn len(&self) -> usize {
        self.0[0] as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dom(&self) -> usize {
        self.0[1] as usize
    }

    pub fn cod(&self) -> usize {
        self.0[2] as usize
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub key: CanonicalKey,
    /// `order[i]` is the point placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Least point of each automorphism orbit.
    pub orbit: Vec<usize>,
    /// Generators of the automorphism group.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Canonical position of each point.
    pub fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }
}

pub fn canonical_form(p: &Iposet) -> CanonicalKey {
    canonical_labeling(p).key
}

/// The canonical representative: point `order[i]` renamed to `i`.
pub fn canonical_relabel(p: &Iposet) -> Iposet {
    let lab = canonical_labeling(p);
    p.relabel_unchecked(&lab.position())
}

/// Stable coloring of the points. Colors are ranks of isomorphism-invariant
/// signatures, so equal structure gets equal colors across iposets.
pub(crate) fn refine_colors(p: &Iposet) -> Vec<u32> {
    let n = p.len();
    let mut seed: Vec<u64> = vec![0; n];
    for (k, s) in p.sources().enumerate() {
        seed[s] |= (k as u64 + 1) << 48;
    }
    for (k, t) in p.targets().enumerate() {
        seed[t] |= (k as u64 + 1) << 32;
    }
    for (x, v) in seed.iter_mut().enumerate() {
        *v |= (p.down_set(x).count_ones() as u64) << 16 | p.up_set(x).count_ones() as u64;
    }
    let mut colors = rank(&seed);
    let mut classes = count_classes(&colors);
    while classes < n {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|x| {
                let mut down: SmallVec<[u32; 16]> =
                    bits(p.down_set(x)).map(|y| colors[y]).collect();
                let mut up: SmallVec<[u32; 16]> = bits(p.up_set(x)).map(|y| colors[y]).collect();
                down.sort_unstable();
                up.sort_unstable();
                let mut sig = Vec::with_capacity(down.len() + up.len() + 2);
                sig.push(colors[x]);
                sig.extend_from_slice(&down);
                sig.push(u32::MAX);
                sig.extend_from_slice(&up);
                sig
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = count_classes(&next);
        if next_classes == classes {
            break;
        }
        colors = next;
        classes = next_classes;
    }
    colors
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut sorted: Vec<&T> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(&s).unwrap() as u32)
        .collect()
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

struct Search<'a> {
    p: &'a Iposet,
    color: Vec<u32>,
    cell: Vec<u32>,
    /// Twins of `x` with a smaller index; `x` is skipped while one is unplaced.
    twin_before: Vec<u64>,
    placed: u64,
    order: Vec<usize>,
    rows: Vec<u128>,
    best_order: Vec<usize>,
    best_rows: Vec<u128>,
    have_best: bool,
    parent: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn row_of(&self, x: usize, d: usize) -> u128 {
        let mut row = 0u128;
        let (up, down) = (self.p.up_set(x), self.p.down_set(x));
        for (q, &y) in self.order[..d].iter().enumerate() {
            row |= ((down >> y & 1) as u128) << (2 * q) | ((up >> y & 1) as u128) << (2 * q + 1);
        }
        row
    }

    /// Returns true if the best leaf was replaced inside this subtree.
    fn dfs(&mut self, d: usize, mut equal: bool) -> bool {
        let n = self.color.len();
        if d == n {
            if self.have_best && equal {
                let mut g = vec![0; n];
                for i in 0..n {
                    g[self.best_order[i]] = self.order[i];
                    union(&mut self.parent, self.best_order[i], self.order[i]);
                }
                self.generators.push(g);
                return false;
            }
            self.best_order.copy_from_slice(&self.order);
            self.best_rows.copy_from_slice(&self.rows);
            self.have_best = true;
            return true;
        }
        let want = self.cell[d];
        let mut cands: SmallVec<[(u128, usize); 16]> = SmallVec::new();
        for x in 0..n {
            if self.placed >> x & 1 == 0
                && self.color[x] == want
                && self.twin_before[x] & !self.placed == 0
            {
                cands.push((self.row_of(x, d), x));
            }
        }
        let min_row = cands.iter().map(|c| c.0).min().expect("color block not empty");
        if self.have_best && equal {
            if min_row > self.best_rows[d] {
                return false;
            }
            if min_row < self.best_rows[d] {
                equal = false;
            }
        } else if !self.have_best {
            equal = false;
        }
        let mut replaced = false;
        for &(row, x) in cands.iter().filter(|c| c.0 == min_row) {
            self.placed |= 1 << x;
            self.order[d] = x;
            self.rows[d] = row;
            if self.dfs(d + 1, equal) {
                replaced = true;
                equal = true;
            }
            self.placed &= !(1 << x);
        }
        replaced
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

pub fn canonical_labeling(p: &Iposet) -> Labeling {
    let n = p.len();
    let color = refine_colors(p);
    let mut cell = color.clone();
    cell.sort_unstable();
    let interface = p.source_mask() | p.target_mask();
    let mut twin_before = vec![0u64; n];
    let mut parent: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in 0..x {
            if interface >> x & 1 == 0
                && interface >> y & 1 == 0
                && p.up_set(x) == p.up_set(y)
                && p.down_set(x) == p.down_set(y)
            {
                twin_before[x] |= 1 << y;
                union(&mut parent, x, y);
            }
        }
    }
    let mut s = Search {
        p,
        color,
        cell,
        twin_before,
        placed: 0,
        order: vec![0; n],
        rows: vec![0; n],
        best_order: vec![0; n],
        best_rows: vec![0; n],
        have_best: false,
        parent,
        generators: Vec::new(),
    };
    s.dfs(0, false);
    let order = s.best_order;
    let mut pos = vec![0usize; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let width = n.div_ceil(8);
    let mut key: SmallVec<[u8; 44]> = SmallVec::with_capacity(3 + p.dom() + p.cod() + n * width);
    key.push(n as u8);
    key.push(p.dom() as u8);
    key.push(p.cod() as u8);
    key.extend(p.sources().map(|x| pos[x] as u8));
    key.extend(p.targets().map(|x| pos[x] as u8));
    for &x in &order {
        let row = bits(p.up_set(x)).fold(0u64, |m, y| m | 1 << pos[y]);
        key.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    let mut generators = s.generators;
    for x in 0..n {
        if s.twin_before[x] != 0 {
            let y = 63 - s.twin_before[x].leading_zeros() as usize;
            let mut g: Vec<usize> = (0..n).collect();
            g.swap(x, y);
            generators.push(g);
        }
    }
    let mut parent = s.parent;
    let orbit = (0..n).map(|x| find(&mut parent, x)).collect();
    Labeling {
        key: CanonicalKey(key),
        order,
        orbit,
        generators,
    }
}
