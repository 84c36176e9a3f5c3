//! Backtracking matcher behind isomorphism, subsumption, induced embeddings
//! and automorphism groups.

use crate::algebra::canonical::refine_colors;
use crate::iposet::{bits, Iposet};

/// A point map `x -> map[x]` between two iposets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionWitness(pub Vec<usize>);

impl BijectionWitness {
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Bijective, preserves and reflects order, preserves interfaces.
    Iso,
    /// Bijective, reflects order, preserves interfaces.
    Subsume,
    /// Injective, preserves and reflects order, ignores interfaces.
    Embed,
}

struct Matcher<'a> {
    a: &'a Iposet,
    b: &'a Iposet,
    mode: Mode,
    /// Candidate mask in `b` for each point of `a`.
    allowed: Vec<u64>,
    map: Vec<usize>,
    order: Vec<usize>,
    used: u64,
}

impl Matcher<'_> {
    fn fits(&self, x: usize, y: usize, depth: usize) -> bool {
        for &z in &self.order[..depth] {
            let w = self.map[z];
            let (ab, ba) = (self.a.lt(z, x), self.a.lt(x, z));
            let (yb, by) = (self.b.lt(w, y), self.b.lt(y, w));
            let ok = match self.mode {
                Mode::Iso | Mode::Embed => ab == yb && ba == by,
                Mode::Subsume => (!yb || ab) && (!by || ba),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn search(&mut self, depth: usize, sink: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return sink(&self.map);
        }
        let x = self.order[depth];
        for y in bits(self.allowed[x] & !self.used) {
            if self.fits(x, y, depth) {
                self.map[x] = y;
                self.used |= 1 << y;
                let stop = self.search(depth + 1, sink);
                self.used &= !(1 << y);
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Assignment order: interface-forced points first, then points most tied to
/// already ordered ones, ties broken by comparability degree.
fn constraint_order(a: &Iposet, allowed: &[u64]) -> Vec<usize> {
    let n = a.len();
    let mut order = Vec::with_capacity(n);
    let mut done = 0u64;
    while order.len() < n {
        let x = (0..n)
            .filter(|&x| done >> x & 1 == 0)
            .max_by_key(|&x| {
                let nb = a.up_set(x) | a.down_set(x);
                (
                    allowed[x].count_ones() == 1,
                    (nb & done).count_ones(),
                    nb.count_ones(),
                    usize::MAX - x,
                )
            })
            .unwrap();
        done |= 1 << x;
        order.push(x);
    }
    order
}

fn interface_forcing(a: &Iposet, b: &Iposet, allowed: &mut [u64]) -> bool {
    if a.dom() != b.dom() || a.cod() != b.cod() {
        return false;
    }
    let b_iface = b.source_mask() | b.target_mask();
    let a_iface = a.source_mask() | a.target_mask();
    for (x, m) in allowed.iter_mut().enumerate() {
        if a_iface >> x & 1 == 0 {
            *m &= !b_iface;
        }
    }
    for k in 0..a.dom() {
        allowed[a.source(k)] &= 1 << b.source(k);
    }
    for k in 0..a.cod() {
        allowed[a.target(k)] &= 1 << b.target(k);
    }
    allowed.iter().all(|&m| m != 0)
}

fn run(a: &Iposet, b: &Iposet, mode: Mode, sink: &mut dyn FnMut(&[usize]) -> bool) {
    let (na, nb) = (a.len(), b.len());
    let mut allowed = vec![0u64; na];
    for (x, m) in allowed.iter_mut().enumerate() {
        let (ua, da) = (a.up_set(x).count_ones(), a.down_set(x).count_ones());
        for y in 0..nb {
            let (ub, db) = (b.up_set(y).count_ones(), b.down_set(y).count_ones());
            let ok = match mode {
                Mode::Iso => ua == ub && da == db,
                Mode::Subsume => ub <= ua && db <= da,
                Mode::Embed => ub >= ua && db >= da,
            };
            if ok {
                *m |= 1 << y;
            }
        }
    }
    if mode != Mode::Embed && !interface_forcing(a, b, &mut allowed) {
        return;
    }
    if mode == Mode::Iso {
        // Colors are ranks of invariant signatures, so an isomorphism maps
        // each point to a point of the same color.
        let (ca, cb) = (refine_colors(a), refine_colors(b));
        for (x, m) in allowed.iter_mut().enumerate() {
            *m &= (0..nb).filter(|&y| cb[y] == ca[x]).fold(0, |acc, y| acc | 1 << y);
        }
    }
    if allowed.iter().any(|&m| m == 0) {
        return;
    }
    let order = constraint_order(a, &allowed);
    let mut m = Matcher {
        a,
        b,
        mode,
        allowed,
        map: vec![usize::MAX; na],
        order,
        used: 0,
    };
    m.search(0, sink);
}

fn first(a: &Iposet, b: &Iposet, mode: Mode) -> Option<BijectionWitness> {
    let mut found = None;
    run(a, b, mode, &mut |m| {
        found = Some(BijectionWitness(m.to_vec()));
        true
    });
    found
}

/// An interface-preserving order isomorphism `p -> q`, if any.
pub fn is_isomorphic(p: &Iposet, q: &Iposet) -> Option<BijectionWitness> {
    if p.len() != q.len() || p.relation_count() != q.relation_count() {
        return None;
    }
    first(p, q, Mode::Iso)
}

/// A witness of `p ⪯ q`: an interface-preserving bijection `f` with
/// `f(x) < f(y) ⇒ x < y`.
pub fn subsumes(p: &Iposet, q: &Iposet) -> Option<BijectionWitness> {
    if p.len() != q.len() || q.relation_count() > p.relation_count() {
        return None;
    }
    first(p, q, Mode::Subsume)
}

/// An injection `pattern -> host` that preserves and reflects order.
/// Interfaces are ignored.
pub fn find_embedding(host: &Iposet, pattern: &Iposet) -> Option<Vec<usize>> {
    if pattern.len() > host.len() {
        return None;
    }
    let mut found = None;
    run(pattern, host, Mode::Embed, &mut |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

/// Every automorphism of `p`, identity first.
pub fn automorphisms(p: &Iposet) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    run(p, p, Mode::Iso, &mut |m| {
        all.push(m.to_vec());
        false
    });
    all.sort();
    all
}
