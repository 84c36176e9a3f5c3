//! Brute-force oracles that share no code with the library's search
//! routines: everything here enumerates permutations or subsets directly.

#![allow(dead_code)]

use std::collections::BTreeSet;

use iposet_core::Iposet;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Encoding of `p` after renaming point `x` to `perm[x]`.
pub fn encode(p: &Iposet, perm: &[usize]) -> Vec<u8> {
    let n = p.len();
    let mut m = vec![0u8; n * n];
    for (a, b) in p.pairs() {
        m[perm[a] * n + perm[b]] = 1;
    }
    let mut out = vec![n as u8, p.dom() as u8, p.cod() as u8];
    out.extend(p.sources().map(|x| perm[x] as u8));
    out.extend(p.targets().map(|x| perm[x] as u8));
    out.extend(m);
    out
}

/// Least encoding over all relabellings.
pub fn brute_key(p: &Iposet) -> Vec<u8> {
    permutations(p.len()).iter().map(|g| encode(p, g)).min().unwrap()
}

pub fn brute_iso(p: &Iposet, q: &Iposet) -> bool {
    p.len() == q.len() && brute_key(p) == brute_key(q)
}

/// Every labelled strict order on `0..n`: each transitive, acyclic relation,
/// found by closing every subset of pairs `i < j` of some labelling.
pub fn labelled_posets(n: usize) -> Vec<Iposet> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // A strict order is its own transitive closure, so test every subset of
    // ordered pairs for transitivity and asymmetry directly.
    for mask in 0u64..(1 << pairs.len()) {
        let rel = |a: usize, b: usize| {
            pairs
                .iter()
                .position(|&p| p == (a, b))
                .is_some_and(|i| mask >> i & 1 == 1)
        };
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                !(rel(a, b) && rel(b, a))
                    && (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))
            })
        });
        if ok {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if seen.insert(chosen.clone()) {
                out.push(Iposet::poset(n, &chosen).unwrap());
            }
        }
    }
    out
}

/// Every injective sequence drawn from `pool`.
pub fn sequences(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    while let Some(seq) = frontier.pop() {
        for &x in pool {
            if !seq.contains(&x) {
                let mut next = seq.clone();
                next.push(x);
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out
}

/// Every labelled iposet on `0..n`.
pub fn labelled_iposets(n: usize) -> Vec<Iposet> {
    let mut out = Vec::new();
    for p in labelled_posets(n) {
        let mins: Vec<usize> = (0..n).filter(|&x| p.down_set(x) == 0).collect();
        let maxs: Vec<usize> = (0..n).filter(|&x| p.up_set(x) == 0).collect();
        for s in sequences(&mins) {
            for t in sequences(&maxs) {
                out.push(p.with_interfaces(&s, &t).unwrap());
            }
        }
    }
    out
}

/// Number of isomorphism classes among labelled iposets on `n` points.
pub fn brute_class_count(all: &[Iposet]) -> usize {
    all.iter().map(brute_key).collect::<BTreeSet<_>>().len()
}

/// Induced-subposet test by trying every injection.
pub fn brute_contains(host: &Iposet, pattern: &Iposet) -> bool {
    let (h, k) = (host.len(), pattern.len());
    if k > h {
        return false;
    }
    let pool: Vec<usize> = (0..h).collect();
    sequences(&pool).into_iter().filter(|s| s.len() == k).any(|f| {
        (0..k).all(|a| (0..k).all(|b| pattern.lt(a, b) == host.lt(f[a], f[b])))
    })
}

/// Interface-preserving bijections `f` from `p` to `q` with `f(x) < f(y) ⇒ x < y`.
pub fn brute_subsumes(p: &Iposet, q: &Iposet) -> bool {
    p.len() == q.len()
        && p.dom() == q.dom()
        && p.cod() == q.cod()
        && permutations(p.len()).iter().any(|f| {
            p.sources().zip(q.sources()).all(|(a, b)| f[a] == b)
                && p.targets().zip(q.targets()).all(|(a, b)| f[a] == b)
                && (0..p.len()).all(|x| (0..p.len()).all(|y| !q.lt(f[x], f[y]) || p.lt(x, y)))
        })
}

/// Underlying poset.
pub fn bare(p: &Iposet) -> Iposet {
    p.underlying()
}
