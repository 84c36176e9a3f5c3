//! Closure of a seed set under gluing and parallel composition, bounded by
//! the number of points.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use dashmap::DashMap;
use rayon::prelude::*;

use crate::algebra::{canonical_form, glue, par, CanonicalKey};
use crate::error::{Error, Result};
use crate::iposet::Iposet;

/// Largest size accepted by [`generate_gp_closure`].
pub const CLOSURE_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ops {
    Glue,
    Par,
    Both,
}

/// The empty iposet and the four singletons.
pub fn gp_generators() -> Vec<Iposet> {
    let mut out = vec![Iposet::empty()];
    for (s, t) in [(false, false), (false, true), (true, false), (true, true)] {
        let src: &[usize] = if s { &[0] } else { &[] };
        let tgt: &[usize] = if t { &[0] } else { &[] };
        out.push(Iposet::new(1, &[], src, tgt).unwrap());
    }
    out
}

/// Canonical keys of all gp-iposets with at most `max_points` points.
pub fn generate_gp_closure(max_points: usize) -> Result<BTreeSet<CanonicalKey>> {
    Ok(gp_closure(max_points)?.into_keys().collect())
}

/// Representatives of all gp-iposets with at most `max_points` points.
pub fn gp_closure(max_points: usize) -> Result<BTreeMap<CanonicalKey, Iposet>> {
    if max_points > CLOSURE_CAP {
        return Err(Error::SizeCapExceeded {
            n: max_points,
            cap: CLOSURE_CAP,
        });
    }
    Ok(close(&gp_generators(), Ops::Both, max_points))
}

/// Least superset of `seeds` closed under `ops` among iposets with at most
/// `max_points` points.
pub fn close(seeds: &[Iposet], ops: Ops, max_points: usize) -> BTreeMap<CanonicalKey, Iposet> {
    let known: DashMap<CanonicalKey, Iposet> = DashMap::new();
    let mut frontier = Vec::new();
    for s in seeds.iter().filter(|s| s.len() <= max_points) {
        if known.insert(canonical_form(s), s.clone()).is_none() {
            frontier.push(s.clone());
        }
    }
    while !frontier.is_empty() {
        let all: Vec<Iposet> = known.iter().map(|e| e.value().clone()).collect();
        let mut by_dom: HashMap<usize, Vec<&Iposet>> = HashMap::new();
        let mut by_cod: HashMap<usize, Vec<&Iposet>> = HashMap::new();
        for q in &all {
            by_dom.entry(q.dom()).or_default().push(q);
            by_cod.entry(q.cod()).or_default().push(q);
        }
        let fresh: DashMap<CanonicalKey, Iposet> = DashMap::new();
        let offer = |r: Iposet| {
            let key = canonical_form(&r);
            if !known.contains_key(&key) {
                fresh.entry(key).or_insert(r);
            }
        };
        frontier.par_iter().for_each(|x| {
            if ops != Ops::Glue {
                for y in all.iter().filter(|y| x.len() + y.len() <= max_points) {
                    offer(par(x, y).unwrap());
                    offer(par(y, x).unwrap());
                }
            }
            if ops != Ops::Par {
                for y in by_dom.get(&x.cod()).into_iter().flatten() {
                    if x.len() + y.len() - x.cod() <= max_points {
                        offer(glue(x, y).unwrap());
                    }
                }
                for y in by_cod.get(&x.dom()).into_iter().flatten() {
                    if x.len() + y.len() - x.dom() <= max_points {
                        offer(glue(y, x).unwrap());
                    }
                }
            }
        });
        let mut next: Vec<(CanonicalKey, Iposet)> = fresh.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = Vec::with_capacity(next.len());
        for (k, v) in next {
            known.insert(k, v.clone());
            frontier.push(v);
        }
    }
    known.into_iter().collect()
}

/// `S_0 = seeds` and `S_{i+1}` the glue-closure of the par-closure of `S_i`,
/// for `i < levels`, each bounded by `max_points`.
pub fn hierarchy(
    seeds: &[Iposet],
    max_points: usize,
    levels: usize,
) -> Vec<BTreeMap<CanonicalKey, Iposet>> {
    let mut out: Vec<BTreeMap<CanonicalKey, Iposet>> = vec![seeds
        .iter()
        .filter(|s| s.len() <= max_points)
        .map(|s| (canonical_form(s), s.clone()))
        .collect()];
    for _ in 0..levels {
        let prev: Vec<Iposet> = out.last().unwrap().values().cloned().collect();
        let pars: Vec<Iposet> = close(&prev, Ops::Par, max_points).into_values().collect();
        out.push(close(&pars, Ops::Glue, max_points));
    }
    out
}
