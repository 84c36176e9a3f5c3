//! Induced-subposet search and minimal posets outside the gp class.

use rayon::prelude::*;

use crate::algebra::{canonical_form, canonical_relabel, find_embedding};
use crate::enumerate::posets::{extend_level, POSET_CAP, POSET_EXTENDED_CAP};
use crate::error::{Error, Result};
use crate::format;
use crate::iposet::{Iposet, Poset};
use crate::recognition::is_gp;

#[derive(Clone, Debug)]
pub struct ForbiddenFixture {
    pub name: &'static str,
    pub poset: Poset,
}

const FIXTURES: [(&str, &str); 11] = [
    ("NN", include_str!("../fixtures/nn.ipos")),
    ("N+", include_str!("../fixtures/nplus.ipos")),
    ("N-", include_str!("../fixtures/nminus.ipos")),
    ("3C", include_str!("../fixtures/3c.ipos")),
    ("LN", include_str!("../fixtures/ln.ipos")),
    ("F8", include_str!("../fixtures/f8.ipos")),
    ("F10a", include_str!("../fixtures/f10a.ipos")),
    ("F10b", include_str!("../fixtures/f10b.ipos")),
    ("F10c", include_str!("../fixtures/f10c.ipos")),
    ("F10d", include_str!("../fixtures/f10d.ipos")),
    ("F10e", include_str!("../fixtures/f10e.ipos")),
];

/// The known minimal non-gp posets with at most ten points.
pub fn known_forbidden() -> Vec<ForbiddenFixture> {
    FIXTURES
        .iter()
        .map(|&(name, text)| ForbiddenFixture {
            name,
            poset: format::parse(text).expect("fixture parses"),
        })
        .collect()
}

/// Looks up one fixture by name.
pub fn fixture(name: &str) -> Option<Poset> {
    known_forbidden().into_iter().find(|f| f.name == name).map(|f| f.poset)
}

/// `pattern` embeds into `host` by an order-preserving and order-reflecting
/// injection. Interfaces are ignored.
pub fn contains_induced(host: &Iposet, pattern: &Iposet) -> bool {
    find_embedding(host, pattern).is_some()
}

pub fn minimal_forbidden(max_points: usize) -> Result<Vec<Poset>> {
    minimal_forbidden_capped(max_points, POSET_CAP)
}

/// Minimal forbidden posets with extended size cap.
pub fn minimal_forbidden_extended(max_points: usize) -> Result<Vec<Poset>> {
    minimal_forbidden_capped(max_points, POSET_EXTENDED_CAP)
}

/// All posets with at most `max_points` points that are not gp while every
/// proper induced subposet is, as canonical representatives sorted by key.
pub fn minimal_forbidden_capped(max_points: usize, cap: usize) -> Result<Vec<Poset>> {
    if max_points > cap {
        return Err(Error::SizeCapExceeded { n: max_points, cap });
    }
    let mut found: Vec<Poset> = Vec::new();
    let mut level = vec![Iposet::empty()];
    for n in 1..=max_points {
        level = extend_level(&level);
        let mut fresh: Vec<Poset> = level
            .par_iter()
            .filter(|p| !found.iter().any(|f| contains_induced(p, f)) && !is_gp(p))
            .map(|p| {
                assert!(
                    (0..n).all(|x| is_gp(&p.delete_point(x))),
                    "non-gp poset without a smaller forbidden subposet is minimal"
                );
                canonical_relabel(p)
            })
            .collect();
        fresh.sort_by_cached_key(canonical_form);
        found.extend(fresh);
    }
    Ok(found)
}
