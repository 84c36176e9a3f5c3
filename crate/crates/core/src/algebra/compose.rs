//! Gluing and parallel composition, and the laws relating them.

use crate::algebra::matching::{is_isomorphic, subsumes};
use crate::error::{Error, Result};
use crate::iposet::{bits, full_mask, symmetry_from_permutation, Iposet, Rows, Seq, MAX_POINTS};

/// Gluing `p ∗ q`: the targets of `p` are identified with the sources of `q`,
/// and every non-target of `p` precedes every non-source of `q`.
///
/// Points of `p` keep their indices; non-source points of `q` follow in
/// their original order.
pub fn glue(p: &Iposet, q: &Iposet) -> Result<Iposet> {
    if p.cod() != q.dom() {
        return Err(Error::ArityMismatch {
            cod: p.cod(),
            dom: q.dom(),
        });
    }
    let (np, nq) = (p.len(), q.len());
    let n = np + nq - q.dom();
    if n > MAX_POINTS {
        return Err(Error::Overflow(n));
    }
    let mut map = [0usize; MAX_POINTS];
    let mut next = np;
    for y in 0..nq {
        match q.source_index(y) {
            Some(k) => map[y] = p.target(k),
            None => {
                map[y] = next;
                next += 1;
            }
        }
    }
    let future = full_mask(n) & !full_mask(np);
    let p_targets = p.target_mask();
    let mut up: Rows = smallvec::smallvec![0; n];
    for x in 0..np {
        up[x] = p.up_set(x);
        if p_targets >> x & 1 == 0 {
            up[x] |= future;
        }
    }
    for y in 0..nq {
        up[map[y]] |= bits(q.up_set(y)).fold(0, |m, z| m | 1 << map[z]);
    }
    let targets: Seq = q.targets().map(|y| map[y] as u8).collect();
    Ok(Iposet::from_parts(up, Seq::from_slice(p.source_seq()), targets))
}

/// Parallel composition `p ⊗ q`: disjoint union, interfaces of `p` first.
pub fn par(p: &Iposet, q: &Iposet) -> Result<Iposet> {
    let np = p.len();
    let n = np + q.len();
    if n > MAX_POINTS {
        return Err(Error::Overflow(n));
    }
    let mut up: Rows = Rows::from_slice(p.up_rows());
    up.extend(q.up_rows().iter().map(|&r| r << np));
    let shift = |s: &[u8]| s.iter().map(|&x| x + np as u8).collect::<Seq>();
    let mut sources = Seq::from_slice(p.source_seq());
    sources.extend(shift(q.source_seq()));
    let mut targets = Seq::from_slice(p.target_seq());
    targets.extend(shift(q.target_seq()));
    Ok(Iposet::from_parts(up, sources, targets))
}

/// Left fold of [`glue`].
pub fn glue_many(list: &[Iposet]) -> Result<Iposet> {
    let (first, rest) = list.split_first().ok_or(Error::EmptyComposition)?;
    rest.iter().try_fold(first.clone(), |acc, q| glue(&acc, q))
}

/// Left fold of [`par`]; the empty list gives the empty iposet.
pub fn par_many(list: &[Iposet]) -> Result<Iposet> {
    list.iter().try_fold(Iposet::empty(), |acc, q| par(&acc, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interchange {
    IsoHolds,
    StrictSubsumption,
}

/// Compares `(p ⊗ p2) ∗ (q ⊗ q2)` with `(p ∗ q) ⊗ (p2 ∗ q2)`. The first always
/// subsumes the second.
pub fn verify_lax_interchange(
    p: &Iposet,
    p2: &Iposet,
    q: &Iposet,
    q2: &Iposet,
) -> Result<Interchange> {
    let left = glue(&par(p, p2)?, &par(q, q2)?)?;
    let right = par(&glue(p, q)?, &glue(p2, q2)?)?;
    if subsumes(&left, &right).is_none() {
        return Err(Error::InternalLawViolation);
    }
    Ok(if is_isomorphic(&left, &right).is_some() {
        Interchange::IsoHolds
    } else {
        Interchange::StrictSubsumption
    })
}

/// Block-swap symmetries `σ`, `τ` with `σ ∗ (p2 ⊗ p1) ∗ τ ≅ p1 ⊗ p2`.
pub fn commute_symmetries(p1: &Iposet, p2: &Iposet) -> (Iposet, Iposet) {
    let (n1, n2) = (p1.dom(), p2.dom());
    let (m1, m2) = (p1.cod(), p2.cod());
    let sigma: Vec<usize> = (0..n1 + n2)
        .map(|i| if i < n1 { i + n2 } else { i - n1 })
        .collect();
    let tau: Vec<usize> = (0..m1 + m2)
        .map(|i| if i < m2 { i + m1 } else { i - m2 })
        .collect();
    (
        symmetry_from_permutation(&sigma).expect("block swap is a bijection"),
        symmetry_from_permutation(&tau).expect("block swap is a bijection"),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `u ∗ r ≅ p` and `r ∗ q ≅ v`.
    Left,
    /// `p ∗ r ≅ u` and `r ∗ v ≅ q`.
    Right,
}

/// Searches a common refinement of two gluing decompositions
/// `p ∗ q ≅ u ∗ v` by trying every iposet of the forced size and arity.
pub fn find_refinement(
    p: &Iposet,
    q: &Iposet,
    u: &Iposet,
    v: &Iposet,
) -> Result<Option<(Side, Iposet)>> {
    if is_isomorphic(&glue(p, q)?, &glue(u, v)?).is_none() {
        return Err(Error::PreconditionNotSatisfied);
    }
    let attempts = [
        (Side::Left, u, p, q, v),
        (Side::Right, p, u, v, q),
    ];
    for (side, small, big, rest, other) in attempts {
        // small ∗ r ≅ big and r ∗ rest ≅ other
        let size = big.len() + small.cod();
        if size < small.len() {
            continue;
        }
        let size = size - small.len();
        let (dom, cod) = (small.cod(), big.cod());
        if rest.dom() != cod {
            continue;
        }
        for r in crate::enumerate::enumerate_iposets_unbounded(size)? {
            if r.dom() != dom || r.cod() != cod {
                continue;
            }
            if is_isomorphic(&glue(small, &r)?, big).is_some()
                && is_isomorphic(&glue(&r, rest)?, other).is_some()
            {
                return Ok(Some((side, r)));
            }
        }
    }
    Ok(None)
}
