mod common;

use common::{brute_contains, brute_iso, labelled_posets, permutations};
use iposet_core::algebra::{glue, is_isomorphic, par, par_many};
use iposet_core::enumerate::{enumerate_iposets, enumerate_posets, hierarchy};
use iposet_core::forbidden::fixture;
use iposet_core::recognition::{
    build_witness, enumerate_char_fns, interval_representation, is_interval_order, is_n_free,
    is_sp, is_step_sequence, middle_orders, n_poset, quick_reject_gluing, split_by_char_fn,
    split_with_maps, CharFn, GpConfig, GpRecognizer, GpTerm, Phase,
};
use iposet_core::{gp_level, gp_term, is_gp, Error, Iposet};

fn two_two() -> Iposet {
    Iposet::poset(4, &[(0, 1), (2, 3)]).unwrap()
}

fn swapped_two_two() -> Iposet {
    Iposet::new(4, &[(0, 3), (1, 2)], &[0, 1], &[2, 3]).unwrap()
}

fn all_iposets(max: usize) -> Vec<Iposet> {
    (0..=max).flat_map(|n| enumerate_iposets(n).unwrap()).collect()
}

fn all_posets(max: usize) -> Vec<Iposet> {
    (0..=max).flat_map(|n| enumerate_posets(n).unwrap()).collect()
}

/// Interval order by the literal definition over all 4-tuples.
fn interval_by_definition(p: &Iposet) -> bool {
    let n = p.len();
    (0..n).all(|w| {
        (0..n).all(|y| {
            !p.lt(w, y)
                || (0..n).all(|x| (0..n).all(|z| !p.lt(x, z) || p.lt(w, z) || p.lt(x, y)))
        })
    })
}

/// Series-parallel by the generative definition: split into components or
/// into two nonempty layers with everything below related to everything above.
fn sp_by_decomposition(p: &Iposet) -> bool {
    let n = p.len();
    if n <= 1 {
        return true;
    }
    let comps = p.connected_components();
    if comps.len() > 1 {
        return comps
            .iter()
            .all(|c| sp_by_decomposition(&p.induced_subposet(c).unwrap()));
    }
    // nonempty proper down-closed sets X with X < complement entirely
    (1u64..(1 << n) - 1).any(|mask| {
        let below: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let above: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 0).collect();
        below.iter().all(|&a| above.iter().all(|&b| p.lt(a, b)))
            && sp_by_decomposition(&p.induced_subposet(&below).unwrap())
            && sp_by_decomposition(&p.induced_subposet(&above).unwrap())
    })
}

#[test]
fn interval_order_examples() {
    assert!(!is_interval_order(&two_two()));
    assert!(is_interval_order(&n_poset()));
    assert!(!brute_contains(&n_poset(), &two_two()));
    for n in 0..6 {
        assert!(is_interval_order(&Iposet::chain(n)));
    }
}

#[test]
fn interval_orders_three_ways() {
    for p in all_posets(6) {
        let def = is_interval_order(&p);
        assert_eq!(def, interval_by_definition(&p));
        assert_eq!(def, !brute_contains(&p, &two_two()));
        assert_eq!(def, interval_representation(&p).is_ok());
    }
}

#[test]
fn interval_representations_satisfy_their_invariants() {
    for p in all_iposets(5) {
        if let Ok(rep) = interval_representation(&p) {
            assert!(rep.represents(&p), "{p:?}");
            assert!(rep.len >= 3);
            for x in 0..p.len() {
                assert!(rep.begin[x] <= rep.end[x]);
                assert!(rep.begin[x] < rep.top() && rep.end[x] > rep.bottom());
                assert_eq!(rep.begin[x] == rep.bottom(), p.source_index(x).is_some());
                assert_eq!(rep.end[x] == rep.top(), p.target_index(x).is_some());
                for y in 0..p.len() {
                    assert_eq!(p.lt(x, y), rep.end[x] < rep.begin[y]);
                }
            }
        }
    }
}

#[test]
fn three_chain_representation() {
    let rep = interval_representation(&Iposet::chain(3)).unwrap();
    assert_eq!(rep.begin, vec![1, 2, 3]);
    assert_eq!(rep.end, vec![1, 2, 3]);
    assert_eq!(rep.len, 5);
    assert_eq!(
        interval_representation(&two_two()).unwrap_err(),
        Error::NotIntervalOrder
    );
}

#[test]
fn left_factor_of_concatenated_interval_orders() {
    // a < b, c < b, c < d, c < e with targets b, e
    let p = Iposet::new(5, &[(0, 1), (2, 1), (2, 3), (2, 4)], &[], &[1, 4]).unwrap();
    let rep = interval_representation(&p).unwrap();
    assert!(rep.represents(&p));
    // drawn intervals, twice scaled: a [0,6], b [8,10], c [0,2], d [4,9], e [4,10]
    let drawn = [(0, 6), (8, 10), (0, 2), (4, 9), (4, 10)];
    for x in 0..5 {
        for y in 0..5 {
            assert_eq!(
                rep.end[x] < rep.begin[y],
                drawn[x].1 < drawn[y].0,
                "{x} {y}"
            );
        }
    }
    assert_eq!(rep.end[1], rep.top());
    assert_eq!(rep.end[4], rep.top());
}

#[test]
fn series_parallel_examples() {
    assert!(!is_sp(&n_poset()));
    assert!(is_sp(&Iposet::empty()));
    for n in 1..=3 {
        assert!(is_sp(&build_witness(n)));
    }
}

#[test]
fn series_parallel_two_ways() {
    for p in all_posets(6) {
        let sp = is_sp(&p);
        assert_eq!(sp, is_n_free(&p));
        assert_eq!(sp, !brute_contains(&p, &n_poset()));
        assert_eq!(sp, sp_by_decomposition(&p));
    }
}

#[test]
fn step_sequences() {
    for n in 0..5 {
        assert!(is_step_sequence(&Iposet::discrete(n)));
        assert!(is_step_sequence(&Iposet::chain(n)));
    }
    // 0 ∥ 3, 3 ∥ 1 and 0 < 1
    let n = n_poset();
    assert!(!n.comparable(0, 3) && !n.comparable(3, 1) && n.lt(0, 1));
    assert!(!is_step_sequence(&n));
}

#[test]
fn quick_reject_examples() {
    assert!(quick_reject_gluing(&two_two()));
    assert!(quick_reject_gluing(&fixture("NN").unwrap()));
    assert!(!quick_reject_gluing(&Iposet::chain(2)));
}

#[test]
fn quick_reject_is_sound() {
    for p in all_iposets(6) {
        if quick_reject_gluing(&p) {
            assert!(enumerate_char_fns(&p).next().is_none(), "{p:?}");
        }
    }
}

#[test]
fn char_fn_examples() {
    let fns: Vec<CharFn> = enumerate_char_fns(&Iposet::chain(2)).collect();
    assert_eq!(fns.len(), 1);
    assert_eq!(fns[0].phases(), &[Phase::Past, Phase::Future]);
    assert_eq!(enumerate_char_fns(&two_two()).count(), 0);

    // the first cut of N: the lower-left point is past, the upper-left one
    // is cut, the rest is future
    let n = n_poset();
    let first = CharFn::new(vec![Phase::Cut, Phase::Future, Phase::Past, Phase::Future]);
    assert!(enumerate_char_fns(&n).any(|phi| phi == first));
}

/// Brute-force check of the characteristic function conditions.
fn char_fn_ok(p: &Iposet, phases: &[Phase]) -> bool {
    use Phase::*;
    let n = p.len();
    let nontrivial = phases.contains(&Past) && phases.contains(&Future);
    let ifaces = p.sources().all(|x| phases[x] != Future) && p.targets().all(|x| phases[x] != Past);
    let pairs = (0..n).all(|x| {
        (0..n).all(|y| match (phases[x], phases[y]) {
            (Past, Future) => p.lt(x, y),
            (Past, Cut) | (Cut, Future) => !p.lt(y, x),
            (Cut, Cut) => x == y || !p.comparable(x, y),
            _ => true,
        })
    });
    nontrivial && ifaces && pairs
}

#[test]
fn char_fns_match_brute_force() {
    use Phase::*;
    for p in all_iposets(5) {
        let n = p.len();
        let mut expected = 0;
        for code in 0..3usize.pow(n as u32) {
            let phases: Vec<Phase> = (0..n)
                .map(|i| [Past, Cut, Future][code / 3usize.pow(i as u32) % 3])
                .collect();
            if char_fn_ok(&p, &phases) {
                expected += 1;
            }
        }
        let got: Vec<CharFn> = enumerate_char_fns(&p).collect();
        assert_eq!(got.len(), expected, "{p:?}");
        for phi in got {
            assert!(char_fn_ok(&p, phi.phases()));
        }
    }
}

#[test]
fn splits_reassemble_exactly() {
    for p in all_iposets(5) {
        for phi in enumerate_char_fns(&p) {
            for middle in middle_orders(&p, &phi) {
                let split = split_with_maps(&p, &phi, &middle).unwrap();
                let glued = glue(&split.first, &split.second).unwrap();
                assert_eq!(glued.relabel(&split.glue_point_map()).unwrap(), p);
                let (q, r) = split_by_char_fn(&p, &phi, &middle).unwrap();
                assert_eq!((q, r), (split.first.clone(), split.second.clone()));
            }
        }
    }
}

#[test]
fn split_rejects_bad_middle_orders() {
    // both cut points are sources, listed against the source order
    let p = Iposet::new(4, &[(0, 3), (1, 3), (2, 3)], &[0, 1], &[]).unwrap();
    let phi = CharFn::new(vec![Phase::Cut, Phase::Cut, Phase::Past, Phase::Future]);
    assert!(split_by_char_fn(&p, &phi, &[0, 1]).is_ok());
    assert_eq!(
        split_by_char_fn(&p, &phi, &[1, 0]).unwrap_err(),
        Error::IncompatibleOrdering
    );
    assert!(matches!(
        split_by_char_fn(&p, &phi, &[0]),
        Err(Error::InvalidCharFn(_))
    ));
    let trivial = CharFn::new(vec![Phase::Cut, Phase::Cut, Phase::Cut, Phase::Future]);
    assert!(matches!(
        split_by_char_fn(&p, &trivial, &[0, 1, 2]),
        Err(Error::InvalidCharFn(_))
    ));
}

#[test]
fn gluings_of_two_ns_are_recovered() {
    let q = Iposet::new(4, &[(0, 1), (2, 1), (2, 3)], &[], &[1]).unwrap();
    let r = Iposet::new(4, &[(0, 1), (2, 1), (2, 3)], &[0], &[]).unwrap();
    let composite = glue(&q, &r).unwrap();
    assert_eq!(composite.len(), 7);
    let found = enumerate_char_fns(&composite).any(|phi| {
        middle_orders(&composite, &phi).iter().any(|m| {
            let (a, b) = split_by_char_fn(&composite, &phi, m).unwrap();
            is_isomorphic(&a, &q).is_some() && is_isomorphic(&b, &r).is_some()
        })
    });
    assert!(found);
}

#[test]
fn gp_examples() {
    assert!(is_gp(&n_poset()));
    assert!(!is_gp(&fixture("NN").unwrap()));
    assert!(swapped_two_two().is_interface_consistent());
    assert!(!is_gp(&swapped_two_two()));
    assert!(!is_gp(&Iposet::new(2, &[], &[0, 1], &[1, 0]).unwrap()));
}

#[test]
fn gp_terms() {
    assert!(gp_term(&fixture("NN").unwrap()).is_none());
    let t = gp_term(&n_poset()).unwrap();
    assert!(brute_iso(&t.eval().unwrap(), &n_poset()));
    for p in all_iposets(4) {
        match gp_term(&p) {
            Some(t) => {
                assert!(is_gp(&p));
                assert!(is_isomorphic(&t.eval().unwrap(), &p).is_some(), "{t}");
                assert_eq!(t.to_string().parse::<GpTerm>().unwrap(), t);
            }
            None => assert!(!is_gp(&p)),
        }
    }
}

#[test]
fn term_syntax() {
    let t: GpTerm = "glue(s01, par(s11, s00), s10)".parse().unwrap();
    assert_eq!(t.to_string(), "glue(s01,par(s11,s00),s10)");
    assert_eq!(t.size(), 6);
    assert!("glue(s01".parse::<GpTerm>().is_err());
    assert!("s22".parse::<GpTerm>().is_err());
    assert_eq!("empty".parse::<GpTerm>().unwrap().eval().unwrap(), Iposet::empty());
}

#[test]
fn recognizer_configurations_agree() {
    let fast = GpRecognizer::new(GpConfig::default());
    let slow = GpRecognizer::new(GpConfig::exhaustive());
    for p in all_iposets(5) {
        assert_eq!(fast.is_gp(&p), slow.is_gp(&p), "{p:?}");
    }
    assert!(slow.memo_len() > 0);
}

#[test]
fn gp_implies_consistent() {
    for p in all_iposets(5) {
        if is_gp(&p) {
            assert!(p.is_interface_consistent());
        }
    }
}

#[test]
fn discrete_consistent_iff_par_of_singletons() {
    let singletons = [
        GpTerm::S00.leaf_iposet().unwrap(),
        GpTerm::S01.leaf_iposet().unwrap(),
        GpTerm::S10.leaf_iposet().unwrap(),
        GpTerm::S11.leaf_iposet().unwrap(),
    ];
    // every par word over the singletons, up to 5 letters
    let mut products = vec![Iposet::empty()];
    let mut frontier = vec![Iposet::empty()];
    for _ in 0..5 {
        frontier = frontier
            .iter()
            .flat_map(|p| singletons.iter().map(move |s| par(p, s).unwrap()))
            .collect();
        products.extend(frontier.iter().cloned());
    }
    for p in all_iposets(5) {
        let is_product = products.iter().any(|q| is_isomorphic(q, &p).is_some());
        assert_eq!(is_product, p.is_discrete() && p.is_interface_consistent(), "{p:?}");
    }
    assert!(par_many(&singletons).unwrap().is_discrete());
}

#[test]
fn first_level_is_consistent_interval_orders() {
    for p in all_iposets(4) {
        let level_one = gp_level(&p).is_some_and(|l| l <= 1);
        assert_eq!(
            level_one,
            p.is_interface_consistent() && is_interval_order(&p.underlying()),
            "{p:?}"
        );
    }
}

#[test]
fn first_poset_level_is_step_sequences() {
    let seeds = [Iposet::empty(), Iposet::discrete(1)];
    let levels = hierarchy(&seeds, 5, 1);
    for p in all_posets(5) {
        let key = iposet_core::canonical_form(&p);
        assert_eq!(levels[1].contains_key(&key), is_step_sequence(&p), "{p:?}");
    }
}

#[test]
fn levels_match_the_closure_hierarchy() {
    let seeds = iposet_core::enumerate::gp_generators();
    let levels = hierarchy(&seeds, 4, 3);
    for p in all_iposets(4) {
        let key = iposet_core::canonical_form(&p);
        let from_closure = levels.iter().position(|l| l.contains_key(&key)).map(|i| i as u32);
        assert_eq!(gp_level(&p), from_closure, "{p:?}");
        assert_eq!(from_closure.is_some(), is_gp(&p));
    }
}

#[test]
fn level_examples() {
    assert_eq!(gp_level(&two_two()), Some(2));
    assert_eq!(gp_level(&Iposet::chain(3)), Some(1));
    assert_eq!(gp_level(&Iposet::discrete(3)), Some(1));
    assert_eq!(gp_level(&GpTerm::S11.leaf_iposet().unwrap()), Some(0));
    assert_eq!(gp_level(&Iposet::empty()), Some(0));
    assert_eq!(gp_level(&fixture("NN").unwrap()), None);
    for p in all_posets(5) {
        if is_interval_order(&p) && p.len() > 1 {
            assert_eq!(gp_level(&p), Some(1), "{p:?}");
        }
    }
}

#[test]
fn witness_posets() {
    let w1 = build_witness(1);
    assert_eq!(w1, Iposet::chain(2));
    let w2 = build_witness(2);
    assert_eq!(w2.len(), 5);
    assert_eq!(w2.minimal_mask().count_ones(), 1);
    assert_eq!(build_witness(3).len(), 11);
    assert_eq!(gp_level(&w2), Some(2));
    assert!(!is_interval_order(&w2));

    let target = par(&w1, &w1).unwrap();
    let mut seen = 0;
    for phi in enumerate_char_fns(&w2) {
        for m in middle_orders(&w2, &phi) {
            let (_, r) = split_by_char_fn(&w2, &phi, &m).unwrap();
            assert!(brute_iso(&r.underlying(), &target));
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn gp_is_closed_under_point_deletion() {
    for p in all_posets(6) {
        if is_gp(&p) {
            for x in 0..p.len() {
                assert!(is_gp(&p.delete_point(x)), "{p:?} - {x}");
            }
        }
    }
}

#[test]
fn gp_is_invariant_under_relabelling() {
    for p in labelled_posets(4) {
        let base = is_gp(&p);
        for g in permutations(4).iter().step_by(5) {
            assert_eq!(is_gp(&p.relabel(g).unwrap()), base);
        }
    }
}
