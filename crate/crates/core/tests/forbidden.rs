mod common;

use common::{brute_contains, brute_iso};
use iposet_core::algebra::{canonical_form, is_isomorphic};
use iposet_core::enumerate::enumerate_posets;
use iposet_core::forbidden::{
    contains_induced, fixture, known_forbidden, minimal_forbidden, minimal_forbidden_capped,
};
use iposet_core::recognition::n_poset;
use iposet_core::{is_gp, Error, Iposet};

fn six_point_fixtures() -> Vec<Iposet> {
    ["NN", "N+", "N-", "3C", "LN"]
        .iter()
        .map(|n| fixture(n).unwrap())
        .collect()
}

#[test]
fn fixtures_are_complete_and_well_formed() {
    let all = known_forbidden();
    assert_eq!(all.len(), 11);
    let sizes: Vec<usize> = all.iter().map(|f| f.poset.len()).collect();
    assert_eq!(sizes, vec![6, 6, 6, 6, 6, 8, 10, 10, 10, 10, 10]);
    for f in &all {
        assert!(!f.poset.has_interfaces());
        f.poset.validate().unwrap();
    }
    // pairwise non-isomorphic, and none contains another
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert!(is_isomorphic(&a.poset, &b.poset).is_none(), "{} {}", a.name, b.name);
            assert!(!contains_induced(&a.poset, &b.poset), "{} ⊇ {}", a.name, b.name);
            assert!(!contains_induced(&b.poset, &a.poset), "{} ⊇ {}", b.name, a.name);
        }
    }
    assert!(fixture("nope").is_none());
}

#[test]
fn nn_plus_and_minus_shapes() {
    let nn = fixture("NN").unwrap();
    let expect = Iposet::poset(6, &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap();
    assert!(brute_iso(&nn, &expect));
    assert!(brute_iso(&fixture("N-").unwrap(), &fixture("N+").unwrap().opposite()));
}

#[test]
fn small_fixtures_are_minimal() {
    for f in known_forbidden().iter().filter(|f| f.poset.len() <= 8) {
        assert!(!is_gp(&f.poset), "{}", f.name);
        for x in 0..f.poset.len() {
            assert!(is_gp(&f.poset.delete_point(x)), "{} - {x}", f.name);
        }
    }
}

#[test]
fn containment_examples() {
    let nn = fixture("NN").unwrap();
    let two_two = Iposet::poset(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(contains_induced(&nn, &two_two));
    assert!(brute_contains(&nn, &two_two));
    assert!(!contains_induced(&two_two, &nn));

    let mut pairs = vec![];
    for i in 0..4 {
        pairs.push((i, i + 4));
        if i < 3 {
            pairs.push((i, i + 1));
            pairs.push((i + 4, i + 5));
        }
    }
    let producer_consumer = Iposet::poset(8, &pairs).unwrap();
    assert!(contains_induced(&producer_consumer, &n_poset()));
}

#[test]
fn containment_is_reflexive_and_transitive_on_fixtures() {
    let all = known_forbidden();
    for f in &all {
        assert!(contains_induced(&f.poset, &f.poset));
        let mut shrunk = f.poset.delete_point(0);
        assert!(contains_induced(&f.poset, &shrunk));
        shrunk = shrunk.delete_point(0);
        assert!(contains_induced(&f.poset.delete_point(0), &shrunk));
        assert!(contains_induced(&f.poset, &shrunk));
    }
}

#[test]
fn containment_agrees_with_brute_force() {
    let patterns: Vec<Iposet> = (0..=4).flat_map(|n| enumerate_posets(n).unwrap()).collect();
    let hosts: Vec<Iposet> = enumerate_posets(6).unwrap().into_iter().step_by(3).collect();
    for host in &hosts {
        for pat in &patterns {
            assert_eq!(contains_induced(host, pat), brute_contains(host, pat));
        }
    }
    for host in six_point_fixtures() {
        for pat in enumerate_posets(5).unwrap() {
            assert_eq!(contains_induced(&host, &pat), brute_contains(&host, &pat));
        }
    }
}

fn same_classes(found: &[Iposet], expected: &[Iposet]) -> bool {
    let mut a: Vec<_> = found.iter().map(canonical_form).collect();
    let mut b: Vec<_> = expected.iter().map(canonical_form).collect();
    a.sort();
    b.sort();
    a == b
}

#[test]
fn mining_up_to_seven_points_finds_the_six_point_fixtures() {
    let six = minimal_forbidden(6).unwrap();
    assert!(same_classes(&six, &six_point_fixtures()));
    let seven = minimal_forbidden(7).unwrap();
    assert_eq!(six, seven);
    assert!(minimal_forbidden(5).unwrap().is_empty());
}

#[test]
fn mining_at_eight_points_adds_one() {
    let eight = minimal_forbidden(8).unwrap();
    let mut expected = six_point_fixtures();
    expected.push(fixture("F8").unwrap());
    assert!(same_classes(&eight, &expected));
    assert_eq!(
        minimal_forbidden_capped(9, 8).unwrap_err(),
        Error::SizeCapExceeded { n: 9, cap: 8 }
    );
}

#[test]
fn every_non_gp_seven_point_poset_contains_a_fixture() {
    let fixtures = six_point_fixtures();
    let bad: Vec<Iposet> = enumerate_posets(7)
        .unwrap()
        .into_iter()
        .filter(|p| !is_gp(p))
        .collect();
    assert_eq!(bad.len(), 142);
    for p in &bad {
        assert!(fixtures.iter().any(|f| contains_induced(p, f)));
    }
}
