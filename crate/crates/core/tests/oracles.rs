mod common;

use std::collections::BTreeSet;

use common::{class_count, open_families, preorders_by_filter, preorders_by_rows, up_sets, Raw};
use fintop::enumeration::{canonical_classes, enumerate_preorders, enumerate_topologies};
use fintop::{check, Axiom, FiniteSpace, SubsetMask};

fn masks(space: &FiniteSpace) -> Vec<u32> {
    space.opens().iter().map(|u| u.bits()).collect()
}

fn library_families(n: usize) -> BTreeSet<Vec<u32>> {
    enumerate_topologies(n, None)
        .unwrap()
        .map(|s| masks(&s))
        .collect()
}

fn raw(space: &FiniteSpace) -> Raw {
    Raw::new(space.n(), masks(space))
}

#[test]
fn topologies_match_open_family_search() {
    for n in 1..=4 {
        let expected = open_families(n);
        let found = library_families(n);
        assert_eq!(
            found.len(),
            enumerate_topologies(n, None).unwrap().count(),
            "duplicates at n = {n}"
        );
        assert_eq!(found, expected, "n = {n}");
    }
}

#[test]
fn preorder_strategies_agree_at_five_points() {
    let filtered: BTreeSet<Vec<u32>> = preorders_by_filter(5).iter().map(|r| up_sets(r)).collect();
    let by_rows: BTreeSet<Vec<u32>> = preorders_by_rows(5)
        .iter()
        .map(|rows| {
            let rel: Vec<Vec<bool>> = rows
                .iter()
                .map(|&r| (0..5).map(|y| r >> y & 1 == 1).collect())
                .collect();
            up_sets(&rel)
        })
        .collect();
    assert_eq!(filtered.len(), 6942);
    assert_eq!(filtered, by_rows);
    assert_eq!(library_families(5), filtered);
    assert_eq!(enumerate_preorders(5, None).unwrap().count(), 6942);
}

#[test]
fn homeomorphism_class_counts() {
    for n in 1..=5 {
        assert_eq!(
            canonical_classes(n).unwrap().len(),
            class_count(n),
            "n = {n}"
        );
    }
}

#[test]
fn separation_axioms_match_open_set_definitions() {
    for n in 1..=4 {
        for s in enumerate_topologies(n, None).unwrap() {
            let r = raw(&s);
            assert_eq!(check(&s, Axiom::T0), r.t0(), "t0 {:?}", r.opens);
            assert_eq!(check(&s, Axiom::T1), r.t1(), "t1 {:?}", r.opens);
            assert_eq!(check(&s, Axiom::R0), r.r0(), "r0 {:?}", r.opens);
            assert_eq!(check(&s, Axiom::R1), r.r1(), "r1 {:?}", r.opens);
        }
    }
}

#[test]
fn sequence_axioms_match_simulation() {
    for n in 1..=4 {
        for s in enumerate_topologies(n, None).unwrap() {
            let r = raw(&s);
            assert_eq!(
                check(&s, Axiom::SH),
                r.sequentially_hausdorff(),
                "sh {:?}",
                r.opens
            );
            assert_eq!(
                check(&s, Axiom::SC),
                r.sequentially_closed_images(),
                "sc {:?}",
                r.opens
            );
        }
    }
}

#[test]
fn complete_regularity_matches_grid_search() {
    for n in 1..=3 {
        for s in enumerate_topologies(n, None).unwrap() {
            let r = raw(&s);
            assert_eq!(
                check(&s, Axiom::CompletelyRegular),
                r.completely_regular_by_grid(),
                "{:?}",
                r.opens
            );
        }
    }
}

#[test]
fn maximal_compactness_matches_literal_search() {
    for n in 1..=4 {
        let all = open_families(n);
        for s in enumerate_topologies(n, None).unwrap() {
            let r = raw(&s);
            assert_eq!(
                check(&s, Axiom::MaximalCompact),
                r.maximal_compact(&all),
                "{:?}",
                r.opens
            );
        }
    }
}

#[test]
fn point_closures_match_open_definitions() {
    for s in enumerate_topologies(4, None).unwrap() {
        let r = raw(&s);
        for x in s.points() {
            let outside: u32 = r
                .opens
                .iter()
                .filter(|u| *u >> x & 1 == 0)
                .fold(0, |a, &u| a | u);
            assert_eq!(s.point_closure(x), SubsetMask(r.full() & !outside));
        }
    }
}
