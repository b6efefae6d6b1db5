//! One PASS/FAIL line per acceptance criterion. Built without the test
//! harness so the lines are always printed.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use common::{class_count, open_families, preorders_by_filter, preorders_by_rows, up_sets};
use fintop::constructions::{duplicate_along, glue, GluingData};
use fintop::enumeration::{
    canonical_classes, canonical_form, enumerate_preorders, enumerate_topologies, Shard,
};
use fintop::error::CocycleClause;
use fintop::verify::{implication_dag, mine, run_suite, EdgeStatus, MinerOutcome};
use fintop::{alexandroff_space, Axiom, Error, FiniteSpace, SubsetMask, VerdictReport};

struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Verdict {
            ok,
            detail: detail.into(),
        }
    }
}

fn ids(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn suite(max_n: usize, only: &[&str]) -> Verdict {
    let reports = run_suite(max_n, Some(&ids(only))).expect("known ids");
    summarize(&reports)
}

fn summarize(reports: &[VerdictReport]) -> Verdict {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.summary_line())
        .collect();
    let instances: u64 = reports.iter().map(|r| r.instances_checked).sum();
    if failed.is_empty() {
        Verdict::new(
            true,
            format!(
                "{} checks, {instances} instances, 0 failures",
                reports.len()
            ),
        )
    } else {
        Verdict::new(false, failed.join("; "))
    }
}

fn masks(space: &FiniteSpace) -> Vec<u32> {
    space.opens().iter().map(|u| u.bits()).collect()
}

fn enumeration_counts() -> Verdict {
    let expected = [1usize, 4, 29, 355, 6942];
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_topologies(n, None).unwrap().count())
        .collect();
    let open_family_agrees = (1..=4).all(|n| {
        let lib: BTreeSet<Vec<u32>> = enumerate_topologies(n, None)
            .unwrap()
            .map(|s| masks(&s))
            .collect();
        lib == open_families(n)
    });
    let filtered: BTreeSet<Vec<u32>> = preorders_by_filter(5).iter().map(|r| up_sets(r)).collect();
    let by_rows: BTreeSet<Vec<u32>> = preorders_by_rows(5)
        .iter()
        .map(|rows| {
            up_sets(
                &rows
                    .iter()
                    .map(|&r| (0..5).map(|y| r >> y & 1 == 1).collect())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let strategies_agree = filtered == by_rows && filtered.len() == 6942;

    let start = Instant::now();
    let five = run_suite(5, None).unwrap();
    let five_time = start.elapsed();
    let five_ok = five.iter().all(|r| r.passed());

    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap();
    let six: usize = pool.install(|| {
        (0..8)
            .into_par_iter()
            .map(|i| {
                enumerate_topologies(6, Some(Shard::new(i, 8).unwrap()))
                    .unwrap()
                    .count()
            })
            .sum()
    });
    let six_suite = pool.install(|| run_suite(6, Some(&ids(&["preorder.round_trip"]))).unwrap());
    let six_time = start.elapsed();

    let ok = counts == expected
        && open_family_agrees
        && strategies_agree
        && five_ok
        && five_time < Duration::from_secs(10)
        && six == 209_527
        && six_suite.iter().all(|r| r.passed())
        && six_time < Duration::from_secs(300);
    Verdict::new(
        ok,
        format!(
            "counts {counts:?}, open-family oracle {open_family_agrees}, matrix strategies {strategies_agree}, \
             n=5 sweep {five_time:.2?} ({}), n=6 8 shards {six} in {six_time:.2?}",
            if five_ok { "all pass" } else { "FAILURES" }
        ),
    )
}

fn round_trip() -> Verdict {
    let spaces = suite(5, &["preorder.round_trip"]);
    let mut preorders = 0;
    let mut bad = 0;
    for n in 1..=5 {
        for p in enumerate_preorders(n, None).unwrap() {
            preorders += 1;
            if alexandroff_space(&p).specialization_preorder() != p {
                bad += 1;
            }
        }
    }
    Verdict::new(
        spaces.ok && bad == 0,
        format!(
            "spaces: {}; preorders: {preorders} checked, {bad} failures",
            spaces.detail
        ),
    )
}

fn characterizations() -> Verdict {
    let mut only: Vec<String> = Axiom::ALL
        .iter()
        .map(|a| format!("{}.characterization", a.name()))
        .collect();
    only.extend(ids(&[
        "specialization.coherence",
        "strong_derived.characterization",
        "essential_derived.characterization",
        "locally_closed.criteria",
        "skula.structure",
        "td.hereditary",
        "r1.compact_sets",
        "sobrification.structure",
        "maximal_compact.literal_search",
    ]));
    summarize(&run_suite(5, Some(&only)).unwrap())
}

fn miner() -> Verdict {
    let sierpinski = canonical_form(&FiniteSpace::sierpinski());
    let witness = match mine(Axiom::TD, Axiom::T1, 3).unwrap().outcome {
        MinerOutcome::Witness { n: 2, space } => space.to_space().unwrap() == sierpinski,
        _ => false,
    };
    let classes: Vec<usize> = (1..=5).map(class_count).collect();
    let library: Vec<usize> = (1..=5)
        .map(|n| canonical_classes(n).unwrap().len())
        .collect();
    let exhausted = |p, q| match mine(p, q, 5).unwrap().outcome {
        MinerOutcome::Exhaustion {
            classes_scanned, ..
        } => classes_scanned == classes,
        _ => false,
    };
    let t0_td = exhausted(Axiom::T0, Axiom::TD);
    let t1_kc = exhausted(Axiom::T1, Axiom::KC);
    Verdict::new(
        witness && t0_td && t1_kc && classes[..3] == [1, 3, 9] && library == classes,
        format!("TD not T1 witness is Sierpinski: {witness}; T0/TD and T1/KC exhausted over {classes:?} classes: {t0_td}, {t1_kc}"),
    )
}

/// Three copies of the two-point discrete space whose transitions compose
/// to a swap around the triple overlap.
fn twisted_triple() -> GluingData {
    let d = FiniteSpace::discrete(2);
    let id = vec![Some(0), Some(1)];
    let swap = vec![Some(1), Some(0)];
    GluingData {
        pieces: vec![d.clone(), d.clone(), d],
        overlaps: vec![vec![SubsetMask(0b11); 3]; 3],
        homeos: vec![
            vec![id.clone(), id.clone(), swap.clone()],
            vec![id.clone(), id.clone(), id.clone()],
            vec![swap, id.clone(), id],
        ],
    }
}

fn gluing() -> Verdict {
    let s = FiniteSpace::sierpinski();
    let hand =
        FiniteSpace::from_opens(3, [0b000, 0b001, 0b011, 0b101, 0b111].map(SubsetMask)).unwrap();
    let doubled = duplicate_along(&s, SubsetMask(0b01), 2).unwrap() == hand;

    let covers = suite(3, &["gluing.open_cover"]);
    let mut fixtures = 0;
    let mut open = true;
    for n in 1..=3 {
        for z in enumerate_topologies(n, None).unwrap() {
            for &w in z.opens() {
                for k in 1..=3 {
                    let g = glue(&GluingData::duplicate(&z, w, k)).unwrap();
                    fixtures += 1;
                    open &= g.projection.is_open_map();
                }
            }
        }
    }
    let rejected = matches!(
        glue(&twisted_triple()),
        Err(Error::CocycleViolation {
            clause: CocycleClause::Composition,
            alpha: 0,
            beta: 1,
            gamma: 2
        })
    );
    Verdict::new(
        doubled && covers.ok && open && rejected,
        format!(
            "doubled point {doubled}; open covers: {}; projection open on {fixtures} duplication fixtures: {open}; \
             twisted cocycle rejected at (0, 1, 2): {rejected}",
            covers.detail
        ),
    )
}

fn main() {
    let mut lines = Vec::new();
    let mut record = |k: usize, name: &str, v: Verdict| {
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {k}: {name}: {}", v.detail);
        lines.push((k, v.ok));
    };

    record(1, "enumeration counts", enumeration_counts());
    record(2, "round trip", round_trip());
    record(3, "characterization suites", characterizations());
    record(4, "T0 quotient suite", suite(4, &["t0_quotient"]));
    record(5, "sobrification suite", suite(4, &["sobrification"]));
    record(6, "frame suite", suite(4, &["frame"]));
    record(7, "finite collapse", suite(5, &["finite_collapse"]));

    let dag = implication_dag(5).unwrap();
    let refuted: Vec<String> = dag
        .edges
        .iter()
        .filter(|e| !e.holds())
        .map(|e| {
            format!(
                "{} -> {} (witness {})",
                e.from,
                e.to,
                serde_json::to_string(&e.counterexample).unwrap()
            )
        })
        .collect();
    let degenerate = dag.edges.iter().filter(|e| e.degenerate()).count();
    record(
        8,
        "implication diagrams",
        Verdict::new(
            refuted.is_empty(),
            format!(
                "{} edges over {} spaces, {degenerate} flagged degenerate, refuted: [{}]",
                dag.edges.len(),
                dag.spaces_checked,
                refuted.join(", ")
            ),
        ),
    );
    record(9, "miner", miner());
    record(10, "gluing", gluing());

    // The diagram edge "Alexandroff -> almost discrete" fails as drawn: the
    // Sierpinski space is Alexandroff but not almost discrete. Criterion 8
    // stays red for that edge alone; anything else is a regression.
    let expected_red: Vec<usize> = vec![8];
    let red: Vec<usize> = lines
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(k, _)| *k)
        .collect();
    assert_eq!(red, expected_red);
    let bad: Vec<_> = dag.edges.iter().filter(|e| !e.holds()).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!((bad[0].from, bad[0].to), ("Alexandroff", "almost discrete"));
    assert_eq!(
        bad[0].counterexample.as_ref().unwrap().to_space().unwrap(),
        FiniteSpace::sierpinski()
    );
    assert!(dag.edges.iter().any(|e| e.status == EdgeStatus::Collapsed));
}
