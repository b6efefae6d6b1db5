//! The verification harness: property checks swept over every enumerated
//! space, the two implication diagrams, and a counterexample miner.
//!
//! Each [`PropositionCheck`] is evaluated on every labelled space with at
//! most `min(cap, max_n)` points. Instance counts are cumulative over all
//! point counts swept.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::{characterization_clauses, check, hereditarily, urysohn_function, Axiom};
use crate::constructions::{
    box_product, connectivity_quotient, factor_through, factor_through_sobrification,
    factor_through_t0, glue, one_point_compactification, product, product_index, simple_extension,
    skula, sobrification, sobrify_map, strong_topology, sum_with_injections, t0_quotient,
    weak_topology, GluingData, PartialMap,
};
use crate::enumeration::{all_continuous_maps, canonical_classes, enumerate_topologies, SWEEP_CAP};
use crate::error::{Error, Result};
use crate::frames::{
    all_frame_homs, frame_isomorphisms, frame_of_opens, induced_hom, is_slicing_filter,
    map_from_frame_iso, neighbourhood_filter, quotient_frame, slicing_filters, subset_congruence,
    FrameCongruence, FrameHom,
};
use crate::json::{write_space, SpaceDocument};
use crate::map::SpaceMap;
use crate::mask::SubsetMask;
use crate::report::VerdictReport;
use crate::space::{alexandroff_space, FiniteSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    PerSpace,
    PerSubset,
    PerMap,
    PerPair,
}

/// Collects the clause failures of one check on one space.
#[derive(Default)]
pub struct Probe {
    cases: Option<u64>,
    failures: Vec<(String, String)>,
}

impl Probe {
    /// Records `clause` as failing unless `ok`.
    pub fn claim(&mut self, ok: bool, clause: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push((clause.to_string(), detail()));
        }
    }

    /// Adds `k` evaluated cases; a probe that never calls this counts as one.
    pub fn cases(&mut self, k: u64) {
        *self.cases.get_or_insert(0) += k;
    }
}

type Evaluator = Box<dyn Fn(&FiniteSpace, &mut Probe) + Send + Sync>;

pub struct PropositionCheck {
    pub id: String,
    pub scope: Scope,
    /// Largest point count swept.
    pub cap: usize,
    pub description: &'static str,
    eval: Evaluator,
}

impl PropositionCheck {
    fn new(
        id: impl Into<String>,
        scope: Scope,
        cap: usize,
        description: &'static str,
        eval: impl Fn(&FiniteSpace, &mut Probe) + Send + Sync + 'static,
    ) -> Self {
        PropositionCheck {
            id: id.into(),
            scope,
            cap,
            description,
            eval: Box::new(eval),
        }
    }

    /// Runs the check on a single space, whatever its size.
    pub fn evaluate(&self, space: &FiniteSpace) -> VerdictReport {
        let mut report = VerdictReport::new(self.id.clone());
        self.evaluate_into(space, &mut report);
        report
    }

    fn evaluate_into(&self, space: &FiniteSpace, report: &mut VerdictReport) {
        let mut probe = Probe::default();
        (self.eval)(space, &mut probe);
        report.instances_checked += probe.cases.unwrap_or(1);
        for (clause, detail) in probe.failures {
            report.fail(write_space(space), &clause, &detail);
        }
    }
}

/// Spaces shared by the checks that quantify over a second space.
struct Fixtures {
    /// Every labelled space on at most 2 points.
    tiny: Vec<FiniteSpace>,
    /// Every labelled space on at most 3 points.
    small: Vec<FiniteSpace>,
    /// The T0 members of `small`.
    t0_small: Vec<FiniteSpace>,
    /// Canonical T0 representatives on at most 4 points.
    t0_classes: Vec<FiniteSpace>,
    /// `by_n[n]`: every labelled space on `n ≤ 4` points.
    by_n: Vec<Vec<FiniteSpace>>,
}

fn fixtures() -> &'static Fixtures {
    static FIXTURES: OnceLock<Fixtures> = OnceLock::new();
    FIXTURES.get_or_init(|| {
        let mut by_n = vec![Vec::new()];
        for n in 1..=4 {
            by_n.push(
                enumerate_topologies(n, None)
                    .expect("n within cap")
                    .collect(),
            );
        }
        let upto = |k: usize| by_n[1..=k].concat();
        let small = upto(3);
        Fixtures {
            tiny: upto(2),
            t0_small: small
                .iter()
                .filter(|s| check(s, Axiom::T0))
                .cloned()
                .collect(),
            small,
            t0_classes: (1..=4)
                .flat_map(|n| canonical_classes(n).expect("n within cap"))
                .filter(|s| check(s, Axiom::T0))
                .collect(),
            by_n,
        }
    })
}

fn show(a: SubsetMask) -> String {
    format!("{:?}", a.to_vec())
}

fn single(x: usize) -> SubsetMask {
    SubsetMask::singleton(x)
}

fn maps(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<SpaceMap> {
    all_continuous_maps(dom, cod).expect("sizes within the map cap")
}

fn all_tables(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m).map(|_| 0..k).multi_cartesian_product()
}

fn brute_closure(space: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    space
        .closed_sets()
        .into_iter()
        .filter(|c| a.is_subset(*c))
        .fold(space.full(), |m, c| m & c)
}

fn brute_interior(space: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    space
        .opens()
        .iter()
        .filter(|u| u.is_subset(a))
        .fold(SubsetMask::EMPTY, |m, &u| m | u)
}

fn brute_min_open(space: &FiniteSpace, a: SubsetMask) -> SubsetMask {
    space
        .opens()
        .iter()
        .filter(|u| a.is_subset(**u))
        .fold(space.full(), |m, &u| m & u)
}

fn brute_connected(space: &FiniteSpace, a: SubsetMask) -> bool {
    !a.is_empty() && space.subspace(a).0.clopens().len() == 2
}

// ---------------------------------------------------------------------------
// Preorders and the basic operators

fn round_trip(x: &FiniteSpace, p: &mut Probe) {
    let pre = x.specialization_preorder();
    let back = alexandroff_space(&pre);
    p.claim(back == *x, "alexandroff_of_specialization", || {
        write_space(&back)
    });
    let mut ups = pre.up_sets();
    ups.sort_unstable();
    p.claim(ups == x.opens(), "up_sets_are_opens", String::new);
    p.claim(
        back.specialization_preorder() == pre,
        "specialization_of_alexandroff",
        String::new,
    );
}

fn specialization_coherence(x: &FiniteSpace, p: &mut Probe) {
    let pre = x.specialization_preorder();
    for a in x.points() {
        for b in x.points() {
            let items = [
                pre.leq(a, b),
                x.specializes(a, b),
                brute_closure(x, single(b)).contains(a),
                brute_closure(x, single(a)).is_subset(brute_closure(x, single(b))),
                brute_min_open(x, single(a)).contains(b),
                x.opens().iter().all(|u| !u.contains(a) || u.contains(b)),
            ];
            p.claim(
                items.iter().all(|&v| v == items[0]),
                "formulations_agree",
                || format!("x={a}, y={b}: {items:?}"),
            );
        }
    }
}

fn saturation_identities(x: &FiniteSpace, p: &mut Probe) {
    let n = x.n();
    let full = x.full();
    let pre = x.specialization_preorder();
    let is_up = |b: SubsetMask, inv: bool| {
        b.iter().all(|u| {
            x.points()
                .all(|v| !(if inv { pre.leq(v, u) } else { pre.leq(u, v) }) || b.contains(v))
        })
    };
    let ups: Vec<SubsetMask> = SubsetMask::all(n).filter(|&b| is_up(b, false)).collect();
    let mut complements: Vec<SubsetMask> = ups.iter().map(|&b| full - b).collect();
    complements.sort_unstable();
    let inverse_ups: Vec<SubsetMask> = SubsetMask::all(n).filter(|&b| is_up(b, true)).collect();
    let mut inverse_lib = pre.inverse().up_sets();
    inverse_lib.sort_unstable();
    p.claim(
        complements == inverse_ups,
        "complements_of_up_sets_are_down_sets",
        String::new,
    );
    p.claim(inverse_lib == inverse_ups, "inverse_up_sets", String::new);
    for a in SubsetMask::all(n) {
        let hull = ups
            .iter()
            .filter(|b| a.is_subset(**b))
            .fold(full, |m, &b| m & b);
        p.claim(
            pre.saturate(a) == hull,
            "saturation_is_least_up_set",
            || show(a),
        );
        let inner = ups
            .iter()
            .filter(|b| b.is_subset(a))
            .fold(SubsetMask::EMPTY, |m, &b| m | b);
        let principal = x
            .points()
            .map(|y| pre.up_of(y))
            .filter(|u| u.is_subset(a))
            .fold(SubsetMask::EMPTY, |m, u| m | u);
        let dual = full - pre.co_saturate(full - a);
        let lib = pre.saturated_interior(a);
        p.claim(
            lib == inner && inner == principal && principal == dual,
            "interior_expressions_agree",
            || {
                format!(
                    "A={}: {} {} {} {}",
                    show(a),
                    show(lib),
                    show(inner),
                    show(principal),
                    show(dual)
                )
            },
        );
    }
    p.cases(1 << n);
}

fn operators_brute_force(x: &FiniteSpace, p: &mut Probe) {
    let n = x.n();
    for a in SubsetMask::all(n) {
        let derived: SubsetMask = x
            .points()
            .filter(|&y| x.open_nbhds(y).all(|u| u.intersects(a.without(y))))
            .collect();
        p.claim(x.closure(a) == brute_closure(x, a), "closure", || show(a));
        p.claim(x.interior(a) == brute_interior(x, a), "interior", || {
            show(a)
        });
        p.claim(x.derived_set(a) == derived, "derived_set", || show(a));
        p.claim(
            x.min_open_containing(a) == brute_min_open(x, a),
            "least_open_superset",
            || show(a),
        );
        p.claim(
            x.is_connected_subset(a) == brute_connected(x, a) || a.is_empty(),
            "connected_subset",
            || show(a),
        );
        p.claim(x.is_compact(a), "finite_sets_compact", || show(a));
    }
    let connected: Vec<SubsetMask> = SubsetMask::all(n)
        .filter(|&a| brute_connected(x, a))
        .collect();
    for y in x.points() {
        let component = connected
            .iter()
            .filter(|c| c.contains(y))
            .fold(SubsetMask::EMPTY, |m, &c| m | c);
        let quasi = x
            .clopens()
            .into_iter()
            .filter(|c| c.contains(y))
            .fold(x.full(), |m, c| m & c);
        p.claim(x.component_of(y) == component, "component", || {
            format!("x={y}")
        });
        p.claim(x.quasi_component_of(y) == quasi, "quasi_component", || {
            format!("x={y}")
        });
    }
    p.cases(1 << n);
}

fn strong_derived_characterization(x: &FiniteSpace, p: &mut Probe) {
    let t0 = t0_quotient(x);
    let q = &t0.projection;
    for a in SubsetMask::all(x.n()) {
        let sd = x.strong_derived(a);
        let pointwise: SubsetMask = x
            .points()
            .filter(|&y| {
                let rest = a - x.indistinguishable_class(y);
                x.open_nbhds(y).all(|u| u.intersects(rest))
            })
            .collect();
        let pullback = q.preimage(t0.space.derived_set(q.image(a)));
        p.claim(sd == pointwise, "pointwise_class_criterion", || show(a));
        p.claim(sd == pullback, "quotient_pullback", || show(a));
        p.claim(
            x.closure(a) == x.indistinguishable_saturation(a) | sd,
            "closure_is_saturation_plus_strong_derived",
            || show(a),
        );
    }
    for y in x.points() {
        p.claim(
            x.strong_derived(single(y)) == x.point_closure(y) - x.indistinguishable_class(y),
            "point_strong_derived",
            || format!("x={y}"),
        );
    }
    p.cases(1 << x.n());
}

fn essential_derived_characterization(x: &FiniteSpace, p: &mut Probe) {
    let closed = x.closed_sets();
    let mut all_equal = true;
    let mut all_empty = true;
    for a in SubsetMask::all(x.n()) {
        let (sd, d, der) = (
            x.strong_derived(a),
            x.essential_derived(a),
            x.derived_set(a),
        );
        p.claim(sd.is_subset(d) && d.is_subset(der), "sandwich", || show(a));
        let largest = closed
            .iter()
            .filter(|f| f.is_subset(der))
            .fold(SubsetMask::EMPTY, |m, &f| m | f);
        p.claim(d == largest, "union_of_closed_subsets_of_derived", || {
            show(a)
        });
        all_equal &= d == der;
        all_empty &= der.is_empty();
    }
    let points_equal = x
        .points()
        .all(|y| x.essential_derived(single(y)) == x.derived_set(single(y)));
    let t0 = check(x, Axiom::T0);
    p.claim(
        t0 == all_equal && t0 == points_equal,
        "t0_iff_essential_equals_derived",
        || format!("t0={t0}, all sets {all_equal}, points {points_equal}"),
    );
    p.claim(
        x.is_discrete() == all_empty,
        "discrete_iff_no_derived_points",
        String::new,
    );
    p.cases(1 << x.n());
}

fn locally_closed_criteria(x: &FiniteSpace, p: &mut Probe) {
    let closed = x.closed_sets();
    for a in SubsetMask::all(x.n()) {
        let literal = x
            .opens()
            .iter()
            .any(|&u| closed.iter().any(|&f| u & f == a));
        let at_each_point = a
            .iter()
            .all(|y| x.open_nbhds(y).any(|u| u & a == u & x.closure(u & a)));
        let cl = x.closure(a);
        let (sub, pts) = x.subspace(cl);
        let inside: SubsetMask = pts
            .iter()
            .enumerate()
            .filter(|(_, &q)| a.contains(q))
            .map(|(i, _)| i)
            .collect();
        let relatively_open = a.is_empty() || sub.is_open(inside);
        let lib = x.is_locally_closed(a);
        let items = [lib, literal, at_each_point, relatively_open];
        p.claim(items.iter().all(|&v| v == lib), "criteria_agree", || {
            format!("A={}: {items:?}", show(a))
        });
    }
    p.cases(1 << x.n());
}

fn skula_structure(x: &FiniteSpace, p: &mut Probe) {
    let sk = skula(x);
    for y in x.points() {
        p.claim(
            sk.min_nbhd(y) == x.min_nbhd(y) & x.point_closure(y),
            "neighbourhood_base",
            || format!("x={y}"),
        );
        for z in x.points() {
            p.claim(
                sk.specializes(y, z) == x.indistinguishable_class(y).contains(z),
                "specialization_is_indistinguishability",
                || format!("x={y}, y={z}"),
            );
        }
    }
    for a in SubsetMask::all(x.n()) {
        let pointwise: SubsetMask = x
            .points()
            .filter(|&y| x.closure(a & x.point_closure(y)).contains(y))
            .collect();
        p.claim(sk.closure(a) == pointwise, "closure_pointwise", || show(a));
        p.claim(
            sk.closure(a) == x.indistinguishable_saturation(a),
            "closure_is_saturation",
            || show(a),
        );
    }
    let t0 = check(x, Axiom::T0);
    p.claim(
        t0 == check(&sk, Axiom::T2) && t0 == check(&sk, Axiom::T0),
        "t0_iff_skula_hausdorff_iff_skula_t0",
        String::new,
    );
    let sk_q = t0_quotient(&sk);
    let x_q = t0_quotient(x);
    p.claim(
        sk_q.class_of == x_q.class_of,
        "same_quotient_classes",
        String::new,
    );
    p.claim(
        sk_q.space == skula(&x_q.space),
        "skula_commutes_with_t0_quotient",
        String::new,
    );
    p.claim(
        skula(&sk) == alexandroff_space(&x.specialization_preorder().equivalence()),
        "double_skula_is_indistinguishability_topology",
        String::new,
    );
    p.claim(
        (sk == *x) == check(x, Axiom::AlmostDiscrete),
        "skula_fixed_iff_almost_discrete",
        String::new,
    );
    p.cases(1 << x.n());
}

fn skula_functorial(x: &FiniteSpace, p: &mut Probe) {
    let skx = skula(x);
    let mut cases = 0;
    for y in &fixtures().small {
        let sky = skula(y);
        for f in maps(x, y) {
            cases += 1;
            let g =
                SpaceMap::new(skx.clone(), sky.clone(), f.table().to_vec()).expect("same sizes");
            p.claim(g.is_continuous(), "continuous_maps_stay_continuous", || {
                format!("to {} by {:?}", write_space(y), f.table())
            });
        }
    }
    p.cases(cases);
}

fn characterization(axiom: Axiom) -> impl Fn(&FiniteSpace, &mut Probe) + Send + Sync {
    move |x, p| {
        let clauses = characterization_clauses(x, axiom);
        let definition = clauses[0].holds;
        for c in &clauses[1..] {
            if let Some(v) = c.holds {
                p.claim(Some(v) == definition, c.name, || {
                    format!("definition {definition:?}, clause {v}")
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Quotients, sobrification and other constructions

fn t0_quotient_structure(x: &FiniteSpace, p: &mut Probe) {
    let t0 = t0_quotient(x);
    let (q, x0) = (&t0.projection, &t0.space);
    p.claim(q.is_continuous(), "quotient_continuous", String::new);
    p.claim(q.is_open_map(), "quotient_open", String::new);
    p.claim(q.is_closed_map(), "quotient_closed", String::new);
    for y in x.points() {
        p.claim(
            t0.classes[t0.class_of[y]] == x.indistinguishable_class(y),
            "fibres_are_classes",
            || format!("x={y}"),
        );
    }
    let mut images: Vec<SubsetMask> = Vec::new();
    for &u in x.opens() {
        let image = q.image(u);
        p.claim(x0.is_open(image), "image_of_open_is_open", || show(u));
        p.claim(q.preimage(image) == u, "opens_are_saturated", || show(u));
        images.push(image);
        for &v in x.opens() {
            p.claim(
                q.image(u | v) == image | q.image(v),
                "image_preserves_unions",
                || format!("{} {}", show(u), show(v)),
            );
            p.claim(
                q.image(u & v) == image & q.image(v),
                "image_preserves_intersections",
                || format!("{} {}", show(u), show(v)),
            );
        }
    }
    images.sort_unstable();
    images.dedup();
    p.claim(
        images == x0.opens() && images.len() == x.opens().len(),
        "opens_correspond",
        String::new,
    );
    for a in x.points() {
        for b in x.points() {
            p.claim(
                x.specializes(a, b) == x0.specializes(q.apply(a), q.apply(b)),
                "specialization_reflected",
                || format!("x={a}, y={b}"),
            );
        }
    }
    p.claim(check(x0, Axiom::T0), "quotient_is_t0", String::new);
    p.claim(
        q.is_injective() == check(x, Axiom::T0),
        "injective_iff_t0",
        String::new,
    );
}

/// How many continuous maps `mid → cod` give each table after `pre`.
fn composite_counts(pre: &SpaceMap, cod: &FiniteSpace) -> HashMap<Vec<usize>, usize> {
    let mut counts = HashMap::new();
    for h in maps(pre.cod(), cod) {
        let composite = pre.then(&h).expect("composable");
        *counts.entry(composite.table().to_vec()).or_insert(0) += 1;
    }
    counts
}

fn t0_quotient_universal(x: &FiniteSpace, p: &mut Probe) {
    let t0 = t0_quotient(x);
    let q = &t0.projection;
    let mut cases = 0;
    for y in &fixtures().t0_small {
        let counts = composite_counts(q, y);
        for f in maps(x, y) {
            cases += 1;
            let at = || format!("to {} by {:?}", write_space(y), f.table());
            match factor_through_t0(&f) {
                Ok(g) => {
                    p.claim(g.is_continuous(), "factor_continuous", at);
                    p.claim(
                        q.then(&g).map(|c| c.table() == f.table()).unwrap_or(false),
                        "factor_commutes",
                        at,
                    );
                }
                Err(e) => p.claim(false, "factor_exists", || format!("{} {e}", at())),
            }
            p.claim(counts.get(f.table()) == Some(&1), "factor_unique", at);
        }
    }
    if !check(x, Axiom::T0) {
        p.claim(
            matches!(
                factor_through_t0(&SpaceMap::identity(x)),
                Err(Error::CodomainNotT0)
            ),
            "rejects_non_t0_codomain",
            String::new,
        );
    }
    p.cases(cases);
}

fn connectivity_quotient_universal(x: &FiniteSpace, p: &mut Probe) {
    let cq = connectivity_quotient(x);
    let q = &cq.projection;
    p.claim(
        check(&cq.space, Axiom::TotallyDisconnected),
        "quotient_totally_disconnected",
        String::new,
    );
    let mut fibres = cq.classes.clone();
    fibres.sort_unstable();
    let mut components = x.components();
    components.sort_unstable();
    p.claim(fibres == components, "fibres_are_components", String::new);
    let mut cases = 0;
    for k in 1..=3 {
        let y = FiniteSpace::discrete(k);
        let counts = composite_counts(q, &y);
        for f in maps(x, &y) {
            cases += 1;
            let at = || format!("to discrete {k} by {:?}", f.table());
            match factor_through(&cq, &f) {
                Ok(g) => {
                    p.claim(g.is_continuous(), "factor_continuous", at);
                    p.claim(
                        q.then(&g).map(|c| c.table() == f.table()).unwrap_or(false),
                        "factor_commutes",
                        at,
                    );
                }
                Err(e) => p.claim(false, "factor_exists", || format!("{} {e}", at())),
            }
            p.claim(counts.get(f.table()) == Some(&1), "factor_unique", at);
        }
    }
    p.cases(cases);
}

fn t0_quotient_connectedness(x: &FiniteSpace, p: &mut Probe) {
    let t0 = t0_quotient(x);
    let (q, x0) = (&t0.projection, &t0.space);
    for a in SubsetMask::all(x.n()).filter(|a| !a.is_empty()) {
        p.claim(
            x.is_connected_subset(a) == x0.is_connected_subset(q.image(a)),
            "connected_iff_image_connected",
            || show(a),
        );
    }
    for b in SubsetMask::all(x0.n()).filter(|b| !b.is_empty()) {
        p.claim(
            x0.is_connected_subset(b) == x.is_connected_subset(q.preimage(b)),
            "connected_iff_preimage_connected",
            || show(b),
        );
    }
    for y in x.points() {
        p.claim(
            q.image(x.component_of(y)) == x0.component_of(q.apply(y)),
            "components_correspond",
            || format!("x={y}"),
        );
        p.claim(
            q.image(x.quasi_component_of(y)) == x0.quasi_component_of(q.apply(y)),
            "quasi_components_correspond",
            || format!("x={y}"),
        );
    }
    p.claim(
        check(x, Axiom::WeaklyTotallyDisconnected) == check(x0, Axiom::TotallyDisconnected),
        "weakly_totally_disconnected_iff_quotient_totally_disconnected",
        String::new,
    );
    p.claim(
        check(x, Axiom::WeaklyTotallySeparated) == check(x0, Axiom::TotallySeparated),
        "weakly_totally_separated_iff_quotient_totally_separated",
        String::new,
    );
    p.cases(1 << x.n());
}

fn sobrification_structure(x: &FiniteSpace, p: &mut Probe) {
    let sob = sobrification(x);
    let (xs, iota) = (&sob.space, &sob.iota);
    p.claim(check(xs, Axiom::Sober), "sobrification_sober", String::new);
    let m = sob.set_of.len();
    for i in 0..m {
        for j in 0..m {
            p.claim(
                xs.specializes(i, j) == sob.set_of[i].is_subset(sob.set_of[j]),
                "specialization_is_inclusion",
                || format!("{} {}", show(sob.set_of[i]), show(sob.set_of[j])),
            );
        }
    }
    let u_s =
        |u: SubsetMask| -> SubsetMask { (0..m).filter(|&i| sob.set_of[i].intersects(u)).collect() };
    let mut lifted: Vec<SubsetMask> = x.opens().iter().map(|&u| u_s(u)).collect();
    lifted.sort_unstable();
    p.claim(lifted == xs.opens(), "opens_are_lifts", String::new);
    let range = iota.image(x.full());
    for &u in x.opens() {
        p.claim(iota.preimage(u_s(u)) == u, "lift_pulls_back", || show(u));
        p.claim(iota.image(u) == u_s(u) & range, "open_onto_range", || {
            show(u)
        });
    }
    for a in x.points() {
        for b in x.points() {
            p.claim(
                x.specializes(a, b)
                    == sob.set_of[iota.apply(a)].is_subset(sob.set_of[iota.apply(b)]),
                "canonical_map_reflects_specialization",
                || format!("x={a}, y={b}"),
            );
        }
    }
    p.claim(
        iota.is_injective() == check(x, Axiom::T0),
        "injective_iff_t0",
        String::new,
    );
    p.claim(
        iota.is_surjective() == check(x, Axiom::QuasiSober),
        "surjective_iff_quasi_sober",
        String::new,
    );
    p.claim(
        iota.is_bijective() == check(x, Axiom::Sober),
        "bijective_iff_sober",
        String::new,
    );
    p.claim(
        !iota.is_bijective() || iota.is_homeomorphism(),
        "bijective_is_homeomorphism",
        String::new,
    );
    for e in SubsetMask::all(m) {
        let union = e
            .iter()
            .fold(SubsetMask::EMPTY, |acc, i| acc | sob.set_of[i]);
        let target = x.closure(union);
        let expected: SubsetMask = (0..m)
            .filter(|&i| sob.set_of[i].is_subset(target))
            .collect();
        p.claim(xs.closure(e) == expected, "closure_of_subset", || show(e));
    }
    for a in SubsetMask::all(x.n()) {
        let target = x.closure(a);
        let expected: SubsetMask = (0..m)
            .filter(|&i| sob.set_of[i].is_subset(target))
            .collect();
        p.claim(
            xs.closure(iota.image(a)) == expected,
            "closure_of_image",
            || show(a),
        );
    }
}

fn sobrification_universal(x: &FiniteSpace, p: &mut Probe) {
    let fx = fixtures();
    let sob_x = sobrification(x);
    let id = sobrify_map(&SpaceMap::identity(x)).expect("identity is continuous");
    p.claim(
        id == SpaceMap::identity(&sob_x.space),
        "identity_preserved",
        String::new,
    );
    let mut cases = 0;
    for y in &fx.small {
        let sob_y = sobrification(y);
        let sober = check(y, Axiom::Sober);
        let counts = sober.then(|| composite_counts(&sob_x.iota, y));
        let later: Vec<(SpaceMap, SpaceMap)> = fx
            .tiny
            .iter()
            .flat_map(|z| maps(y, z))
            .map(|g| {
                let gs = sobrify_map(&g).expect("continuous");
                (g, gs)
            })
            .collect();
        for f in maps(x, y) {
            cases += 1;
            let at = || format!("to {} by {:?}", write_space(y), f.table());
            let fs = match sobrify_map(&f) {
                Ok(fs) => fs,
                Err(e) => {
                    p.claim(false, "sobrified_map_exists", || format!("{} {e}", at()));
                    continue;
                }
            };
            let left = sob_x.iota.then(&fs).expect("composable");
            let right = f.then(&sob_y.iota).expect("composable");
            p.claim(left.table() == right.table(), "naturality_square", at);
            if let Some(counts) = &counts {
                match factor_through_sobrification(&f) {
                    Ok(g) => p.claim(
                        sob_x
                            .iota
                            .then(&g)
                            .map(|c| c.table() == f.table())
                            .unwrap_or(false),
                        "factor_commutes",
                        at,
                    ),
                    Err(e) => p.claim(false, "factor_exists", || format!("{} {e}", at())),
                }
                p.claim(counts.get(f.table()) == Some(&1), "factor_unique", at);
            }
            for (g, gs) in &later {
                let whole = sobrify_map(&f.then(g).expect("composable")).expect("continuous");
                p.claim(
                    whole.table() == fs.then(gs).expect("composable").table(),
                    "composition_preserved",
                    || format!("{} then {:?}", at(), g.table()),
                );
            }
        }
    }
    p.cases(cases);
}

fn product_irreducibles(x: &FiniteSpace, p: &mut Probe) {
    let mut cases = 0;
    for y in &fixtures().small {
        cases += 1;
        let sizes = [x.n(), y.n()];
        let prod = product(&[x.clone(), y.clone()]).expect("within size cap");
        p.claim(
            check(&prod, Axiom::QuasiSober),
            "product_quasi_sober",
            || write_space(y),
        );
        let mut found: Vec<SubsetMask> = prod
            .closed_sets()
            .into_iter()
            .filter(|&c| prod.is_irreducible(c))
            .collect();
        found.sort_unstable();
        let irr = |s: &FiniteSpace| -> Vec<SubsetMask> {
            s.closed_sets()
                .into_iter()
                .filter(|&c| s.is_irreducible(c))
                .collect()
        };
        let mut expected: Vec<SubsetMask> = irr(x)
            .iter()
            .cartesian_product(irr(y).iter())
            .map(|(c, d)| {
                c.iter()
                    .cartesian_product(d.iter())
                    .map(|(a, b)| product_index(&sizes, &[a, b]))
                    .collect()
            })
            .collect();
        expected.sort_unstable();
        p.claim(found == expected, "irreducibles_are_products", || {
            write_space(y)
        });
    }
    p.cases(cases);
}

fn td_hereditary(x: &FiniteSpace, p: &mut Probe) {
    if check(x, Axiom::TD) {
        for a in SubsetMask::all(x.n()).filter(|a| !a.is_empty()) {
            p.claim(check(&x.subspace(a).0, Axiom::TD), "subspaces_td", || {
                show(a)
            });
        }
    }
    p.cases((1 << x.n()) - 1);
}

fn td_box_product(x: &FiniteSpace, p: &mut Probe) {
    let mut cases = 0;
    for y in &fixtures().small {
        cases += 1;
        let factors = [x.clone(), y.clone()];
        let boxed = box_product(&factors).expect("within size cap");
        let prod = product(&factors).expect("within size cap");
        p.claim(boxed == prod, "finite_box_is_product", || write_space(y));
        p.claim(
            check(&boxed, Axiom::TD) == (check(x, Axiom::TD) && check(y, Axiom::TD)),
            "box_td_iff_factors_td",
            || write_space(y),
        );
    }
    p.cases(cases);
}

fn r1_compact_sets(x: &FiniteSpace, p: &mut Probe) {
    if !check(x, Axiom::R1) {
        p.cases(0);
        return;
    }
    let n = x.n();
    let sim = |a: usize, b: usize| x.indistinguishable_class(a).contains(b);
    for k in SubsetMask::all(n) {
        let cl = x.closure(k);
        let union = k
            .iter()
            .fold(SubsetMask::EMPTY, |m, y| m | x.point_closure(y));
        p.claim(
            cl == x.indistinguishable_saturation(k) && cl == union,
            "closure_of_compact_is_saturation",
            || show(k),
        );
        p.claim(
            x.opens()
                .iter()
                .all(|u| !k.is_subset(*u) || cl.is_subset(*u)),
            "open_superset_contains_closure",
            || show(k),
        );
        p.claim(
            cl.subsets().all(|a| !k.is_subset(a) || x.is_compact(a)),
            "between_compact_and_closure_compact",
            || show(k),
        );
        for b in SubsetMask::all(n) {
            let strongly_disjoint = k.iter().all(|a| b.iter().all(|c| !sim(a, c)));
            p.claim(
                !strongly_disjoint
                    || !x
                        .min_open_containing(k)
                        .intersects(x.min_open_containing(b)),
                "strongly_disjoint_compacts_separated",
                || format!("{} {}", show(k), show(b)),
            );
        }
        let dense_saturated = cl == x.full() && x.indistinguishable_saturation(k) == k;
        p.claim(
            !dense_saturated || x.is_open(k),
            "dense_saturated_subset_open",
            || show(k),
        );
    }
    for y in x.points() {
        p.claim(
            x.component_of(y) == x.quasi_component_of(y),
            "components_are_quasi_components",
            || format!("x={y}"),
        );
    }
    if check(x, Axiom::WeaklyTotallyDisconnected) {
        let clopens = x.clopens();
        p.claim(
            x.opens().iter().all(|&u| {
                clopens
                    .iter()
                    .filter(|c| c.is_subset(u))
                    .fold(SubsetMask::EMPTY, |m, &c| m | c)
                    == u
            }),
            "clopen_base",
            String::new,
        );
        p.claim(
            check(x, Axiom::WeaklyTotallySeparated),
            "weakly_totally_separated",
            String::new,
        );
    }
    p.cases(1 << n);
}

const INITIAL_AXIOMS: [Axiom; 8] = [
    Axiom::R0,
    Axiom::R1,
    Axiom::WeaklyUrysohn,
    Axiom::Regular,
    Axiom::WeaklyTotallyDisconnected,
    Axiom::WeaklyTotallySeparated,
    Axiom::ZeroDimensional,
    Axiom::CompletelyRegular,
];

fn initial_topology_properties(y: &FiniteSpace, p: &mut Probe) {
    let fx = fixtures();
    let mut cases = 0;
    for axiom in INITIAL_AXIOMS.into_iter().filter(|&a| check(y, a)) {
        for m in 1..=3 {
            for t in all_tables(m, y.n()) {
                cases += 1;
                let w = weak_topology(m, &[(t.clone(), y.clone())]).expect("valid table");
                p.claim(check(&w, axiom), axiom.name(), || format!("{t:?}"));
            }
        }
        for y2 in fx.tiny.iter().filter(|s| check(s, axiom)) {
            for m in 1..=2 {
                for (t1, t2) in
                    all_tables(m, y.n()).cartesian_product(all_tables(m, y2.n()).collect_vec())
                {
                    cases += 1;
                    let w = weak_topology(m, &[(t1.clone(), y.clone()), (t2.clone(), y2.clone())])
                        .expect("valid tables");
                    p.claim(check(&w, axiom), axiom.name(), || {
                        format!("{t1:?} and {t2:?} into {}", write_space(y2))
                    });
                }
            }
        }
    }
    p.cases(cases);
}

fn weak_topology_structure(x: &FiniteSpace, p: &mut Probe) {
    let mut cases = 0;
    for m in 1..=3 {
        for f in all_tables(m, x.n()) {
            cases += 1;
            let w = weak_topology(m, &[(f.clone(), x.clone())]).expect("valid table");
            let mut pre: Vec<SubsetMask> = x
                .opens()
                .iter()
                .map(|&u| (0..m).filter(|&i| u.contains(f[i])).collect())
                .collect();
            pre.sort_unstable();
            pre.dedup();
            p.claim(w.opens() == pre, "opens_are_preimages", || format!("{f:?}"));
            let map = SpaceMap::new(w.clone(), x.clone(), f.clone()).expect("valid table");
            p.claim(map.is_continuous(), "map_continuous", || format!("{f:?}"));
            for k in 1..=2 {
                for h in all_tables(k, m) {
                    let step = weak_topology(k, &[(h.clone(), w.clone())]).expect("valid table");
                    let direct: Vec<usize> = h.iter().map(|&i| f[i]).collect();
                    let once = weak_topology(k, &[(direct, x.clone())]).expect("valid table");
                    p.claim(step == once, "transitive", || format!("{f:?} after {h:?}"));
                }
            }
        }
    }
    p.cases(cases);
}

fn strong_topology_structure(x: &FiniteSpace, p: &mut Probe) {
    for q in [t0_quotient(x), connectivity_quotient(x)] {
        let s = strong_topology(q.space.n(), &[(x.clone(), q.class_of.clone())]).expect("valid");
        p.claim(s == q.space, "quotient_is_final", || write_space(&q.space));
    }
    for y in &fixtures().tiny {
        let (sum, inj) = sum_with_injections(&[x.clone(), y.clone()]).expect("within cap");
        let family: Vec<(FiniteSpace, Vec<usize>)> = [x, y]
            .iter()
            .zip(&inj)
            .map(|(s, i)| ((*s).clone(), i.table().to_vec()))
            .collect();
        let s = strong_topology(sum.n(), &family).expect("valid");
        p.claim(s == sum, "sum_is_final", || write_space(y));
        p.claim(
            inj.iter().all(|i| i.is_continuous() && i.is_open_map()),
            "injections_open_embeddings",
            || write_space(y),
        );
    }
}

fn one_point_compactification_laws(x: &FiniteSpace, p: &mut Probe) {
    let star = one_point_compactification(x).expect("within size cap");
    let inf = x.n();
    p.claim(
        star.is_closed(single(inf)),
        "point_at_infinity_closed",
        String::new,
    );
    p.claim(star.is_compact(star.full()), "compact", String::new);
    p.claim(star.is_open(x.full()), "original_space_open", String::new);
    p.claim(
        star.subspace(x.full()).0 == *x,
        "original_space_embedded",
        String::new,
    );
    for axiom in [Axiom::T0, Axiom::R0, Axiom::R1] {
        p.claim(
            check(&star, axiom) == check(x, axiom),
            axiom.name(),
            String::new,
        );
    }
}

fn simple_extension_structure(x: &FiniteSpace, p: &mut Probe) {
    for a in SubsetMask::all(x.n()) {
        let ext = simple_extension(x, a);
        let generated = FiniteSpace::generated_by(x.n(), x.opens().iter().copied().chain([a]))
            .expect("valid subbase");
        p.claim(ext == generated, "least_topology_adding_set", || show(a));
        p.claim(
            x.opens().iter().all(|&u| ext.is_open(u)) && ext.is_open(a),
            "finer_and_contains_set",
            || show(a),
        );
    }
    p.cases(1 << x.n());
}

fn maximal_compact_search(x: &FiniteSpace, p: &mut Probe) {
    let finer = fixtures().by_n[x.n()]
        .iter()
        .any(|t| t != x && x.opens().iter().all(|&u| t.is_open(u)));
    p.claim(
        check(x, Axiom::MaximalCompact) == !finer,
        "no_strictly_finer_compact_topology",
        || format!("strictly finer topology exists: {finer}"),
    );
}

fn urysohn_function_separation(x: &FiniteSpace, p: &mut Probe) {
    let n = x.n();
    let mut cases = 0;
    for a in SubsetMask::all(n) {
        for b in SubsetMask::all(n).filter(|b| !b.intersects(a)) {
            cases += 1;
            let splittable = x
                .components()
                .iter()
                .all(|c| !(c.intersects(a) && c.intersects(b)));
            match urysohn_function(x, a, b) {
                Ok(f) => {
                    let ok = splittable
                        && a.iter().all(|y| f[y] == 1.0)
                        && b.iter().all(|y| f[y] == 0.0)
                        && f.iter().all(|v| (0.0..=1.0).contains(v))
                        && x.components()
                            .iter()
                            .all(|c| c.iter().all(|y| f[y] == f[c.first().unwrap()]));
                    p.claim(ok, "separating_function_valid", || {
                        format!("{} {}", show(a), show(b))
                    });
                }
                Err(Error::NoSeparation(y)) => p.claim(
                    !splittable
                        && x.component_of(y).intersects(a)
                        && x.component_of(y).intersects(b),
                    "no_separation_witness",
                    || format!("{} {}", show(a), show(b)),
                ),
                Err(e) => p.claim(false, "unexpected_error", || e.to_string()),
            }
        }
    }
    p.cases(cases);
}

// ---------------------------------------------------------------------------
// Frames

fn brute_compatible(frame: &crate::frames::Frame, labels: &[usize]) -> bool {
    let m = frame.len();
    (0..m).all(|a| {
        (0..m).all(|b| {
            labels[a] != labels[b]
                || (0..m).all(|c| {
                    labels[frame.join(a, c)] == labels[frame.join(b, c)]
                        && labels[frame.meet(a, c)] == labels[frame.meet(b, c)]
                })
        })
    })
}

/// Set partitions of `0..m` as restricted growth strings.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, cur: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in 0..=next {
            cur.push(c);
            go(m, cur, next.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), 0, &mut out);
    out
}

fn congruence_kernel(x: &FiniteSpace, p: &mut Probe) {
    let fx = frame_of_opens(x);
    let mut cases = 0;
    for y in &fixtures().small {
        for h in all_frame_homs(&frame_of_opens(y), &fx) {
            cases += 1;
            let k = h.kernel();
            let at = || format!("hom from {} with table {:?}", write_space(y), h.table());
            p.claim(
                FrameCongruence::new(h.src().clone(), k.class_of().to_vec()).is_ok(),
                "kernel_is_congruence",
                at,
            );
            p.claim(
                brute_compatible(h.src(), k.class_of()),
                "kernel_compatible",
                at,
            );
        }
    }
    for labels in partitions(fx.len()) {
        cases += 1;
        let compatible = brute_compatible(&fx, &labels);
        match FrameCongruence::new(fx.clone(), labels.clone()) {
            Ok(theta) => {
                p.claim(compatible, "accepted_only_if_compatible", || {
                    format!("{labels:?}")
                });
                let kernel = quotient_frame(&theta).map(|qf| qf.q.kernel());
                p.claim(
                    kernel.as_ref().ok() == Some(&theta),
                    "congruence_is_kernel_of_quotient",
                    || format!("{labels:?}"),
                );
            }
            Err(_) => p.claim(!compatible, "rejected_only_if_incompatible", || {
                format!("{labels:?}")
            }),
        }
    }
    p.cases(cases);
}

fn frame_functoriality(x: &FiniteSpace, p: &mut Probe) {
    let fx = fixtures();
    p.claim(
        induced_hom(&SpaceMap::identity(x)).ok() == Some(FrameHom::identity(&frame_of_opens(x))),
        "identity_preserved",
        String::new,
    );
    let mut cases = 0;
    for y in &fx.small {
        let later: Vec<(SpaceMap, FrameHom)> = fx
            .tiny
            .iter()
            .flat_map(|z| maps(y, z))
            .map(|g| {
                let h = induced_hom(&g).expect("continuous");
                (g, h)
            })
            .collect();
        for f in maps(x, y) {
            let hf = induced_hom(&f).expect("continuous");
            for (g, hg) in &later {
                cases += 1;
                let whole = induced_hom(&f.then(g).expect("composable")).expect("continuous");
                p.claim(
                    whole == hg.then(&hf).expect("composable"),
                    "contravariant_composition",
                    || {
                        format!(
                            "{:?} into {} then {:?}",
                            f.table(),
                            write_space(y),
                            g.table()
                        )
                    },
                );
            }
        }
    }
    p.cases(cases);
}

fn subset_congruences(x: &FiniteSpace, p: &mut Probe) {
    let n = x.n();
    let sk = skula(x);
    let all: Vec<FrameCongruence> = SubsetMask::all(n)
        .map(|a| subset_congruence(x, a))
        .collect();
    for a in SubsetMask::all(n) {
        let e_a = &all[a.bits() as usize];
        if a.is_empty() {
            p.claim(e_a.classes().len() == 1, "empty_trace_total", String::new);
        } else {
            let (sub, pts) = x.subspace(a);
            let incl = SpaceMap::new(sub, x.clone(), pts).expect("valid inclusion");
            let kernel = induced_hom(&incl).expect("inclusion continuous").kernel();
            p.claim(kernel == *e_a, "kernel_of_inclusion", || show(a));
        }
        for b in SubsetMask::all(n) {
            let e_b = &all[b.bits() as usize];
            p.claim(
                e_a.is_finer_than(e_b) == sk.closure(b).is_subset(sk.closure(a)),
                "inclusion_iff_skula_closures",
                || format!("{} {}", show(a), show(b)),
            );
        }
    }
    let distinct = all.iter().map(|e| e.class_of().to_vec()).unique().count();
    p.claim(
        (distinct == all.len()) == check(x, Axiom::TD),
        "injective_iff_td",
        || format!("{distinct} distinct of {}", all.len()),
    );
    p.cases(1 << (2 * n));
}

fn frame_iso_reconstruction(x: &FiniteSpace, p: &mut Probe) {
    let fx = frame_of_opens(x);
    let td = check(x, Axiom::TD);
    let mut cases = 0;
    for y in &fixtures().t0_classes {
        let isos = frame_isomorphisms(&frame_of_opens(y), &fx);
        if isos.is_empty() {
            continue;
        }
        let candidates = if td { maps(x, y) } else { Vec::new() };
        let homeomorphisms = candidates.iter().filter(|g| g.is_homeomorphism()).count();
        if td {
            p.claim(
                homeomorphisms == isos.len(),
                "isomorphisms_match_homeomorphisms",
                || write_space(y),
            );
        }
        for phi in isos {
            cases += 1;
            let at = || format!("to {} via {:?}", write_space(y), phi.table());
            match map_from_frame_iso(&phi, x, y) {
                Ok(f) => {
                    p.claim(td, "only_td_domains", at);
                    p.claim(f.is_homeomorphism(), "homeomorphism", at);
                    p.claim(
                        induced_hom(&f).ok().as_ref() == Some(&phi),
                        "induces_the_isomorphism",
                        at,
                    );
                    let inducing = candidates
                        .iter()
                        .filter(|g| induced_hom(g).ok().as_ref() == Some(&phi))
                        .count();
                    p.claim(inducing == 1, "unique_inducing_map", at);
                }
                Err(e) => p.claim(!td, "reconstruction_succeeds", || format!("{} {e}", at())),
            }
        }
    }
    p.cases(cases);
}

fn slicing_filter_classification(x: &FiniteSpace, p: &mut Probe) {
    let frame = frame_of_opens(x);
    let mut expected: Vec<Vec<usize>> = x.points().map(|y| neighbourhood_filter(x, y)).collect();
    expected.sort();
    expected.dedup();
    let mut found = slicing_filters(x);
    found.sort();
    p.claim(
        found == expected,
        "slicing_filters_are_neighbourhood_filters",
        || format!("{found:?}"),
    );
    let all_slicing = x
        .points()
        .all(|y| is_slicing_filter(&frame, &neighbourhood_filter(x, y)));
    p.claim(
        all_slicing == check(x, Axiom::Rd),
        "rd_iff_all_slicing",
        String::new,
    );
    for (i, &u) in frame.elems().iter().enumerate() {
        for (j, &v) in frame.elems().iter().enumerate() {
            if frame.immediately_precedes(j, i) {
                p.claim(
                    u.iter().any(|y| v == u - x.indistinguishable_class(y)),
                    "cover_removes_one_class",
                    || format!("{} below {}", show(v), show(u)),
                );
            }
        }
    }
}

fn gluing_open_covers(x: &FiniteSpace, p: &mut Probe) {
    let opens: Vec<SubsetMask> = x
        .opens()
        .iter()
        .copied()
        .filter(|u| !u.is_empty())
        .collect();
    let mut covers: Vec<Vec<SubsetMask>> = vec![vec![x.full()]];
    for (i, &u) in opens.iter().enumerate() {
        for &v in &opens[i..] {
            if u | v == x.full() {
                covers.push(vec![u, v]);
            }
        }
    }
    for cover in &covers {
        let subs: Vec<(FiniteSpace, Vec<usize>)> = cover.iter().map(|&u| x.subspace(u)).collect();
        let local = |piece: usize, point: usize| subs[piece].1.iter().position(|&q| q == point);
        let k = cover.len();
        let overlaps: Vec<Vec<SubsetMask>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        (0..subs[a].1.len())
                            .filter(|&i| cover[b].contains(subs[a].1[i]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let homeos: Vec<Vec<PartialMap>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| subs[a].1.iter().map(|&q| local(b, q)).collect())
                    .collect()
            })
            .collect();
        let data = GluingData {
            pieces: subs.iter().map(|(s, _)| s.clone()).collect(),
            overlaps,
            homeos,
        };
        let at = || format!("cover {:?}", cover.iter().map(|u| u.to_vec()).collect_vec());
        let glued = match glue(&data) {
            Ok(g) => g,
            Err(e) => {
                p.claim(false, "cover_glues", || format!("{} {e}", at()));
                continue;
            }
        };
        p.claim(glued.projection.is_open_map(), "projection_open", at);
        let table: Option<Vec<usize>> = x
            .points()
            .map(|q| {
                let images: Vec<usize> = (0..k)
                    .filter_map(|a| local(a, q).map(|i| glued.embeddings[a].apply(i)))
                    .collect();
                images.iter().all_equal().then(|| images[0])
            })
            .collect();
        let back = table.and_then(|t| SpaceMap::new(x.clone(), glued.space.clone(), t).ok());
        p.claim(
            back.is_some_and(|m| m.is_homeomorphism()),
            "reproduces_space",
            at,
        );
        for (a, emb) in glued.embeddings.iter().enumerate() {
            p.claim(
                emb.is_injective() && emb.is_continuous() && emb.is_open_map(),
                "embeddings_open",
                at,
            );
            for (b, other) in glued.embeddings.iter().enumerate() {
                let meet = emb.image(data.pieces[a].full()) & other.image(data.pieces[b].full());
                p.claim(
                    emb.image(data.overlaps[a][b]) == meet,
                    "overlaps_map_to_intersections",
                    at,
                );
            }
        }
    }
    p.cases(covers.len() as u64);
}

// ---------------------------------------------------------------------------
// Axiom-level laws

fn conjunction_laws(x: &FiniteSpace, p: &mut Probe) {
    let c = |a| check(x, a);
    p.claim(
        c(Axiom::T1) == (c(Axiom::T0) && c(Axiom::R0)),
        "t1_iff_t0_and_r0",
        String::new,
    );
    p.claim(
        c(Axiom::T2) == (c(Axiom::T0) && c(Axiom::R1)),
        "t2_iff_t0_and_r1",
        String::new,
    );
    p.claim(
        c(Axiom::TD) == (c(Axiom::T0) && c(Axiom::RD)),
        "td_iff_t0_and_rd_upper",
        String::new,
    );
    let sober_td = c(Axiom::Sober) && c(Axiom::TD);
    p.claim(
        hereditarily(x, Axiom::Sober) == sober_td,
        "hereditarily_sober_iff_sober_and_td",
        String::new,
    );
    p.claim(
        (hereditarily(x, Axiom::QuasiSober) && c(Axiom::T0)) == sober_td,
        "subspaces_quasi_sober_and_t0_iff_sober_and_td",
        String::new,
    );
}

fn disconnectedness_implications(x: &FiniteSpace, p: &mut Probe) {
    let c = |a| check(x, a);
    let implies = |a: bool, b: bool| !a || b;
    p.claim(
        implies(c(Axiom::WeaklyTotallyDisconnected), c(Axiom::R0)),
        "weakly_totally_disconnected_r0",
        String::new,
    );
    p.claim(
        implies(c(Axiom::WeaklyTotallySeparated), c(Axiom::R1)),
        "weakly_totally_separated_r1",
        String::new,
    );
    p.claim(
        implies(c(Axiom::TotallySeparated), c(Axiom::Urysohn)),
        "totally_separated_urysohn",
        String::new,
    );
    p.claim(
        implies(c(Axiom::WeaklyTotallySeparated), c(Axiom::WeaklyUrysohn)),
        "weakly_totally_separated_weakly_urysohn",
        String::new,
    );
    p.claim(
        implies(
            c(Axiom::ExtremallyDisconnected) && c(Axiom::R1),
            c(Axiom::WeaklyTotallyDisconnected),
        ),
        "extremally_disconnected_r1_weakly_totally_disconnected",
        String::new,
    );
    p.claim(
        implies(
            c(Axiom::ExtremallyDisconnected) && c(Axiom::Regular),
            c(Axiom::ZeroDimensional),
        ),
        "extremally_disconnected_regular_zero_dimensional",
        String::new,
    );
}

/// Deterministic relabellings: reversal, rotation and a transposition.
fn relabellings(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![
        (0..n).rev().collect(),
        (0..n).map(|i| (i + 1) % n).collect(),
    ];
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, n / 2);
    out.push(swap);
    out
}

fn relabel_invariance(x: &FiniteSpace, p: &mut Probe) {
    for perm in relabellings(x.n()) {
        let y = x.relabel(&perm);
        for axiom in Axiom::ALL {
            p.claim(check(x, axiom) == check(&y, axiom), axiom.name(), || {
                format!("{perm:?}")
            });
        }
    }
}

fn finite_collapse(x: &FiniteSpace, p: &mut Probe) {
    let c = |a| check(x, a);
    let low = [Axiom::T0, Axiom::TD, Axiom::Sober];
    p.claim(
        low.iter().all(|&a| c(a) == c(Axiom::T0)),
        "t0_td_sober_coincide",
        || format!("{:?}", low.map(c)),
    );
    let high = [
        Axiom::T1,
        Axiom::T2,
        Axiom::SH,
        Axiom::SC,
        Axiom::KC,
        Axiom::KCOmega,
        Axiom::WH,
        Axiom::MaximalCompact,
        Axiom::Discrete,
    ];
    p.claim(
        high.iter().all(|&a| c(a) == c(Axiom::Discrete)),
        "t1_through_discrete_coincide",
        || format!("{:?}", high.map(c)),
    );
    p.claim(c(Axiom::QuasiSober), "quasi_sober", String::new);
    p.claim(c(Axiom::Rd), "rd", String::new);
    p.claim(is_alexandroff(x), "alexandroff", String::new);
    let no_derived = SubsetMask::all(x.n()).all(|a| x.derived_set(a).is_empty());
    let omega_is_derived =
        SubsetMask::all(x.n()).all(|a| x.derived_set(a).is_subset(x.omega_accumulation(a)));
    p.claim(
        c(Axiom::T1) == no_derived && c(Axiom::T1) == omega_is_derived,
        "t1_iff_accumulation_is_omega_accumulation",
        String::new,
    );
}

fn is_alexandroff(x: &FiniteSpace) -> bool {
    x.points().all(|y| x.is_open(brute_min_open(x, single(y))))
}

/// Every registered check, in report order.
pub fn registry() -> Vec<PropositionCheck> {
    use Scope::*;
    let mut out = vec![
        PropositionCheck::new("preorder.round_trip", PerSpace, 6, "alexandroff space of the specialization preorder is the space", round_trip),
        PropositionCheck::new("specialization.coherence", PerPair, 4, "five formulations of the specialization preorder agree", specialization_coherence),
        PropositionCheck::new("saturation.identities", PerSubset, 4, "saturation and saturated interior identities for preorders", saturation_identities),
        PropositionCheck::new("operators.brute_force", PerSubset, 4, "closure, interior, derived set and components against brute force", operators_brute_force),
        PropositionCheck::new("strong_derived.characterization", PerSubset, 4, "strong derived set: pointwise, quotient pullback, closure decomposition", strong_derived_characterization),
        PropositionCheck::new("essential_derived.characterization", PerSubset, 4, "essential derived set sandwich, largest closed subset, T0 and discreteness criteria", essential_derived_characterization),
        PropositionCheck::new("locally_closed.criteria", PerSubset, 4, "locally closed: literal, pointwise, relatively open in the closure", locally_closed_criteria),
        PropositionCheck::new("skula.structure", PerSubset, 4, "Skula topology: neighbourhood base, closures, specialization, quotient, double modification", skula_structure),
        PropositionCheck::new("skula.functorial", PerMap, 3, "continuous maps remain continuous between Skula modifications", skula_functorial),
    ];
    for axiom in Axiom::ALL {
        out.push(PropositionCheck::new(
            format!("{}.characterization", axiom.name()),
            PerSpace,
            5,
            "every registered formulation agrees with the definition",
            characterization(axiom),
        ));
    }
    out.extend([
        PropositionCheck::new("t0_quotient.structure", PerSpace, 4, "quotient map open and closed, opens correspond, order reflected, T0", t0_quotient_structure),
        PropositionCheck::new("t0_quotient.universal", PerMap, 4, "maps into T0 spaces on at most 3 points factor uniquely through the T0 quotient", t0_quotient_universal),
        PropositionCheck::new("t0_quotient.connectedness", PerSubset, 4, "connectedness, components and quasi-components pass through the T0 quotient", t0_quotient_connectedness),
        PropositionCheck::new("connectivity_quotient.universal", PerMap, 4, "maps into totally disconnected spaces factor uniquely through the component quotient", connectivity_quotient_universal),
        PropositionCheck::new("sobrification.structure", PerSubset, 4, "sobrification is sober, ordered by inclusion, closure formulas, canonical map criteria", sobrification_structure),
        PropositionCheck::new("sobrification.universal", PerMap, 3, "naturality square, functor laws, unique factorization through sober codomains", sobrification_universal),
        PropositionCheck::new("product.irreducibles", PerPair, 3, "products are quasi-sober with irreducible closed sets the products of irreducibles", product_irreducibles),
        PropositionCheck::new("td.hereditary", PerSubset, 4, "subspaces of TD spaces are TD", td_hereditary),
        PropositionCheck::new("td.box_product", PerPair, 3, "finite box products equal products and are TD iff all factors are", td_box_product),
        PropositionCheck::new("r1.compact_sets", PerSubset, 4, "compact sets in R1 spaces: closures, separation, dense subsets, components", r1_compact_sets),
        PropositionCheck::new("initial_topology.properties", PerMap, 3, "initial topologies inherit the R and disconnectedness axioms", initial_topology_properties),
        PropositionCheck::new("weak_topology.structure", PerMap, 3, "weak topology is the preimage topology and is transitive", weak_topology_structure),
        PropositionCheck::new("strong_topology.structure", PerPair, 4, "quotients and sums are final topologies", strong_topology_structure),
        PropositionCheck::new("one_point_compactification.separation", PerSpace, 5, "one-point compactification preserves and reflects T0, R0, R1", one_point_compactification_laws),
        PropositionCheck::new("simple_extension.structure", PerSubset, 4, "simple extension is the least topology containing the set", simple_extension_structure),
        PropositionCheck::new("maximal_compact.literal_search", PerSpace, 4, "maximal compactness against a search over all finer topologies", maximal_compact_search),
        PropositionCheck::new("urysohn_function.separation", PerSubset, 4, "separating functions exist exactly when no component meets both sets", urysohn_function_separation),
        PropositionCheck::new("frame.congruence_kernel", PerMap, 3, "kernels are congruences and every congruence is the kernel of its quotient", congruence_kernel),
        PropositionCheck::new("frame.functoriality", PerMap, 3, "induced homomorphisms compose contravariantly", frame_functoriality),
        PropositionCheck::new("frame.subset_congruence", PerSubset, 4, "trace congruences: inclusion kernels, order against Skula closures, injective iff TD", subset_congruences),
        PropositionCheck::new("frame.iso_reconstruction", PerMap, 4, "frame isomorphisms between TD and T0 spaces come from unique homeomorphisms", frame_iso_reconstruction),
        PropositionCheck::new("frame.slicing_filters", PerSpace, 4, "slicing filters are the neighbourhood filters; covers remove one class", slicing_filter_classification),
        PropositionCheck::new("gluing.open_cover", PerSpace, 3, "gluing the pieces of an open cover reproduces the space", gluing_open_covers),
        PropositionCheck::new("axioms.conjunction_laws", PerSpace, 5, "T1, T2, TD and hereditary sobriety as conjunctions", conjunction_laws),
        PropositionCheck::new("axioms.disconnectedness_implications", PerSpace, 5, "disconnectedness axioms imply the matching separation axioms", disconnectedness_implications),
        PropositionCheck::new("axioms.relabel_invariance", PerSpace, 5, "axiom verdicts are invariant under relabelling", relabel_invariance),
        PropositionCheck::new("finite_collapse", PerSpace, 5, "axioms that coincide or always hold on finite spaces", finite_collapse),
    ]);
    out
}

fn select(filter: Option<&[String]>) -> Result<Vec<PropositionCheck>> {
    let all = registry();
    let Some(wanted) = filter else {
        return Ok(all);
    };
    for w in wanted {
        let group = format!("{w}.");
        if !all.iter().any(|c| c.id == *w || c.id.starts_with(&group)) {
            return Err(Error::UnknownPropositionId(w.clone()));
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| {
            wanted
                .iter()
                .any(|w| c.id == *w || c.id.starts_with(&format!("{w}.")))
        })
        .collect())
}

fn check_sweep_size(max_n: usize) -> Result<()> {
    if max_n == 0 || max_n > SWEEP_CAP {
        Err(Error::CapExceeded {
            n: max_n,
            cap: SWEEP_CAP,
        })
    } else {
        Ok(())
    }
}

/// Runs the selected checks over every labelled space with `1..=max_n`
/// points (each check stops at its own cap). An id selects that check, or
/// every check whose id starts with `id.`.
pub fn run_suite(max_n: usize, filter: Option<&[String]>) -> Result<Vec<VerdictReport>> {
    check_sweep_size(max_n)?;
    let checks = select(filter)?;
    let mut reports: Vec<VerdictReport> = checks
        .iter()
        .map(|c| VerdictReport::new(c.id.clone()))
        .collect();
    for n in 1..=max_n {
        let active: Vec<usize> = (0..checks.len()).filter(|&i| checks[i].cap >= n).collect();
        if active.is_empty() {
            continue;
        }
        let spaces: Vec<FiniteSpace> = enumerate_topologies(n, None)?.collect();
        let fresh = || -> Vec<VerdictReport> {
            active
                .iter()
                .map(|&i| VerdictReport::new(checks[i].id.clone()))
                .collect()
        };
        let merged = spaces
            .par_iter()
            .fold(fresh, |mut acc, space| {
                for (slot, &i) in active.iter().enumerate() {
                    checks[i].evaluate_into(space, &mut acc[slot]);
                }
                acc
            })
            .reduce(fresh, |a, b| {
                a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
            });
        for (slot, part) in active.iter().zip(merged) {
            let r = std::mem::replace(&mut reports[*slot], VerdictReport::new(""));
            reports[*slot] = r.merge(part);
        }
    }
    for (r, c) in reports.iter_mut().zip(&checks) {
        r.note(format!("swept n = 1..={}", c.cap.min(max_n)));
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// Implication diagrams

struct Node {
    label: &'static str,
    holds: fn(&FiniteSpace) -> bool,
}

const NODES: [Node; 30] = [
    Node {
        label: "T0",
        holds: |s| check(s, Axiom::T0),
    },
    Node {
        label: "sober",
        holds: |s| check(s, Axiom::Sober),
    },
    Node {
        label: "TD",
        holds: |s| check(s, Axiom::TD),
    },
    Node {
        label: "TD + sober",
        holds: |s| check(s, Axiom::TD) && check(s, Axiom::Sober),
    },
    Node {
        label: "hereditarily sober",
        holds: |s| hereditarily(s, Axiom::Sober),
    },
    Node {
        label: "T1",
        holds: |s| check(s, Axiom::T1),
    },
    Node {
        label: "T1 + sober",
        holds: |s| check(s, Axiom::T1) && check(s, Axiom::Sober),
    },
    Node {
        label: "SH",
        holds: |s| check(s, Axiom::SH),
    },
    Node {
        label: "SC",
        holds: |s| check(s, Axiom::SC),
    },
    Node {
        label: "WH",
        holds: |s| check(s, Axiom::WH),
    },
    Node {
        label: "KC_omega",
        holds: |s| check(s, Axiom::KCOmega),
    },
    Node {
        label: "KC",
        holds: |s| check(s, Axiom::KC),
    },
    Node {
        label: "Hausdorff",
        holds: |s| check(s, Axiom::T2),
    },
    Node {
        label: "locally Hausdorff",
        holds: |s| check(s, Axiom::LocallyHausdorff),
    },
    Node {
        label: "Rd",
        holds: |s| check(s, Axiom::Rd),
    },
    Node {
        label: "R0",
        holds: |s| check(s, Axiom::R0),
    },
    Node {
        label: "Rd + quasi-sober",
        holds: |s| check(s, Axiom::Rd) && check(s, Axiom::QuasiSober),
    },
    Node {
        label: "quasi-sober",
        holds: |s| check(s, Axiom::QuasiSober),
    },
    Node {
        label: "hereditarily quasi-sober",
        holds: |s| hereditarily(s, Axiom::QuasiSober),
    },
    Node {
        label: "R0 + quasi-sober",
        holds: |s| check(s, Axiom::R0) && check(s, Axiom::QuasiSober),
    },
    Node {
        label: "locally R1",
        holds: |s| check(s, Axiom::LocallyR1),
    },
    Node {
        label: "R1",
        holds: |s| check(s, Axiom::R1),
    },
    Node {
        label: "weakly Urysohn",
        holds: |s| check(s, Axiom::WeaklyUrysohn),
    },
    Node {
        label: "regular",
        holds: |s| check(s, Axiom::Regular),
    },
    Node {
        label: "completely regular",
        holds: |s| check(s, Axiom::CompletelyRegular),
    },
    Node {
        label: "R0 + normal",
        holds: |s| check(s, Axiom::R0) && check(s, Axiom::Normal),
    },
    Node {
        label: "zero-dimensional",
        holds: |s| check(s, Axiom::ZeroDimensional),
    },
    Node {
        label: "almost discrete",
        holds: |s| check(s, Axiom::AlmostDiscrete),
    },
    Node {
        label: "Alexandroff",
        holds: is_alexandroff,
    },
    Node {
        label: "R1 + locally compact",
        holds: |s| check(s, Axiom::R1) && locally_compact(s),
    },
];

const R1_COMPACT: Node = Node {
    label: "R1 + compact",
    holds: |s| check(s, Axiom::R1) && s.is_compact(s.full()),
};

/// Every point has a base of compact neighbourhoods.
fn locally_compact(s: &FiniteSpace) -> bool {
    s.points().all(|x| {
        s.open_nbhds(x)
            .all(|u| s.min_nbhd(x).is_subset(u) && s.is_compact(s.min_nbhd(x)))
    })
}

fn node(label: &str) -> &'static Node {
    if label == R1_COMPACT.label {
        return &R1_COMPACT;
    }
    NODES
        .iter()
        .find(|n| n.label == label)
        .unwrap_or_else(|| panic!("unknown node {label}"))
}

/// `(diagram, from, to, biconditional)`.
const EDGES: [(u8, &str, &str, bool); 35] = [
    (1, "Hausdorff", "KC", false),
    (1, "Hausdorff", "locally Hausdorff", false),
    (1, "KC", "KC_omega", false),
    (1, "KC", "WH", false),
    (1, "KC_omega", "SC", false),
    (1, "WH", "SC", false),
    (1, "locally Hausdorff", "T1 + sober", false),
    (1, "SC", "SH", false),
    (1, "T1 + sober", "TD + sober", false),
    (1, "SH", "T1", false),
    (1, "T1 + sober", "T1", false),
    (1, "TD + sober", "TD", false),
    (1, "T1", "TD", false),
    (1, "TD + sober", "sober", false),
    (1, "sober", "T0", false),
    (1, "TD", "T0", false),
    (1, "TD + sober", "hereditarily sober", true),
    (2, "R1 + compact", "R1 + locally compact", false),
    (2, "R1 + compact", "R0 + normal", false),
    (2, "R1 + locally compact", "completely regular", false),
    (2, "R0 + normal", "completely regular", false),
    (2, "almost discrete", "zero-dimensional", false),
    (2, "Alexandroff", "almost discrete", false),
    (2, "zero-dimensional", "completely regular", false),
    (2, "completely regular", "regular", false),
    (2, "regular", "weakly Urysohn", false),
    (2, "weakly Urysohn", "R1", false),
    (2, "R1", "locally R1", false),
    (2, "locally R1", "R0 + quasi-sober", false),
    (2, "R0 + quasi-sober", "R0", false),
    (2, "R0 + quasi-sober", "Rd + quasi-sober", false),
    (2, "Rd + quasi-sober", "hereditarily quasi-sober", true),
    (2, "R0", "Rd", false),
    (2, "Rd + quasi-sober", "Rd", false),
    (2, "Rd + quasi-sober", "quasi-sober", false),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeStatus {
    /// Holds, and the converse fails on some space.
    Proper,
    /// Holds, and so does the converse: both nodes coincide on finite spaces.
    Collapsed,
    /// Holds because the target holds on every space.
    Universal,
    /// A biconditional edge that holds in both directions.
    Equivalent,
    /// Some space satisfies the source but not the target.
    Refuted,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeVerdict {
    pub diagram: u8,
    pub from: &'static str,
    pub to: &'static str,
    pub biconditional: bool,
    pub status: EdgeStatus,
    pub converse_holds: bool,
    /// The first space refuting the edge, in enumeration order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<SpaceDocument>,
}

impl EdgeVerdict {
    pub fn holds(&self) -> bool {
        self.status != EdgeStatus::Refuted
    }

    pub fn degenerate(&self) -> bool {
        matches!(self.status, EdgeStatus::Collapsed | EdgeStatus::Universal)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DagReport {
    pub max_n: usize,
    pub spaces_checked: u64,
    pub edges: Vec<EdgeVerdict>,
    /// Groups of diagram nodes with identical verdicts on every space swept,
    /// each in diagram order; the group holding everywhere is marked.
    pub collapse_table: Vec<CollapseGroup>,
    pub report: VerdictReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseGroup {
    pub nodes: Vec<&'static str>,
    pub universal: bool,
}

/// Largest point count accepted by [`implication_dag`].
pub const DAG_CAP: usize = 5;

/// Checks every edge of both implication diagrams on all spaces with
/// `1..=max_n` points.
pub fn implication_dag(max_n: usize) -> Result<DagReport> {
    if max_n == 0 || max_n > DAG_CAP {
        return Err(Error::CapExceeded {
            n: max_n,
            cap: DAG_CAP,
        });
    }
    let all_nodes: Vec<&'static Node> = NODES.iter().chain([&R1_COMPACT]).collect();
    let mut spaces = Vec::new();
    for n in 1..=max_n {
        spaces.extend(enumerate_topologies(n, None)?);
    }
    let rows: Vec<u64> = spaces
        .par_iter()
        .map(|s| {
            all_nodes
                .iter()
                .enumerate()
                .filter(|(_, node)| (node.holds)(s))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let index = |label: &str| {
        let target = node(label) as *const Node;
        all_nodes
            .iter()
            .position(|n| std::ptr::eq(*n, target))
            .expect("node registered")
    };
    let mut report = VerdictReport::new("implication_dag");
    let mut edges = Vec::new();
    for &(diagram, from, to, biconditional) in &EDGES {
        let (a, b) = (index(from), index(to));
        let holds = |r: u64| r >> a & 1;
        let target = |r: u64| r >> b & 1;
        let forward = rows.iter().position(|&r| holds(r) == 1 && target(r) == 0);
        let backward = rows.iter().position(|&r| target(r) == 1 && holds(r) == 0);
        let refuting = if biconditional {
            forward.or(backward)
        } else {
            forward
        };
        let universal = rows.iter().all(|&r| target(r) == 1);
        let status = if refuting.is_some() {
            EdgeStatus::Refuted
        } else if universal {
            EdgeStatus::Universal
        } else if biconditional {
            EdgeStatus::Equivalent
        } else if backward.is_none() {
            EdgeStatus::Collapsed
        } else {
            EdgeStatus::Proper
        };
        report.instances_checked += rows.len() as u64;
        if let Some(i) = refuting {
            report.fail(write_space(&spaces[i]), from, to);
        }
        let arrow = if biconditional { "<->" } else { "->" };
        report.note(format!(
            "diagram {diagram}: {from} {arrow} {to}: {status:?}"
        ));
        edges.push(EdgeVerdict {
            diagram,
            from,
            to,
            biconditional,
            status,
            converse_holds: backward.is_none(),
            counterexample: refuting.map(|i| SpaceDocument::from_space(&spaces[i])),
        });
    }
    let mut groups: BTreeMap<Vec<bool>, Vec<&'static str>> = BTreeMap::new();
    let mut order: Vec<Vec<bool>> = Vec::new();
    for (i, node) in all_nodes.iter().enumerate() {
        let column: Vec<bool> = rows.iter().map(|&r| r >> i & 1 == 1).collect();
        if !groups.contains_key(&column) {
            order.push(column.clone());
        }
        groups.entry(column).or_default().push(node.label);
    }
    let collapse_table: Vec<CollapseGroup> = order
        .into_iter()
        .map(|column| CollapseGroup {
            universal: column.iter().all(|&v| v),
            nodes: groups.remove(&column).expect("grouped"),
        })
        .collect();
    for g in &collapse_table {
        if g.nodes.len() > 1 || g.universal {
            let tag = if g.universal { " (every space)" } else { "" };
            report.note(format!("collapse: {}{tag}", g.nodes.join(" = ")));
        }
    }
    Ok(DagReport {
        max_n,
        spaces_checked: rows.len() as u64,
        edges,
        collapse_table,
        report,
    })
}

// ---------------------------------------------------------------------------
// Miner

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MinerOutcome {
    Witness {
        n: usize,
        space: SpaceDocument,
    },
    Exhaustion {
        max_n: usize,
        /// Homeomorphism classes scanned for each `n = 1..=max_n`.
        classes_scanned: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinerResult {
    pub goal: (Axiom, Axiom),
    pub outcome: MinerOutcome,
}

/// The verdict of the first registered clause after the definition, falling
/// back to the definition when no other clause applies.
fn second_opinion(space: &FiniteSpace, axiom: Axiom) -> Option<bool> {
    let clauses = characterization_clauses(space, axiom);
    let definition = clauses[0].holds;
    let consistent = clauses[1..]
        .iter()
        .all(|c| c.holds.is_none() || c.holds == definition);
    consistent.then(|| {
        clauses[1..]
            .iter()
            .find_map(|c| c.holds)
            .or(definition)
            .unwrap_or(false)
    })
}

/// Searches homeomorphism classes in increasing size for a space satisfying
/// `p` but not `q`.
pub fn mine(p: Axiom, q: Axiom, max_n: usize) -> Result<MinerResult> {
    check_sweep_size(max_n)?;
    let mut scanned = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let classes = canonical_classes(n)?;
        if let Some(w) = classes.iter().find(|s| check(s, p) && !check(s, q)) {
            if second_opinion(w, p) != Some(true) || second_opinion(w, q) != Some(false) {
                return Err(Error::PreconditionViolated(format!(
                    "witness {} failed re-verification",
                    write_space(w)
                )));
            }
            return Ok(MinerResult {
                goal: (p, q),
                outcome: MinerOutcome::Witness {
                    n,
                    space: SpaceDocument::from_space(w),
                },
            });
        }
        scanned.push(classes.len());
    }
    Ok(MinerResult {
        goal: (p, q),
        outcome: MinerOutcome::Exhaustion {
            max_n,
            classes_scanned: scanned,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn registry_ids_are_unique() {
        let reg = registry();
        let unique = reg.iter().map(|c| &c.id).unique().count();
        assert_eq!(unique, reg.len());
    }

    #[test]
    fn t0_suite_counts_every_space() {
        let reports = run_suite(3, Some(&ids(&["t0.characterization"]))).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].passed(), "{}", reports[0].summary_line());
        assert_eq!(reports[0].instances_checked, 1 + 4 + 29);
    }

    #[test]
    fn point_space_passes_everything() {
        for r in run_suite(1, None).unwrap() {
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert!(matches!(
            run_suite(2, Some(&ids(&["no.such.check"]))),
            Err(Error::UnknownPropositionId(_))
        ));
        assert!(matches!(run_suite(7, None), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn group_prefix_selects_family() {
        let reports = run_suite(2, Some(&ids(&["frame"]))).unwrap();
        assert!(reports.len() >= 4);
        assert!(reports.iter().all(|r| r.id.starts_with("frame.")));
    }

    #[test]
    fn miner_examples() {
        let r = mine(Axiom::TD, Axiom::T1, 3).unwrap();
        match r.outcome {
            MinerOutcome::Witness { n, space } => {
                assert_eq!(n, 2);
                assert_eq!(space.to_space().unwrap(), canonical_form_of_sierpinski());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        let r = mine(Axiom::R0, Axiom::T0, 2).unwrap();
        assert_eq!(
            r.outcome,
            MinerOutcome::Witness {
                n: 2,
                space: SpaceDocument::from_space(&FiniteSpace::indiscrete(2))
            }
        );
        let r = mine(Axiom::T0, Axiom::TD, 3).unwrap();
        assert_eq!(
            r.outcome,
            MinerOutcome::Exhaustion {
                max_n: 3,
                classes_scanned: vec![1, 3, 9]
            }
        );
    }

    fn canonical_form_of_sierpinski() -> FiniteSpace {
        crate::enumeration::canonical_form(&FiniteSpace::sierpinski())
    }

    #[test]
    fn dag_small_sweep() {
        let dag = implication_dag(3).unwrap();
        assert_eq!(dag.edges.len(), 35);
        let refuted: Vec<_> = dag
            .edges
            .iter()
            .filter(|e| !e.holds())
            .map(|e| (e.from, e.to))
            .collect();
        assert_eq!(refuted, vec![("Alexandroff", "almost discrete")]);
        let t2_kc = dag
            .edges
            .iter()
            .find(|e| e.from == "Hausdorff" && e.to == "KC")
            .unwrap();
        assert_eq!(t2_kc.status, EdgeStatus::Collapsed);
        let sober_t0 = dag
            .edges
            .iter()
            .find(|e| e.from == "sober" && e.to == "T0")
            .unwrap();
        assert!(sober_t0.holds());
    }
}
