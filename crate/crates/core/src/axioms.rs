//! Separation and disconnectedness axioms as predicates on finite spaces,
//! with characterization suites that evaluate every equivalent formulation.
//!
//! Notation: `B_x` is the smallest open set containing `x`, `cl{x}` the
//! closure of `{x}`, `[x]` the indistinguishability class. Regularity and
//! normality use the usual open-separation definitions: a point and a closed
//! set missing it (resp. two disjoint closed sets) have disjoint open
//! neighbourhoods.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constructions::{
    diagonal_alexandroff_closed, simple_extension, skula, sobrification, t0_quotient,
    DiagonalRelation,
};
use crate::error::{Error, Result};
use crate::frames::{frame_of_opens, is_slicing_filter, neighbourhood_filter};
use crate::json::write_space;
use crate::map::SpaceMap;
use crate::mask::SubsetMask;
use crate::report::VerdictReport;
use crate::space::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T0,
    T1,
    T2,
    TD,
    Urysohn,
    WeaklyUrysohn,
    R0,
    R1,
    /// Every indistinguishability class is locally closed.
    Rd,
    /// `{x}'` is closed whenever `[x] = {x}`.
    RD,
    Regular,
    CompletelyRegular,
    Normal,
    Sober,
    QuasiSober,
    Irreducible,
    TotallyDisconnected,
    TotallySeparated,
    WeaklyTotallyDisconnected,
    WeaklyTotallySeparated,
    ExtremallyDisconnected,
    ZeroDimensional,
    AlmostDiscrete,
    LocallyHausdorff,
    LocallyR1,
    KC,
    KCOmega,
    SC,
    SH,
    WH,
    MaximalCompact,
    Discrete,
    Connected,
}

impl Axiom {
    pub const ALL: [Axiom; 33] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::T2,
        Axiom::TD,
        Axiom::Urysohn,
        Axiom::WeaklyUrysohn,
        Axiom::R0,
        Axiom::R1,
        Axiom::Rd,
        Axiom::RD,
        Axiom::Regular,
        Axiom::CompletelyRegular,
        Axiom::Normal,
        Axiom::Sober,
        Axiom::QuasiSober,
        Axiom::Irreducible,
        Axiom::TotallyDisconnected,
        Axiom::TotallySeparated,
        Axiom::WeaklyTotallyDisconnected,
        Axiom::WeaklyTotallySeparated,
        Axiom::ExtremallyDisconnected,
        Axiom::ZeroDimensional,
        Axiom::AlmostDiscrete,
        Axiom::LocallyHausdorff,
        Axiom::LocallyR1,
        Axiom::KC,
        Axiom::KCOmega,
        Axiom::SC,
        Axiom::SH,
        Axiom::WH,
        Axiom::MaximalCompact,
        Axiom::Discrete,
        Axiom::Connected,
    ];

    /// Lowercase snake-case name used in reports and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Axiom::T0 => "t0",
            Axiom::T1 => "t1",
            Axiom::T2 => "t2",
            Axiom::TD => "td",
            Axiom::Urysohn => "urysohn",
            Axiom::WeaklyUrysohn => "weakly_urysohn",
            Axiom::R0 => "r0",
            Axiom::R1 => "r1",
            Axiom::Rd => "rd",
            Axiom::RD => "rd_upper",
            Axiom::Regular => "regular",
            Axiom::CompletelyRegular => "completely_regular",
            Axiom::Normal => "normal",
            Axiom::Sober => "sober",
            Axiom::QuasiSober => "quasi_sober",
            Axiom::Irreducible => "irreducible",
            Axiom::TotallyDisconnected => "totally_disconnected",
            Axiom::TotallySeparated => "totally_separated",
            Axiom::WeaklyTotallyDisconnected => "weakly_totally_disconnected",
            Axiom::WeaklyTotallySeparated => "weakly_totally_separated",
            Axiom::ExtremallyDisconnected => "extremally_disconnected",
            Axiom::ZeroDimensional => "zero_dimensional",
            Axiom::AlmostDiscrete => "almost_discrete",
            Axiom::LocallyHausdorff => "locally_hausdorff",
            Axiom::LocallyR1 => "locally_r1",
            Axiom::KC => "kc",
            Axiom::KCOmega => "kc_omega",
            Axiom::SC => "sc",
            Axiom::SH => "sh",
            Axiom::WH => "wh",
            Axiom::MaximalCompact => "maximal_compact",
            Axiom::Discrete => "discrete",
            Axiom::Connected => "connected",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    /// Case-insensitive; `-` is accepted for `_`.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == key)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Axiom {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn distinguishable(space: &FiniteSpace, x: usize, y: usize) -> bool {
    !space.indistinguishable_class(x).contains(y)
}

fn open_separated(space: &FiniteSpace, a: SubsetMask, b: SubsetMask) -> bool {
    !space
        .min_open_containing(a)
        .intersects(space.min_open_containing(b))
}

fn closure_separated(space: &FiniteSpace, x: usize, y: usize) -> bool {
    !space
        .closure(space.min_nbhd(x))
        .intersects(space.closure(space.min_nbhd(y)))
}

/// Each irreducible closed set and its generic points.
fn generic_points(space: &FiniteSpace) -> impl Iterator<Item = (SubsetMask, usize)> + '_ {
    space
        .closed_sets()
        .into_iter()
        .filter(|&c| space.is_irreducible(c))
        .map(|c| {
            (
                c,
                space
                    .points()
                    .filter(|&x| space.point_closure(x) == c)
                    .count(),
            )
        })
}

/// All subsets of a finite space are countable.
fn is_countable(_: SubsetMask) -> bool {
    true
}

/// The primary definition of `axiom`.
pub fn check(space: &FiniteSpace, axiom: Axiom) -> bool {
    let n = space.n();
    let b = |x: usize| space.min_nbhd(x);
    let cl = |x: usize| space.point_closure(x);
    match axiom {
        Axiom::T0 => pairs(n)
            .all(|(x, y)| x == y || space.opens().iter().any(|u| u.contains(x) != u.contains(y))),
        Axiom::T1 => space
            .points()
            .all(|x| space.is_closed(SubsetMask::singleton(x))),
        Axiom::T2 => pairs(n).all(|(x, y)| x == y || !b(x).intersects(b(y))),
        Axiom::TD => space
            .points()
            .all(|x| space.open_nbhds(x).any(|u| space.is_open(u.without(x)))),
        Axiom::Urysohn => pairs(n).all(|(x, y)| x == y || closure_separated(space, x, y)),
        Axiom::WeaklyUrysohn => {
            pairs(n).all(|(x, y)| !distinguishable(space, x, y) || closure_separated(space, x, y))
        }
        Axiom::R0 => space
            .points()
            .all(|x| space.open_nbhds(x).all(|u| cl(x).is_subset(u))),
        Axiom::R1 => pairs(n).all(|(x, y)| !distinguishable(space, x, y) || !b(x).intersects(b(y))),
        Axiom::Rd => space
            .points()
            .all(|x| space.is_locally_closed(space.indistinguishable_class(x))),
        Axiom::RD => space.points().all(|x| {
            space.indistinguishable_class(x) != SubsetMask::singleton(x)
                || space.is_closed(space.derived_set(SubsetMask::singleton(x)))
        }),
        Axiom::Regular => space.closed_sets().into_iter().all(|f| {
            let nbhd = space.min_open_containing(f);
            (space.full() - f).iter().all(|x| !b(x).intersects(nbhd))
        }),
        Axiom::CompletelyRegular => space.closed_sets().into_iter().all(|f| {
            (space.full() - f)
                .iter()
                .all(|x| !space.component_of(x).intersects(f))
        }),
        Axiom::Normal => {
            let closed = space.closed_sets();
            closed.iter().all(|&e| {
                closed
                    .iter()
                    .all(|&f| e.intersects(f) || open_separated(space, e, f))
            })
        }
        Axiom::Sober => generic_points(space).all(|(_, k)| k == 1),
        Axiom::QuasiSober => generic_points(space).all(|(_, k)| k >= 1),
        Axiom::Irreducible => {
            let nonempty: Vec<SubsetMask> = space
                .opens()
                .iter()
                .copied()
                .filter(|u| !u.is_empty())
                .collect();
            !nonempty.is_empty()
                && nonempty
                    .iter()
                    .all(|&u| nonempty.iter().all(|&v| u.intersects(v)))
        }
        Axiom::TotallyDisconnected => space.components().iter().all(|c| c.len() == 1),
        Axiom::TotallySeparated => space.quasi_components().iter().all(|c| c.len() == 1),
        Axiom::WeaklyTotallyDisconnected => space.points().all(|x| space.component_of(x) == cl(x)),
        Axiom::WeaklyTotallySeparated => {
            space.points().all(|x| space.quasi_component_of(x) == cl(x))
        }
        Axiom::ExtremallyDisconnected => space
            .opens()
            .iter()
            .all(|&u| space.is_open(space.closure(u))),
        Axiom::ZeroDimensional => {
            let clopens = space.clopens();
            space.opens().iter().all(|&u| {
                clopens
                    .iter()
                    .filter(|c| c.is_subset(u))
                    .fold(SubsetMask::EMPTY, |m, &c| m | c)
                    == u
            })
        }
        Axiom::AlmostDiscrete => space.opens().iter().all(|&u| space.is_closed(u)),
        // T2 is hereditary, so if any open neighbourhood of x is Hausdorff
        // then so is B_x.
        Axiom::LocallyHausdorff => space
            .points()
            .all(|x| check(&space.subspace(b(x)).0, Axiom::T2)),
        Axiom::LocallyR1 => space
            .points()
            .all(|x| check(&space.subspace(b(x)).0, Axiom::R1)),
        Axiom::KC => SubsetMask::all(n)
            .filter(|&a| space.is_compact(a))
            .all(|a| space.is_closed(a)),
        Axiom::KCOmega => SubsetMask::all(n)
            .filter(|&a| is_countable(a) && space.is_compact(a))
            .all(|a| space.is_closed(a)),
        // A sequence converges to x iff it eventually lies in B_x, so the
        // sets to test are {x} together with a subset of B_x.
        Axiom::SC => space
            .points()
            .all(|x| b(x).subsets().all(|t| space.is_closed(t.with(x)))),
        // A constant-tail sequence in B_x ∩ B_y converges to both x and y.
        Axiom::SH => pairs(n).all(|(x, y)| x == y || !b(x).intersects(b(y))),
        Axiom::WH => weakly_hausdorff(space),
        Axiom::MaximalCompact => SubsetMask::all(n)
            .filter(|&a| !space.is_open(a))
            .all(|a| simple_extension(space, a) == *space),
        Axiom::Discrete => space.is_discrete(),
        Axiom::Connected => space.is_connected(),
    }
}

/// Images of maps from finite Hausdorff (hence discrete) spaces of at most
/// `n` points are closed. Every map out of a discrete space is continuous,
/// and the image depends only on the multiset of values, so non-decreasing
/// tables suffice.
fn weakly_hausdorff(space: &FiniteSpace) -> bool {
    let n = space.n();
    for k in 1..=n {
        let domain = FiniteSpace::discrete(k);
        let mut table = vec![0usize; k];
        loop {
            let f = SpaceMap::new(domain.clone(), space.clone(), table.clone())
                .expect("values are points");
            debug_assert!(f.is_continuous() && space.is_compact(f.image(domain.full())));
            if !space.is_closed(f.image(domain.full())) {
                return false;
            }
            let Some(i) = (0..k).rev().find(|&i| table[i] + 1 < n) else {
                break;
            };
            let v = table[i] + 1;
            table[i..].iter_mut().for_each(|t| *t = v);
        }
    }
    true
}

/// Whether every subspace satisfies `axiom`.
pub fn hereditarily(space: &FiniteSpace, axiom: Axiom) -> bool {
    SubsetMask::all(space.n())
        .filter(|a| !a.is_empty())
        .all(|a| check(&space.subspace(a).0, axiom))
}

/// One formulation of an axiom; `None` when its hypothesis does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: Option<bool>,
}

fn clause(name: &'static str, holds: bool) -> Clause {
    Clause {
        name,
        holds: Some(holds),
    }
}

fn all_subsets(space: &FiniteSpace, pred: impl Fn(SubsetMask) -> bool) -> bool {
    SubsetMask::all(space.n()).all(pred)
}

/// Whether `x` is weakly isolated in `s`: some open `U` has `x ∈ U ∩ S ⊆ cl{x}`.
fn weakly_isolated(space: &FiniteSpace, s: SubsetMask, x: usize) -> bool {
    s.contains(x) && (space.min_nbhd(x) & s).is_subset(space.point_closure(x))
}

fn isolated_in(space: &FiniteSpace, s: SubsetMask, x: usize) -> bool {
    s.contains(x) && space.min_nbhd(x) & s == SubsetMask::singleton(x)
}

fn is_partition_topology(space: &FiniteSpace) -> bool {
    // τ = Σ(E) for some equivalence E, searched over all set partitions.
    fn search(space: &FiniteSpace, blocks: &mut Vec<SubsetMask>, x: usize) -> bool {
        if x == space.n() {
            let mut sat: Vec<SubsetMask> = SubsetMask::all(space.n())
                .filter(|&a| blocks.iter().all(|&b| !b.intersects(a) || b.is_subset(a)))
                .collect();
            sat.sort_unstable();
            return sat == space.opens();
        }
        for i in 0..blocks.len() {
            blocks[i] = blocks[i].with(x);
            if search(space, blocks, x + 1) {
                return true;
            }
            blocks[i] = blocks[i].without(x);
        }
        blocks.push(SubsetMask::singleton(x));
        let found = search(space, blocks, x + 1);
        blocks.pop();
        found
    }
    search(space, &mut Vec::new(), 0)
}

/// Every formulation registered for `axiom`, the primary definition first.
pub fn characterization_clauses(space: &FiniteSpace, axiom: Axiom) -> Vec<Clause> {
    let n = space.n();
    let pts = || space.points();
    let b = |x: usize| space.min_nbhd(x);
    let cl = |x: usize| space.point_closure(x);
    let single = SubsetMask::singleton;
    let mut out = vec![clause("definition", check(space, axiom))];
    let mut add = |name, holds| out.push(clause(name, holds));
    match axiom {
        Axiom::T0 => {
            let sob = sobrification(space);
            let sk = skula(space);
            add(
                "specialization_antisymmetric",
                space.specialization_preorder().is_antisymmetric(),
            );
            add(
                "neighbourhood_systems_separate",
                pairs(n).all(|(x, y)| x == y || b(x) != b(y)),
            );
            add(
                "essential_derived_is_derived",
                all_subsets(space, |a| {
                    space.essential_derived(a) == space.derived_set(a)
                }),
            );
            add(
                "essential_derived_of_points",
                pts().all(|x| space.essential_derived(single(x)) == space.derived_set(single(x))),
            );
            add(
                "diagonal_closed_in_equivalence_square",
                diagonal_alexandroff_closed(space, DiagonalRelation::Equivalence),
            );
            add("sobrification_map_injective", sob.iota.is_injective());
            add(
                "t0_quotient_map_injective",
                t0_quotient(space).classes.len() == n,
            );
            add("skula_hausdorff", check(&sk, Axiom::T2));
            add("skula_t0", check(&sk, Axiom::T0));
        }
        Axiom::T1 => {
            add(
                "literal_open_pairs",
                pairs(n).all(|(x, y)| {
                    x == y
                        || (space
                            .opens()
                            .iter()
                            .any(|u| u.contains(x) && !u.contains(y))
                            && space
                                .opens()
                                .iter()
                                .any(|u| u.contains(y) && !u.contains(x)))
                }),
            );
            add(
                "specialization_is_equality",
                pairs(n).all(|(x, y)| x == y || !space.specializes(x, y)),
            );
            add(
                "minimal_neighbourhoods_are_points",
                pts().all(|x| b(x) == single(x)),
            );
            add(
                "points_have_no_accumulation",
                pts().all(|x| space.derived_set(single(x)).is_empty()),
            );
            add(
                "sets_are_neighbourhood_intersections",
                all_subsets(space, |a| space.min_open_containing(a) == a),
            );
            add(
                "diagonal_closed_in_preorder_square",
                diagonal_alexandroff_closed(space, DiagonalRelation::Preorder),
            );
            add(
                "accumulation_is_omega_accumulation",
                all_subsets(space, |a| {
                    space.derived_set(a).is_subset(space.omega_accumulation(a))
                }),
            );
            add(
                "t0_and_r0",
                check(space, Axiom::T0) && check(space, Axiom::R0),
            );
        }
        Axiom::T2 => {
            add(
                "literal_open_pairs",
                pairs(n).all(|(x, y)| {
                    x == y
                        || space
                            .open_nbhds(x)
                            .any(|u| space.open_nbhds(y).any(|v| !u.intersects(v)))
                }),
            );
            add(
                "t0_and_r1",
                check(space, Axiom::T0) && check(space, Axiom::R1),
            );
        }
        Axiom::R0 => {
            add(
                "closures_equal_or_disjoint",
                pairs(n).all(|(x, y)| cl(x) == cl(y) || !cl(x).intersects(cl(y))),
            );
            add(
                "distinguishable_points_have_missing_neighbourhood",
                pairs(n).all(|(x, y)| {
                    !distinguishable(space, x, y) || space.open_nbhds(x).any(|u| !u.contains(y))
                }),
            );
            add(
                "saturation_is_neighbourhood_intersection",
                all_subsets(space, |a| {
                    space.indistinguishable_saturation(a) == space.min_open_containing(a)
                }),
            );
            add(
                "points_have_empty_essential_derived",
                pts().all(|x| space.essential_derived(single(x)).is_empty()),
            );
            add(
                "t0_quotient_t1",
                check(&t0_quotient(space).space, Axiom::T1),
            );
        }
        Axiom::R1 => {
            add(
                "literal_open_pairs",
                pairs(n).all(|(x, y)| {
                    !distinguishable(space, x, y)
                        || space
                            .open_nbhds(x)
                            .any(|u| space.open_nbhds(y).any(|v| !u.intersects(v)))
                }),
            );
            add(
                "t0_quotient_hausdorff",
                check(&t0_quotient(space).space, Axiom::T2),
            );
            // (a, b) ∉ ∼ has the product neighbourhood B_a × B_b.
            add(
                "indistinguishability_closed_in_square",
                pairs(n).all(|(a, c)| {
                    !distinguishable(space, a, c)
                        || b(a)
                            .iter()
                            .all(|u| b(c).iter().all(|v| distinguishable(space, u, v)))
                }),
            );
        }
        Axiom::TD => {
            add(
                "point_derived_sets_closed",
                pts().all(|x| space.is_closed(space.derived_set(single(x)))),
            );
            add(
                "derived_sets_closed",
                all_subsets(space, |a| space.is_closed(space.derived_set(a))),
            );
            add(
                "weakly_isolated_points_isolated",
                all_subsets(space, |s| {
                    s.iter()
                        .all(|x| !weakly_isolated(space, s, x) || isolated_in(space, s, x))
                }),
            );
            add("skula_discrete", skula(space).is_discrete());
            add(
                "points_locally_closed",
                pts().all(|x| space.is_locally_closed(single(x))),
            );
            add(
                "t0_and_rd_upper",
                check(space, Axiom::T0) && check(space, Axiom::RD),
            );
        }
        Axiom::Rd => {
            let sk = skula(space);
            let sigma =
                crate::space::alexandroff_space(&space.specialization_preorder().equivalence());
            let frame = frame_of_opens(space);
            add(
                "neighbourhood_minus_class_open",
                pts().all(|x| {
                    space
                        .open_nbhds(x)
                        .any(|u| space.is_open(u - space.indistinguishable_class(x)))
                }),
            );
            add(
                "point_strong_derived_closed",
                pts().all(|x| space.is_closed(space.strong_derived(single(x)))),
            );
            add(
                "strong_derived_closed",
                all_subsets(space, |a| space.is_closed(space.strong_derived(a))),
            );
            add("skula_is_indistinguishability_topology", sk == sigma);
            add(
                "essential_derived_closed",
                all_subsets(space, |a| space.is_closed(space.essential_derived(a))),
            );
            add(
                "neighbourhood_filters_slicing",
                pts().all(|x| is_slicing_filter(&frame, &neighbourhood_filter(space, x))),
            );
        }
        Axiom::RD => {}
        Axiom::AlmostDiscrete => {
            let sk = skula(space);
            add(
                "t0_quotient_discrete",
                t0_quotient(space).space.is_discrete(),
            );
            add("equivalence_topology", is_partition_topology(space));
            add("point_closures_open", pts().all(|x| space.is_open(cl(x))));
            add(
                "alexandroff_and_zero_dimensional",
                check(space, Axiom::ZeroDimensional),
            );
            add("r0_and_alexandroff", check(space, Axiom::R0));
            add(
                "strong_derived_empty",
                all_subsets(space, |a| space.strong_derived(a).is_empty()),
            );
            add("skula_fixed", sk == *space);
        }
        Axiom::Irreducible => {
            let closed = space.closed_sets();
            let full = space.full();
            add("not_union_of_proper_closed", space.is_irreducible(full));
            add(
                "closed_cover_has_member",
                closed.iter().all(|&e1| {
                    closed
                        .iter()
                        .all(|&e2| e1 | e2 != full || e1 == full || e2 == full)
                }),
            );
            add(
                "nonempty_opens_dense",
                space
                    .opens()
                    .iter()
                    .all(|&u| u.is_empty() || space.closure(u) == full),
            );
            add(
                "closure_irreducible",
                space.is_irreducible(space.closure(full)),
            );
            add(
                "connected_and_extremally_disconnected",
                check(space, Axiom::Connected) && check(space, Axiom::ExtremallyDisconnected),
            );
        }
        Axiom::Sober => {
            let sob = sobrification(space);
            add("sobrification_map_bijective", sob.iota.is_bijective());
            add(
                "quasi_sober_and_t0",
                check(space, Axiom::QuasiSober) && check(space, Axiom::T0),
            );
            add(
                "sobrification_map_homeomorphism",
                sob.iota.is_homeomorphism(),
            );
        }
        Axiom::QuasiSober => {
            add(
                "sobrification_map_surjective",
                sobrification(space).iota.is_surjective(),
            );
        }
        Axiom::Urysohn => {
            add(
                "literal_closure_pairs",
                pairs(n).all(|(x, y)| {
                    x == y
                        || space.open_nbhds(x).any(|u| {
                            space
                                .open_nbhds(y)
                                .any(|v| !space.closure(u).intersects(space.closure(v)))
                        })
                }),
            );
            add(
                "t0_and_weakly_urysohn",
                check(space, Axiom::T0) && check(space, Axiom::WeaklyUrysohn),
            );
        }
        Axiom::WeaklyUrysohn => {
            add(
                "literal_closure_pairs",
                pairs(n).all(|(x, y)| {
                    !distinguishable(space, x, y)
                        || space.open_nbhds(x).any(|u| {
                            space
                                .open_nbhds(y)
                                .any(|v| !space.closure(u).intersects(space.closure(v)))
                        })
                }),
            );
            add(
                "t0_quotient_urysohn",
                check(&t0_quotient(space).space, Axiom::Urysohn),
            );
        }
        Axiom::Regular => {
            add(
                "literal_open_search",
                space.closed_sets().into_iter().all(|f| {
                    (space.full() - f).iter().all(|x| {
                        space.open_nbhds(x).any(|u| {
                            space
                                .opens()
                                .iter()
                                .any(|&v| f.is_subset(v) && !u.intersects(v))
                        })
                    })
                }),
            );
        }
        Axiom::Normal => {
            let closed = space.closed_sets();
            add(
                "literal_open_search",
                closed.iter().all(|&e| {
                    closed.iter().all(|&f| {
                        e.intersects(f)
                            || space.opens().iter().any(|&u| {
                                e.is_subset(u)
                                    && space
                                        .opens()
                                        .iter()
                                        .any(|&v| f.is_subset(v) && !u.intersects(v))
                            })
                    })
                }),
            );
        }
        Axiom::CompletelyRegular => {
            add(
                "urysohn_functions_exist",
                space.closed_sets().into_iter().all(|f| {
                    (space.full() - f)
                        .iter()
                        .all(|x| urysohn_function(space, single(x), f).is_ok())
                }),
            );
        }
        Axiom::TotallyDisconnected => {
            add(
                "connected_subsets_trivial",
                all_subsets(space, |a| a.len() <= 1 || !space.is_connected_subset(a)),
            );
        }
        Axiom::TotallySeparated => {
            add(
                "points_split_by_clopens",
                pairs(n).all(|(x, y)| {
                    x == y
                        || space
                            .clopens()
                            .iter()
                            .any(|c| c.contains(x) && !c.contains(y))
                }),
            );
        }
        Axiom::WeaklyTotallyDisconnected => {
            add(
                "t0_quotient_totally_disconnected",
                check(&t0_quotient(space).space, Axiom::TotallyDisconnected),
            );
        }
        Axiom::WeaklyTotallySeparated => {
            add(
                "t0_quotient_totally_separated",
                check(&t0_quotient(space).space, Axiom::TotallySeparated),
            );
        }
        Axiom::ExtremallyDisconnected => {
            let opens = space.opens();
            add(
                "disjoint_opens_disjoint_closures",
                opens.iter().all(|&u| {
                    opens
                        .iter()
                        .all(|&v| u.intersects(v) || !space.closure(u).intersects(space.closure(v)))
                }),
            );
            let holds = check(space, Axiom::ZeroDimensional).then(|| {
                let clopens = space.clopens();
                clopens.iter().all(|&a| {
                    clopens.iter().all(|&c| {
                        let upper: Vec<SubsetMask> = clopens
                            .iter()
                            .copied()
                            .filter(|u| a.is_subset(*u) && c.is_subset(*u))
                            .collect();
                        upper.iter().any(|&l| upper.iter().all(|&u| l.is_subset(u)))
                    })
                })
            });
            out.push(Clause {
                name: "clopen_algebra_complete",
                holds,
            });
        }
        Axiom::ZeroDimensional => {
            let clopens = space.clopens();
            add(
                "clopen_neighbourhood_bases",
                pts().all(|x| {
                    space
                        .open_nbhds(x)
                        .all(|u| clopens.iter().any(|c| c.contains(x) && c.is_subset(u)))
                }),
            );
            add("almost_discrete", check(space, Axiom::AlmostDiscrete));
        }
        Axiom::LocallyHausdorff => {
            add(
                "literal_open_neighbourhoods",
                pts().all(|x| {
                    space
                        .open_nbhds(x)
                        .any(|u| check(&space.subspace(u).0, Axiom::T2))
                }),
            );
        }
        Axiom::LocallyR1 => {
            add(
                "literal_open_neighbourhoods",
                pts().all(|x| {
                    space
                        .open_nbhds(x)
                        .any(|u| check(&space.subspace(u).0, Axiom::R1))
                }),
            );
            add(
                "t0_quotient_locally_hausdorff",
                check(&t0_quotient(space).space, Axiom::LocallyHausdorff),
            );
        }
        Axiom::KC | Axiom::KCOmega | Axiom::WH => {
            add(
                "all_subsets_closed",
                all_subsets(space, |a| space.is_closed(a)),
            );
        }
        Axiom::SC => {
            add("discrete", space.is_discrete());
        }
        Axiom::SH => {
            add(
                "constant_tail_limits_unique",
                pts().all(|x| b(x) == single(x)),
            );
        }
        Axiom::MaximalCompact => {
            add(
                "compact_and_kc",
                space.is_compact(space.full()) && check(space, Axiom::KC),
            );
        }
        Axiom::Discrete => {
            add(
                "derived_sets_empty",
                all_subsets(space, |a| space.derived_set(a).is_empty()),
            );
        }
        Axiom::Connected => {
            add("no_proper_clopen", space.clopens().len() == 2);
        }
    }
    out
}

/// Evaluates every clause and compares each applicable one with the definition.
pub fn characterization_suite(space: &FiniteSpace, axiom: Axiom) -> VerdictReport {
    let mut report = VerdictReport::new(format!("{}.characterization", axiom.name()));
    let clauses = characterization_clauses(space, axiom);
    let definition = clauses[0].holds;
    let disagreement = clauses[1..]
        .iter()
        .find(|c| c.holds.is_some() && c.holds != definition);
    report.expect(
        disagreement.is_none(),
        || write_space(space),
        disagreement.map_or("", |c| c.name),
        "definition",
    );
    report
}

/// A continuous `[0, 1]`-valued function equal to 1 on `a` and 0 on `b`.
///
/// Continuous real functions on a finite space are those constant on
/// components, so the indicator of the components meeting `a` is returned.
pub fn urysohn_function(space: &FiniteSpace, a: SubsetMask, b: SubsetMask) -> Result<Vec<f64>> {
    if a.intersects(b) {
        return Err(Error::NotDisjoint);
    }
    let mut ones = SubsetMask::EMPTY;
    for c in space.components() {
        if c.intersects(a) && c.intersects(b) {
            return Err(Error::NoSeparation(
                c.first().expect("components are non-empty"),
            ));
        }
        if c.intersects(a) {
            ones |= c;
        }
    }
    Ok(space
        .points()
        .map(|x| if ones.contains(x) { 1.0 } else { 0.0 })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sum;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    #[test]
    fn names_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                format!("\"{}\"", a.name())
            );
        }
        assert_eq!(
            "Weakly-Urysohn".parse::<Axiom>().unwrap(),
            Axiom::WeaklyUrysohn
        );
        assert_eq!("KC_OMEGA".parse::<Axiom>().unwrap(), Axiom::KCOmega);
        assert!(matches!("t3".parse::<Axiom>(), Err(Error::UnknownAxiom(_))));
    }

    #[test]
    fn sierpinski_verdicts() {
        let s = FiniteSpace::sierpinski();
        assert!(check(&s, Axiom::T0));
        assert!(!check(&s, Axiom::T1));
        assert!(check(&s, Axiom::TD));
        assert!(check(&s, Axiom::Sober));
    }

    #[test]
    fn indiscrete_verdicts() {
        let x = FiniteSpace::indiscrete(2);
        assert!(check(&x, Axiom::R0));
        assert!(check(&x, Axiom::R1));
        assert!(!check(&x, Axiom::T0));
    }

    #[test]
    fn discrete_verdicts() {
        for n in 1..=4 {
            let d = FiniteSpace::discrete(n);
            for a in Axiom::ALL {
                let expected = !(n >= 2 && matches!(a, Axiom::Irreducible | Axiom::Connected));
                assert_eq!(check(&d, a), expected, "{a} on discrete({n})");
            }
        }
    }

    #[test]
    fn suite_examples() {
        let s = FiniteSpace::sierpinski();
        let t1 = characterization_clauses(&s, Axiom::T1);
        let listed = [
            "definition",
            "specialization_is_equality",
            "minimal_neighbourhoods_are_points",
            "points_have_no_accumulation",
            "sets_are_neighbourhood_intersections",
        ];
        for c in &t1 {
            if listed.contains(&c.name) {
                assert_eq!(c.holds, Some(false), "{}", c.name);
            }
        }
        assert!(characterization_suite(&s, Axiom::T1).passed());
        let td = characterization_clauses(&s, Axiom::TD);
        assert!(td.iter().all(|c| c.holds == Some(true)));
        let ad = characterization_clauses(&FiniteSpace::indiscrete(2), Axiom::AlmostDiscrete);
        assert_eq!(ad.len(), 8);
        assert!(ad.iter().all(|c| c.holds == Some(true)));
    }

    #[test]
    fn urysohn_function_examples() {
        let d = FiniteSpace::discrete(2);
        assert_eq!(
            urysohn_function(&d, m(&[0]), m(&[1])).unwrap(),
            vec![1.0, 0.0]
        );
        let s = FiniteSpace::sierpinski();
        assert!(matches!(
            urysohn_function(&s, m(&[0]), m(&[1])),
            Err(Error::NoSeparation(0))
        ));
        let x = sum(&[s, FiniteSpace::point()]).unwrap();
        assert_eq!(
            urysohn_function(&x, m(&[2]), m(&[0, 1])).unwrap(),
            vec![0.0, 0.0, 1.0]
        );
        assert!(matches!(
            urysohn_function(&d, m(&[0]), m(&[0])),
            Err(Error::NotDisjoint)
        ));
    }

    #[test]
    fn weakly_hausdorff_matches_discreteness() {
        let s = FiniteSpace::sierpinski();
        assert!(!check(&s, Axiom::WH));
        assert!(check(&FiniteSpace::discrete(3), Axiom::WH));
        assert!(!check(&FiniteSpace::indiscrete(3), Axiom::WH));
    }
}
