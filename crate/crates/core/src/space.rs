//! Finite topological spaces and their point-set operators.
//!
//! A [`FiniteSpace`] keeps its open family explicitly (sorted ascending as
//! unsigned masks, so structural equality is topological equality) and caches,
//! per point, the minimal open neighbourhood `B_x` and the point closure
//! `cl{x}`. Every finite topology is closed under arbitrary intersections, so
//! `B_x` always exists and is itself open; most operators below are bit
//! operations over those two tables.

use crate::error::{Error, Result, TopologyViolation};
use crate::mask::SubsetMask;
use crate::preorder::Preorder;

/// Largest point count accepted for a single space.
pub const MAX_POINTS: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<SubsetMask>,
    min_nbhd: Vec<SubsetMask>,
    point_closure: Vec<SubsetMask>,
}

impl FiniteSpace {
    /// Validates `family` as a topology on `0..n` and returns it in canonical form.
    ///
    /// Duplicates are dropped. On failure the error names the first missing
    /// bound or the first pair (in ascending order) whose union or
    /// intersection escapes the family.
    pub fn from_opens<I>(n: usize, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        if n == 0 || n > MAX_POINTS {
            return Err(Error::PointCount { n, max: MAX_POINTS });
        }
        let mut opens: Vec<SubsetMask> = family.into_iter().collect();
        if let Some(&bad) = opens.iter().find(|m| !m.fits(n)) {
            return Err(Error::MaskOutOfRange { mask: bad, n });
        }
        opens.sort_unstable();
        opens.dedup();
        if opens.first() != Some(&SubsetMask::EMPTY) {
            return Err(Error::NotATopology(TopologyViolation::MissingEmpty));
        }
        if opens.last() != Some(&SubsetMask::full(n)) {
            return Err(Error::NotATopology(TopologyViolation::MissingFull));
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if opens.binary_search(&(u | v)).is_err() {
                    return Err(Error::NotATopology(TopologyViolation::Union(u, v)));
                }
                if opens.binary_search(&(u & v)).is_err() {
                    return Err(Error::NotATopology(TopologyViolation::Intersection(u, v)));
                }
            }
        }
        Ok(Self::from_sorted_opens(n, opens))
    }

    /// `opens` must already be a sorted, deduplicated topology.
    pub(crate) fn from_sorted_opens(n: usize, opens: Vec<SubsetMask>) -> Self {
        let full = SubsetMask::full(n);
        let mut min_nbhd = vec![full; n];
        for &u in &opens {
            for x in u.iter() {
                min_nbhd[x] &= u;
            }
        }
        let mut point_closure = vec![SubsetMask::EMPTY; n];
        for (x, b) in min_nbhd.iter().enumerate() {
            for y in b.iter() {
                point_closure[y] = point_closure[y].with(x);
            }
        }
        FiniteSpace {
            n,
            opens,
            min_nbhd,
            point_closure,
        }
    }

    /// Normalises an arbitrary family that is already known to be a topology.
    pub(crate) fn from_topology_unchecked(n: usize, mut opens: Vec<SubsetMask>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        Self::from_sorted_opens(n, opens)
    }

    /// Topology generated by `subbase` (closure under finite unions and intersections).
    pub fn generated_by<I>(n: usize, subbase: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        if n == 0 || n > MAX_POINTS {
            return Err(Error::PointCount { n, max: MAX_POINTS });
        }
        let full = SubsetMask::full(n);
        let mut present = vec![false; 1 << n];
        let mut family = vec![SubsetMask::EMPTY, full];
        present[0] = true;
        present[full.bits() as usize] = true;
        for s in subbase {
            if !s.fits(n) {
                return Err(Error::MaskOutOfRange { mask: s, n });
            }
            if !present[s.bits() as usize] {
                present[s.bits() as usize] = true;
                family.push(s);
            }
        }
        // Close under intersection first, then union; the result is a topology.
        let mut i = 0;
        while i < family.len() {
            for j in 0..i {
                let m = family[i] & family[j];
                if !present[m.bits() as usize] {
                    present[m.bits() as usize] = true;
                    family.push(m);
                }
            }
            i += 1;
        }
        let mut i = 0;
        while i < family.len() {
            for j in 0..i {
                let m = family[i] | family[j];
                if !present[m.bits() as usize] {
                    present[m.bits() as usize] = true;
                    family.push(m);
                }
            }
            i += 1;
        }
        Ok(Self::from_topology_unchecked(n, family))
    }

    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_sorted_opens(n, SubsetMask::all(n).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_sorted_opens(n, vec![SubsetMask::EMPTY, SubsetMask::full(n)])
    }

    /// `{0, 1}` with opens `∅, {0}, {0, 1}`.
    pub fn sierpinski() -> Self {
        Self::from_sorted_opens(2, vec![SubsetMask(0), SubsetMask(1), SubsetMask(3)])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The open sets, ascending by mask.
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    #[inline]
    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    #[inline]
    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.is_open(a.complement(self.n))
    }

    pub fn is_clopen(&self, a: SubsetMask) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// Closed sets, ascending by mask.
    pub fn closed_sets(&self) -> Vec<SubsetMask> {
        let mut c: Vec<_> = self.opens.iter().map(|u| u.complement(self.n)).collect();
        c.sort_unstable();
        c
    }

    pub fn clopens(&self) -> Vec<SubsetMask> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.is_closed(u))
            .collect()
    }

    /// Open neighbourhoods of `x`.
    pub fn open_nbhds(&self, x: usize) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens.iter().copied().filter(move |u| u.contains(x))
    }

    /// `B_x`, the smallest open set containing `x`.
    #[inline]
    pub fn min_nbhd(&self, x: usize) -> SubsetMask {
        self.min_nbhd[x]
    }

    /// Smallest open set containing `a`.
    pub fn min_open_containing(&self, a: SubsetMask) -> SubsetMask {
        a.iter()
            .fold(SubsetMask::EMPTY, |m, x| m | self.min_nbhd[x])
    }

    /// `cl{x}`.
    #[inline]
    pub fn point_closure(&self, x: usize) -> SubsetMask {
        self.point_closure[x]
    }

    /// `[x]_∼ = cl{x} ∩ B_x`.
    #[inline]
    pub fn indistinguishable_class(&self, x: usize) -> SubsetMask {
        self.point_closure[x] & self.min_nbhd[x]
    }

    /// `[A]_∼`, the union of the classes of the members of `a`.
    pub fn indistinguishable_saturation(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::EMPTY, |m, x| {
            m | self.indistinguishable_class(x)
        })
    }

    /// `x ≼ y` iff `x ∈ cl{y}`.
    #[inline]
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.point_closure[y].contains(x)
    }

    /// The specialization preorder: `x ≼ y` iff every neighbourhood of `x`
    /// contains `y`, i.e. the up-set of `x` is `B_x`.
    pub fn specialization_preorder(&self) -> Preorder {
        Preorder::from_up_rows_unchecked(self.n, self.min_nbhd.clone())
    }

    /// Down-saturation of `a` under `≼`.
    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        a.iter()
            .fold(SubsetMask::EMPTY, |m, x| m | self.point_closure[x])
    }

    /// Points whose minimal neighbourhood lies inside `a`.
    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        self.points()
            .filter(|&x| self.min_nbhd[x].is_subset(a))
            .collect()
    }

    /// `A'`: points `x` every open neighbourhood of which meets `A ∖ {x}`.
    pub fn derived_set(&self, a: SubsetMask) -> SubsetMask {
        self.points()
            .filter(|&x| self.min_nbhd[x].intersects(a.without(x)))
            .collect()
    }

    /// Points each neighbourhood of which meets `a` in infinitely many points.
    ///
    /// Always empty here: every subset of a finite space is finite.
    pub fn omega_accumulation(&self, a: SubsetMask) -> SubsetMask {
        fn is_infinite(_: SubsetMask) -> bool {
            false
        }
        self.points()
            .filter(|&x| self.open_nbhds(x).all(|u| is_infinite(u & a)))
            .collect()
    }

    /// `A^▽`: points `x` every open neighbourhood of which meets `A`
    /// outside the class `[x]_∼`.
    pub fn strong_derived(&self, a: SubsetMask) -> SubsetMask {
        self.points()
            .filter(|&x| {
                let rest = a - self.indistinguishable_class(x);
                self.open_nbhds(x).all(|u| u.intersects(rest))
            })
            .collect()
    }

    /// `D(A) = cl(A) ∖ [A ∖ A']_∼`.
    pub fn essential_derived(&self, a: SubsetMask) -> SubsetMask {
        let isolated = a - self.derived_set(a);
        self.closure(a) - self.indistinguishable_saturation(isolated)
    }

    /// True when `a = U ∩ F` for some open `U` and closed `F`.
    pub fn is_locally_closed(&self, a: SubsetMask) -> bool {
        let closed = self.closed_sets();
        self.opens
            .iter()
            .filter(|u| a.is_subset(**u))
            .any(|&u| closed.iter().any(|&f| u & f == a))
    }

    /// Non-empty and not the union of two relatively closed proper subsets.
    pub fn is_irreducible(&self, a: SubsetMask) -> bool {
        if a.is_empty() {
            return false;
        }
        let mut traces: Vec<SubsetMask> = self
            .closed_sets()
            .into_iter()
            .map(|f| f & a)
            .filter(|&t| t != a)
            .collect();
        traces.sort_unstable();
        traces.dedup();
        !traces
            .iter()
            .enumerate()
            .any(|(i, &s)| traces[i..].iter().any(|&t| s | t == a))
    }

    /// Every subset of a finite space is compact (finitely many opens).
    pub fn is_compact(&self, a: SubsetMask) -> bool {
        debug_assert!(a.fits(self.n));
        true
    }

    /// Connected components, via the comparability graph of `≼`,
    /// ordered by least member.
    pub fn components(&self) -> Vec<SubsetMask> {
        let mut seen = SubsetMask::EMPTY;
        let mut out = Vec::new();
        for x in self.points() {
            if seen.contains(x) {
                continue;
            }
            let mut comp = SubsetMask::singleton(x);
            loop {
                let grown = comp
                    .iter()
                    .fold(comp, |m, y| m | self.min_nbhd[y] | self.point_closure[y]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// `C(x)`.
    pub fn component_of(&self, x: usize) -> SubsetMask {
        self.components()
            .into_iter()
            .find(|c| c.contains(x))
            .expect("components cover the space")
    }

    /// `QC(x)`: the intersection of all clopen sets containing `x`.
    pub fn quasi_component_of(&self, x: usize) -> SubsetMask {
        self.clopens()
            .into_iter()
            .filter(|c| c.contains(x))
            .fold(self.full(), |m, c| m & c)
    }

    /// Quasi-components, ordered by least member.
    pub fn quasi_components(&self) -> Vec<SubsetMask> {
        let mut seen = SubsetMask::EMPTY;
        let mut out = Vec::new();
        for x in self.points() {
            if !seen.contains(x) {
                let qc = self.quasi_component_of(x);
                seen |= qc;
                out.push(qc);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Whether `a` is connected in the relative topology (the empty set counts as connected).
    pub fn is_connected_subset(&self, a: SubsetMask) -> bool {
        if a.is_empty() {
            return true;
        }
        self.subspace(a).0.is_connected()
    }

    /// Relative topology on `a`; points are re-indexed in ascending order and
    /// the returned vector maps each new index to the original point.
    pub fn subspace(&self, a: SubsetMask) -> (FiniteSpace, Vec<usize>) {
        let points = a.to_vec();
        let reindex = |m: SubsetMask| -> SubsetMask {
            points
                .iter()
                .enumerate()
                .filter(|(_, &p)| m.contains(p))
                .map(|(i, _)| i)
                .collect()
        };
        let opens = self.opens.iter().map(|&u| reindex(u & a)).collect();
        (
            FiniteSpace::from_topology_unchecked(points.len(), opens),
            points,
        )
    }

    /// Applies the point relabelling `x ↦ perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSpace {
        let opens = self
            .opens
            .iter()
            .map(|u| u.iter().map(|x| perm[x]).collect())
            .collect();
        FiniteSpace::from_topology_unchecked(self.n, opens)
    }

    /// True when every subset is open.
    pub fn is_discrete(&self) -> bool {
        self.opens.len() == 1 << self.n
    }
}

/// `Σ(≤)`: the topology of up-sets of a preorder.
pub fn alexandroff_space(p: &Preorder) -> FiniteSpace {
    FiniteSpace::from_sorted_opens(p.n(), p.up_sets())
}
