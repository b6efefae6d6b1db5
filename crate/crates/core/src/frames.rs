//! Finite frames of open sets, their homomorphisms and congruences.
//!
//! A [`Frame`] is a finite family of masks ordered by inclusion. For the
//! frame of a space joins are unions; a quotient frame is represented by the
//! largest member of each congruence class, where meets are still
//! intersections but joins need not be unions.

use serde::Serialize;

use crate::axioms::{check, Axiom};
use crate::error::{Error, Result};
use crate::map::SpaceMap;
use crate::mask::SubsetMask;
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Frame {
    elems: Vec<SubsetMask>,
    #[serde(skip)]
    join: Vec<Vec<usize>>,
    #[serde(skip)]
    meet: Vec<Vec<usize>>,
}

impl Frame {
    /// Builds the lattice of `elems` under inclusion, checking that every pair
    /// has a least upper and a greatest lower bound and that the result is
    /// distributive.
    pub fn from_elems(mut elems: Vec<SubsetMask>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        let m = elems.len();
        if m == 0 {
            return Err(Error::PreconditionViolated("empty frame".into()));
        }
        let bound = |i: usize, j: usize, upper: bool| -> Option<usize> {
            let (a, b) = (elems[i], elems[j]);
            let candidates: Vec<usize> = (0..m)
                .filter(|&k| {
                    if upper {
                        a.is_subset(elems[k]) && b.is_subset(elems[k])
                    } else {
                        elems[k].is_subset(a) && elems[k].is_subset(b)
                    }
                })
                .collect();
            candidates.iter().copied().find(|&k| {
                candidates.iter().all(|&c| {
                    if upper {
                        elems[k].is_subset(elems[c])
                    } else {
                        elems[c].is_subset(elems[k])
                    }
                })
            })
        };
        let mut join = vec![vec![0; m]; m];
        let mut meet = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                join[i][j] = bound(i, j, true).ok_or_else(|| {
                    Error::PreconditionViolated(format!("no join of elements {i} and {j}"))
                })?;
                meet[i][j] = bound(i, j, false).ok_or_else(|| {
                    Error::PreconditionViolated(format!("no meet of elements {i} and {j}"))
                })?;
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(Error::PreconditionViolated(format!(
                            "not distributive at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Frame { elems, join, meet })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[SubsetMask] {
        &self.elems
    }

    pub fn index_of(&self, a: SubsetMask) -> Option<usize> {
        self.elems.binary_search(&a).ok()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elems[i].is_subset(self.elems[j])
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elems.len() - 1
    }

    /// `j` immediately precedes `i`: `j < i` with nothing strictly between.
    pub fn immediately_precedes(&self, j: usize, i: usize) -> bool {
        j != i
            && self.leq(j, i)
            && (0..self.len()).all(|k| !(self.leq(j, k) && self.leq(k, i)) || k == i || k == j)
    }
}

/// `τ` ordered by inclusion.
pub fn frame_of_opens(space: &FiniteSpace) -> Frame {
    Frame::from_elems(space.opens().to_vec()).expect("open sets form a frame")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameHom {
    src: Frame,
    dst: Frame,
    table: Vec<usize>,
}

impl FrameHom {
    /// Validates preservation of binary joins, the bottom, binary meets and the top.
    pub fn new(src: Frame, dst: Frame, table: Vec<usize>) -> Result<Self> {
        if table.len() != src.len() || table.iter().any(|&t| t >= dst.len()) {
            return Err(Error::NotAFrameHom("table does not fit the frames".into()));
        }
        if table[src.bottom()] != dst.bottom() {
            return Err(Error::NotAFrameHom("bottom not preserved".into()));
        }
        if table[src.top()] != dst.top() {
            return Err(Error::NotAFrameHom("top not preserved".into()));
        }
        for i in 0..src.len() {
            for j in 0..src.len() {
                if table[src.join(i, j)] != dst.join(table[i], table[j]) {
                    return Err(Error::NotAFrameHom(format!("join of {i} and {j}")));
                }
                if table[src.meet(i, j)] != dst.meet(table[i], table[j]) {
                    return Err(Error::NotAFrameHom(format!("meet of {i} and {j}")));
                }
            }
        }
        Ok(FrameHom { src, dst, table })
    }

    pub fn identity(frame: &Frame) -> Self {
        FrameHom {
            src: frame.clone(),
            dst: frame.clone(),
            table: (0..frame.len()).collect(),
        }
    }

    pub fn src(&self) -> &Frame {
        &self.src
    }

    pub fn dst(&self) -> &Frame {
        &self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_isomorphism(&self) -> bool {
        self.src.len() == self.dst.len() && {
            let mut seen = vec![false; self.dst.len()];
            self.table
                .iter()
                .all(|&t| !std::mem::replace(&mut seen[t], true))
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FrameHom) -> Result<FrameHom> {
        if self.dst != next.src {
            return Err(Error::NotAFrameHom(
                "composition of mismatched frames".into(),
            ));
        }
        Ok(FrameHom {
            src: self.src.clone(),
            dst: next.dst.clone(),
            table: self.table.iter().map(|&t| next.table[t]).collect(),
        })
    }

    /// `ker(h) = {(a, b) : h(a) = h(b)}`.
    pub fn kernel(&self) -> FrameCongruence {
        let mut label = vec![usize::MAX; self.dst.len()];
        let mut next = 0;
        let class_of = self
            .table
            .iter()
            .map(|&t| {
                if label[t] == usize::MAX {
                    label[t] = next;
                    next += 1;
                }
                label[t]
            })
            .collect();
        FrameCongruence {
            frame: self.src.clone(),
            class_of,
        }
    }
}

/// Every frame homomorphism `src → dst`, tables in lexicographic order.
///
/// Elements are assigned in index order; since masks are sorted, a meet
/// has an index no larger than its arguments and a join no smaller, so each
/// equation can be checked as soon as its largest index is assigned.
pub fn all_frame_homs(src: &Frame, dst: &Frame) -> Vec<FrameHom> {
    fn extend(src: &Frame, dst: &Frame, table: &mut Vec<usize>, out: &mut Vec<FrameHom>) {
        let k = table.len();
        if k == src.len() {
            out.push(FrameHom {
                src: src.clone(),
                dst: dst.clone(),
                table: table.clone(),
            });
            return;
        }
        let forced = if k == src.bottom() {
            Some(dst.bottom())
        } else if k == src.top() {
            Some(dst.top())
        } else {
            None
        };
        for t in forced.map_or(0..dst.len(), |f| f..f + 1) {
            table.push(t);
            let consistent = (0..=k).all(|i| {
                table[src.meet(i, k)] == dst.meet(table[i], t)
                    && (0..=k).all(|j| src.join(i, j) != k || t == dst.join(table[i], table[j]))
            });
            if consistent {
                extend(src, dst, table, out);
            }
            table.pop();
        }
    }
    let mut out = Vec::new();
    extend(src, dst, &mut Vec::with_capacity(src.len()), &mut out);
    out
}

/// Every frame isomorphism `src → dst`.
pub fn frame_isomorphisms(src: &Frame, dst: &Frame) -> Vec<FrameHom> {
    if src.len() != dst.len() {
        return Vec::new();
    }
    all_frame_homs(src, dst)
        .into_iter()
        .filter(FrameHom::is_isomorphism)
        .collect()
}

/// `f^← : τ_Y → τ_X`, `V ↦ f⁻¹(V)`.
pub fn induced_hom(f: &SpaceMap) -> Result<FrameHom> {
    if let Some(v) = f.continuity_witness() {
        return Err(Error::NotContinuous(v));
    }
    let src = frame_of_opens(f.cod());
    let dst = frame_of_opens(f.dom());
    let table = src
        .elems()
        .iter()
        .map(|&v| dst.index_of(f.preimage(v)).expect("preimage is open"))
        .collect();
    FrameHom::new(src, dst, table)
}

/// An equivalence on the elements of a frame, labelled by first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameCongruence {
    #[serde(skip)]
    frame: Frame,
    class_of: Vec<usize>,
}

impl FrameCongruence {
    /// Validates compatibility with binary joins and binary meets.
    pub fn new(frame: Frame, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != frame.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} labels for {} elements",
                labels.len(),
                frame.len()
            )));
        }
        let mut relabel = std::collections::HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let k = relabel.len();
                *relabel.entry(*l).or_insert(k)
            })
            .collect();
        let m = frame.len();
        for (a, b) in (0..m).flat_map(|a| (0..m).map(move |b| (a, b))) {
            if class_of[a] != class_of[b] {
                continue;
            }
            for c in 0..m {
                if class_of[frame.join(a, c)] != class_of[frame.join(b, c)] {
                    return Err(Error::NotACongruence(a, b, "joins"));
                }
                if class_of[frame.meet(a, c)] != class_of[frame.meet(b, c)] {
                    return Err(Error::NotACongruence(a, b, "meets"));
                }
            }
        }
        Ok(FrameCongruence { frame, class_of })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Classes as ascending element-index lists, ordered by least member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.class_of.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    /// `θ ⊆ other` as sets of pairs.
    pub fn is_finer_than(&self, other: &FrameCongruence) -> bool {
        let m = self.class_of.len();
        (0..m).all(|a| (0..m).all(|b| !self.related(a, b) || other.related(a, b)))
    }
}

/// `L/θ` with its quotient homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFrame {
    pub frame: Frame,
    pub q: FrameHom,
}

/// The quotient by a congruence, each class represented by its largest element.
pub fn quotient_frame(theta: &FrameCongruence) -> Result<QuotientFrame> {
    let l = &theta.frame;
    let theta = FrameCongruence::new(l.clone(), theta.class_of.clone())?;
    let classes = theta.classes();
    let tops: Vec<usize> = classes
        .iter()
        .map(|c| c.iter().fold(c[0], |acc, &i| l.join(acc, i)))
        .collect();
    let frame = Frame::from_elems(tops.iter().map(|&t| l.elems()[t]).collect())?;
    let table = theta
        .class_of
        .iter()
        .map(|&c| {
            frame
                .index_of(l.elems()[tops[c]])
                .expect("class top is an element")
        })
        .collect();
    let q = FrameHom::new(l.clone(), frame.clone(), table)?;
    Ok(QuotientFrame { frame, q })
}

/// `E_A`: opens related when they have the same trace on `a`.
pub fn subset_congruence(space: &FiniteSpace, a: SubsetMask) -> FrameCongruence {
    let frame = frame_of_opens(space);
    let labels = frame
        .elems()
        .iter()
        .map(|&u| (u & a).bits() as usize)
        .collect();
    FrameCongruence::new(frame, labels).expect("trace equivalence is a congruence")
}

/// `U(x)` as element indices of the frame of opens.
pub fn neighbourhood_filter(space: &FiniteSpace, x: usize) -> Vec<usize> {
    space
        .opens()
        .iter()
        .enumerate()
        .filter(|(_, u)| u.contains(x))
        .map(|(i, _)| i)
        .collect()
}

fn is_prime(frame: &Frame, member: &[bool]) -> bool {
    let m = frame.len();
    (0..m).all(|a| (0..m).all(|b| !member[frame.join(a, b)] || member[a] || member[b]))
}

fn is_slicing(frame: &Frame, member: &[bool]) -> bool {
    let m = frame.len();
    is_prime(frame, member)
        && (0..m)
            .any(|a| member[a] && (0..m).any(|b| !member[b] && frame.immediately_precedes(b, a)))
}

/// Whether the element set `filter` is a slicing filter of `frame`.
pub fn is_slicing_filter(frame: &Frame, filter: &[usize]) -> bool {
    let mut member = vec![false; frame.len()];
    for &i in filter {
        member[i] = true;
    }
    let m = frame.len();
    let sublattice = filter.iter().all(|&a| {
        filter
            .iter()
            .all(|&b| member[frame.meet(a, b)] && member[frame.join(a, b)])
    });
    let absorbing = filter
        .iter()
        .all(|&a| (0..m).all(|b| member[frame.join(a, b)]));
    !filter.is_empty() && sublattice && absorbing && is_slicing(frame, &member)
}

/// All slicing filters of `τ`, ordered by their least element.
///
/// A non-empty filter of a finite lattice is the up-set of the meet of its
/// members, so only principal up-sets need testing.
pub fn slicing_filters(space: &FiniteSpace) -> Vec<Vec<usize>> {
    let frame = frame_of_opens(space);
    (0..frame.len())
        .map(|g| {
            (0..frame.len())
                .filter(|&i| frame.leq(g, i))
                .collect::<Vec<_>>()
        })
        .filter(|f| is_slicing_filter(&frame, f))
        .collect()
}

/// The continuous map `f_φ : X → Y` with `f_φ^← = φ`, for a frame
/// isomorphism `φ : τ_Y → τ_X` with `X` TD and `Y` T0.
///
/// `f_φ(x)` is the single point of `φ⁻¹(U) ∖ φ⁻¹(U ∖ {x})` for any open
/// `U ∋ x` with `U ∖ {x}` open; every such `U` is tried and must agree.
pub fn map_from_frame_iso(phi: &FrameHom, x: &FiniteSpace, y: &FiniteSpace) -> Result<SpaceMap> {
    if *phi.src() != frame_of_opens(y) || *phi.dst() != frame_of_opens(x) {
        return Err(Error::PreconditionViolated(
            "homomorphism does not run between the given frames".into(),
        ));
    }
    if !phi.is_isomorphism() {
        return Err(Error::NotAnIsomorphism);
    }
    if !check(x, Axiom::TD) {
        return Err(Error::PreconditionViolated("domain is not TD".into()));
    }
    if !check(y, Axiom::T0) {
        return Err(Error::PreconditionViolated("codomain is not T0".into()));
    }
    let mut inverse = vec![0; phi.table().len()];
    for (i, &t) in phi.table().iter().enumerate() {
        inverse[t] = i;
    }
    let pull = |u: SubsetMask| -> SubsetMask {
        let i = phi.dst().index_of(u).expect("open in X");
        phi.src().elems()[inverse[i]]
    };
    let mut table = Vec::with_capacity(x.n());
    for p in x.points() {
        let mut found: Option<usize> = None;
        for u in x.open_nbhds(p).filter(|&u| x.is_open(u.without(p))) {
            let diff = pull(u) - pull(u.without(p));
            if diff.len() != 1 {
                return Err(Error::PreconditionViolated(format!(
                    "difference for point {p} is {diff:?}, not a singleton"
                )));
            }
            let q = diff.first().expect("singleton");
            if found.is_some_and(|f| f != q) {
                return Err(Error::PreconditionViolated(format!(
                    "reconstruction at point {p} depends on the neighbourhood"
                )));
            }
            found = Some(q);
        }
        table.push(found.expect("TD point has an admissible neighbourhood"));
    }
    SpaceMap::new(x.clone(), y.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    #[test]
    fn frame_shapes() {
        let f = frame_of_opens(&FiniteSpace::sierpinski());
        assert_eq!(f.elems(), &[m(&[]), m(&[0]), m(&[0, 1])]);
        assert!(f.leq(0, 1) && f.leq(1, 2));
        assert_eq!(frame_of_opens(&FiniteSpace::discrete(2)).len(), 4);
        assert_eq!(frame_of_opens(&FiniteSpace::indiscrete(3)).len(), 2);
    }

    #[test]
    fn induced_hom_examples() {
        let s = FiniteSpace::sierpinski();
        let id = induced_hom(&SpaceMap::identity(&s)).unwrap();
        assert_eq!(id, FrameHom::identity(&frame_of_opens(&s)));
        let to_one = induced_hom(&SpaceMap::constant(&s, &s, 1).unwrap()).unwrap();
        assert_eq!(to_one.table(), &[0, 0, 2]);
        let q = SpaceMap::constant(&FiniteSpace::indiscrete(2), &FiniteSpace::point(), 0).unwrap();
        assert_eq!(induced_hom(&q).unwrap().table(), &[0, 1]);
    }

    #[test]
    fn quotient_frame_examples() {
        let s = FiniteSpace::sierpinski();
        let l = frame_of_opens(&s);
        let ident = FrameCongruence::new(l.clone(), vec![0, 1, 2]).unwrap();
        let qf = quotient_frame(&ident).unwrap();
        assert!(qf.q.is_isomorphism());
        let total = FrameCongruence::new(l.clone(), vec![0, 0, 0]).unwrap();
        assert_eq!(quotient_frame(&total).unwrap().frame.len(), 1);
        let e1 = subset_congruence(&s, m(&[1]));
        assert_eq!(e1.classes(), vec![vec![0, 1], vec![2]]);
        let qf = quotient_frame(&e1).unwrap();
        assert_eq!(qf.frame.len(), 2);
        assert_eq!(qf.q.kernel(), e1);
    }

    #[test]
    fn rejects_non_congruence() {
        // ∅ ~ {0,1} but {0} ∧ ∅ = ∅ and {0} ∧ X = {0} are not related
        let l = frame_of_opens(&FiniteSpace::sierpinski());
        assert!(matches!(
            FrameCongruence::new(l, vec![0, 1, 0]),
            Err(Error::NotACongruence(..))
        ));
    }

    #[test]
    fn subset_congruence_extremes() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(subset_congruence(&s, s.full()).classes().len(), 3);
        assert_eq!(subset_congruence(&s, SubsetMask::EMPTY).classes().len(), 1);
    }

    #[test]
    fn slicing_filter_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(slicing_filters(&s), vec![vec![1, 2], vec![2]]);
        assert_eq!(neighbourhood_filter(&s, 0), vec![1, 2]);
        assert_eq!(neighbourhood_filter(&s, 1), vec![2]);
        let d = FiniteSpace::discrete(2);
        let mut expected = vec![neighbourhood_filter(&d, 0), neighbourhood_filter(&d, 1)];
        expected.sort();
        let mut got = slicing_filters(&d);
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(slicing_filters(&FiniteSpace::indiscrete(3)), vec![vec![1]]);
    }

    #[test]
    fn hom_enumeration() {
        let s = frame_of_opens(&FiniteSpace::sierpinski());
        let d2 = frame_of_opens(&FiniteSpace::discrete(2));
        // S → S: monotone maps fixing the ends; the middle goes anywhere.
        assert_eq!(all_frame_homs(&s, &s).len(), 3);
        // Complementary atoms must go to complementary elements of a chain.
        let homs = all_frame_homs(&d2, &s);
        assert_eq!(homs.len(), 2);
        assert!(homs
            .iter()
            .all(|h| FrameHom::new(d2.clone(), s.clone(), h.table().to_vec()).is_ok()));
        assert_eq!(frame_isomorphisms(&d2, &d2).len(), 2);
        assert!(frame_isomorphisms(&s, &d2).is_empty());
    }

    #[test]
    fn frame_iso_reconstruction() {
        let s = FiniteSpace::sierpinski();
        let id = FrameHom::identity(&frame_of_opens(&s));
        assert_eq!(map_from_frame_iso(&id, &s, &s).unwrap().table(), &[0, 1]);
        let flipped = s.relabel(&[1, 0]);
        let phi =
            FrameHom::new(frame_of_opens(&flipped), frame_of_opens(&s), vec![0, 1, 2]).unwrap();
        let f = map_from_frame_iso(&phi, &s, &flipped).unwrap();
        assert_eq!(f.table(), &[1, 0]);
        assert!(f.is_homeomorphism());
        assert_eq!(induced_hom(&f).unwrap(), phi);
    }
}
