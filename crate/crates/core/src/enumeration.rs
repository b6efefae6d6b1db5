//! Exhaustive generation of preorders, topologies and continuous maps.
//!
//! Preorders are built one point at a time: the new point `k` is attached
//! below a down-set `D` and above an up-set `U` of the preorder on `0..k`,
//! subject to `d ≤ u` for all `d ∈ D`, `u ∈ U`. Each preorder on `0..=k`
//! arises from exactly one preorder on `0..k` and one such pair.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::map::SpaceMap;
use crate::mask::SubsetMask;
use crate::preorder::Preorder;
use crate::space::{alexandroff_space, FiniteSpace};

/// Largest `n` accepted by the sweeps.
pub const SWEEP_CAP: usize = 6;

/// Largest number of candidate tables `|Y|^|X|` for map enumeration.
pub const MAP_TABLE_CAP: u64 = 1 << 24;

/// Shard `index` of `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::PreconditionViolated(format!(
                "shard {index}/{count} is not in 0..{count}"
            )));
        }
        Ok(Shard { index, count })
    }
}

impl FromStr for Shard {
    type Err = Error;

    /// Parses `i/k`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PreconditionViolated(format!("shard must look like i/k, got {s:?}"));
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(
            i.trim().parse().map_err(|_| bad())?,
            k.trim().parse().map_err(|_| bad())?,
        )
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

struct Level {
    rows: Vec<SubsetMask>,
    candidates: Vec<(SubsetMask, SubsetMask)>,
    next: usize,
}

/// Attachment pairs `(D, U)` for a new point above the preorder `rows`.
fn attachments(rows: &[SubsetMask]) -> Vec<(SubsetMask, SubsetMask)> {
    let k = rows.len();
    let is_down = |d: SubsetMask| (0..k).all(|y| d.contains(y) || !rows[y].intersects(d));
    let is_up = |u: SubsetMask| u.iter().all(|x| rows[x].is_subset(u));
    let ups: Vec<SubsetMask> = SubsetMask::all(k).filter(|&u| is_up(u)).collect();
    let mut out = Vec::new();
    for d in SubsetMask::all(k).filter(|&d| is_down(d)) {
        let bound = d.iter().fold(SubsetMask::full(k), |m, x| m & rows[x]);
        out.extend(ups.iter().filter(|u| u.is_subset(bound)).map(|&u| (d, u)));
    }
    out
}

fn extend(rows: &[SubsetMask], d: SubsetMask, u: SubsetMask) -> Vec<SubsetMask> {
    let k = rows.len();
    let mut next: Vec<SubsetMask> = rows
        .iter()
        .enumerate()
        .map(|(x, &r)| if d.contains(x) { r.with(k) } else { r })
        .collect();
    next.push(u.with(k));
    next
}

/// Lazy depth-first stream of the preorders on `0..n`, in a fixed order.
///
/// A shard keeps the subtrees below every `count`-th node at the split
/// level (`n - 1`, or `n` when `n = 1`), so shards are disjoint and their
/// union is the whole stream.
pub struct PreorderStream {
    n: usize,
    shard: Option<Shard>,
    split: usize,
    seen_at_split: usize,
    stack: Vec<Level>,
}

impl Iterator for PreorderStream {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.candidates.len() {
                self.stack.pop();
                continue;
            }
            let (d, u) = top.candidates[top.next];
            top.next += 1;
            let rows = extend(&top.rows, d, u);
            let k = rows.len();
            if k == self.split {
                let ordinal = self.seen_at_split;
                self.seen_at_split += 1;
                if let Some(s) = self.shard {
                    if ordinal % s.count != s.index {
                        continue;
                    }
                }
            }
            if k == self.n {
                return Some(Preorder::from_up_rows_unchecked(self.n, rows));
            }
            let candidates = attachments(&rows);
            self.stack.push(Level {
                rows,
                candidates,
                next: 0,
            });
        }
    }
}

fn check_sweep(n: usize) -> Result<()> {
    if n == 0 || n > SWEEP_CAP {
        Err(Error::CapExceeded { n, cap: SWEEP_CAP })
    } else {
        Ok(())
    }
}

/// Every preorder on `0..n` exactly once, optionally restricted to a shard.
pub fn enumerate_preorders(n: usize, shard: Option<Shard>) -> Result<PreorderStream> {
    check_sweep(n)?;
    Ok(PreorderStream {
        n,
        shard,
        split: (n - 1).max(1),
        seen_at_split: 0,
        stack: vec![Level {
            rows: Vec::new(),
            candidates: vec![(SubsetMask::EMPTY, SubsetMask::EMPTY)],
            next: 0,
        }],
    })
}

/// Every topology on `0..n`, as the up-set topologies of the preorders.
pub fn enumerate_topologies(
    n: usize,
    shard: Option<Shard>,
) -> Result<impl Iterator<Item = FiniteSpace>> {
    Ok(enumerate_preorders(n, shard)?.map(|p| alexandroff_space(&p)))
}

fn relabelled_opens(space: &FiniteSpace, perm: &[usize]) -> Vec<SubsetMask> {
    let mut opens: Vec<SubsetMask> = space
        .opens()
        .iter()
        .map(|u| u.iter().map(|x| perm[x]).collect())
        .collect();
    opens.sort_unstable();
    opens
}

/// The relabelling of `space` whose sorted open family is lexicographically
/// least, found by sweeping all `n!` permutations.
pub fn canonical_form(space: &FiniteSpace) -> FiniteSpace {
    let n = space.n();
    let best = (0..n)
        .permutations(n)
        .map(|perm| relabelled_opens(space, &perm))
        .min()
        .expect("at least one permutation");
    FiniteSpace::from_sorted_opens(n, best)
}

/// A complete homeomorphism invariant, cheaper than [`canonical_form`].
///
/// Points are ordered by `(|B_x|, |cl{x}|)`; only relabellings respecting
/// that order are tried, and the least relabelled up-row sequence is kept.
pub fn class_key(space: &FiniteSpace) -> Vec<u32> {
    let n = space.n();
    let sig = |x: usize| (space.min_nbhd(x).len(), space.point_closure(x).len());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sig(x));
    let groups: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&x| sig(x))
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let mut best: Option<Vec<u32>> = None;
    let per_group = groups
        .iter()
        .map(|g| g.iter().copied().permutations(g.len()).collect::<Vec<_>>());
    for choice in per_group.multi_cartesian_product() {
        let mut perm = vec![0; n];
        for (pos, &x) in choice.iter().flatten().enumerate() {
            perm[x] = pos;
        }
        let mut rows = vec![0u32; n];
        for x in 0..n {
            rows[perm[x]] = space.min_nbhd(x).iter().fold(0, |m, y| m | (1 << perm[y]));
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    }
    // multi_cartesian_product of zero iterators is empty; n >= 1 always
    // yields at least one group.
    best.expect("at least one relabelling")
}

/// One canonical representative per homeomorphism class on `n` points,
/// sorted by canonical open family.
pub fn canonical_classes(n: usize) -> Result<Vec<FiniteSpace>> {
    let mut keys = HashSet::new();
    let mut reps: Vec<FiniteSpace> = enumerate_topologies(n, None)?
        .filter(|s| keys.insert(class_key(s)))
        .map(|s| canonical_form(&s))
        .collect();
    reps.sort_by(|a, b| a.opens().cmp(b.opens()));
    Ok(reps)
}

/// Every continuous map `dom → cod`, tables in lexicographic order.
pub fn all_continuous_maps(dom: &FiniteSpace, cod: &FiniteSpace) -> Result<Vec<SpaceMap>> {
    let tables = (cod.n() as u64).checked_pow(dom.n() as u32);
    if tables.is_none_or(|t| t > MAP_TABLE_CAP) {
        return Err(Error::SizeCapExceeded {
            size: tables.map_or(usize::MAX, |t| t as usize),
            cap: MAP_TABLE_CAP as usize,
        });
    }
    // Continuity is monotonicity: x ≼ y implies f(x) ≼ f(y).
    let mut out = Vec::new();
    let mut table = Vec::with_capacity(dom.n());
    fn go(dom: &FiniteSpace, cod: &FiniteSpace, table: &mut Vec<usize>, out: &mut Vec<SpaceMap>) {
        let x = table.len();
        if x == dom.n() {
            out.push(SpaceMap::new(dom.clone(), cod.clone(), table.clone()).expect("valid table"));
            return;
        }
        for v in cod.points() {
            let ok = (0..x).all(|y| {
                (!dom.specializes(x, y) || cod.specializes(v, table[y]))
                    && (!dom.specializes(y, x) || cod.specializes(table[y], v))
            });
            if ok {
                table.push(v);
                go(dom, cod, table, out);
                table.pop();
            }
        }
    }
    go(dom, cod, &mut table, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_preorders(n, None).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn two_point_topologies() {
        let mut got: Vec<FiniteSpace> = enumerate_topologies(2, None).unwrap().collect();
        got.sort_by(|a, b| a.opens().cmp(b.opens()));
        let s = FiniteSpace::sierpinski();
        let mut expected = vec![
            FiniteSpace::discrete(2),
            s.relabel(&[1, 0]),
            s,
            FiniteSpace::indiscrete(2),
        ];
        expected.sort_by(|a, b| a.opens().cmp(b.opens()));
        assert_eq!(got, expected);
        let one: Vec<FiniteSpace> = enumerate_topologies(1, None).unwrap().collect();
        assert_eq!(one, vec![FiniteSpace::point()]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_preorders(7, None),
            Err(Error::CapExceeded { n: 7, cap: 6 })
        ));
        assert!(enumerate_preorders(0, None).is_err());
    }

    #[test]
    fn shard_parsing() {
        assert_eq!(
            "2/8".parse::<Shard>().unwrap(),
            Shard { index: 2, count: 8 }
        );
        assert!("8/8".parse::<Shard>().is_err());
        assert!("x".parse::<Shard>().is_err());
    }

    #[test]
    fn shards_partition_the_stream() {
        for n in 1..=4 {
            let all: Vec<Preorder> = enumerate_preorders(n, None).unwrap().collect();
            let mut union: Vec<Preorder> = (0..3)
                .flat_map(|i| enumerate_preorders(n, Some(Shard::new(i, 3).unwrap())).unwrap())
                .collect();
            assert_eq!(union.len(), all.len());
            union.sort();
            let mut sorted = all.clone();
            sorted.sort();
            assert_eq!(union, sorted);
        }
    }

    #[test]
    fn canonical_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(canonical_form(&s), canonical_form(&s.relabel(&[1, 0])));
        assert_eq!(
            canonical_form(&FiniteSpace::discrete(3)),
            FiniteSpace::discrete(3)
        );
        let classes: Vec<usize> = (1..=3)
            .map(|n| canonical_classes(n).unwrap().len())
            .collect();
        assert_eq!(classes, vec![1, 3, 9]);
    }

    #[test]
    fn map_counts() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(all_continuous_maps(&s, &s).unwrap().len(), 3);
        assert_eq!(
            all_continuous_maps(&FiniteSpace::indiscrete(3), &FiniteSpace::point())
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            all_continuous_maps(&FiniteSpace::discrete(2), &s)
                .unwrap()
                .len(),
            4
        );
        assert!(
            all_continuous_maps(&FiniteSpace::discrete(12), &FiniteSpace::discrete(12)).is_err()
        );
    }
}
