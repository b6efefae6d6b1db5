//! Independent reference implementations. None of these call into the
//! library beyond its plain data types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

/// Every topology on `n` points as a sorted list of open bitmasks, found by
/// testing every family of subsets that contains `∅` and `X` for closure
/// under pairwise union and intersection.
pub fn open_families(n: usize) -> BTreeSet<Vec<u32>> {
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = BTreeSet::new();
    for pick in 0u64..1 << middle.len() {
        let mut family = vec![0, full];
        family.extend(
            (0..middle.len())
                .filter(|i| pick >> i & 1 == 1)
                .map(|i| middle[i]),
        );
        let member = |s: u32| family.contains(&s);
        let closed = family
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| member(a | b) && member(a & b));
        if closed {
            family.sort_unstable();
            out.insert(family);
        }
    }
    out
}

/// Opens of the topology whose specialization relation is `rel`, where
/// `rel[x][y]` means every open set containing `x` contains `y`.
pub fn up_sets(rel: &[Vec<bool>]) -> Vec<u32> {
    let n = rel.len();
    let mut opens: Vec<u32> = (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !rel[x][y] || s >> y & 1 == 1))
        })
        .collect();
    opens.sort_unstable();
    opens
}

/// Preorders by filtering all reflexive relations for transitivity.
pub fn preorders_by_filter(n: usize) -> Vec<Vec<Vec<bool>>> {
    let off: Vec<(usize, usize)> = (0..n)
        .cartesian_product(0..n)
        .filter(|(a, b)| a != b)
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << off.len() {
        let mut rel = vec![vec![false; n]; n];
        for (i, x) in rel.iter_mut().enumerate() {
            x[i] = true;
        }
        for (k, &(a, b)) in off.iter().enumerate() {
            rel[a][b] = bits >> k & 1 == 1;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !rel[a][b] || (0..n).all(|c| !rel[b][c] || rel[a][c])));
        if transitive {
            out.push(rel);
        }
    }
    out
}

/// Preorders as up-set rows chosen one row at a time, pruning as soon as two
/// chosen rows are inconsistent.
pub fn preorders_by_rows(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, rows: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = rows.len();
        if i == n {
            out.push(rows.clone());
            return;
        }
        for row in 0u32..1 << n {
            if row >> i & 1 == 0 {
                continue;
            }
            let consistent = (0..i).all(|j| {
                let (rj, ri) = (rows[j], row);
                (ri >> j & 1 == 0 || rj & !ri == 0) && (rj >> i & 1 == 0 || ri & !rj == 0)
            });
            if consistent {
                rows.push(row);
                go(n, rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Number of homeomorphism classes, by orbit collection under every
/// permutation of the points.
pub fn class_count(n: usize) -> usize {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let relabel = |opens: &[u32], p: &[usize]| -> Vec<u32> {
        let mut v: Vec<u32> = opens
            .iter()
            .map(|&s| {
                (0..n)
                    .filter(|&x| s >> x & 1 == 1)
                    .map(|x| 1u32 << p[x])
                    .sum()
            })
            .collect();
        v.sort_unstable();
        v
    };
    let families: Vec<Vec<u32>> = preorders_by_rows(n)
        .into_iter()
        .map(|rows| {
            let rel: Vec<Vec<bool>> = rows
                .iter()
                .map(|&r| (0..n).map(|y| r >> y & 1 == 1).collect())
                .collect();
            up_sets(&rel)
        })
        .collect();
    families
        .iter()
        .map(|f| perms.iter().map(|p| relabel(f, p)).min().unwrap())
        .collect::<BTreeSet<_>>()
        .len()
}

/// A finite topology given by raw open masks, with definitions evaluated
/// literally on the open sets.
pub struct Raw {
    pub n: usize,
    pub opens: Vec<u32>,
}

impl Raw {
    pub fn new(n: usize, opens: Vec<u32>) -> Self {
        Raw { n, opens }
    }

    pub fn full(&self) -> u32 {
        (1 << self.n) - 1
    }

    pub fn nbhds(&self, x: usize) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().copied().filter(move |u| u >> x & 1 == 1)
    }

    pub fn is_open(&self, s: u32) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed(&self, s: u32) -> bool {
        self.is_open(self.full() & !s)
    }

    /// The sequence `prefix (cycle)^ω` converges to `x`: it is eventually
    /// inside every neighbourhood of `x`.
    pub fn converges(&self, cycle: &[usize], x: usize) -> bool {
        self.nbhds(x)
            .all(|u| cycle.iter().all(|&c| u >> c & 1 == 1))
    }

    /// Eventually periodic sequences: a prefix visiting any set of points
    /// once, then a cycle of length 1 or 2. On a finite space every sequence
    /// has a range and a set of recurring points matched by one of these.
    pub fn sequences(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let pts: Vec<usize> = (0..self.n).collect();
        let prefixes: Vec<Vec<usize>> = pts.iter().copied().powerset().collect();
        let mut cycles: Vec<Vec<usize>> = pts.iter().map(|&p| vec![p]).collect();
        cycles.extend(
            pts.iter()
                .cartesian_product(&pts)
                .filter(|(a, b)| a < b)
                .map(|(&a, &b)| vec![a, b]),
        );
        prefixes.into_iter().cartesian_product(cycles).collect()
    }

    /// Every sequence has at most one limit.
    pub fn sequentially_hausdorff(&self) -> bool {
        self.sequences()
            .iter()
            .all(|(_, cycle)| (0..self.n).filter(|&x| self.converges(cycle, x)).count() <= 1)
    }

    /// Every convergent sequence together with a limit forms a closed set.
    pub fn sequentially_closed_images(&self) -> bool {
        self.sequences().iter().all(|(prefix, cycle)| {
            let range: u32 = prefix
                .iter()
                .chain(cycle)
                .map(|&p| 1u32 << p)
                .fold(0, |a, b| a | b);
            (0..self.n)
                .filter(|&x| self.converges(cycle, x))
                .all(|x| self.is_closed(range | 1 << x))
        })
    }

    /// A finitely valued `f : X → ℝ` is continuous iff the preimage of every
    /// open interval with endpoints in `cuts` is open, provided the cuts
    /// separate the values of `f`.
    fn continuous(&self, f: &[f64], cuts: &[f64]) -> bool {
        cuts.iter().tuple_combinations().all(|(&lo, &hi)| {
            let pre: u32 = (0..self.n)
                .filter(|&x| lo < f[x] && f[x] < hi)
                .map(|x| 1 << x)
                .sum();
            self.is_open(pre)
        })
    }

    /// For every closed `F` and `x ∉ F` some function on the grid
    /// `{0, 1/k, …, 1}`, `k ≤ 3`, is continuous, 0 at `x` and 1 on `F`.
    pub fn completely_regular_by_grid(&self) -> bool {
        let closed: Vec<u32> = self.opens.iter().map(|&u| self.full() & !u).collect();
        let candidates: Vec<Vec<f64>> = (1..=3)
            .flat_map(|k| {
                let grid: Vec<f64> = (0..=k).map(|i| i as f64 / k as f64).collect();
                (0..self.n)
                    .map(|_| grid.clone())
                    .multi_cartesian_product()
                    .collect::<Vec<_>>()
            })
            .collect();
        let cuts: Vec<f64> = (-1..=25).map(|i| i as f64 / 24.0 - 1.0 / 48.0).collect();
        let continuous: Vec<&Vec<f64>> = candidates
            .iter()
            .filter(|f| self.continuous(f, &cuts))
            .collect();
        closed.iter().all(|&c| {
            (0..self.n).filter(|&x| c >> x & 1 == 0).all(|x| {
                continuous
                    .iter()
                    .any(|f| f[x] == 0.0 && (0..self.n).all(|y| c >> y & 1 == 0 || f[y] == 1.0))
            })
        })
    }

    pub fn t0(&self) -> bool {
        (0..self.n)
            .tuple_combinations()
            .all(|(x, y)| self.opens.iter().any(|u| (u >> x & 1) != (u >> y & 1)))
    }

    pub fn t1(&self) -> bool {
        (0..self.n).all(|x| self.is_closed(1 << x))
    }

    fn closure(&self, s: u32) -> u32 {
        self.opens
            .iter()
            .map(|&u| self.full() & !u)
            .filter(|c| s & !c == 0)
            .fold(self.full(), |a, c| a & c)
    }

    /// Every open set contains the closures of its points.
    pub fn r0(&self) -> bool {
        (0..self.n).all(|x| self.nbhds(x).all(|u| self.closure(1 << x) & !u == 0))
    }

    /// Topologically distinguishable points have disjoint neighbourhoods.
    pub fn r1(&self) -> bool {
        (0..self.n).tuple_combinations().all(|(x, y)| {
            let indistinguishable = self.opens.iter().all(|u| (u >> x & 1) == (u >> y & 1));
            indistinguishable || self.nbhds(x).any(|u| self.nbhds(y).any(|v| u & v == 0))
        })
    }

    /// No strictly finer topology on the same points is compact; every
    /// finite topology is compact, so this asks for maximality.
    pub fn maximal_compact(&self, all: &BTreeSet<Vec<u32>>) -> bool {
        !all.iter()
            .any(|t| t != &self.opens && self.opens.iter().all(|u| t.contains(u)))
    }
}
