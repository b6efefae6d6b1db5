//! Spaces built from other spaces.
//!
//! Quotient spaces number their points by first appearance: class `0`
//! contains point `0`, class `1` the least point outside class `0`, and so on.
//! Products encode the point `(x_0, .., x_{k-1})` as the mixed-radix integer
//! `x_0 + n_0 (x_1 + n_1 (x_2 + ..))`, so the first factor varies fastest.
//! Sums place the points of each summand consecutively, in the given order.

use crate::axioms::{check, Axiom};
use crate::error::{CocycleClause, Error, Result};
use crate::map::SpaceMap;
use crate::mask::{SubsetMask, MASK_BITS};
use crate::preorder::Preorder;
use crate::space::{alexandroff_space, FiniteSpace, MAX_POINTS};

/// A quotient space together with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub space: FiniteSpace,
    pub projection: SpaceMap,
    /// `class_of[x]` is the quotient point of `x`.
    pub class_of: Vec<usize>,
    /// The fibre of each quotient point.
    pub classes: Vec<SubsetMask>,
}

/// The sobrification `X^s` with its canonical map `ι_X(x) = cl{x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sobrification {
    pub space: FiniteSpace,
    pub iota: SpaceMap,
    /// The irreducible closed set represented by each point of `X^s`, ascending.
    pub set_of: Vec<SubsetMask>,
}

impl Sobrification {
    pub fn index_of(&self, c: SubsetMask) -> Option<usize> {
        self.set_of.binary_search(&c).ok()
    }
}

/// Which relation on `X × X` the diagonal test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalRelation {
    /// `≼²`, the specialization preorder of the product.
    Preorder,
    /// `∼²`, its symmetric part.
    Equivalence,
}

fn check_point_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_POINTS {
        Err(Error::PointCount { n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_POINTS {
        Err(Error::SizeCapExceeded {
            size,
            cap: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

/// Topology on `0..n` generated by `subbase`.
///
/// The smallest open set containing `x` is the intersection of the subbase
/// members containing `x`, and the opens are the unions of those.
pub fn topology_from_subbase<I>(n: usize, subbase: I) -> FiniteSpace
where
    I: IntoIterator<Item = SubsetMask>,
{
    let mut up = vec![SubsetMask::full(n); n];
    for s in subbase {
        for x in s.iter() {
            up[x] &= s;
        }
    }
    alexandroff_space(&Preorder::from_up_rows_unchecked(n, up))
}

/// Quotient of `space` by the partition with labels `class_of`
/// (labels must be `0..k` with every label used).
pub fn quotient_by(space: &FiniteSpace, class_of: Vec<usize>) -> Result<QuotientResult> {
    if class_of.len() != space.n() {
        return Err(Error::InvalidMap(format!(
            "{} labels for {} points",
            class_of.len(),
            space.n()
        )));
    }
    let k = class_of.iter().max().map_or(0, |m| m + 1);
    let mut classes = vec![SubsetMask::EMPTY; k];
    for (x, &c) in class_of.iter().enumerate() {
        classes[c] = classes[c].with(x);
    }
    if classes.iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidMap("unused class label".into()));
    }
    let image = |u: SubsetMask| -> SubsetMask { u.iter().map(|x| class_of[x]).collect() };
    let fibre =
        |v: SubsetMask| -> SubsetMask { v.iter().fold(SubsetMask::EMPTY, |m, c| m | classes[c]) };
    // V is open in the quotient iff its fibre is open; such fibres are the
    // saturated opens.
    let opens: Vec<SubsetMask> = space
        .opens()
        .iter()
        .map(|&u| image(u))
        .filter(|&v| space.is_open(fibre(v)))
        .collect();
    let quotient = FiniteSpace::from_topology_unchecked(k, opens);
    let projection = SpaceMap::new(space.clone(), quotient.clone(), class_of.clone())?;
    Ok(QuotientResult {
        space: quotient,
        projection,
        class_of,
        classes,
    })
}

/// Labels the blocks of a partition by first appearance.
fn label_blocks(n: usize, block_of: impl Fn(usize) -> SubsetMask) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if class_of[x] == usize::MAX {
            for y in block_of(x).iter() {
                class_of[y] = next;
            }
            next += 1;
        }
    }
    class_of
}

/// `(X_0, τ_0, q)`: the quotient by topological indistinguishability.
pub fn t0_quotient(space: &FiniteSpace) -> QuotientResult {
    let class_of = label_blocks(space.n(), |x| space.indistinguishable_class(x));
    quotient_by(space, class_of).expect("indistinguishability classes partition the space")
}

/// `X / ∼_C`: the quotient by connected components.
pub fn connectivity_quotient(space: &FiniteSpace) -> QuotientResult {
    let comps = space.components();
    let class_of = label_blocks(space.n(), |x| {
        *comps
            .iter()
            .find(|c| c.contains(x))
            .expect("components cover")
    });
    quotient_by(space, class_of).expect("components partition the space")
}

/// The map `f̃` with `f̃ ∘ q = f`, for `f` constant on the fibres of `q`.
pub fn factor_through(q: &QuotientResult, f: &SpaceMap) -> Result<SpaceMap> {
    if f.dom() != q.projection.dom() {
        return Err(Error::InvalidMap(
            "map and quotient have different domains".into(),
        ));
    }
    let mut table = Vec::with_capacity(q.classes.len());
    for (c, class) in q.classes.iter().enumerate() {
        let rep = class.first().expect("classes are non-empty");
        if let Some(y) = class.iter().find(|&y| f.apply(y) != f.apply(rep)) {
            return Err(Error::PreconditionViolated(format!(
                "map separates points {rep} and {y} of class {c}"
            )));
        }
        table.push(f.apply(rep));
    }
    SpaceMap::new(q.space.clone(), f.cod().clone(), table)
}

/// The unique `f_0` with `f = f_0 ∘ q` for continuous `f` into a T0 space.
pub fn factor_through_t0(f: &SpaceMap) -> Result<SpaceMap> {
    if let Some(v) = f.continuity_witness() {
        return Err(Error::NotContinuous(v));
    }
    if !check(f.cod(), Axiom::T0) {
        return Err(Error::CodomainNotT0);
    }
    factor_through(&t0_quotient(f.dom()), f)
}

/// `Sk(τ)`, generated by the sets `U ∖ V` with `U, V` open.
pub fn skula(space: &FiniteSpace) -> FiniteSpace {
    let opens = space.opens();
    let base = opens
        .iter()
        .flat_map(|&u| opens.iter().map(move |&v| u - v));
    topology_from_subbase(space.n(), base)
}

/// `X^s`: irreducible closed sets, with opens `U_s = {C : C ∩ U ≠ ∅}`.
pub fn sobrification(space: &FiniteSpace) -> Sobrification {
    let set_of: Vec<SubsetMask> = space
        .closed_sets()
        .into_iter()
        .filter(|&c| space.is_irreducible(c))
        .collect();
    let m = set_of.len();
    assert!(
        m <= MASK_BITS,
        "{m} irreducible closed sets exceed the mask width"
    );
    let opens = space.opens().iter().map(|&u| {
        set_of
            .iter()
            .enumerate()
            .filter(|(_, c)| c.intersects(u))
            .map(|(i, _)| i)
            .collect::<SubsetMask>()
    });
    let sob = FiniteSpace::from_topology_unchecked(m, opens.collect());
    let table = space
        .points()
        .map(|x| {
            set_of
                .binary_search(&space.point_closure(x))
                .expect("point closures are irreducible")
        })
        .collect();
    let iota = SpaceMap::new(space.clone(), sob.clone(), table).expect("valid table");
    Sobrification {
        space: sob,
        iota,
        set_of,
    }
}

/// `f^s : X^s → Y^s`, `C ↦ cl(f(C))`.
pub fn sobrify_map(f: &SpaceMap) -> Result<SpaceMap> {
    if let Some(v) = f.continuity_witness() {
        return Err(Error::NotContinuous(v));
    }
    let xs = sobrification(f.dom());
    let ys = sobrification(f.cod());
    let mut table = Vec::with_capacity(xs.set_of.len());
    for &c in &xs.set_of {
        let image = f.cod().closure(f.image(c));
        let j = ys.index_of(image).ok_or_else(|| {
            Error::PreconditionViolated(format!("closure of the image of {c:?} is not irreducible"))
        })?;
        table.push(j);
    }
    SpaceMap::new(xs.space, ys.space, table)
}

/// The unique `f̄ : X^s → Y` with `f̄ ∘ ι_X = f`, for continuous `f` into a sober `Y`.
pub fn factor_through_sobrification(f: &SpaceMap) -> Result<SpaceMap> {
    if !check(f.cod(), Axiom::Sober) {
        return Err(Error::CodomainNotSober);
    }
    let fs = sobrify_map(f)?;
    let ys = sobrification(f.cod());
    let inv = ys.iota.inverse().ok_or(Error::CodomainNotSober)?;
    fs.then(&inv)
}

/// Mixed-radix coordinates of product point `p`.
pub fn product_coords(sizes: &[usize], mut p: usize) -> Vec<usize> {
    sizes
        .iter()
        .map(|&n| {
            let c = p % n;
            p /= n;
            c
        })
        .collect()
}

/// Product point with the given coordinates.
pub fn product_index(sizes: &[usize], coords: &[usize]) -> usize {
    sizes
        .iter()
        .zip(coords)
        .rev()
        .fold(0, |acc, (&n, &c)| acc * n + c)
}

fn product_size(spaces: &[FiniteSpace]) -> Result<usize> {
    if spaces.is_empty() {
        return Err(Error::PreconditionViolated("no factors".into()));
    }
    let size = spaces
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.n()))
        .unwrap_or(usize::MAX);
    check_size(size)?;
    Ok(size)
}

/// Product topology: the weak topology of the projections.
pub fn product(spaces: &[FiniteSpace]) -> Result<FiniteSpace> {
    let size = product_size(spaces)?;
    let sizes: Vec<usize> = spaces.iter().map(FiniteSpace::n).collect();
    let coords: Vec<Vec<usize>> = (0..size).map(|p| product_coords(&sizes, p)).collect();
    let maps: Vec<(Vec<usize>, FiniteSpace)> = spaces
        .iter()
        .enumerate()
        .map(|(i, s)| (coords.iter().map(|c| c[i]).collect(), s.clone()))
        .collect();
    weak_topology(size, &maps)
}

/// Box topology, generated by the products `∏ U_a` of open sets.
pub fn box_product(spaces: &[FiniteSpace]) -> Result<FiniteSpace> {
    let size = product_size(spaces)?;
    let sizes: Vec<usize> = spaces.iter().map(FiniteSpace::n).collect();
    let coords: Vec<Vec<usize>> = (0..size).map(|p| product_coords(&sizes, p)).collect();
    let mut base = Vec::new();
    let mut choice = vec![0usize; spaces.len()];
    loop {
        let cell: SubsetMask = (0..size)
            .filter(|&p| {
                spaces
                    .iter()
                    .enumerate()
                    .all(|(i, s)| s.opens()[choice[i]].contains(coords[p][i]))
            })
            .collect();
        base.push(cell);
        let mut i = 0;
        while i < spaces.len() {
            choice[i] += 1;
            if choice[i] < spaces[i].opens().len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == spaces.len() {
            break;
        }
    }
    Ok(topology_from_subbase(size, base))
}

/// Sum topology together with the summand injections.
pub fn sum_with_injections(spaces: &[FiniteSpace]) -> Result<(FiniteSpace, Vec<SpaceMap>)> {
    if spaces.is_empty() {
        return Err(Error::PreconditionViolated("no summands".into()));
    }
    let size: usize = spaces.iter().map(FiniteSpace::n).sum();
    check_size(size)?;
    let mut offset = 0;
    let mut maps = Vec::with_capacity(spaces.len());
    for s in spaces {
        maps.push((s.clone(), (offset..offset + s.n()).collect::<Vec<_>>()));
        offset += s.n();
    }
    let space = strong_topology(size, &maps)?;
    let injections = maps
        .into_iter()
        .map(|(s, t)| SpaceMap::new(s, space.clone(), t))
        .collect::<Result<_>>()?;
    Ok((space, injections))
}

/// Sum (disjoint union) of spaces.
pub fn sum(spaces: &[FiniteSpace]) -> Result<FiniteSpace> {
    Ok(sum_with_injections(spaces)?.0)
}

/// Coarsest topology on `0..n` making each `table: 0..n → codomain` continuous.
pub fn weak_topology(n: usize, maps: &[(Vec<usize>, FiniteSpace)]) -> Result<FiniteSpace> {
    check_point_count(n)?;
    for (table, cod) in maps {
        if table.len() != n {
            return Err(Error::InvalidMap(format!(
                "table of length {} on {n} points",
                table.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= cod.n()) {
            return Err(Error::InvalidMap(format!("value {v} outside codomain")));
        }
    }
    let subbase = maps.iter().flat_map(|(table, cod)| {
        cod.opens().iter().map(move |&v| {
            (0..n)
                .filter(|&x| v.contains(table[x]))
                .collect::<SubsetMask>()
        })
    });
    Ok(topology_from_subbase(n, subbase))
}

/// Finest topology on `0..n` making each `table: domain → 0..n` continuous.
pub fn strong_topology(n: usize, maps: &[(FiniteSpace, Vec<usize>)]) -> Result<FiniteSpace> {
    check_point_count(n)?;
    for (dom, table) in maps {
        if table.len() != dom.n() {
            return Err(Error::InvalidMap(format!(
                "table of length {} on a {}-point domain",
                table.len(),
                dom.n()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidMap(format!("value {v} outside 0..{n}")));
        }
    }
    let opens = SubsetMask::all(n)
        .filter(|&w| {
            maps.iter().all(|(dom, table)| {
                let pre: SubsetMask = dom.points().filter(|&x| w.contains(table[x])).collect();
                dom.is_open(pre)
            })
        })
        .collect();
    Ok(FiniteSpace::from_sorted_opens(n, opens))
}

/// `X* = X ∪ {∞}` with `∞` at index `n`, opens `τ ∪ {X* ∖ C : C closed}`.
///
/// Every closed subset of a finite space is compact.
pub fn one_point_compactification(space: &FiniteSpace) -> Result<FiniteSpace> {
    let n = space.n();
    check_size(n + 1)?;
    let full = SubsetMask::full(n + 1);
    let mut opens: Vec<SubsetMask> = space.opens().to_vec();
    opens.extend(
        space
            .closed_sets()
            .into_iter()
            .filter(|&c| space.is_compact(c))
            .map(|c| full - c),
    );
    Ok(FiniteSpace::from_topology_unchecked(n + 1, opens))
}

/// `τ^A = {U ∪ (V ∩ A) : U, V ∈ τ}`.
pub fn simple_extension(space: &FiniteSpace, a: SubsetMask) -> FiniteSpace {
    let a = a & space.full();
    let opens = space.opens();
    let family = opens
        .iter()
        .flat_map(|&u| opens.iter().map(move |&v| u | (v & a)))
        .collect();
    FiniteSpace::from_topology_unchecked(space.n(), family)
}

/// Whether `Δ_X` is closed in the Alexandroff topology of `≼²` or `∼²` on `X × X`.
///
/// The product's smallest neighbourhood of `(a, b)` is `B_a × B_b`, so
/// `(a, b) ≼² (c, d)` iff `c ∈ B_a` and `d ∈ B_b`. Closed sets of an
/// Alexandroff topology are its down-sets.
pub fn diagonal_alexandroff_closed(space: &FiniteSpace, which: DiagonalRelation) -> bool {
    let leq2 = |a: usize, b: usize, c: usize, d: usize| {
        space.min_nbhd(a).contains(c) && space.min_nbhd(b).contains(d)
    };
    let below = |c: usize, d: usize, a: usize| match which {
        DiagonalRelation::Preorder => leq2(c, d, a, a),
        DiagonalRelation::Equivalence => leq2(c, d, a, a) && leq2(a, a, c, d),
    };
    space.points().all(|a| {
        space
            .points()
            .all(|c| space.points().all(|d| c == d || !below(c, d, a)))
    })
}

/// Partial map on the points of a piece; `None` off the overlap.
pub type PartialMap = Vec<Option<usize>>;

/// Pieces `Y_α`, overlaps `U_{α,β} ⊆ Y_α` and transition maps
/// `h_{α,β} : U_{α,β} → U_{β,α}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingData {
    pub pieces: Vec<FiniteSpace>,
    pub overlaps: Vec<Vec<SubsetMask>>,
    pub homeos: Vec<Vec<PartialMap>>,
}

/// A glued space with the quotient map from the sum and the piece embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub space: FiniteSpace,
    /// `p : Y → X` from the sum of the pieces.
    pub projection: SpaceMap,
    /// `p_α : Y_α → X`.
    pub embeddings: Vec<SpaceMap>,
}

impl GluingData {
    /// Copies of `z` glued along the open set `w` by identities.
    pub fn duplicate(z: &FiniteSpace, w: SubsetMask, k: usize) -> Self {
        let identity_on = |u: SubsetMask| -> PartialMap {
            z.points().map(|x| u.contains(x).then_some(x)).collect()
        };
        let overlap = |a: usize, b: usize| if a == b { z.full() } else { w };
        GluingData {
            pieces: vec![z.clone(); k],
            overlaps: (0..k)
                .map(|a| (0..k).map(|b| overlap(a, b)).collect())
                .collect(),
            homeos: (0..k)
                .map(|a| (0..k).map(|b| identity_on(overlap(a, b))).collect())
                .collect(),
        }
    }

    fn image(&self, a: usize, b: usize, s: SubsetMask) -> SubsetMask {
        s.iter()
            .filter_map(|y| self.homeos[a][b].get(y).copied().flatten())
            .collect()
    }

    /// Checks every condition on gluing data, reporting the first failure.
    pub fn validate(&self) -> Result<()> {
        let k = self.pieces.len();
        if k == 0 {
            return Err(Error::PreconditionViolated("no pieces".into()));
        }
        if self.overlaps.len() != k
            || self.homeos.len() != k
            || self.overlaps.iter().any(|r| r.len() != k)
            || self.homeos.iter().any(|r| r.len() != k)
        {
            return Err(Error::PreconditionViolated(format!(
                "overlap and transition matrices must be {k}x{k}"
            )));
        }
        for a in 0..k {
            let ya = &self.pieces[a];
            for b in 0..k {
                if self.homeos[a][b].len() != ya.n() {
                    return Err(Error::PreconditionViolated(format!(
                        "transition ({a}, {b}) has {} entries for {} points",
                        self.homeos[a][b].len(),
                        ya.n()
                    )));
                }
                if !self.overlaps[a][b].fits(ya.n()) {
                    return Err(Error::MaskOutOfRange {
                        mask: self.overlaps[a][b],
                        n: ya.n(),
                    });
                }
            }
        }
        let violation = |clause, alpha, beta, gamma| {
            Err(Error::CocycleViolation {
                clause,
                alpha,
                beta,
                gamma,
            })
        };
        for a in 0..k {
            let ya = &self.pieces[a];
            let id_ok = ya.points().all(|y| self.homeos[a][a][y] == Some(y));
            if self.overlaps[a][a] != ya.full() || !id_ok {
                return violation(CocycleClause::Diagonal, a, a, a);
            }
        }
        for a in 0..k {
            for b in 0..k {
                if !self.pieces[a].is_open(self.overlaps[a][b]) {
                    return violation(CocycleClause::OverlapNotOpen, a, b, b);
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                self.check_homeomorphism(a, b)?;
            }
        }
        for a in 0..k {
            for b in 0..k {
                let h = &self.homeos[a][b];
                let inv = &self.homeos[b][a];
                let ok = self.overlaps[a][b]
                    .iter()
                    .all(|y| h[y].and_then(|z| inv[z]) == Some(y));
                if !ok {
                    return violation(CocycleClause::Inverse, a, b, a);
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                for g in 0..k {
                    let src = self.overlaps[a][b] & self.overlaps[a][g];
                    let dst = self.overlaps[b][a] & self.overlaps[b][g];
                    if self.image(a, b, src) != dst {
                        return violation(CocycleClause::TripleOverlap, a, b, g);
                    }
                    let composed = src.iter().all(|y| {
                        let via = self.homeos[a][b][y].and_then(|z| self.homeos[b][g][z]);
                        via.is_some() && via == self.homeos[a][g][y]
                    });
                    if !composed {
                        return violation(CocycleClause::Composition, a, b, g);
                    }
                }
            }
        }
        Ok(())
    }

    /// `h_{α,β}` is defined exactly on `U_{α,β}` and is a homeomorphism onto `U_{β,α}`.
    fn check_homeomorphism(&self, a: usize, b: usize) -> Result<()> {
        let bad = Err(Error::NotAHomeomorphism { alpha: a, beta: b });
        let h = &self.homeos[a][b];
        let src = self.overlaps[a][b];
        let dst = self.overlaps[b][a];
        let nb = self.pieces[b].n();
        for (y, v) in h.iter().enumerate() {
            match v {
                Some(z) if !src.contains(y) || *z >= nb => return bad,
                None if src.contains(y) => return bad,
                _ => {}
            }
        }
        if src.len() != dst.len() || self.image(a, b, src) != dst {
            return bad;
        }
        let (sa, pa) = self.pieces[a].subspace(src);
        let (sb, pb) = self.pieces[b].subspace(dst);
        let table = pa
            .iter()
            .map(|&y| {
                let z = h[y].expect("defined on the overlap");
                pb.binary_search(&z).expect("lands in the overlap")
            })
            .collect();
        let f = SpaceMap::new(sa, sb, table)?;
        if f.is_homeomorphism() {
            Ok(())
        } else {
            bad
        }
    }
}

/// Quotient of the sum of the pieces by `y ∼ h_{α,β}(y)`.
pub fn glue(data: &GluingData) -> Result<Glued> {
    data.validate()?;
    let (sum_space, _) = sum_with_injections(&data.pieces)?;
    let offsets: Vec<usize> = data
        .pieces
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s.n();
            Some(o)
        })
        .collect();
    let total = sum_space.n();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let k = data.pieces.len();
    for a in 0..k {
        for b in 0..k {
            for y in data.overlaps[a][b].iter() {
                let z = data.homeos[a][b][y].expect("validated");
                let (ra, rb) = (
                    find(&mut parent, offsets[a] + y),
                    find(&mut parent, offsets[b] + z),
                );
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let roots: Vec<usize> = (0..total).map(|x| find(&mut parent, x)).collect();
    let class_of = label_blocks(total, |x| {
        (0..total).filter(|&y| roots[y] == roots[x]).collect()
    });
    let q = quotient_by(&sum_space, class_of)?;
    let embeddings = data
        .pieces
        .iter()
        .enumerate()
        .map(|(a, s)| {
            let table = s.points().map(|y| q.class_of[offsets[a] + y]).collect();
            SpaceMap::new(s.clone(), q.space.clone(), table)
        })
        .collect::<Result<_>>()?;
    Ok(Glued {
        space: q.space,
        projection: q.projection,
        embeddings,
    })
}

/// `k` copies of `z` glued along the open set `w`.
pub fn duplicate_along(z: &FiniteSpace, w: SubsetMask, k: usize) -> Result<FiniteSpace> {
    if !z.is_open(w) {
        return Err(Error::NotOpen(w));
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("need at least one copy".into()));
    }
    Ok(glue(&GluingData::duplicate(z, w, k))?.space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    fn space(n: usize, opens: &[&[usize]]) -> FiniteSpace {
        FiniteSpace::from_opens(n, opens.iter().map(|o| m(o))).unwrap()
    }

    fn s() -> FiniteSpace {
        FiniteSpace::sierpinski()
    }

    #[test]
    fn t0_quotient_examples() {
        assert_eq!(
            t0_quotient(&FiniteSpace::indiscrete(2)).space,
            FiniteSpace::point()
        );
        let q = t0_quotient(&s());
        assert_eq!(q.space, s());
        assert_eq!(q.class_of, vec![0, 1]);
        let x = space(3, &[&[], &[0, 1], &[0, 1, 2]]);
        let q = t0_quotient(&x);
        assert_eq!(q.space, s());
        assert_eq!(q.class_of, vec![0, 0, 1]);
        assert!(q.projection.is_continuous() && q.projection.is_surjective());
    }

    #[test]
    fn factor_through_t0_examples() {
        let i2 = FiniteSpace::indiscrete(2);
        let f = SpaceMap::constant(&i2, &s(), 1).unwrap();
        let f0 = factor_through_t0(&f).unwrap();
        assert_eq!(f0.table(), &[1]);
        let to_pt = SpaceMap::constant(&i2, &FiniteSpace::point(), 0).unwrap();
        assert_eq!(factor_through_t0(&to_pt).unwrap().table(), &[0]);
        let into_indiscrete = SpaceMap::identity(&i2);
        assert!(matches!(
            factor_through_t0(&into_indiscrete),
            Err(Error::CodomainNotT0)
        ));
        let swap = SpaceMap::new(s(), s(), vec![1, 0]).unwrap();
        assert!(matches!(
            factor_through_t0(&swap),
            Err(Error::NotContinuous(_))
        ));
    }

    #[test]
    fn skula_examples() {
        assert_eq!(skula(&s()), FiniteSpace::discrete(2));
        assert_eq!(
            skula(&FiniteSpace::indiscrete(2)),
            FiniteSpace::indiscrete(2)
        );
        // almost discrete: opens are unions of {0,1} and {2}
        let ad = space(3, &[&[], &[0, 1], &[2], &[0, 1, 2]]);
        assert_eq!(skula(&ad), ad);
    }

    #[test]
    fn sobrification_examples() {
        let sob = sobrification(&s());
        assert_eq!(sob.set_of, vec![m(&[1]), m(&[0, 1])]);
        assert!(sob.iota.is_bijective());
        assert!(sob.iota.is_homeomorphism());
        let sob = sobrification(&FiniteSpace::indiscrete(2));
        assert_eq!(sob.space, FiniteSpace::point());
        assert!(sob.iota.is_surjective() && !sob.iota.is_injective());
        assert_eq!(
            sobrification(&FiniteSpace::discrete(3)).space,
            FiniteSpace::discrete(3)
        );
    }

    #[test]
    fn sobrify_map_examples() {
        let id = SpaceMap::identity(&s());
        assert_eq!(sobrify_map(&id).unwrap().table(), &[0, 1]);
        let to_one = SpaceMap::constant(&s(), &s(), 1).unwrap();
        // both irreducible closed sets go to {1}, which is index 0
        assert_eq!(sobrify_map(&to_one).unwrap().table(), &[0, 0]);
        let q = SpaceMap::constant(&FiniteSpace::indiscrete(2), &FiniteSpace::point(), 0).unwrap();
        assert_eq!(sobrify_map(&q).unwrap().table(), &[0]);
    }

    #[test]
    fn products_and_sums() {
        let ss = product(&[s(), s()]).unwrap();
        assert_eq!(ss.n(), 4);
        let pre = ss.specialization_preorder();
        let sp = s().specialization_preorder();
        for p in 0..4 {
            for q in 0..4 {
                let (a, b) = (product_coords(&[2, 2], p), product_coords(&[2, 2], q));
                assert_eq!(pre.leq(p, q), sp.leq(a[0], b[0]) && sp.leq(a[1], b[1]));
            }
        }
        assert_eq!(box_product(&[s(), s()]).unwrap(), ss);
        assert_eq!(product(&[s()]).unwrap(), s());
        let sum_sp = sum(&[s(), FiniteSpace::point()]).unwrap();
        assert_eq!(
            sum_sp,
            space(3, &[&[], &[0], &[0, 1], &[2], &[0, 2], &[0, 1, 2]])
        );
        assert!(matches!(
            product(&[FiniteSpace::discrete(4), FiniteSpace::discrete(4)]),
            Err(Error::SizeCapExceeded { size: 16, .. })
        ));
    }

    #[test]
    fn mixed_radix_round_trip() {
        let sizes = [2, 3, 2];
        for p in 0..12 {
            assert_eq!(product_index(&sizes, &product_coords(&sizes, p)), p);
        }
        assert_eq!(product_coords(&sizes, 1), vec![1, 0, 0]);
    }

    #[test]
    fn weak_and_strong_topologies() {
        let w = weak_topology(2, &[(vec![0, 1], s())]).unwrap();
        assert_eq!(w, s());
        let sizes = [2, 2];
        let proj =
            |i: usize| -> Vec<usize> { (0..4).map(|p| product_coords(&sizes, p)[i]).collect() };
        let w = weak_topology(4, &[(proj(0), s()), (proj(1), s())]).unwrap();
        assert_eq!(w, product(&[s(), s()]).unwrap());
        let st = strong_topology(3, &[(s(), vec![0, 1]), (FiniteSpace::point(), vec![2])]).unwrap();
        assert_eq!(st, sum(&[s(), FiniteSpace::point()]).unwrap());
    }

    #[test]
    fn one_point_compactification_examples() {
        assert_eq!(
            one_point_compactification(&FiniteSpace::point()).unwrap(),
            FiniteSpace::discrete(2)
        );
        assert_eq!(
            one_point_compactification(&s()).unwrap(),
            space(3, &[&[], &[0], &[0, 1], &[2], &[0, 2], &[0, 1, 2]])
        );
        assert_eq!(
            one_point_compactification(&FiniteSpace::discrete(2)).unwrap(),
            FiniteSpace::discrete(3)
        );
    }

    #[test]
    fn simple_extension_examples() {
        assert_eq!(simple_extension(&s(), m(&[1])), FiniteSpace::discrete(2));
        assert_eq!(simple_extension(&s(), m(&[0])), s());
        assert_eq!(simple_extension(&FiniteSpace::indiscrete(2), m(&[0])), s());
    }

    #[test]
    fn diagonal_examples() {
        assert!(diagonal_alexandroff_closed(
            &s(),
            DiagonalRelation::Equivalence
        ));
        assert!(!diagonal_alexandroff_closed(
            &s(),
            DiagonalRelation::Preorder
        ));
        let d = FiniteSpace::discrete(2);
        assert!(diagonal_alexandroff_closed(
            &d,
            DiagonalRelation::Equivalence
        ));
        assert!(diagonal_alexandroff_closed(&d, DiagonalRelation::Preorder));
    }

    #[test]
    fn duplicate_along_examples() {
        let doubled = duplicate_along(&s(), m(&[0]), 2).unwrap();
        assert_eq!(
            doubled,
            space(3, &[&[], &[0], &[0, 1], &[0, 2], &[0, 1, 2]])
        );
        let z = space(3, &[&[], &[0], &[0, 1], &[0, 1, 2]]);
        assert_eq!(duplicate_along(&z, z.full(), 3).unwrap(), z);
        assert_eq!(
            duplicate_along(&FiniteSpace::discrete(2), m(&[0]), 3).unwrap(),
            FiniteSpace::discrete(4)
        );
        assert!(matches!(
            duplicate_along(&s(), m(&[1]), 2),
            Err(Error::NotOpen(_))
        ));
    }

    #[test]
    fn glue_rejects_bad_data() {
        let mut data = GluingData::duplicate(&s(), m(&[0]), 2);
        data.homeos[0][0] = vec![Some(1), Some(0)];
        assert!(matches!(
            glue(&data),
            Err(Error::CocycleViolation {
                clause: CocycleClause::Diagonal,
                alpha: 0,
                beta: 0,
                gamma: 0
            })
        ));
        let mut data = GluingData::duplicate(&s(), m(&[0]), 2);
        data.overlaps[0][1] = m(&[1]);
        data.overlaps[1][0] = m(&[1]);
        data.homeos[0][1] = vec![None, Some(1)];
        data.homeos[1][0] = vec![None, Some(1)];
        assert!(matches!(
            glue(&data),
            Err(Error::CocycleViolation {
                clause: CocycleClause::OverlapNotOpen,
                alpha: 0,
                beta: 1,
                ..
            })
        ));
    }

    #[test]
    fn glue_single_piece() {
        let data = GluingData::duplicate(&s(), SubsetMask::EMPTY, 1);
        let g = glue(&data).unwrap();
        assert_eq!(g.space, s());
        assert!(g.embeddings[0].is_homeomorphism());
    }
}
