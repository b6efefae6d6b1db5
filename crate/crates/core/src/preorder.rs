//! Reflexive-transitive relations on `0..n` and their saturation operators.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// A preorder `≤` on `0..n`, stored as up-set rows (`up[x] = {y : x ≤ y}`)
/// together with the transposed down-set rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Preorder {
    n: usize,
    up: Vec<SubsetMask>,
    down: Vec<SubsetMask>,
}

fn transpose(n: usize, rows: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut cols = vec![SubsetMask::EMPTY; n];
    for (x, row) in rows.iter().enumerate() {
        for y in row.iter() {
            cols[y] = cols[y].with(x);
        }
    }
    cols
}

impl Preorder {
    /// Builds a preorder from up-set rows, validating reflexivity and transitivity.
    pub fn from_up_rows(n: usize, up: Vec<SubsetMask>) -> Result<Self> {
        if up.len() != n {
            return Err(Error::InvalidMap(format!(
                "expected {n} rows, got {}",
                up.len()
            )));
        }
        for (x, row) in up.iter().enumerate() {
            if !row.fits(n) {
                return Err(Error::MaskOutOfRange { mask: *row, n });
            }
            if !row.contains(x) {
                return Err(Error::NotAPreorder(x, x, "reflexivity"));
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if !up[y].is_subset(up[x]) {
                    let z = (up[y] - up[x]).first().unwrap();
                    return Err(Error::NotAPreorder(x, z, "transitivity"));
                }
            }
        }
        Ok(Self::from_up_rows_unchecked(n, up))
    }

    pub(crate) fn from_up_rows_unchecked(n: usize, up: Vec<SubsetMask>) -> Self {
        let down = transpose(n, &up);
        Preorder { n, up, down }
    }

    /// Builds a preorder from a boolean matrix, `rel[x][y]` meaning `x ≤ y`.
    pub fn from_matrix(rel: &[Vec<bool>]) -> Result<Self> {
        let n = rel.len();
        Self::from_up_rows(n, matrix_rows(rel)?)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_up_rows_unchecked(n, (0..n).map(SubsetMask::singleton).collect())
    }

    /// The relation in which every pair is related.
    pub fn full(n: usize) -> Self {
        Self::from_up_rows_unchecked(n, vec![SubsetMask::full(n); n])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `{y : x ≤ y}`.
    #[inline]
    pub fn up_of(&self, x: usize) -> SubsetMask {
        self.up[x]
    }

    /// `{y : y ≤ x}`.
    #[inline]
    pub fn down_of(&self, x: usize) -> SubsetMask {
        self.down[x]
    }

    pub fn up_rows(&self) -> &[SubsetMask] {
        &self.up
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// `R[A]`: the up-closure of `a`.
    pub fn saturate(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(SubsetMask::EMPTY, |acc, x| acc | self.up[x])
    }

    /// `R⁻¹[A]`: the down-closure of `a`.
    pub fn co_saturate(&self, a: SubsetMask) -> SubsetMask {
        a.iter()
            .fold(SubsetMask::EMPTY, |acc, x| acc | self.down[x])
    }

    /// Largest up-set contained in `a`, computed as `X ∖ R⁻¹[X ∖ A]`.
    pub fn saturated_interior(&self, a: SubsetMask) -> SubsetMask {
        self.co_saturate(a.complement(self.n)).complement(self.n)
    }

    pub fn is_up_set(&self, a: SubsetMask) -> bool {
        self.saturate(a) == a
    }

    pub fn is_down_set(&self, a: SubsetMask) -> bool {
        self.co_saturate(a) == a
    }

    /// `Σ(R)`: every up-set, ascending by mask.
    pub fn up_sets(&self) -> Vec<SubsetMask> {
        SubsetMask::all(self.n)
            .filter(|&a| self.is_up_set(a))
            .collect()
    }

    pub fn inverse(&self) -> Preorder {
        Preorder {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// The induced equivalence `R ∩ R⁻¹`.
    pub fn equivalence(&self) -> Preorder {
        let rows = (0..self.n).map(|x| self.up[x] & self.down[x]).collect();
        Preorder::from_up_rows_unchecked(self.n, rows)
    }

    /// Class of `x` under the induced equivalence.
    pub fn class_of(&self, x: usize) -> SubsetMask {
        self.up[x] & self.down[x]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| self.class_of(x) == SubsetMask::singleton(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.up == self.down
    }

    /// Minimal elements in the sense `y ≤ x ⟹ x ≤ y`.
    pub fn is_minimal(&self, x: usize) -> bool {
        self.down[x].is_subset(self.up[x])
    }

    /// Relabels points: point `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Preorder {
        let mut up = vec![SubsetMask::EMPTY; self.n];
        for x in 0..self.n {
            up[perm[x]] = self.up[x].iter().map(|y| perm[y]).collect();
        }
        Preorder::from_up_rows_unchecked(self.n, up)
    }
}

fn matrix_rows(rel: &[Vec<bool>]) -> Result<Vec<SubsetMask>> {
    let n = rel.len();
    rel.iter()
        .map(|row| {
            if row.len() != n {
                return Err(Error::InvalidMap(format!(
                    "relation row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
            Ok(row
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(y, _)| y)
                .collect())
        })
        .collect()
}

/// Smallest preorder containing `rel` (reflexive-transitive closure, Warshall).
pub fn transitive_reflexive_closure(rel: &[Vec<bool>]) -> Result<Preorder> {
    let n = rel.len();
    let mut rows = matrix_rows(rel)?;
    for (x, row) in rows.iter_mut().enumerate() {
        *row = row.with(x);
    }
    for k in 0..n {
        for x in 0..n {
            if rows[x].contains(k) {
                let via = rows[k];
                rows[x] |= via;
            }
        }
    }
    Ok(Preorder::from_up_rows_unchecked(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_1_below_0() -> Preorder {
        // 1 ≤ 0
        Preorder::from_matrix(&[vec![true, false], vec![true, true]]).unwrap()
    }

    /// `R̂ = ∪ Rᵏ`, computed by iterating boolean matrix products to a fixpoint.
    fn closure_by_matrix_powers(rel: &[Vec<bool>]) -> Vec<Vec<bool>> {
        let n = rel.len();
        let mut acc: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect();
        let mut power = acc.clone();
        loop {
            let next: Vec<Vec<bool>> = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|z| (0..n).any(|y| power[x][y] && rel[y][z]))
                        .collect()
                })
                .collect();
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    if next[x][y] && !acc[x][y] {
                        acc[x][y] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return acc;
            }
            power = next;
        }
    }

    #[test]
    fn saturation_on_the_two_chain() {
        let p = chain_1_below_0();
        assert_eq!(p.saturate(SubsetMask::singleton(1)), SubsetMask::full(2));
        assert_eq!(
            p.saturate(SubsetMask::singleton(0)),
            SubsetMask::singleton(0)
        );
        assert_eq!(
            p.saturated_interior(SubsetMask::singleton(0)),
            SubsetMask::singleton(0)
        );
        assert_eq!(
            p.saturated_interior(SubsetMask::singleton(1)),
            SubsetMask::EMPTY
        );
        assert_eq!(
            p.up_sets(),
            vec![SubsetMask(0), SubsetMask(1), SubsetMask(3)]
        );
    }

    #[test]
    fn identity_preorder_fixes_everything() {
        let p = Preorder::identity(3);
        for a in SubsetMask::all(3) {
            assert_eq!(p.saturate(a), a);
            assert_eq!(p.co_saturate(a), a);
            assert_eq!(p.saturated_interior(a), a);
        }
    }

    #[test]
    fn closure_of_empty_relation_is_identity() {
        let rel = vec![vec![false; 3]; 3];
        assert_eq!(
            transitive_reflexive_closure(&rel).unwrap(),
            Preorder::identity(3)
        );
    }

    #[test]
    fn closure_adds_composite_pair() {
        let mut rel = vec![vec![false; 3]; 3];
        rel[0][1] = true;
        rel[1][2] = true;
        let got = transitive_reflexive_closure(&rel).unwrap();
        assert_eq!(got.to_matrix(), closure_by_matrix_powers(&rel));
        assert!(got.leq(0, 2));
        assert!(!got.leq(2, 0));
    }

    #[test]
    fn closure_matches_matrix_powers_on_all_3_point_relations() {
        for bits in 0u32..1 << 9 {
            let rel: Vec<Vec<bool>> = (0..3)
                .map(|x| (0..3).map(|y| bits >> (3 * x + y) & 1 == 1).collect())
                .collect();
            let got = transitive_reflexive_closure(&rel).unwrap();
            assert_eq!(got.to_matrix(), closure_by_matrix_powers(&rel));
            // idempotent
            let again = transitive_reflexive_closure(&got.to_matrix()).unwrap();
            assert_eq!(again, got);
        }
    }

    #[test]
    fn rejects_non_preorders() {
        let not_reflexive = [vec![false, false], vec![false, true]];
        assert!(matches!(
            Preorder::from_matrix(&not_reflexive),
            Err(Error::NotAPreorder(0, 0, "reflexivity"))
        ));
        let not_transitive = [
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            Preorder::from_matrix(&not_transitive),
            Err(Error::NotAPreorder(0, 2, "transitivity"))
        ));
    }
}
