//! Subsets of a finite point set, stored as bit masks.

use std::fmt;

use serde::{Deserialize, Serialize};
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

/// Largest point count a [`SubsetMask`] can address.
pub const MASK_BITS: usize = 32;

/// Characteristic vector of a subset of `0..n`.
///
/// The mask does not know `n`; operations that need the universe
/// (complement, iteration bounds) take it explicitly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MASK_BITS);
        if n == MASK_BITS {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(x: usize) -> Self {
        SubsetMask(1u32 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, p| m | SubsetMask::singleton(p))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    #[inline]
    pub fn with(self, x: usize) -> Self {
        SubsetMask(self.0 | 1 << x)
    }

    #[inline]
    pub fn without(self, x: usize) -> Self {
        SubsetMask(self.0 & !(1 << x))
    }

    /// True when no bit at or above `n` is set.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(SubsetMask::full(n))
    }

    /// Lowest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `0..n` in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        debug_assert!(n < MASK_BITS);
        (0..1u32 << n).map(SubsetMask)
    }

    /// All subsets of `self` (carry-rippler order, starting with the empty set).
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitOrAssign for SubsetMask {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitAndAssign for SubsetMask {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl Sub for SubsetMask {
    type Output = SubsetMask;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_points(iter)
    }
}

/// Iterator over the members of a mask, ascending.
#[derive(Clone, Debug)]
pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

/// Iterator over all subsets of a mask.
#[derive(Clone, Debug)]
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(SubsetMask(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn subsets_of_sparse_mask() {
        let got: Vec<u32> = SubsetMask(0b1010).subsets().map(|m| m.0).collect();
        assert_eq!(got, vec![0, 0b0010, 0b1000, 0b1010]);
        assert_eq!(SubsetMask::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn points_iterate_ascending() {
        let m = SubsetMask::from_points([5, 0, 3]);
        assert_eq!(m.to_vec(), vec![0, 3, 5]);
        assert_eq!(m.len(), 3);
        assert_eq!(m.first(), Some(0));
    }

    proptest! {
        #[test]
        fn boolean_algebra_laws(a in 0u32..256, b in 0u32..256) {
            let (a, b) = (SubsetMask(a), SubsetMask(b));
            let n = 8;
            prop_assert_eq!(a.complement(n).complement(n), a);
            prop_assert_eq!((a | b).complement(n), a.complement(n) & b.complement(n));
            prop_assert_eq!(a | a, a);
            prop_assert_eq!(a & a, a);
            prop_assert_eq!(a - b, a & b.complement(n));
            prop_assert!(a.fits(n));
        }
    }
}
