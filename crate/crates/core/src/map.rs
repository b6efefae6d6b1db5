//! Total functions between finite spaces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::space::FiniteSpace;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpaceMap {
    dom: FiniteSpace,
    cod: FiniteSpace,
    table: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct MapPredicates {
    pub continuous: bool,
    pub open: bool,
    pub closed: bool,
    pub homeomorphism: bool,
}

impl SpaceMap {
    pub fn new(dom: FiniteSpace, cod: FiniteSpace, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.n() {
            return Err(Error::InvalidMap(format!(
                "table has {} entries for a {}-point domain",
                table.len(),
                dom.n()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= cod.n()) {
            return Err(Error::InvalidMap(format!(
                "value {v} outside a {}-point codomain",
                cod.n()
            )));
        }
        Ok(SpaceMap { dom, cod, table })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap {
            dom: space.clone(),
            cod: space.clone(),
            table: space.points().collect(),
        }
    }

    pub fn constant(dom: &FiniteSpace, cod: &FiniteSpace, value: usize) -> Result<Self> {
        Self::new(dom.clone(), cod.clone(), vec![value; dom.n()])
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        a.iter().map(|x| self.table[x]).collect()
    }

    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        self.dom
            .points()
            .filter(|&x| b.contains(self.table[x]))
            .collect()
    }

    /// Preimage of every open set is open.
    pub fn is_continuous(&self) -> bool {
        self.cod
            .opens()
            .iter()
            .all(|&v| self.dom.is_open(self.preimage(v)))
    }

    /// The first open set whose preimage fails to be open.
    pub fn continuity_witness(&self) -> Option<SubsetMask> {
        self.cod
            .opens()
            .iter()
            .copied()
            .find(|&v| !self.dom.is_open(self.preimage(v)))
    }

    /// Monotone between the specialization preorders.
    pub fn is_monotone(&self) -> bool {
        self.dom.points().all(|x| {
            self.dom
                .min_nbhd(x)
                .iter()
                .all(|y| self.cod.specializes(self.table[x], self.table[y]))
        })
    }

    pub fn is_open_map(&self) -> bool {
        self.dom
            .opens()
            .iter()
            .all(|&u| self.cod.is_open(self.image(u)))
    }

    pub fn is_closed_map(&self) -> bool {
        self.dom
            .closed_sets()
            .into_iter()
            .all(|f| self.cod.is_closed(self.image(f)))
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.dom.full()).len() == self.dom.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.dom.full()) == self.cod.full()
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.n() == self.cod.n() && self.is_injective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<SpaceMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.cod.n()];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        Some(SpaceMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table: inv,
        })
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_continuous()
            && self
                .inverse()
                .map(|inv| inv.is_continuous())
                .unwrap_or(false)
    }

    pub fn predicates(&self) -> MapPredicates {
        MapPredicates {
            continuous: self.is_continuous(),
            open: self.is_open_map(),
            closed: self.is_closed_map(),
            homeomorphism: self.is_homeomorphism(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SpaceMap) -> Result<SpaceMap> {
        if self.cod != next.dom {
            return Err(Error::InvalidMap(
                "composition: codomain and domain differ".into(),
            ));
        }
        Ok(SpaceMap {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            table: self.table.iter().map(|&y| next.table[y]).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let p = SpaceMap::identity(&s).predicates();
        assert_eq!(
            p,
            MapPredicates {
                continuous: true,
                open: true,
                closed: true,
                homeomorphism: true
            }
        );
    }

    #[test]
    fn constant_maps_on_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let to_one = SpaceMap::constant(&s, &s, 1).unwrap().predicates();
        assert!(to_one.continuous);
        assert!(!to_one.open);
        assert!(to_one.closed);
        assert!(!to_one.homeomorphism);
        let to_zero = SpaceMap::constant(&s, &s, 0).unwrap().predicates();
        assert!(to_zero.continuous && to_zero.open && !to_zero.closed);
    }

    #[test]
    fn swap_on_sierpinski_is_discontinuous() {
        let s = FiniteSpace::sierpinski();
        let swap = SpaceMap::new(s.clone(), s, vec![1, 0]).unwrap();
        assert!(!swap.is_continuous());
        assert_eq!(swap.continuity_witness(), Some(SubsetMask::singleton(0)));
        assert!(!swap.is_monotone());
    }

    #[test]
    fn rejects_bad_tables() {
        let s = FiniteSpace::sierpinski();
        assert!(SpaceMap::new(s.clone(), s.clone(), vec![0]).is_err());
        assert!(SpaceMap::new(s.clone(), s, vec![0, 2]).is_err());
    }

    #[test]
    fn continuity_equals_monotonicity_for_small_spaces() {
        let spaces = [
            FiniteSpace::point(),
            FiniteSpace::sierpinski(),
            FiniteSpace::discrete(2),
            FiniteSpace::indiscrete(2),
            FiniteSpace::indiscrete(3),
        ];
        for x in &spaces {
            for y in &spaces {
                let total = y.n().pow(x.n() as u32);
                for code in 0..total {
                    let mut c = code;
                    let table = (0..x.n())
                        .map(|_| {
                            let v = c % y.n();
                            c /= y.n();
                            v
                        })
                        .collect();
                    let f = SpaceMap::new(x.clone(), y.clone(), table).unwrap();
                    assert_eq!(f.is_continuous(), f.is_monotone());
                }
            }
        }
    }
}
