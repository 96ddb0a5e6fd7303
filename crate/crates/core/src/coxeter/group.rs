use alloc::vec;
use alloc::vec::Vec;

use super::{CoxeterElement, CoxeterSystem, Generator, Side};
use crate::{Error, Result};

/// Largest group we agree to enumerate (a bit over `|S_9|`).
pub const MAX_ENUMERATED_ORDER: u128 = 1 << 19;

/// A fully enumerated finite Coxeter group with dense indices.
///
/// Elements are sorted by length, then by image list, so index order refines
/// the Bruhat order. Multiplication by generators is tabulated.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    system: CoxeterSystem,
    gens: Vec<Generator>,
    elements: Vec<CoxeterElement>,
    lengths: Vec<u32>,
    /// `index_of_rank[w.rank_index()]`.
    index_of_rank: Vec<u32>,
    /// `left[g][i]` is the index of `s_g * w_i`, with `g` the position of the
    /// generator in `gens`.
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    left_desc: Vec<u64>,
    right_desc: Vec<u64>,
    /// Start offsets of each length stratum, plus a final sentinel.
    strata: Vec<usize>,
}

impl EnumeratedGroup {
    pub fn new(system: CoxeterSystem) -> Result<Self> {
        let order = system.order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(Error::GroupTooLarge(order));
        }
        let gens = system.generators();
        let mut elements = system.elements();
        let mut keyed: Vec<(usize, CoxeterElement)> =
            elements.drain(..).map(|w| (w.length(), w)).collect();
        keyed.sort();
        let lengths: Vec<u32> = keyed.iter().map(|(l, _)| *l as u32).collect();
        let elements: Vec<CoxeterElement> = keyed.into_iter().map(|(_, w)| w).collect();

        let mut index_of_rank = vec![u32::MAX; order as usize];
        for (i, w) in elements.iter().enumerate() {
            index_of_rank[w.rank_index()] = i as u32;
        }
        let lookup = |w: &CoxeterElement| index_of_rank[w.rank_index()];

        let left: Vec<Vec<u32>> =
            gens.iter().map(|&s| elements.iter().map(|w| lookup(&w.left_mul_gen(s))).collect()).collect();
        let right: Vec<Vec<u32>> =
            gens.iter().map(|&s| elements.iter().map(|w| lookup(&w.right_mul_gen(s))).collect()).collect();
        let inverse = elements.iter().map(|w| lookup(&w.inverse())).collect();
        let left_desc = elements.iter().map(|w| w.descent_mask(Side::Left)).collect();
        let right_desc = elements.iter().map(|w| w.descent_mask(Side::Right)).collect();

        let mut strata = vec![0];
        for i in 1..lengths.len() {
            if lengths[i] != lengths[i - 1] {
                strata.push(i);
            }
        }
        strata.push(lengths.len());

        Ok(Self {
            system,
            gens,
            elements,
            lengths,
            index_of_rank,
            left,
            right,
            inverse,
            left_desc,
            right_desc,
            strata,
        })
    }

    pub fn system(&self) -> CoxeterSystem {
        self.system
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Position of generator `s` in [`Self::generators`].
    pub fn gen_slot(&self, s: Generator) -> Option<usize> {
        self.gens.iter().position(|&g| g == s)
    }

    pub fn element(&self, i: usize) -> &CoxeterElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[CoxeterElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &CoxeterElement) -> Result<usize> {
        if w.system() != self.system {
            return Err(Error::SystemMismatch);
        }
        Ok(self.index_of_rank[w.rank_index()] as usize)
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    /// Index of `s * w_i` where `slot` indexes [`Self::generators`].
    pub fn left_mul(&self, slot: usize, i: usize) -> usize {
        self.left[slot][i] as usize
    }

    pub fn right_mul(&self, slot: usize, i: usize) -> usize {
        self.right[slot][i] as usize
    }

    pub fn mul_gen(&self, slot: usize, i: usize, side: Side) -> usize {
        match side {
            Side::Left => self.left_mul(slot, i),
            Side::Right => self.right_mul(slot, i),
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Descent mask indexed by generator value (bit `s`).
    pub fn descent_mask(&self, i: usize, side: Side) -> u64 {
        match side {
            Side::Left => self.left_desc[i],
            Side::Right => self.right_desc[i],
        }
    }

    pub fn is_descent(&self, i: usize, slot: usize, side: Side) -> bool {
        self.descent_mask(i, side) >> self.gens[slot] & 1 == 1
    }

    /// Index ranges of elements of equal length, in increasing length.
    pub fn strata(&self) -> impl Iterator<Item = core::ops::Range<usize>> + '_ {
        self.strata.windows(2).map(|w| w[0]..w[1])
    }

    pub fn longest_index(&self) -> usize {
        self.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for sys in [CoxeterSystem::type_a(4).unwrap(), CoxeterSystem::type_b(3).unwrap()] {
            let g = EnumeratedGroup::new(sys).unwrap();
            assert_eq!(g.len() as u128, sys.order());
            assert!(g.element(0).is_identity());
            assert_eq!(g.element(g.longest_index()), &sys.longest_element());
            for i in 0..g.len() {
                assert_eq!(g.index_of(g.element(i)).unwrap(), i);
                assert_eq!(g.length(i), g.element(i).length());
                for slot in 0..g.generators().len() {
                    let s = g.generators()[slot];
                    assert_eq!(g.element(g.left_mul(slot, i)), &g.element(i).left_mul_gen(s));
                    assert_eq!(g.left_mul(slot, g.left_mul(slot, i)), i);
                    let shorter = g.length(g.right_mul(slot, i)) < g.length(i);
                    assert_eq!(g.is_descent(i, slot, Side::Right), shorter);
                }
            }
            let total: usize = g.strata().map(|r| r.len()).sum();
            assert_eq!(total, g.len());
        }
    }

    #[test]
    fn refuses_huge_groups() {
        assert!(matches!(
            EnumeratedGroup::new(CoxeterSystem::type_a(12).unwrap()),
            Err(Error::GroupTooLarge(_))
        ));
    }
}
