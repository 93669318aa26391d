//! Lower and upper approximations with respect to a partition of the universe.

use crate::error::{Error, Result};
use crate::subsets::{check_universe, SubsetMask, MAX_UNIVERSE};

/// Equivalence classes of a relation on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe_size: usize,
    blocks: Vec<SubsetMask>,
}

impl Partition {
    /// Blocks must be nonempty, pairwise disjoint and cover the universe.
    pub fn new(universe_size: usize, blocks: Vec<SubsetMask>) -> Result<Self> {
        check_universe(universe_size, MAX_UNIVERSE)?;
        let mut covered = SubsetMask::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.check_fits(universe_size)?;
            if b.intersects(covered) {
                return Err(Error::InvalidPartition(format!("block {b} overlaps another block")));
            }
            covered = covered | *b;
        }
        let full = SubsetMask::full(universe_size);
        if covered != full {
            return Err(Error::InvalidPartition(format!("{} not covered", full - covered)));
        }
        Ok(Partition {
            universe_size,
            blocks,
        })
    }

    /// Every element in its own block.
    pub fn discrete(universe_size: usize) -> Result<Self> {
        Self::new(universe_size, (0..universe_size).map(SubsetMask::singleton).collect())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    /// The block holding element `e`.
    pub fn class_of(&self, e: usize) -> SubsetMask {
        self.blocks
            .iter()
            .copied()
            .find(|b| b.contains(e))
            .expect("blocks cover the universe")
    }

    /// Union of the blocks inside `set`.
    pub fn lower_approx(&self, set: SubsetMask) -> SubsetMask {
        self.blocks
            .iter()
            .filter(|b| b.is_subset_of(set))
            .fold(SubsetMask::EMPTY, |acc, b| acc | *b)
    }

    /// Union of the blocks meeting `set`.
    pub fn upper_approx(&self, set: SubsetMask) -> SubsetMask {
        self.blocks
            .iter()
            .filter(|b| b.intersects(set))
            .fold(SubsetMask::EMPTY, |acc, b| acc | *b)
    }
}
