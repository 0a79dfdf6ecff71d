use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of one particular poset, stored as a fixed-width
/// bit mask. Two subsets may only be combined when their widths agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        Subset { bits: FixedBitSet::with_capacity(width) }
    }

    pub fn full(width: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(width);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn singleton(width: usize, x: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(x);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, items: I) -> Self {
        let mut s = Self::empty(width);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.set(x, false);
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// The unique member of a one-element set.
    pub fn as_singleton(&self) -> Option<usize> {
        let mut it = self.bits.ones();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.check_width(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.check_width(other);
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.check_width(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Subset) {
        self.check_width(other);
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    /// Raw 64-bit blocks, lowest index in the least significant bit.
    pub(crate) fn blocks(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.as_slice().iter().map(|&b| b as u64)
    }

    #[track_caller]
    fn check_width(&self, other: &Subset) {
        assert_eq!(
            self.width(),
            other.width(),
            "subsets of posets with different element counts were combined"
        );
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
