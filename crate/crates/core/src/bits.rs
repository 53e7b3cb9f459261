//! Fixed-capacity index sets packed into a single machine word.
//!
//! Faces of a complex and matchings of a graph are both sets of small
//! integer indices. Everything at desk scale fits in 64 slots, so set algebra
//! is a handful of word operations.

use core::fmt;

use alloc::vec::Vec;

/// Number of indices a [`SmallSet`] can hold.
pub const CAPACITY: usize = 64;

/// A set of indices in `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SmallSet(u64);

impl SmallSet {
    pub const EMPTY: SmallSet = SmallSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SmallSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from indices. Panics if an index is out of capacity.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < CAPACITY, "index {i} exceeds SmallSet capacity");
            bits |= 1 << i;
        }
        SmallSet(bits)
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < CAPACITY);
        SmallSet(1 << i)
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= CAPACITY);
        if n == CAPACITY {
            SmallSet(u64::MAX)
        } else {
            SmallSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < CAPACITY && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < CAPACITY);
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < CAPACITY {
            self.0 &= !(1 << i);
        }
    }

    #[inline]
    pub const fn with(self, i: usize) -> Self {
        SmallSet(self.0 | 1 << i)
    }

    #[inline]
    pub const fn without(self, i: usize) -> Self {
        SmallSet(self.0 & !(1 << i))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        SmallSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        SmallSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        SmallSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `i` among the elements (number of smaller elements).
    #[inline]
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    /// All subsets, in increasing order of their bit pattern.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Order used for deterministic face listings: by size, then
    /// lexicographically on the increasing element sequence.
    pub fn cmp_graded(&self, other: &Self) -> core::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for SmallSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SmallSet::from_indices(iter)
    }
}

impl IntoIterator for SmallSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset enumeration by the carry-rippling trick.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = SmallSet;

    fn next(&mut self) -> Option<SmallSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(SmallSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = SmallSet::from_indices([1, 4, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(SmallSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn graded_order() {
        let a = SmallSet::from_indices([5]);
        let b = SmallSet::from_indices([0, 9]);
        let c = SmallSet::from_indices([1, 2]);
        assert!(a.cmp_graded(&b).is_lt());
        assert!(b.cmp_graded(&c).is_lt());
    }

    #[test]
    fn min_max_rank() {
        let s = SmallSet::from_indices([3, 10, 63]);
        assert_eq!(s.min(), Some(3));
        assert_eq!(s.max(), Some(63));
        assert_eq!(s.rank_of(10), 1);
        assert_eq!(SmallSet::range(64).len(), 64);
    }
}
