//! Word-sized subsets of a poset carrier.

use std::fmt;

/// Largest carrier a [`Subset`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices, stored as a 64-bit mask.
///
/// Iteration is always in ascending index order, so anything rendered from a
/// `Subset` is reproducible.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_ELEMENTS);
        Subset(1u64 << x)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_ELEMENTS && self.0 & (1u64 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The unique member of a one-element set.
    pub fn as_singleton(self) -> Option<usize> {
        (self.0.count_ones() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`Subset`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_ascending() {
        let s: Subset = [5, 1, 3, 1].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn full_and_singleton() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::singleton(7).as_singleton(), Some(7));
        assert_eq!(Subset::full(2).as_singleton(), None);
        assert_eq!(Subset::EMPTY.as_singleton(), None);
    }
}
