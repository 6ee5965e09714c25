//! Small index sets backed by a 64-bit mask.
//!
//! Everything in this crate that enumerates subsets (upsets, filters, covers)
//! works over index sets bounded by [`ElemSet::CAPACITY`]. The owning
//! structure (poset, lattice, space) decides what the indices mean.

use std::fmt;

/// A subset of `{0, .., 63}`, stored as a bitmask. Bit `i` set means `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    /// Largest universe an `ElemSet` can index into.
    pub const CAPACITY: usize = 64;

    pub const EMPTY: ElemSet = ElemSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> ElemSet {
        debug_assert!(i < Self::CAPACITY);
        ElemSet(1u64 << i)
    }

    pub fn from_bits(bits: u64) -> ElemSet {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 & (1u64 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> ElemSet {
        debug_assert!(i < Self::CAPACITY);
        ElemSet(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> ElemSet {
        ElemSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn inter(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn diff(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    /// Complement relative to the universe `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> ElemSet {
        Self::full(n).diff(self)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s = s.with(i);
        }
        s
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: ElemSet = [0, 2, 5].into_iter().collect();
        assert!(s.contains(0) && s.contains(2) && s.contains(5));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(format!("{s}"), "{0,2,5}");
    }

    #[test]
    fn algebra() {
        let a: ElemSet = [0, 1].into_iter().collect();
        let b: ElemSet = [1, 2].into_iter().collect();
        assert_eq!(a.union(b), [0, 1, 2].into_iter().collect());
        assert_eq!(a.inter(b), ElemSet::singleton(1));
        assert_eq!(a.diff(b), ElemSet::singleton(0));
        assert_eq!(a.complement(3), ElemSet::singleton(2));
        assert!(a.inter(b).is_subset(a));
        assert_eq!(ElemSet::full(3).len(), 3);
        assert_eq!(ElemSet::full(64).len(), 64);
    }
}
