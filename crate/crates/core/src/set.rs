//! Subsets of a finite carrier as 64-bit masks.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not, Sub};

/// Largest carrier a mask can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of `{0, .., n-1}` for some carrier of `n <= 64` points.
///
/// Bit `i` is set iff element `i` is a member. The carrier size is not
/// stored; operations that need it (complement, fullness) take it as an
/// argument.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        ElementSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    #[inline]
    #[must_use]
    pub const fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u64 << i))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_superset(self, other: ElementSet) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub const fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to a carrier of `n` points.
    #[inline]
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & ElementSet::full(n).0)
    }

    /// Whether every member is `< n`.
    #[inline]
    pub const fn within(self, n: usize) -> bool {
        self.is_subset(ElementSet::full(n))
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including `∅` and `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Image of this set under `map` (element `i` goes to `map[i]`).
    pub fn image(self, map: &[usize]) -> ElementSet {
        self.iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.with(map[i]))
    }

    /// Preimage of this set under `map`.
    pub fn preimage(self, map: &[usize]) -> ElementSet {
        map.iter()
            .enumerate()
            .filter(|&(_, &y)| self.contains(y))
            .fold(ElementSet::EMPTY, |acc, (x, _)| acc.with(x))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; prefer [`ElementSet::complement`].
impl Not for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Members of an [`ElementSet`] in ascending order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
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

impl ExactSizeIterator for Members {}

/// Submasks of a mask in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // next submask in increasing order: ((cur | !mask) + 1) & mask
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// All `k`-element subsets of `within`, in increasing mask order.
pub fn k_subsets(within: ElementSet, k: usize) -> impl Iterator<Item = ElementSet> {
    within.subsets().filter(move |s| s.len() == k)
}
