use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of `{1, ..., 64}` stored as a bit mask (bit `i - 1` for member `i`).
///
/// Used as a vector skeleton, as the key of a partition class `V_I`, and as
/// the "atoms below" signature of a poset element.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const MAX_MEMBER: usize = 64;

    pub const fn empty() -> Self {
        IndexSet(0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_MEMBER);
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        members.into_iter().fold(IndexSet(0), |s, i| s.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=Self::MAX_MEMBER).contains(&i), "index {i} out of range");
        IndexSet(self.0 | 1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=Self::MAX_MEMBER).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        IndexSet(!self.0 & Self::full(n).0)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    /// All `2^n` subsets of `{1, ..., n}` in increasing bit-mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = IndexSet> {
        assert!(n < 64);
        (0..1u64 << n).map(IndexSet)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
