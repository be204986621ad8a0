//! Bitmask vertex sets over the ground set `[r] = {1, ..., r}`.
//!
//! Vertex `v` lives in bit `v - 1`. Ordering is the canonical order used
//! throughout the crate: by cardinality first, then lexicographically on the
//! ascending element sequence.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set the bitmask representation accepts.
pub const MAX_VERTICES: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., r}`.
    pub fn full(r: usize) -> Self {
        debug_assert!(r <= MAX_VERTICES);
        if r == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - r))
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v >= 1 && v <= MAX_VERTICES);
        VertexSet(1 << (v - 1))
    }

    /// Builds a set from 1-based vertices, rejecting repeats and vertices outside `[r]`.
    pub fn try_from_vertices(vertices: &[usize], r: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &v in vertices {
            if v == 0 || v > r {
                return Err(Error::VertexOutOfRange { vertex: v, r });
            }
            let b = 1u32 << (v - 1);
            if bits & b != 0 {
                return Err(Error::RepeatedVertex {
                    set: vertices.to_vec(),
                    vertex: v,
                });
            }
            bits |= b;
        }
        Ok(VertexSet(bits))
    }

    /// Unchecked construction for literals in code and tests.
    pub fn of(vertices: &[usize]) -> Self {
        vertices
            .iter()
            .fold(VertexSet::EMPTY, |acc, &v| acc.with(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 32 && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `[r]`.
    pub fn complement(self, r: usize) -> Self {
        VertexSet::full(r).difference(self)
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    /// Ascending 1-based vertices.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing bit order (starting at the empty set).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }

    /// Relabels vertex `v` as `perm[v - 1] + 1` (0-based permutation of `[r]`).
    pub fn permute(self, perm: &[usize]) -> Self {
        self.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(perm[v - 1] + 1))
    }
}

pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Keeps the inclusion-maximal sets, canonically sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let keep: Vec<VertexSet> = sets
        .iter()
        .enumerate()
        .filter(|&(i, s)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, t)| i != j && s.is_subset(*t))
        })
        .map(|(_, s)| *s)
        .collect();
    keep
}

/// Keeps the inclusion-minimal sets, canonically sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    sets.iter()
        .enumerate()
        .filter(|&(i, s)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, t)| i != j && t.is_subset(*s))
        })
        .map(|(_, s)| *s)
        .collect()
}

/// Returns the first comparable pair `(smaller, larger)` if `sets` is not an antichain.
pub fn antichain_violation(sets: &[VertexSet]) -> Option<(VertexSet, VertexSet)> {
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a.is_subset(*b) {
                return Some((*a, *b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = vec![
            VertexSet::of(&[2, 3]),
            VertexSet::of(&[3]),
            VertexSet::of(&[1, 3]),
            VertexSet::EMPTY,
            VertexSet::of(&[1, 2]),
        ];
        v.sort();
        let got: Vec<Vec<usize>> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![], vec![3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VertexSet::of(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn try_from_rejects_bad_vertices() {
        assert!(matches!(
            VertexSet::try_from_vertices(&[1, 4], 3),
            Err(Error::VertexOutOfRange { vertex: 4, r: 3 })
        ));
        assert!(matches!(
            VertexSet::try_from_vertices(&[2, 2], 3),
            Err(Error::RepeatedVertex { .. })
        ));
    }

    #[test]
    fn maximal_and_minimal() {
        let fam = vec![
            VertexSet::of(&[1]),
            VertexSet::of(&[1, 2]),
            VertexSet::of(&[3]),
            VertexSet::of(&[1, 2]),
        ];
        assert_eq!(
            maximal_sets(fam.clone()),
            vec![VertexSet::of(&[3]), VertexSet::of(&[1, 2])]
        );
        assert_eq!(
            minimal_sets(fam),
            vec![VertexSet::of(&[1]), VertexSet::of(&[3])]
        );
    }
}
