use std::cmp::Ordering;
use std::fmt;

use crate::graph::EdgeId;

const WORD: usize = 64;

/// A set of edge identifiers over a fixed universe `0..universe`.
///
/// Membership is a single bit test and iteration always yields members in
/// increasing edge-id order, so every derived ordering is reproducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    universe: usize,
    words: Vec<u64>,
}

/// How many members two subsets share, saturating at two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meet {
    Disjoint,
    One(EdgeId),
    Many,
}

impl EdgeSubset {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    /// Builds a subset from edge ids. Panics if an id is outside the universe.
    pub fn from_edges(universe: usize, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut s = Self::new(universe);
        for e in edges {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.universe && self.words[e / WORD] >> (e % WORD) & 1 == 1
    }

    /// Adds `e`; returns whether it was absent.
    #[inline]
    pub fn insert(&mut self, e: EdgeId) -> bool {
        assert!(e < self.universe, "edge {e} outside universe {}", self.universe);
        let w = &mut self.words[e / WORD];
        let bit = 1u64 << (e % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    /// Removes `e`; returns whether it was present.
    #[inline]
    pub fn remove(&mut self, e: EdgeId) -> bool {
        if e >= self.universe {
            return false;
        }
        let w = &mut self.words[e / WORD];
        let bit = 1u64 << (e % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, e: EdgeId) -> Self {
        let mut s = self.clone();
        s.insert(e);
        s
    }

    pub fn without(&self, e: EdgeId) -> Self {
        let mut s = self.clone();
        s.remove(e);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<EdgeId> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        Self {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Classifies `self ∩ other` as empty, a single edge, or larger.
    pub fn meet(&self, other: &Self) -> Meet {
        let mut found = None;
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let w = a & b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w.count_ones() > 1 {
                return Meet::Many;
            }
            found = Some(i * WORD + w.trailing_zeros() as usize);
        }
        match found {
            None => Meet::Disjoint,
            Some(e) => Meet::One(e),
        }
    }

    fn check_universe(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "edge subsets over different universes");
    }
}

impl Ord for EdgeSubset {
    /// Lexicographic on the increasing member sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for EdgeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = EdgeId;

    #[inline]
    fn next(&mut self) -> Option<EdgeId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSubset {
    type Item = EdgeId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
