//! A growable bitset of vertex indices.

use std::fmt;

use crate::graph::VertexId;

const WORD: usize = 64;

/// Set of vertices stored as a bitset over dense indices.
///
/// Trailing zero words are trimmed so that equality, ordering and hashing
/// only depend on the members.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::new();
        for i in 0..n {
            set.insert(VertexId::new(i));
        }
        set
    }

    /// Set whose members are the one bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut set = Self { words: vec![mask] };
        set.trim();
        set
    }

    /// The members as a bit mask. Panics if a member is at index 64 or above.
    pub fn to_mask(&self) -> u64 {
        assert!(
            self.words.len() <= 1,
            "vertex set does not fit in a 64-bit mask"
        );
        self.words.first().copied().unwrap_or(0)
    }

    pub fn singleton(v: VertexId) -> Self {
        let mut set = Self::new();
        set.insert(v);
        set
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, v: VertexId) -> bool {
        let (w, b) = (v.index() / WORD, v.index() % WORD);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<VertexId> {
        let last = self.words.len().checked_sub(1)?;
        let word = self.words[last];
        Some(VertexId::new(last * WORD + (WORD - 1 - word.leading_zeros() as usize)))
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| self.word(i) | other.word(i))
            .collect::<Vec<_>>();
        let mut set = Self { words };
        set.trim();
        set
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let len = self.words.len().min(other.words.len());
        let mut set = Self {
            words: (0..len).map(|i| self.word(i) & other.word(i)).collect(),
        };
        set.trim();
        set
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut set = Self {
            words: (0..self.words.len())
                .map(|i| self.word(i) & !other.word(i))
                .collect(),
        };
        set.trim();
        set
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// All subsets, in order of the bit masks over the members.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSet> {
        let members: Vec<VertexId> = self.iter().collect();
        assert!(members.len() < 64, "too many members to enumerate subsets");
        (0..1u64 << members.len()).map(move |mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = Self::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.index())).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(VertexId::new(self.word * WORD + b));
            }
            self.word += 1;
            self.bits = *self.words.get(self.word)?;
        }
    }
}
