use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

/// A subset of the vertices `0..universe` backed by a fixed-width bit vector.
///
/// Sets up to 256 vertices live inline. All binary operations expect both
/// operands to share the same universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; 4]>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: smallvec![0; universe.div_ceil(WORD)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert(v);
        s
    }

    /// Builds a set from vertex ids. Panics if an id is outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Like [`VertexSet::from_vertices`] but reports the first out-of-range id.
    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(
        universe: usize,
        vertices: I,
    ) -> Result<Self, usize> {
        let mut s = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(v);
            }
            s.insert(v);
        }
        Ok(s)
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Smallest member of `self ∩ other`.
    pub fn first_common(&self, other: &Self) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & *b != 0)
            .map(|(i, (a, b))| i * WORD + (a & b).trailing_zeros() as usize)
    }

    /// Copy of this set re-expressed over a different universe size.
    /// Members at or above the new size are dropped.
    pub fn resized(&self, universe: usize) -> Self {
        VertexSet::from_vertices(universe, self.iter().filter(|&v| v < universe))
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other).then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

macro_rules! set_op {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident, $op:expr) => {
        impl $assign<&VertexSet> for VertexSet {
            #[inline]
            fn $assign_method(&mut self, rhs: &VertexSet) {
                debug_assert_eq!(self.universe, rhs.universe);
                for (a, b) in self.words.iter_mut().zip(&rhs.words) {
                    *a = $op(*a, *b);
                }
            }
        }

        impl $trait<&VertexSet> for &VertexSet {
            type Output = VertexSet;

            #[inline]
            fn $method(self, rhs: &VertexSet) -> VertexSet {
                let mut out = self.clone();
                out.$assign_method(rhs);
                out
            }
        }

        impl $trait<&VertexSet> for VertexSet {
            type Output = VertexSet;

            #[inline]
            fn $method(mut self, rhs: &VertexSet) -> VertexSet {
                self.$assign_method(rhs);
                self
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a: u64, b: u64| a | b);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a: u64, b: u64| a & b);
set_op!(Sub, sub, SubAssign, sub_assign, |a: u64, b: u64| a & !b);

// Serialized as the ascending id list; the universe is supplied by context.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Plain id list used when reading sets whose universe is only known later.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdList(pub Vec<usize>);
