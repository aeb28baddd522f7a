//! Permutations of `{1..n}` in one-line notation.
//!
//! A [`Permutation`] is a packed, `Copy` value holding up to [`MAX_LEN`]
//! entries at four bits each. Position 0 sits in the most significant
//! nibble, so for two permutations of the same length the packed integer
//! order coincides with lexicographic order, and therefore with [`Rank`]
//! order.

mod involution;
mod rank;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use involution::{involution_word, word_to_involution};
pub use rank::{factorial, Rank};
pub(crate) use rank::{next_permutation, rank_of_word, unrank_word};

/// Largest length the packed representation can hold.
pub const MAX_LEN: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    packed: u64,
    len: u8,
}

#[inline]
fn shift(pos: usize) -> u32 {
    60 - 4 * pos as u32
}

impl Permutation {
    /// Builds a permutation from its one-line values `1..=n`.
    pub fn new(values: &[u8]) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > MAX_LEN {
            return Err(Error::NotAPermutation(format!(
                "length {n} outside 1..={MAX_LEN}"
            )));
        }
        let mut seen = 0u32;
        for &v in values {
            if v == 0 || v as usize > n || seen & (1 << (v - 1)) != 0 {
                return Err(Error::NotAPermutation(format!("{values:?}")));
            }
            seen |= 1 << (v - 1);
        }
        let mut packed = 0u64;
        for (i, &v) in values.iter().enumerate() {
            packed |= ((v - 1) as u64) << shift(i);
        }
        Ok(Permutation { packed, len: n as u8 })
    }

    /// Builds from a zero-based word. The caller guarantees it is a bijection.
    pub(crate) fn from_zero_based(word: &[u8]) -> Self {
        debug_assert!(!word.is_empty() && word.len() <= MAX_LEN);
        let mut packed = 0u64;
        for (i, &v) in word.iter().enumerate() {
            debug_assert!((v as usize) < word.len());
            packed |= (v as u64) << shift(i);
        }
        Permutation { packed, len: word.len() as u8 }
    }

    /// The identity `12…n`.
    ///
    /// Panics unless `1 <= n <= MAX_LEN`.
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_LEN).contains(&n), "length {n} outside 1..={MAX_LEN}");
        let word: Vec<u8> = (0..n as u8).collect();
        Self::from_zero_based(&word)
    }

    /// The reverse word `n(n-1)…1`.
    ///
    /// Panics unless `1 <= n <= MAX_LEN`.
    pub fn reverse_identity(n: usize) -> Self {
        assert!((1..=MAX_LEN).contains(&n), "length {n} outside 1..={MAX_LEN}");
        let word: Vec<u8> = (0..n as u8).rev().collect();
        Self::from_zero_based(&word)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.len as usize
    }

    /// Zero-based value at a zero-based position.
    #[inline]
    pub(crate) fn raw(&self, pos: usize) -> u8 {
        ((self.packed >> shift(pos)) & 0xf) as u8
    }

    /// One-based value at a zero-based position.
    #[inline]
    pub fn value_at(&self, pos: usize) -> u8 {
        assert!(pos < self.n());
        self.raw(pos) + 1
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.n()).map(move |i| self.raw(i) + 1)
    }

    pub fn values(&self) -> Vec<u8> {
        self.iter().collect()
    }

    pub(crate) fn write_zero_based(&self, out: &mut [u8]) {
        for (i, slot) in out.iter_mut().enumerate().take(self.n()) {
            *slot = self.raw(i);
        }
    }

    pub(crate) fn zero_based(&self) -> Vec<u8> {
        (0..self.n()).map(|i| self.raw(i)).collect()
    }

    /// Zero-based position holding the one-based value `value`.
    pub fn position_of(&self, value: u8) -> usize {
        (0..self.n())
            .find(|&i| self.raw(i) + 1 == value)
            .expect("value out of range")
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|i| self.raw(i) as usize == i)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut word = [0u8; MAX_LEN];
        for i in 0..n {
            word[self.raw(i) as usize] = i as u8;
        }
        Self::from_zero_based(&word[..n])
    }

    pub fn reverse(&self) -> Self {
        let n = self.n();
        let word: Vec<u8> = (0..n).rev().map(|i| self.raw(i)).collect();
        Self::from_zero_based(&word)
    }

    /// Maps each value `v` to `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.n() as u8;
        let word: Vec<u8> = (0..self.n()).map(|i| n - 1 - self.raw(i)).collect();
        Self::from_zero_based(&word)
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::InvalidArgument(format!(
                "cannot compose lengths {} and {}",
                self.n(),
                other.n()
            )));
        }
        let word: Vec<u8> = (0..self.n())
            .map(|i| self.raw(other.raw(i) as usize))
            .collect();
        Ok(Self::from_zero_based(&word))
    }

    pub fn is_involution(&self) -> bool {
        (0..self.n()).all(|i| self.raw(self.raw(i) as usize) as usize == i)
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.raw(i) > self.raw(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lexicographic (Lehmer code) rank; the identity has rank 0.
    pub fn rank(&self) -> Rank {
        Rank {
            index: rank_of_word(&self.zero_based()),
            n: self.n(),
        }
    }

    pub fn unrank(rank: Rank) -> Result<Self> {
        if rank.n == 0 || rank.n > MAX_LEN || rank.index >= factorial(rank.n) {
            return Err(Error::RankOutOfRange { index: rank.index, n: rank.n });
        }
        let mut word = [0u8; MAX_LEN];
        unrank_word(rank.n, rank.index, &mut word[..rank.n]);
        Ok(Self::from_zero_based(&word[..rank.n]))
    }

    /// Splits into the finest direct sum along the main diagonal.
    pub fn block_decomposition(&self) -> BlockDecomposition {
        let mut block_lengths = Vec::new();
        let mut start = 0;
        let mut max_seen = 0u8;
        for i in 0..self.n() {
            max_seen = max_seen.max(self.raw(i));
            if max_seen as usize == i {
                block_lengths.push(i + 1 - start);
                start = i + 1;
            }
        }
        BlockDecomposition { block_lengths }
    }

    /// Values greater than everything to their right, listed left to right
    /// (hence in decreasing order). Always contains `n`.
    pub fn right_to_left_maxima(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut best: Option<u8> = None;
        for i in (0..self.n()).rev() {
            let v = self.raw(i);
            if best.is_none_or(|b| v > b) {
                out.push(v + 1);
                best = Some(v);
            }
        }
        out.reverse();
        out
    }

    /// Iterates all of `S_n` in rank order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        assert!((1..=MAX_LEN).contains(&n));
        let mut word: Vec<u8> = (0..n as u8).collect();
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let p = Permutation::from_zero_based(&word);
            done = !next_permutation(&mut word);
            Some(p)
        })
    }
}

/// Order-isomorphic permutation of a sequence of distinct values.
pub fn standardize<T: Ord>(word: &[T]) -> Result<Permutation> {
    if word.is_empty() || word.len() > MAX_LEN {
        return Err(Error::InvalidWord(format!(
            "length {} outside 1..={MAX_LEN}",
            word.len()
        )));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by(|&a, &b| word[a].cmp(&word[b]));
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::InvalidWord("repeated entries".into()));
    }
    let mut out = vec![0u8; word.len()];
    for (value, &pos) in order.iter().enumerate() {
        out[pos] = value as u8;
    }
    Ok(Permutation::from_zero_based(&out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub block_lengths: Vec<usize>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.block_lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_lengths.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.block_lengths.len() == 1
    }

    /// Each block of `p`, standardized, left to right.
    pub fn blocks(&self, p: &Permutation) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.len());
        let mut start = 0;
        for &len in &self.block_lengths {
            let word: Vec<u8> = (start..start + len)
                .map(|i| p.raw(i) - start as u8)
                .collect();
            out.push(Permutation::from_zero_based(&word));
            start += len;
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in self.iter() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts contiguous digits (`2413`) or a comma-separated list (`10,2,1,…`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::NotAPermutation(format!("bad entry '{t}' in '{s}'")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::NotAPermutation(format!("bad digit '{c}' in '{s}'")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[8, 2, 9]).unwrap(), p("213"));
        assert_eq!(standardize(&[3, 4, 7]).unwrap(), p("123"));
        assert_eq!(standardize(&[5, 3, 1]).unwrap(), p("321"));
        assert!(matches!(standardize(&[1, 4, 1]), Err(Error::InvalidWord(_))));
        assert!(matches!(standardize::<u8>(&[]), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("123").inverse(), p("123"));
        assert_eq!(p("2413").inverse(), p("3142"));
        assert_eq!(p("321").inverse(), p("321"));
        let q = p("2413");
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn reverse_and_complement() {
        assert_eq!(p("123").reverse(), p("321"));
        assert_eq!(p("2314").complement(), p("3241"));
        assert_eq!(p("2314").reverse().reverse(), p("2314"));
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(6).inversions(), 0);
        assert_eq!(p("4321").inversions(), 6);
        assert_eq!(p("3412").inversions(), 4);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Permutation::identity(4).rank().index, 0);
        assert_eq!(Permutation::unrank(Rank::new(4, 23).unwrap()).unwrap(), p("4321"));
        let r = Rank::new(5, 77).unwrap();
        assert_eq!(Permutation::unrank(r).unwrap().rank(), r);
        assert!(matches!(Rank::new(4, 24), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn block_decomposition_examples() {
        assert_eq!(Permutation::identity(4).block_decomposition().block_lengths, vec![1, 1, 1, 1]);
        assert_eq!(Permutation::reverse_identity(5).block_decomposition().block_lengths, vec![5]);
        assert_eq!(p("21354").block_decomposition().block_lengths, vec![2, 1, 2]);
        let d = p("21354").block_decomposition();
        assert_eq!(d.blocks(&p("21354")), vec![p("21"), p("1"), p("21")]);
    }

    #[test]
    fn right_to_left_maxima_examples() {
        assert_eq!(p("382941576").right_to_left_maxima(), vec![9, 7, 6]);
        assert_eq!(Permutation::identity(5).right_to_left_maxima(), vec![5]);
        assert_eq!(Permutation::reverse_identity(4).right_to_left_maxima(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn parse_and_display() {
        let q: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(q, Permutation::reverse_identity(10));
        assert_eq!(q.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(p("2413").to_string(), "2413");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn packed_order_is_rank_order() {
        let all: Vec<Permutation> = Permutation::all(5).collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, q) in all.iter().enumerate() {
            assert_eq!(q.rank().index, i as u64);
        }
    }
}
