use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::MAX_LEN;

const FACTORIALS: [u64; 21] = {
    let mut table = [1u64; 21];
    let mut i = 1;
    while i < 21 {
        table[i] = table[i - 1] * i as u64;
        i += 1;
    }
    table
};

/// `n!` for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    FACTORIALS[n]
}

/// Position of a permutation in the lexicographic listing of `S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rank {
    pub index: u64,
    pub n: usize,
}

impl Rank {
    pub fn new(n: usize, index: u64) -> Result<Self> {
        if n == 0 || n > MAX_LEN || index >= factorial(n) {
            return Err(Error::RankOutOfRange { index, n });
        }
        Ok(Rank { index, n })
    }
}

/// Lehmer rank of a zero-based word.
#[inline]
pub(crate) fn rank_of_word(word: &[u8]) -> u64 {
    let n = word.len();
    let mut used = 0u32;
    let mut index = 0u64;
    for (i, &v) in word.iter().enumerate() {
        let below = (1u32 << v) - 1;
        let smaller_unused = v as u32 - (used & below).count_ones();
        index += smaller_unused as u64 * FACTORIALS[n - 1 - i];
        used |= 1 << v;
    }
    index
}

pub(crate) fn unrank_word(n: usize, mut index: u64, out: &mut [u8]) {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    for (i, slot) in out.iter_mut().enumerate().take(n) {
        let f = FACTORIALS[n - 1 - i];
        let digit = (index / f) as usize;
        index %= f;
        *slot = pool.remove(digit);
    }
}

/// Advances to the lexicographic successor in place; false when `word` was last.
pub(crate) fn next_permutation(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
