use crate::error::{Error, Result};

use super::Permutation;

/// Writes an involution as a word: 1- and 2-cycles, each 2-cycle increasing,
/// cycles ordered by decreasing largest element, parentheses dropped.
pub fn involution_word(t: &Permutation) -> Result<Permutation> {
    if !t.is_involution() {
        return Err(Error::NotAnInvolution(t.to_string()));
    }
    let n = t.n();
    let mut word = Vec::with_capacity(n);
    // Walk largest elements downward; each cycle is emitted at its maximum.
    for hi in (0..n as u8).rev() {
        let partner = t.raw(hi as usize);
        if partner == hi {
            word.push(hi);
        } else if partner < hi {
            word.push(partner);
            word.push(hi);
        }
    }
    Ok(Permutation::from_zero_based(&word))
}

/// Inverse of [`involution_word`]: ascents become 2-cycles, everything else
/// a fixed point. Words outside the image are rejected.
pub fn word_to_involution(w: &Permutation) -> Result<Permutation> {
    let n = w.n();
    let mut t: Vec<u8> = (0..n as u8).collect();
    let mut i = 0;
    while i < n {
        if i + 1 < n && w.raw(i) < w.raw(i + 1) {
            let (a, b) = (w.raw(i), w.raw(i + 1));
            t[a as usize] = b;
            t[b as usize] = a;
            i += 2;
        } else {
            i += 1;
        }
    }
    let t = Permutation::from_zero_based(&t);
    if involution_word(&t)? != *w {
        return Err(Error::NotCanonicalWord(w.to_string()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(involution_word(&Permutation::identity(3)).unwrap(), p("321"));
        assert_eq!(involution_word(&p("4321")).unwrap(), p("1423"));
        assert!(matches!(involution_word(&p("231")), Err(Error::NotAnInvolution(_))));
        assert!(matches!(word_to_involution(&p("123")), Err(Error::NotCanonicalWord(_))));
    }

    #[test]
    fn round_trip_and_injective() {
        // inv_n for n = 1..=8
        let expected = [1usize, 2, 4, 10, 26, 76, 232, 764];
        for n in 1..=8 {
            let mut images = HashSet::new();
            for t in Permutation::all(n).filter(|t| t.is_involution()) {
                let w = involution_word(&t).unwrap();
                assert_eq!(word_to_involution(&w).unwrap(), t);
                images.insert(w);
            }
            assert_eq!(images.len(), expected[n - 1], "n = {n}");
        }
    }
}
