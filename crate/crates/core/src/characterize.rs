//! Structural descriptions of particular classes, checked against the engine.
//!
//! Each [`Characterization`] describes either one class (the class of the
//! identity or of the reversal) by a membership predicate, or a whole
//! partition of `S_n` by a representative predicate plus a canonical map.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::engine::{Engine, PathStep, WitnessPath};
use crate::error::{Error, Result};
use crate::permutation::{standardize, word_to_involution, Permutation};
use crate::rewrite::{
    occurrences, parse_partition, Mode, Move, Mutation, Pattern, Preset, ReplacementPartition,
    RewriteSystem,
};

const MAX_EXAMPLES: usize = 16;

pub fn avoids(p: &Permutation, pat: &Pattern) -> bool {
    occurrences(p, pat, Mode::General).is_empty()
}

fn pattern(s: &str) -> Pattern {
    s.parse().expect("static pattern")
}

/// Keeps the right-to-left maxima in place and writes every other entry
/// in decreasing order into the remaining positions.
pub fn p2_general_normal_form(p: &Permutation) -> Permutation {
    let n = p.n();
    let mut word = p.zero_based();
    let mut is_max = vec![false; n];
    let mut best: Option<u8> = None;
    for i in (0..n).rev() {
        if best.is_none_or(|b| word[i] > b) {
            is_max[i] = true;
            best = Some(word[i]);
        }
    }
    let mut rest: Vec<u8> = (0..n).filter(|&i| !is_max[i]).map(|i| word[i]).collect();
    rest.sort_unstable_by(|a, b| b.cmp(a));
    let mut it = rest.into_iter();
    for i in (0..n).filter(|&i| !is_max[i]) {
        word[i] = it.next().expect("one value per free slot");
    }
    Permutation::new(&word.iter().map(|v| v + 1).collect::<Vec<_>>()).expect("rearrangement")
}

/// Direct sum of decreasing permutations.
pub fn is_layered(p: &Permutation) -> bool {
    let dec = p.block_decomposition();
    dec.blocks(p).iter().all(|b| *b == Permutation::reverse_identity(b.n()))
}

pub fn is_indecomposable(p: &Permutation) -> bool {
    p.block_decomposition().is_indecomposable()
}

/// The layered permutation with the same block sizes as `p`.
fn layered_with_blocks_of(p: &Permutation) -> Permutation {
    let mut word = Vec::with_capacity(p.n());
    let mut start = 0u8;
    for &len in &p.block_decomposition().block_lengths {
        let len = len as u8;
        word.extend((start + 1..=start + len).rev());
        start += len;
    }
    Permutation::new(&word).expect("layered word")
}

/// Value 1 sits at an odd (one-based) position, and value 2 does not sit
/// at an odd position to its left.
pub fn p5_adjacent_admissible(p: &Permutation) -> bool {
    let one = p.position_of(1) + 1;
    if p.n() < 2 {
        return true;
    }
    let two = p.position_of(2) + 1;
    one % 2 == 1 && !(two % 2 == 1 && two < one)
}

/// Membership in the exceptional set for even `n`: positions are filled in
/// the order `n-1, n, n-3, n-2, …`, each odd slot taking the smallest
/// value still free.
pub fn is_p5_exceptional(p: &Permutation) -> bool {
    let n = p.n();
    if n % 2 == 1 {
        return false;
    }
    // Before odd slot i (one-based) is filled, exactly p[1..=i+1] are free.
    (0..n).step_by(2).all(|i| (0..=i + 1).all(|j| p.raw(i) <= p.raw(j)))
}

pub fn p5_exceptional_set(n: usize) -> Result<Vec<Permutation>> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the exceptional set needs even n >= 4, got {n}"
        )));
    }
    if n > crate::permutation::MAX_LEN {
        return Err(Error::TooLarge(format!("n = {n}")));
    }
    let mut out = Vec::new();
    let mut word = vec![0u8; n];
    fill_exceptional(n, &mut word, &mut vec![true; n], &mut out);
    out.sort();
    Ok(out)
}

fn fill_exceptional(hi: usize, word: &mut [u8], free: &mut [bool], out: &mut Vec<Permutation>) {
    if hi == 0 {
        out.push(Permutation::from_zero_based(word));
        return;
    }
    let odd = hi - 2;
    let smallest = free.iter().position(|&f| f).expect("free value") as u8;
    free[smallest as usize] = false;
    word[odd] = smallest;
    for v in 0..free.len() {
        if free[v] {
            free[v] = false;
            word[odd + 1] = v as u8;
            fill_exceptional(hi - 2, word, free, out);
            free[v] = true;
        }
    }
    free[smallest as usize] = true;
}

pub fn p5_adjacent_identity_member(p: &Permutation) -> bool {
    p5_adjacent_admissible(p) && (p.n() % 2 == 1 || p.n() < 4 || !is_p5_exceptional(p))
}

/// Each block is a singleton or has odd size with its even (block-relative)
/// entries on the diagonal and its odd entries forming an indecomposable
/// 321-avoiding pattern.
pub fn p4_adjacent_identity_member(p: &Permutation) -> bool {
    let dec = p.block_decomposition();
    let avoid = pattern("321");
    dec.blocks(p).iter().all(|b| {
        let len = b.n();
        if len == 1 {
            return true;
        }
        if len % 2 == 0 || (1..len).step_by(2).any(|j| b.raw(j) as usize != j) {
            return false;
        }
        let odd: Vec<u8> = (0..len).step_by(2).map(|j| b.raw(j)).collect();
        let sub = standardize(&odd).expect("nonempty");
        avoids(&sub, &avoid) && is_indecomposable(&sub) && is_indecomposable(b)
    })
}

/// Each value `n - i` with `i < floor(n/2)` sits within the last `2i + 1`
/// positions.
pub fn p2_adjacent_identity_member(p: &Permutation) -> bool {
    let n = p.n();
    (0..n / 2).all(|i| p.position_of((n - i) as u8) + 1 >= n - 2 * i)
}

/// Pushes the largest unfixed element left by `123 -> 132` and `213 -> 132`
/// steps until it is second in the unfixed suffix (or already first),
/// fixes that one- or two-element prefix, and repeats.
pub fn p3_adjacent_canonical_path(p: &Permutation) -> WitnessPath {
    let n = p.n();
    let mut word = p.zero_based();
    let mut steps = Vec::new();
    let to = pattern("132");
    let mut s = 0;
    while s < n {
        let mut j = (s..n).max_by_key(|&i| word[i]).expect("nonempty suffix");
        if j == s {
            s += 1;
            continue;
        }
        while j > s + 1 {
            let (a, b) = (word[j - 2], word[j - 1]);
            let from = if a < b { pattern("123") } else { pattern("213") };
            steps.push(PathStep {
                before: Permutation::from_zero_based(&word),
                mv: Move { positions: vec![j - 2, j - 1, j], from_pattern: from, to_pattern: to },
            });
            let m = word[j];
            word[j - 2] = a.min(b);
            word[j - 1] = m;
            word[j] = a.max(b);
            j -= 1;
        }
        s += 2;
    }
    let end = Permutation::from_zero_based(&word);
    debug_assert!(word_to_involution(&end).is_ok());
    WitnessPath { start: *p, steps, end }
}

pub fn p3_adjacent_canonical(p: &Permutation) -> Permutation {
    p3_adjacent_canonical_path(p).end
}

/// Layered with block sizes allowed by the preset's grammar.
pub fn doubly_adjacent_identity_member(p: &Permutation, preset: Preset) -> Result<bool> {
    let sizes = p.block_decomposition().block_lengths;
    let all_in = |allowed: &[usize]| sizes.iter().all(|s| allowed.contains(s));
    let grammar = match preset {
        Preset::P1 => all_in(&[1, 2]) && sizes[0] == 1,
        Preset::P4 => all_in(&[1, 3]),
        Preset::P3 => all_in(&[1, 2]) && sizes.contains(&1),
        Preset::P5 => all_in(&[1, 2, 3]) && sizes[0] != 2,
        Preset::P7 => all_in(&[1, 2, 3]) && sizes.iter().any(|s| s % 2 == 1),
        other => {
            return Err(Error::InvalidArgument(format!(
                "no doubly-adjacent grammar for {other}"
            )))
        }
    };
    Ok(grammar && is_layered(p))
}

/// Which permutation's class a characterization describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Identity,
    Reverse,
    /// Every class at once, through one representative each.
    All,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Identity => "identity",
            Base::Reverse => "reverse",
            Base::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characterization {
    /// Class of the identity under `{123,213}`: `n` stays last.
    P2GeneralIdentity,
    /// Classes under `{123,213}`: one 123-avoiding permutation each.
    P2GeneralNormalForms,
    /// Class of the reversal under `{321,312,231}`: indecomposables.
    ReverseIndecomposable,
    /// Classes under `{321,312,231}`: one layered permutation each.
    ReverseLayered,
    /// Class of the identity under `{123,132,213}`: reversals of indecomposables.
    P3GeneralIdentity,
    /// Classes under `{123,132,213}`: one reversed layered permutation each.
    P3GeneralReversedLayered,
    P2AdjacentIdentity,
    P4AdjacentIdentity,
    P5AdjacentIdentity,
    /// Classes under `{123,132,213}` with adjacent positions: involution words.
    P3AdjacentInvolutionWords,
    DoublyIdentity(Preset),
}

impl Characterization {
    pub const ALL: [Characterization; 15] = [
        Characterization::P2GeneralIdentity,
        Characterization::P2GeneralNormalForms,
        Characterization::ReverseIndecomposable,
        Characterization::ReverseLayered,
        Characterization::P3GeneralIdentity,
        Characterization::P3GeneralReversedLayered,
        Characterization::P2AdjacentIdentity,
        Characterization::P4AdjacentIdentity,
        Characterization::P5AdjacentIdentity,
        Characterization::P3AdjacentInvolutionWords,
        Characterization::DoublyIdentity(Preset::P1),
        Characterization::DoublyIdentity(Preset::P3),
        Characterization::DoublyIdentity(Preset::P4),
        Characterization::DoublyIdentity(Preset::P5),
        Characterization::DoublyIdentity(Preset::P7),
    ];

    pub fn name(&self) -> String {
        match self {
            Characterization::P2GeneralIdentity => "n fixed at the end".into(),
            Characterization::P2GeneralNormalForms => "123-avoiding representatives".into(),
            Characterization::ReverseIndecomposable => "indecomposable permutations".into(),
            Characterization::ReverseLayered => "layered representatives".into(),
            Characterization::P3GeneralIdentity => "reversed indecomposables".into(),
            Characterization::P3GeneralReversedLayered => "reversed layered representatives".into(),
            Characterization::P2AdjacentIdentity => "large values near the end".into(),
            Characterization::P4AdjacentIdentity => "odd blocks with fixed even entries".into(),
            Characterization::P5AdjacentIdentity => "admissible minus exceptional".into(),
            Characterization::P3AdjacentInvolutionWords => "involution word representatives".into(),
            Characterization::DoublyIdentity(p) => format!("{p} block grammar"),
        }
    }

    pub fn partition(&self) -> ReplacementPartition {
        match self {
            Characterization::P2GeneralIdentity
            | Characterization::P2GeneralNormalForms
            | Characterization::P2AdjacentIdentity => Preset::P2.partition(),
            Characterization::ReverseIndecomposable | Characterization::ReverseLayered => {
                parse_partition("321,312,231").expect("static partition")
            }
            Characterization::P3GeneralIdentity
            | Characterization::P3GeneralReversedLayered
            | Characterization::P3AdjacentInvolutionWords => Preset::P3.partition(),
            Characterization::P4AdjacentIdentity => Preset::P4.partition(),
            Characterization::P5AdjacentIdentity => Preset::P5.partition(),
            Characterization::DoublyIdentity(p) => p.partition(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Characterization::P2GeneralIdentity
            | Characterization::P2GeneralNormalForms
            | Characterization::ReverseIndecomposable
            | Characterization::ReverseLayered
            | Characterization::P3GeneralIdentity
            | Characterization::P3GeneralReversedLayered => Mode::General,
            Characterization::P2AdjacentIdentity
            | Characterization::P4AdjacentIdentity
            | Characterization::P5AdjacentIdentity
            | Characterization::P3AdjacentInvolutionWords => Mode::AdjPositions,
            Characterization::DoublyIdentity(_) => Mode::AdjBoth,
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Characterization::ReverseIndecomposable => Base::Reverse,
            Characterization::P2GeneralNormalForms
            | Characterization::ReverseLayered
            | Characterization::P3GeneralReversedLayered
            | Characterization::P3AdjacentInvolutionWords => Base::All,
            _ => Base::Identity,
        }
    }

    /// For single-class characterizations, membership; for whole-partition
    /// ones, whether `p` is a representative.
    pub fn predicate(&self, p: &Permutation) -> bool {
        match self {
            Characterization::P2GeneralIdentity => p.value_at(p.n() - 1) as usize == p.n(),
            Characterization::P2GeneralNormalForms => avoids(p, &pattern("123")),
            Characterization::ReverseIndecomposable => is_indecomposable(p),
            Characterization::ReverseLayered => is_layered(p),
            Characterization::P3GeneralIdentity => is_indecomposable(&p.reverse()),
            Characterization::P3GeneralReversedLayered => is_layered(&p.reverse()),
            Characterization::P2AdjacentIdentity => p2_adjacent_identity_member(p),
            Characterization::P4AdjacentIdentity => p4_adjacent_identity_member(p),
            Characterization::P5AdjacentIdentity => p5_adjacent_identity_member(p),
            Characterization::P3AdjacentInvolutionWords => word_to_involution(p).is_ok(),
            Characterization::DoublyIdentity(preset) => {
                doubly_adjacent_identity_member(p, *preset).expect("registered preset")
            }
        }
    }

    /// The representative a whole-partition characterization assigns to `p`.
    pub fn canonical(&self, p: &Permutation) -> Option<Permutation> {
        match self {
            Characterization::P2GeneralNormalForms => Some(p2_general_normal_form(p)),
            Characterization::ReverseLayered => Some(layered_with_blocks_of(p)),
            Characterization::P3GeneralReversedLayered => {
                Some(layered_with_blocks_of(&p.reverse()).reverse())
            }
            Characterization::P3AdjacentInvolutionWords => Some(p3_adjacent_canonical(p)),
            _ => None,
        }
    }

    /// The registered characterization for a (partition, mode, base) triple.
    pub fn find(partition: &ReplacementPartition, mode: Mode, base: Base) -> Result<Self> {
        Characterization::ALL
            .into_iter()
            .find(|c| c.mode() == mode && c.base() == base && c.partition() == *partition)
            .ok_or_else(|| {
                Error::Unsupported(format!(
                    "no characterization of the {base} class(es) for {partition} in {mode} mode"
                ))
            })
    }

    /// Compares the characterization with the engine on `S_n`.
    pub fn check(&self, n: usize, engine: &Engine) -> Result<CharacterizationReport> {
        self.check_with(n, engine, None)
    }

    #[doc(hidden)]
    pub fn check_with(
        &self,
        n: usize,
        engine: &Engine,
        mutation: Option<Mutation>,
    ) -> Result<CharacterizationReport> {
        let system = RewriteSystem::new(self.partition(), self.mode()).with_mutation(mutation);
        let mut report = CharacterizationReport {
            name: self.name(),
            n,
            partition: self.partition().label(),
            mode: self.mode(),
            base: self.base(),
            predicted_set_size: 0,
            engine_set_size: 0,
            mismatch_examples: Vec::new(),
        };
        let note = |p: Permutation, out: &mut Vec<Permutation>| {
            if out.len() < MAX_EXAMPLES && !out.contains(&p) {
                out.push(p);
            }
        };
        match self.base() {
            Base::Identity | Base::Reverse => {
                let start = if self.base() == Base::Identity {
                    Permutation::identity(n)
                } else {
                    Permutation::reverse_identity(n)
                };
                let class: BTreeSet<Permutation> = engine.eq_class(&start, &system)?.into_iter().collect();
                report.engine_set_size = class.len() as u64;
                for p in Permutation::all(n) {
                    let predicted = self.predicate(&p);
                    report.predicted_set_size += u64::from(predicted);
                    if predicted != class.contains(&p) {
                        note(p, &mut report.mismatch_examples);
                    }
                }
            }
            Base::All => {
                let table = engine.class_table(n, &system)?;
                let mut reps: HashMap<u64, Vec<Permutation>> = HashMap::new();
                for p in Permutation::all(n).filter(|p| self.predicate(p)) {
                    reps.entry(table.class_rep_rank(&p)).or_default().push(p);
                }
                report.predicted_set_size = reps.values().map(|v| v.len() as u64).sum();
                let classes = table.classes();
                report.engine_set_size = classes.len() as u64;
                for (rank, members) in &classes {
                    let unique = match reps.get(rank).map(Vec::as_slice) {
                        Some([only]) => Some(*only),
                        _ => {
                            note(members[0], &mut report.mismatch_examples);
                            None
                        }
                    };
                    for p in members {
                        let Some(c) = self.canonical(p) else { continue };
                        if Some(c) != unique {
                            note(*p, &mut report.mismatch_examples);
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Result of comparing a characterization with the engine.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterizationReport {
    pub name: String,
    pub n: usize,
    pub partition: String,
    pub mode: Mode,
    pub base: Base,
    /// Members (single class) or representatives (whole partition) predicted.
    pub predicted_set_size: u64,
    /// Class size, or number of classes.
    pub engine_set_size: u64,
    pub mismatch_examples: Vec<Permutation>,
}

impl CharacterizationReport {
    pub fn success(&self) -> bool {
        self.mismatch_examples.is_empty() && self.predicted_set_size == self.engine_set_size
    }
}

/// Looks up the characterization for the given triple and checks it on `S_n`
/// with the default engine.
pub fn check_characterization(
    n: usize,
    partition: &ReplacementPartition,
    mode: Mode,
    base: Base,
) -> Result<CharacterizationReport> {
    Characterization::find(partition, mode, base)?.check(n, &Engine::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn count(n: usize, f: impl Fn(&Permutation) -> bool) -> usize {
        Permutation::all(n).filter(|q| f(q)).count()
    }

    #[test]
    fn avoidance() {
        assert!(avoids(&Permutation::identity(5), &pattern("321")));
        assert!(avoids(&p("321"), &pattern("123")));
        assert_eq!(count(4, |q| avoids(q, &pattern("123"))), 14);
    }

    #[test]
    fn normal_form() {
        assert_eq!(p2_general_normal_form(&p("382941576")), p("854932176"));
        assert_eq!(p2_general_normal_form(&p("54321")), p("54321"));
        for n in 1..=7 {
            for q in Permutation::all(n) {
                let f = p2_general_normal_form(&q);
                assert!(avoids(&f, &pattern("123")), "{q} -> {f}");
                assert_eq!(f.right_to_left_maxima(), q.right_to_left_maxima());
            }
        }
    }

    #[test]
    fn layered_and_indecomposable() {
        assert!(is_layered(&p("214365")));
        assert!(!is_layered(&p("3412")));
        for n in 1..=7 {
            assert_eq!(count(n, is_layered), 1 << (n - 1));
        }
        assert!(is_indecomposable(&Permutation::reverse_identity(6)));
        assert!(!is_indecomposable(&Permutation::identity(4)));
        assert_eq!(count(5, is_indecomposable), 71);
    }

    #[test]
    fn admissible() {
        assert_eq!(count(5, p5_adjacent_admissible), 54);
        assert!(!p5_adjacent_admissible(&p("21345")));
        assert!(p5_adjacent_admissible(&Permutation::identity(6)));
    }

    #[test]
    fn exceptional_sets() {
        let x4 = p5_exceptional_set(4).unwrap();
        let mut want = vec![p("3412"), p("2413"), p("2314")];
        want.sort();
        assert_eq!(x4, want);

        // The printed list has 432516 in place of 342516; the filling rule
        // puts the smaller of {3,4} first.
        let printed = "563412 562413 562314 462315 452316 463512 462513 362514 362415 \
                       352416 453612 452613 352614 342615 342516";
        let mut want: Vec<Permutation> = printed.split_whitespace().map(p).collect();
        want.sort();
        assert_eq!(p5_exceptional_set(6).unwrap(), want);

        for n in [4, 6, 8] {
            let set = p5_exceptional_set(n).unwrap();
            let dfact: usize = (1..n).step_by(2).product();
            assert_eq!(set.len(), dfact);
            assert_eq!(count(n, is_p5_exceptional), dfact);
            assert!(set.iter().all(is_p5_exceptional));
        }
        assert!(matches!(p5_exceptional_set(5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn exceptional_members_are_isolated() {
        let sys = RewriteSystem::preset(Preset::P5, Mode::AdjPositions);
        for n in [4usize, 6, 8] {
            let set = p5_exceptional_set(n).unwrap();
            assert!(set.iter().all(|q| sys.neighbors(q).is_empty()));
            let admissible = set.iter().filter(|q| p5_adjacent_admissible(q)).count();
            let dfact: usize = (1..n.saturating_sub(2)).step_by(2).product();
            assert_eq!(admissible, dfact, "n = {n}");
        }
    }

    #[test]
    fn p5_member_counts() {
        assert_eq!(count(4, p5_adjacent_identity_member), 9);
        assert_eq!(count(6, p5_adjacent_identity_member), 285);
        assert!(!p5_adjacent_identity_member(&p("3412")));
    }

    #[test]
    fn p4_member_counts() {
        assert!(p4_adjacent_identity_member(&Permutation::identity(5)));
        assert!(p4_adjacent_identity_member(&p("321")));
        assert_eq!(count(7, p4_adjacent_identity_member), 20);
    }

    #[test]
    fn canonical_path_replays() {
        let sys = RewriteSystem::preset(Preset::P3, Mode::AdjPositions);
        assert_eq!(p3_adjacent_canonical(&p("4321")), p("4321"));
        for n in 1..=6 {
            for q in Permutation::all(n) {
                let path = p3_adjacent_canonical_path(&q);
                path.verify(&sys).unwrap();
                assert!(word_to_involution(&path.end).is_ok());
            }
        }
        let images: BTreeSet<_> = Permutation::all(4).map(|q| p3_adjacent_canonical(&q)).collect();
        assert_eq!(images.len(), 10);
    }

    #[test]
    fn doubly_grammars() {
        assert!(doubly_adjacent_identity_member(&p("3214567"), Preset::P4).unwrap());
        assert!(!doubly_adjacent_identity_member(&p("321546"), Preset::P4).unwrap());
        assert!(doubly_adjacent_identity_member(&p("1324"), Preset::P1).unwrap());
        assert!(!doubly_adjacent_identity_member(&p("2134"), Preset::P1).unwrap());
        let p5 = |q: &Permutation| doubly_adjacent_identity_member(q, Preset::P5).unwrap();
        assert_eq!(count(6, p5), 17);
        assert_eq!(count(7, p5), 31);
        assert!(matches!(
            doubly_adjacent_identity_member(&p("123"), Preset::P2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn registry() {
        let rev = parse_partition("321,312,231").unwrap();
        let c = Characterization::find(&rev, Mode::General, Base::Reverse).unwrap();
        assert_eq!(c, Characterization::ReverseIndecomposable);
        let err = Characterization::find(&Preset::P1.partition(), Mode::AdjPositions, Base::Identity);
        assert!(matches!(err, Err(Error::Unsupported(_))));
        for c in Characterization::ALL {
            assert_eq!(Characterization::find(&c.partition(), c.mode(), c.base()).unwrap(), c);
        }
    }

    #[test]
    fn checks_pass_on_small_sizes() {
        let engine = Engine::default();
        for c in Characterization::ALL {
            for n in 1..=6 {
                let r = c.check(n, &engine).unwrap();
                assert!(r.success(), "{} n = {n}: {r:?}", c.name());
            }
        }
    }

    #[test]
    fn check_examples() {
        let r = check_characterization(6, &Preset::P4.partition(), Mode::AdjPositions, Base::Identity).unwrap();
        assert!(r.success());
        assert_eq!((r.predicted_set_size, r.engine_set_size), (10, 10));
        let r = check_characterization(5, &Preset::P5.partition(), Mode::AdjPositions, Base::Identity).unwrap();
        assert_eq!((r.predicted_set_size, r.engine_set_size), (54, 54));
    }
}
