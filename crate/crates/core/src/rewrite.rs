//! Replacement partitions and the single-step move relation they induce.
//!
//! A [`RewriteSystem`] pairs a [`ReplacementPartition`] with a [`Mode`] and
//! enumerates legal moves. Moves are always expressed in the coordinates of
//! the permutation being rewritten: `positions` are the zero-based indices
//! touched, `from_pattern` is the pattern currently occupying them and
//! `to_pattern` the pattern they are rearranged into.
//!
//! [`Mode::AdjValues`] is the inverse conjugate of [`Mode::AdjPositions`]: a
//! move of `p` in values mode is the inverse image of a positions-mode move
//! of `p⁻¹`. Expressed on `p` itself, that is a move on a set of positions
//! holding a run of consecutive values, with every pattern of the partition
//! replaced by its inverse.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{factorial, rank_of_word, standardize, Permutation, MAX_LEN};

/// Longest pattern accepted by partitions.
pub const MAX_PATTERN_LEN: usize = 8;

/// A permutation of `{1..k}`, `k >= 2`, used as a replacement template.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Result<Self> {
        if !(2..=MAX_PATTERN_LEN).contains(&p.n()) {
            return Err(Error::PartitionSpec(format!(
                "pattern {p} has length outside 2..={MAX_PATTERN_LEN}"
            )));
        }
        Ok(Pattern(p))
    }

    pub fn k(&self) -> usize {
        self.0.n()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn inverse(&self) -> Pattern {
        Pattern(self.0.inverse())
    }

    fn index(&self) -> usize {
        rank_of_word(&self.0.zero_based()) as usize
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Permutation = s
            .parse()
            .map_err(|_| Error::PartitionSpec(format!("'{s}' is not a permutation")))?;
        Pattern::new(p)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Named partitions of `S_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Preset {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    PK,
}

impl Preset {
    pub const ALL: [Preset; 8] = [
        Preset::P1,
        Preset::P2,
        Preset::P3,
        Preset::P4,
        Preset::P5,
        Preset::P6,
        Preset::P7,
        Preset::PK,
    ];

    /// The seven swap presets, without the Knuth relations.
    pub const NUMBERED: [Preset; 7] = [
        Preset::P1,
        Preset::P2,
        Preset::P3,
        Preset::P4,
        Preset::P5,
        Preset::P6,
        Preset::P7,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::P1 => "P1",
            Preset::P2 => "P2",
            Preset::P3 => "P3",
            Preset::P4 => "P4",
            Preset::P5 => "P5",
            Preset::P6 => "P6",
            Preset::P7 => "P7",
            Preset::PK => "PK",
        }
    }

    fn spec(&self) -> &'static str {
        match self {
            Preset::P1 => "123,132",
            Preset::P2 => "123,213",
            Preset::P3 => "123,132,213",
            Preset::P4 => "123,321",
            Preset::P5 => "123,132,321",
            Preset::P6 => "123,213,321",
            Preset::P7 => "123,132,213,321",
            Preset::PK => "213,231|132,312",
        }
    }

    pub fn partition(&self) -> ReplacementPartition {
        let mut partition = parse_blocks(self.spec()).expect("preset specs are valid");
        partition.label = Some(self.name().to_string());
        partition
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::PartitionSpec(format!("unknown preset '{s}'")))
    }
}

/// A set partition of `S_k` with singleton blocks omitted.
#[derive(Clone, Debug)]
pub struct ReplacementPartition {
    k: usize,
    blocks: Vec<Vec<Pattern>>,
    label: Option<String>,
}

impl PartialEq for ReplacementPartition {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.blocks == other.blocks
    }
}

impl Eq for ReplacementPartition {}

impl ReplacementPartition {
    /// Validates and canonicalizes: patterns sorted inside blocks, blocks
    /// sorted, singleton blocks dropped.
    pub fn from_blocks(blocks: Vec<Vec<Pattern>>) -> Result<Self> {
        let mut k = None;
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for mut block in blocks {
            for pat in &block {
                match k {
                    None => k = Some(pat.k()),
                    Some(k) if k != pat.k() => {
                        return Err(Error::PartitionSpec(format!(
                            "mixed pattern lengths {k} and {}",
                            pat.k()
                        )))
                    }
                    _ => {}
                }
                if !seen.insert(*pat) {
                    return Err(Error::PartitionSpec(format!(
                        "pattern {pat} appears more than once"
                    )));
                }
            }
            block.sort();
            if block.len() >= 2 {
                out.push(block);
            }
        }
        if out.is_empty() {
            return Err(Error::PartitionSpec("no block with two or more patterns".into()));
        }
        out.sort();
        Ok(ReplacementPartition { k: k.unwrap(), blocks: out, label: None })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<Pattern>] {
        &self.blocks
    }

    /// Preset name when built from one, otherwise the block spec.
    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.to_string())
    }

    pub fn block_of(&self, pat: &Pattern) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(pat))
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &ReplacementPartition) -> bool {
        self.k == other.k
            && self
                .blocks
                .iter()
                .all(|b| other.blocks.iter().any(|ob| b.iter().all(|p| ob.contains(p))))
    }

    /// Replaces every pattern by its inverse.
    pub fn inverse(&self) -> ReplacementPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(Pattern::inverse).collect())
            .collect();
        ReplacementPartition::from_blocks(blocks).expect("inversion keeps a partition valid")
    }
}

impl fmt::Display for ReplacementPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

fn parse_blocks(spec: &str) -> Result<ReplacementPartition> {
    let blocks = spec
        .split('|')
        .map(|block| {
            block
                .split(',')
                .map(|tok| tok.trim().parse::<Pattern>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ReplacementPartition::from_blocks(blocks)
}

/// Parses a preset name (`P1`…`P7`, `PK`) or an explicit block list such as
/// `213,231|132,312`.
pub fn parse_partition(spec: &str) -> Result<ReplacementPartition> {
    if let Ok(preset) = spec.parse::<Preset>() {
        return Ok(preset.partition());
    }
    let mut partition = parse_blocks(spec)?;
    if let Some(preset) = Preset::ALL.into_iter().find(|p| p.partition() == partition) {
        partition.label = Some(preset.name().to_string());
    }
    Ok(partition)
}

impl FromStr for ReplacementPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Adjacency regime constraining where a replacement may act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "general")]
    General,
    #[serde(rename = "adjacent")]
    AdjPositions,
    #[serde(rename = "doubly")]
    AdjBoth,
    #[serde(rename = "values")]
    AdjValues,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::General, Mode::AdjPositions, Mode::AdjBoth, Mode::AdjValues];

    pub fn name(&self) -> &'static str {
        match self {
            Mode::General => "general",
            Mode::AdjPositions => "adjacent",
            Mode::AdjBoth => "doubly",
            Mode::AdjValues => "values",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "general" => Ok(Mode::General),
            "adjacent" | "positions" => Ok(Mode::AdjPositions),
            "doubly" | "both" => Ok(Mode::AdjBoth),
            "values" => Ok(Mode::AdjValues),
            other => Err(Error::InvalidArgument(format!("unknown mode '{other}'"))),
        }
    }
}

/// One replacement: the entries at `positions` (zero-based, increasing)
/// currently form `from_pattern` and are rearranged into `to_pattern`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub positions: Vec<usize>,
    pub from_pattern: Pattern,
    pub to_pattern: Pattern,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos: Vec<String> = self.positions.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "({}) {} -> {}", pos.join(","), self.from_pattern, self.to_pattern)
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_positions(p: &Permutation, positions: &[usize], k: usize) -> Result<()> {
    if positions.len() != k {
        return Err(Error::IllegalMove(format!(
            "{} positions for a pattern of length {k}",
            positions.len()
        )));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) || positions.last().is_some_and(|&x| x >= p.n()) {
        return Err(Error::IllegalMove(format!("bad positions {positions:?} for {p}")));
    }
    Ok(())
}

/// Rearranges the entries at `m.positions` from `m.from_pattern` into
/// `m.to_pattern`. Fails unless the positions currently hold `from_pattern`.
pub fn apply_move(p: &Permutation, m: &Move) -> Result<Permutation> {
    let k = m.from_pattern.k();
    if m.to_pattern.k() != k {
        return Err(Error::IllegalMove("pattern lengths differ".into()));
    }
    check_positions(p, &m.positions, k)?;
    let selected: Vec<u8> = m.positions.iter().map(|&i| p.raw(i)).collect();
    if standardize(&selected)? != *m.from_pattern.as_permutation() {
        return Err(Error::IllegalMove(format!(
            "positions {:?} of {p} do not form {}",
            m.positions, m.from_pattern
        )));
    }
    let mut sorted = selected;
    sorted.sort_unstable();
    let mut word = p.zero_based();
    for (j, &pos) in m.positions.iter().enumerate() {
        word[pos] = sorted[m.to_pattern.as_permutation().raw(j) as usize];
    }
    Ok(Permutation::from_zero_based(&word))
}

fn is_value_run(word: &[u8], positions: &[usize]) -> bool {
    let (mut lo, mut hi) = (u8::MAX, 0u8);
    for &i in positions {
        lo = lo.min(word[i]);
        hi = hi.max(word[i]);
    }
    (hi - lo) as usize == positions.len() - 1
}

/// Visits every increasing `k`-subset of `0..n` in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Index tuples holding `pat` under `mode`, in lexicographic order.
///
/// In [`Mode::AdjValues`] a tuple qualifies when its entries form a run of
/// consecutive values and `pat` occurs at that run in `p⁻¹`, i.e. the
/// entries of `p` at the tuple form `pat⁻¹`.
pub fn occurrences(p: &Permutation, pat: &Pattern, mode: Mode) -> Vec<Vec<usize>> {
    let n = p.n();
    let k = pat.k();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let word = p.zero_based();
    match mode {
        Mode::General => {
            let target = pat.as_permutation().zero_based();
            let mut chosen = Vec::with_capacity(k);
            general_occurrences(&word, &target, 0, &mut chosen, &mut out);
        }
        Mode::AdjPositions | Mode::AdjBoth => {
            for start in 0..=n - k {
                let positions: Vec<usize> = (start..start + k).collect();
                if mode == Mode::AdjBoth && !is_value_run(&word, &positions) {
                    continue;
                }
                let vals: Vec<u8> = positions.iter().map(|&i| word[i]).collect();
                if standardize(&vals).ok().as_ref() == Some(pat.as_permutation()) {
                    out.push(positions);
                }
            }
        }
        Mode::AdjValues => {
            let inv = p.inverse();
            let inverse_pat = pat.inverse();
            for low in 0..=n - k {
                let mut positions: Vec<usize> =
                    (low..low + k).map(|v| inv.raw(v) as usize).collect();
                positions.sort_unstable();
                let vals: Vec<u8> = positions.iter().map(|&i| word[i]).collect();
                if standardize(&vals).ok().as_ref() == Some(inverse_pat.as_permutation()) {
                    out.push(positions);
                }
            }
            out.sort();
        }
    }
    out
}

/// Depth-first search with pruning: each new index must keep the chosen
/// entries order-isomorphic to the matching prefix of the target.
fn general_occurrences(
    word: &[u8],
    target: &[u8],
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = chosen.len();
    if depth == target.len() {
        out.push(chosen.clone());
        return;
    }
    let remaining = target.len() - depth;
    for i in from..=word.len() - remaining {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(j, &c)| (word[c] < word[i]) == (target[j] < target[depth]));
        if consistent {
            chosen.push(i);
            general_occurrences(word, target, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

#[doc(hidden)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Skips the consecutive-values test in doubly-adjacent mode.
    DropValueRunCheck,
}

#[derive(Clone, Debug)]
struct Target {
    pattern: Pattern,
    word: [u8; MAX_PATTERN_LEN],
}

/// A partition together with a mode: the complete single-step relation.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    partition: ReplacementPartition,
    mode: Mode,
    k: usize,
    /// Indexed by the Lehmer rank of the pattern currently occupying a tuple;
    /// lists the patterns it may be rewritten into, in `p` coordinates.
    partners: Vec<Vec<Target>>,
    mutation: Option<Mutation>,
}

impl RewriteSystem {
    pub fn new(partition: ReplacementPartition, mode: Mode) -> Self {
        let k = partition.k();
        let effective = if mode == Mode::AdjValues { partition.inverse() } else { partition.clone() };
        let mut partners: Vec<Vec<Target>> = vec![Vec::new(); factorial(k) as usize];
        for block in effective.blocks() {
            for from in block {
                let slot = &mut partners[from.index()];
                for to in block.iter().filter(|&to| to != from) {
                    let mut word = [0u8; MAX_PATTERN_LEN];
                    to.as_permutation().write_zero_based(&mut word);
                    slot.push(Target { pattern: *to, word });
                }
            }
        }
        RewriteSystem { partition, mode, k, partners, mutation: None }
    }

    pub fn preset(preset: Preset, mode: Mode) -> Self {
        Self::new(preset.partition(), mode)
    }

    #[doc(hidden)]
    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn partition(&self) -> &ReplacementPartition {
        &self.partition
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Candidate position tuples for this mode, before pattern lookup.
    fn for_each_tuple(&self, word: &[u8], mut f: impl FnMut(&[usize])) {
        let n = word.len();
        let k = self.k;
        if k > n {
            return;
        }
        match self.mode {
            Mode::General => for_each_combination(n, k, f),
            Mode::AdjPositions | Mode::AdjBoth => {
                let check_values =
                    self.mode == Mode::AdjBoth && self.mutation != Some(Mutation::DropValueRunCheck);
                let mut positions = [0usize; MAX_PATTERN_LEN];
                for start in 0..=n - k {
                    for (j, slot) in positions[..k].iter_mut().enumerate() {
                        *slot = start + j;
                    }
                    if check_values && !is_value_run(word, &positions[..k]) {
                        continue;
                    }
                    f(&positions[..k]);
                }
            }
            Mode::AdjValues => {
                let mut inv = [0usize; MAX_LEN];
                for (i, &v) in word.iter().enumerate() {
                    inv[v as usize] = i;
                }
                let mut positions = [0usize; MAX_PATTERN_LEN];
                for low in 0..=n - k {
                    positions[..k].copy_from_slice(&inv[low..low + k]);
                    positions[..k].sort_unstable();
                    f(&positions[..k]);
                }
            }
        }
    }

    fn pattern_index(word: &[u8], positions: &[usize]) -> usize {
        let k = positions.len();
        let mut index = 0u64;
        for i in 0..k {
            let vi = word[positions[i]];
            let smaller_after = positions[i + 1..].iter().filter(|&&j| word[j] < vi).count();
            index += smaller_after as u64 * factorial(k - 1 - i);
        }
        index as usize
    }

    /// Calls `f` with each neighbor of the zero-based `word`. A neighbor
    /// reached by several moves is reported once per move.
    pub(crate) fn for_each_neighbor_word(&self, word: &[u8], mut f: impl FnMut(&[u8])) {
        let n = word.len();
        let mut scratch = [0u8; MAX_LEN];
        scratch[..n].copy_from_slice(word);
        let mut sorted = [0u8; MAX_PATTERN_LEN];
        self.for_each_tuple(word, |positions| {
            let targets = &self.partners[Self::pattern_index(word, positions)];
            if targets.is_empty() {
                return;
            }
            let k = positions.len();
            for (slot, &pos) in sorted[..k].iter_mut().zip(positions) {
                *slot = word[pos];
            }
            sorted[..k].sort_unstable();
            for target in targets {
                for (j, &pos) in positions.iter().enumerate() {
                    scratch[pos] = sorted[target.word[j] as usize];
                }
                f(&scratch[..n]);
            }
            for &pos in positions {
                scratch[pos] = word[pos];
            }
        });
    }

    /// All legal moves from `p`, ordered by (positions, target pattern).
    pub fn moves(&self, p: &Permutation) -> Vec<Move> {
        let word = p.zero_based();
        let mut out = Vec::new();
        self.for_each_tuple(&word, |positions| {
            let index = Self::pattern_index(&word, positions);
            let targets = &self.partners[index];
            if targets.is_empty() {
                return;
            }
            let vals: Vec<u8> = positions.iter().map(|&i| word[i]).collect();
            let from = Pattern(standardize(&vals).expect("entries are distinct"));
            for target in targets {
                out.push(Move {
                    positions: positions.to_vec(),
                    from_pattern: from,
                    to_pattern: target.pattern,
                });
            }
        });
        out.sort_by(|a, b| (&a.positions, a.to_pattern).cmp(&(&b.positions, b.to_pattern)));
        out
    }

    /// Distinct permutations one move away from `p`, in rank order.
    pub fn neighbors(&self, p: &Permutation) -> BTreeSet<Permutation> {
        let mut out = BTreeSet::new();
        self.for_each_neighbor_word(&p.zero_based(), |q| {
            out.insert(Permutation::from_zero_based(q));
        });
        out
    }

    /// Checks that `m` is legal at `p` under this system and applies it.
    pub fn check_move(&self, p: &Permutation, m: &Move) -> Result<Permutation> {
        check_positions(p, &m.positions, self.k)?;
        let word = p.zero_based();
        let legal_tuple = match self.mode {
            Mode::General => true,
            Mode::AdjPositions => m.positions.windows(2).all(|w| w[1] == w[0] + 1),
            Mode::AdjBoth => {
                m.positions.windows(2).all(|w| w[1] == w[0] + 1)
                    && (self.mutation == Some(Mutation::DropValueRunCheck)
                        || is_value_run(&word, &m.positions))
            }
            Mode::AdjValues => is_value_run(&word, &m.positions),
        };
        if !legal_tuple {
            return Err(Error::IllegalMove(format!(
                "positions {:?} of {p} are not allowed in {} mode",
                m.positions, self.mode
            )));
        }
        let index = Self::pattern_index(&word, &m.positions);
        if !self.partners[index].iter().any(|t| t.pattern == m.to_pattern) {
            return Err(Error::IllegalMove(format!(
                "{} -> {} is not a replacement of {}",
                m.from_pattern, m.to_pattern, self.partition
            )));
        }
        apply_move(p, m)
    }
}

/// One-step neighbors of `p` under `partition` in `mode`.
pub fn neighbors(p: &Permutation, partition: &ReplacementPartition, mode: Mode) -> BTreeSet<Permutation> {
    RewriteSystem::new(partition.clone(), mode).neighbors(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_presets_and_explicit() {
        let p4 = parse_partition("P4").unwrap();
        assert_eq!(p4.blocks(), &[vec![pat("123"), pat("321")]]);
        assert_eq!(parse_partition("123,321").unwrap(), p4);
        assert_eq!(parse_partition("321,123").unwrap().label(), "P4");
        assert_eq!(parse_partition("P5").unwrap().blocks(), &[vec![pat("123"), pat("132"), pat("321")]]);
        let pk = parse_partition("PK").unwrap();
        assert_eq!(pk.blocks().len(), 2);
        assert_eq!(pk.to_string(), "132,312|213,231");
    }

    #[test]
    fn parse_errors() {
        for bad in ["123,321|123,132", "123,1234", "123,12a", "123,113", "123", "1,2", ""] {
            assert!(
                matches!(parse_partition(bad), Err(Error::PartitionSpec(_))),
                "{bad} should be rejected"
            );
        }
    }

    #[test]
    fn occurrence_examples() {
        let occ = occurrences(&p("1274563"), &pat("123"), Mode::General);
        assert!(occ.contains(&vec![0, 1, 2]));
        let occ = occurrences(&p("7214563"), &pat("123"), Mode::AdjPositions);
        assert!(occ.contains(&vec![3, 4, 5]));
        for mode in Mode::ALL {
            assert!(occurrences(&Permutation::identity(4), &pat("321"), mode).is_empty());
        }
        assert!(occurrences(&p("12"), &pat("123"), Mode::General).is_empty());
    }

    #[test]
    fn occurrences_in_values_mode_follow_the_inverse() {
        // 2413⁻¹ = 3142, whose factors at positions 2..4 form 132 (values 1,4,2).
        let q = p("2413");
        let occ = occurrences(&q, &pat("132"), Mode::AdjValues);
        let inv_occ = occurrences(&q.inverse(), &pat("132"), Mode::AdjPositions);
        assert_eq!(occ.len(), inv_occ.len());
    }

    #[test]
    fn apply_move_examples() {
        let m = Move { positions: vec![2, 3, 6], from_pattern: pat("123"), to_pattern: pat("321") };
        assert_eq!(apply_move(&p("1234567"), &m).unwrap(), p("1274563"));
        let m = Move { positions: vec![0, 1, 2], from_pattern: pat("123"), to_pattern: pat("321") };
        assert_eq!(apply_move(&p("1274563"), &m).unwrap(), p("7214563"));
        let m = Move { positions: vec![0, 1, 2], from_pattern: pat("123"), to_pattern: pat("123") };
        assert_eq!(apply_move(&p("1274563"), &m).unwrap(), p("1274563"));
        let bad = Move { positions: vec![0, 1, 2], from_pattern: pat("321"), to_pattern: pat("123") };
        assert!(matches!(apply_move(&p("1274563"), &bad), Err(Error::IllegalMove(_))));
        let unordered = Move { positions: vec![1, 0, 2], from_pattern: pat("123"), to_pattern: pat("321") };
        assert!(matches!(apply_move(&p("1274563"), &unordered), Err(Error::IllegalMove(_))));
    }

    #[test]
    fn neighbor_examples() {
        let p4 = Preset::P4.partition();
        assert_eq!(neighbors(&p("123"), &p4, Mode::General), BTreeSet::from([p("321")]));
        assert!(neighbors(&p("3412"), &Preset::P5.partition(), Mode::General).is_empty());
        assert!(neighbors(&Permutation::identity(5), &Preset::PK.partition(), Mode::AdjPositions).is_empty());
    }

    #[test]
    fn doubly_requires_value_run() {
        let sys = RewriteSystem::preset(Preset::P4, Mode::AdjBoth);
        // 1 2 4 has consecutive positions but not consecutive values.
        assert_eq!(sys.neighbors(&p("1243")), BTreeSet::new());
        let mutated = sys.clone().with_mutation(Some(Mutation::DropValueRunCheck));
        assert_eq!(mutated.neighbors(&p("1243")), BTreeSet::from([p("4213")]));
    }

    #[test]
    fn check_move_enforces_mode() {
        let sys = RewriteSystem::preset(Preset::P4, Mode::AdjPositions);
        let m = Move { positions: vec![2, 3, 6], from_pattern: pat("123"), to_pattern: pat("321") };
        assert!(sys.check_move(&p("1234567"), &m).is_err());
        let general = RewriteSystem::preset(Preset::P4, Mode::General);
        assert_eq!(general.check_move(&p("1234567"), &m).unwrap(), p("1274563"));
        let not_in_block = Move { positions: vec![0, 1, 2], from_pattern: pat("123"), to_pattern: pat("132") };
        assert!(general.check_move(&p("1234567"), &not_in_block).is_err());
    }

    #[test]
    fn moves_are_sorted_and_apply() {
        let sys = RewriteSystem::preset(Preset::P7, Mode::General);
        let q = p("21435");
        let moves = sys.moves(&q);
        assert!(moves.windows(2).all(|w| (&w[0].positions, w[0].to_pattern) <= (&w[1].positions, w[1].to_pattern)));
        let from_moves: BTreeSet<_> = moves.iter().map(|m| sys.check_move(&q, m).unwrap()).collect();
        assert_eq!(from_moves, sys.neighbors(&q));
    }

    #[test]
    fn refinement_order() {
        let (p1, p3, p4, p5, p7) = (
            Preset::P1.partition(),
            Preset::P3.partition(),
            Preset::P4.partition(),
            Preset::P5.partition(),
            Preset::P7.partition(),
        );
        assert!(p1.refines(&p3) && p3.refines(&p7) && p4.refines(&p5) && p5.refines(&p7));
        assert!(!p3.refines(&p5) && !p7.refines(&p5));
    }
}
