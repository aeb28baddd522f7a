//! Equivalence classes of `S_n` under a [`RewriteSystem`].
//!
//! Whole-group questions go through a dense union-find indexed by rank;
//! single-class questions run a breadth-first search that only touches the
//! class itself.

mod union_find;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{factorial, next_permutation, rank_of_word, unrank_word, Permutation, MAX_LEN};
use crate::rewrite::{Mode, Move, ReplacementPartition, RewriteSystem};

pub use union_find::ConcurrentUnionFind;

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Worker threads for [`Engine::classes`]; `None` uses every core.
    pub threads: Option<usize>,
    /// Largest `n!` the dense table may allocate.
    pub slot_budget: u64,
    pub max_n_general: usize,
    pub max_n_adjacent: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            threads: None,
            slot_budget: 400_000_000,
            max_n_general: 10,
            max_n_adjacent: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesSummary {
    pub n: usize,
    pub class_count: u64,
    /// Size of each class, aligned with `representative_ranks`.
    pub class_sizes: Vec<u64>,
    /// Minimum rank of each class, ascending.
    pub representative_ranks: Vec<u64>,
}

impl ClassesSummary {
    pub fn total(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    /// Class sizes as a multiset: size -> number of classes of that size.
    pub fn size_multiset(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for &s in &self.class_sizes {
            *out.entry(s).or_insert(0) += 1;
        }
        out
    }

    pub fn representatives(&self) -> Vec<Permutation> {
        self.representative_ranks
            .iter()
            .map(|&r| unrank(self.n, r))
            .collect()
    }
}

/// Class membership for every element of `S_n`.
#[derive(Clone, Debug)]
pub struct ClassTable {
    n: usize,
    /// `roots[r]` is the minimum rank in the class of rank `r`.
    roots: Vec<u32>,
}

impl ClassTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class_rep_rank(&self, p: &Permutation) -> u64 {
        assert_eq!(p.n(), self.n);
        self.roots[p.rank().index as usize] as u64
    }

    pub fn same_class(&self, p: &Permutation, q: &Permutation) -> bool {
        self.class_rep_rank(p) == self.class_rep_rank(q)
    }

    /// Members of every class, keyed by representative rank.
    pub fn classes(&self) -> BTreeMap<u64, Vec<Permutation>> {
        let mut out: BTreeMap<u64, Vec<Permutation>> = BTreeMap::new();
        for (p, &root) in Permutation::all(self.n).zip(&self.roots) {
            out.entry(root as u64).or_default().push(p);
        }
        out
    }

    pub fn summary(&self) -> ClassesSummary {
        let mut representative_ranks = Vec::new();
        let mut class_sizes: Vec<u64> = Vec::new();
        let mut slot_of_root: HashMap<u32, usize> = HashMap::new();
        for (x, &root) in self.roots.iter().enumerate() {
            let slot = if root as usize == x {
                representative_ranks.push(x as u64);
                class_sizes.push(0);
                slot_of_root.insert(root, class_sizes.len() - 1);
                class_sizes.len() - 1
            } else {
                slot_of_root[&root]
            };
            class_sizes[slot] += 1;
        }
        ClassesSummary {
            n: self.n,
            class_count: representative_ranks.len() as u64,
            class_sizes,
            representative_ranks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStep {
    pub before: Permutation,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// A sequence of moves from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    pub start: Permutation,
    pub steps: Vec<PathStep>,
    pub end: Permutation,
}

impl WitnessPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every move under `system` and confirms the endpoints.
    pub fn verify(&self, system: &RewriteSystem) -> Result<()> {
        let mut cur = self.start;
        for step in &self.steps {
            if step.before != cur {
                return Err(Error::IllegalMove(format!(
                    "path step expects {} but is at {cur}",
                    step.before
                )));
            }
            cur = system.check_move(&cur, &step.mv)?;
        }
        if cur != self.end {
            return Err(Error::IllegalMove(format!("path ends at {cur}, not {}", self.end)));
        }
        Ok(())
    }
}

fn unrank(n: usize, index: u64) -> Permutation {
    let mut word = [0u8; MAX_LEN];
    unrank_word(n, index, &mut word[..n]);
    Permutation::from_zero_based(&word[..n])
}

#[derive(Clone, Debug, Default)]
pub struct Engine {
    config: EngineConfig,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine { config }
    }

    pub fn with_threads(threads: Option<usize>) -> Self {
        Engine::new(EngineConfig { threads, ..EngineConfig::default() })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn max_n(&self, mode: Mode) -> usize {
        match mode {
            Mode::General => self.config.max_n_general,
            _ => self.config.max_n_adjacent,
        }
        .min(MAX_LEN)
    }

    fn check_n(&self, n: usize, mode: Mode) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if n > self.max_n(mode) {
            return Err(Error::TooLarge(format!(
                "n = {n} exceeds the {mode} limit of {}",
                self.max_n(mode)
            )));
        }
        Ok(())
    }

    pub fn class_table(&self, n: usize, system: &RewriteSystem) -> Result<ClassTable> {
        self.check_n(n, system.mode())?;
        let total = factorial(n);
        if total > self.config.slot_budget {
            return Err(Error::TooLarge(format!(
                "{n}! = {total} slots exceeds the budget of {}",
                self.config.slot_budget
            )));
        }
        let uf = ConcurrentUnionFind::new(total as usize);
        const CHUNK: u64 = 1 << 12;
        let chunks = total.div_ceil(CHUNK);
        let sweep = || {
            (0..chunks).into_par_iter().for_each(|c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(total);
                let mut word = [0u8; MAX_LEN];
                let word = &mut word[..n];
                unrank_word(n, start, word);
                for r in start..end {
                    system.for_each_neighbor_word(word, |q| {
                        let rq = rank_of_word(q);
                        // Moves are symmetric, so each edge is merged from its lower end.
                        if rq > r {
                            uf.union(r as u32, rq as u32);
                        }
                    });
                    next_permutation(word);
                }
            })
        };
        match self.config.threads {
            Some(t) if t > 0 => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
                .install(sweep),
            _ => sweep(),
        }
        Ok(ClassTable { n, roots: uf.into_roots() })
    }

    pub fn classes(&self, n: usize, system: &RewriteSystem) -> Result<ClassesSummary> {
        Ok(self.class_table(n, system)?.summary())
    }

    fn bfs(&self, p: &Permutation, system: &RewriteSystem) -> Result<HashSet<Permutation>> {
        self.check_n(p.n(), system.mode())?;
        let mut seen = HashSet::from([*p]);
        let mut queue = VecDeque::from([*p]);
        while let Some(cur) = queue.pop_front() {
            system.for_each_neighbor_word(&cur.zero_based(), |q| {
                let q = Permutation::from_zero_based(q);
                if seen.insert(q) {
                    queue.push_back(q);
                }
            });
        }
        Ok(seen)
    }

    /// Every permutation equivalent to `p`, in rank order.
    pub fn eq_class(&self, p: &Permutation, system: &RewriteSystem) -> Result<Vec<Permutation>> {
        let mut members: Vec<Permutation> = self.bfs(p, system)?.into_iter().collect();
        members.sort_unstable();
        Ok(members)
    }

    pub fn class_size(&self, p: &Permutation, system: &RewriteSystem) -> Result<u64> {
        Ok(self.bfs(p, system)?.len() as u64)
    }

    pub fn identity_class_size(&self, n: usize, system: &RewriteSystem) -> Result<u64> {
        self.check_n(n, system.mode())?;
        self.class_size(&Permutation::identity(n), system)
    }

    /// A shortest move sequence from `p` to `q`, or `None` when they are
    /// not equivalent. Ties go to the lexicographically first move.
    pub fn reachable(
        &self,
        p: &Permutation,
        q: &Permutation,
        system: &RewriteSystem,
    ) -> Result<Option<WitnessPath>> {
        if p.n() != q.n() {
            return Err(Error::InvalidArgument(format!(
                "{p} and {q} have different lengths"
            )));
        }
        self.check_n(p.n(), system.mode())?;
        let mut parent: HashMap<Permutation, (Permutation, Move)> = HashMap::new();
        let mut seen = HashSet::from([*p]);
        let mut queue = VecDeque::from([*p]);
        let mut found = p == q;
        while !found {
            let Some(cur) = queue.pop_front() else { break };
            for m in system.moves(&cur) {
                let next = system.check_move(&cur, &m)?;
                if seen.insert(next) {
                    parent.insert(next, (cur, m));
                    if next == *q {
                        found = true;
                        break;
                    }
                    queue.push_back(next);
                }
            }
        }
        if !found {
            return Ok(None);
        }
        let mut steps = Vec::new();
        let mut cur = *q;
        while cur != *p {
            let (prev, mv) = parent.remove(&cur).expect("BFS tree reaches the start");
            steps.push(PathStep { before: prev, mv });
            cur = prev;
        }
        steps.reverse();
        Ok(Some(WitnessPath { start: *p, steps, end: *q }))
    }
}

/// Classes of `S_n` under `partition` in `mode`, with the default engine.
pub fn classes(n: usize, partition: &ReplacementPartition, mode: Mode) -> Result<ClassesSummary> {
    Engine::default().classes(n, &RewriteSystem::new(partition.clone(), mode))
}

pub fn eq_class(p: &Permutation, partition: &ReplacementPartition, mode: Mode) -> Result<Vec<Permutation>> {
    Engine::default().eq_class(p, &RewriteSystem::new(partition.clone(), mode))
}

pub fn identity_class_size(n: usize, partition: &ReplacementPartition, mode: Mode) -> Result<u64> {
    Engine::default().identity_class_size(n, &RewriteSystem::new(partition.clone(), mode))
}

pub fn reachable(
    p: &Permutation,
    q: &Permutation,
    partition: &ReplacementPartition,
    mode: Mode,
) -> Result<Option<WitnessPath>> {
    Engine::default().reachable(p, q, &RewriteSystem::new(partition.clone(), mode))
}
