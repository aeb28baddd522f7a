//! Acceptance checks, one line of output per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! console. A criterion whose only failures are pinned in `KNOWN_CONFLICTS`
//! still prints FAIL but does not fail the run; anything else exits non-zero.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use permeq::characterize::Characterization;
use permeq::permutation::factorial;
use permeq::sequences::{eval_u64, formula_for, Figure1, Kind};
use permeq::{parse_partition, ClassesSummary, Engine, Mode, Permutation, Preset, ReplacementPartition, RewriteSystem};

/// Every numeric comparison is exact.
const TOLERANCE: u64 = 0;

const CLASSES_N_MAX: usize = 8;
const CLASSES_N_MAX_GENERAL: usize = 7;
const CLASSES_BUDGET: Duration = Duration::from_secs(60);
/// The one published entry criterion 1 allows to be flagged instead of matched.
const FLAGGED_ENTRY: (Preset, Mode, usize) = (Preset::P4, Mode::AdjPositions, 8);

const IDENTITY_N_MAX_DOUBLY: usize = 10;
const IDENTITY_N_MAX_ADJACENT: usize = 9;
const IDENTITY_N_MAX_GENERAL: usize = 7;
const IDENTITY_BUDGET: Duration = Duration::from_secs(120);
/// Published identity sizes that contradict the same table's class counts.
/// P7 general at n=3: three classes out of six forces sizes {4,1,1}, so the
/// identity class has 4 elements, not 3.
const KNOWN_CONFLICTS: [(Preset, Mode, usize, u64, u64); 1] = [(Preset::P7, Mode::General, 3, 4, 3)];

const FORMULA_N_MAX: usize = 8;
const FORMULA_N_MAX_DOUBLY: usize = 10;

const CHARACTERIZATION_N_MAX: usize = 7;

const PROPERTY_N_MAX: usize = 6;
const ODD_SIZES_N_MAX: usize = 8;
const RECURRENCE_NS: [usize; 2] = [5, 7];

const DETERMINISM_N: usize = 7;
/// Oversubscribe on small machines so the parallel path really runs.
const DETERMINISM_MIN_THREADS: usize = 4;

const FIGURE_MODES: [Mode; 3] = [Mode::General, Mode::AdjPositions, Mode::AdjBoth];
const ALL_MODES: [Mode; 4] = [Mode::General, Mode::AdjPositions, Mode::AdjBoth, Mode::AdjValues];

struct Outcome {
    pass: bool,
    /// Failed, but only on pinned entries.
    known: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome { pass, known: false, detail }
    }
}

// Stays a comparison so a nonzero tolerance needs only the constant changed.
#[allow(clippy::absurd_extreme_comparisons)]
fn agrees(a: u64, b: u64) -> bool {
    a.abs_diff(b) <= TOLERANCE
}

fn published_entries(kind: Kind) -> Vec<(Preset, Mode, usize, u64)> {
    let fig = Figure1::embedded();
    let mut out = Vec::new();
    for preset in Preset::NUMBERED {
        for mode in FIGURE_MODES {
            let Some(cell) = fig.cell(preset, mode, kind) else { continue };
            for (i, &v) in cell.values.iter().enumerate() {
                out.push((preset, mode, fig.start_n + i, v));
            }
        }
    }
    out
}

fn class_counts(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let mut cache: BTreeMap<(Preset, Mode, usize), u64> = BTreeMap::new();
    let (mut checked, mut bad, mut flagged) = (0, Vec::new(), String::new());
    for (preset, mode, n, published) in published_entries(Kind::Classes) {
        let cap = if mode == Mode::General { CLASSES_N_MAX_GENERAL } else { CLASSES_N_MAX };
        if n > cap {
            continue;
        }
        let value = *cache.entry((preset, mode, n)).or_insert_with(|| {
            engine.classes(n, &RewriteSystem::preset(preset, mode)).unwrap().class_count
        });
        if (preset, mode, n) == FLAGGED_ENTRY {
            let verdict = if agrees(value, published) { "agrees" } else { "disagrees" };
            flagged = format!("; flagged {preset} {mode} n={n}: brute force {value}, published {published} ({verdict})");
            continue;
        }
        checked += 1;
        if !agrees(value, published) {
            bad.push(format!("{preset} {mode} n={n}: {value} vs {published}"));
        }
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed <= CLASSES_BUDGET;
    Outcome::new(
        bad.is_empty() && !flagged.is_empty() && in_budget,
        format!(
            "{checked} entries, {} mismatches{}{flagged}; {:.1?} (budget {:?})",
            bad.len(),
            list(&bad),
            elapsed,
            CLASSES_BUDGET
        ),
    )
}

fn identity_sizes(engine: &Engine) -> Outcome {
    let start = Instant::now();
    let (mut checked, mut bad, mut known) = (0, Vec::new(), Vec::new());
    for (preset, mode, n, published) in published_entries(Kind::Identity) {
        let cap = match mode {
            Mode::General => IDENTITY_N_MAX_GENERAL,
            Mode::AdjBoth => IDENTITY_N_MAX_DOUBLY,
            _ => IDENTITY_N_MAX_ADJACENT,
        };
        if n > cap {
            continue;
        }
        checked += 1;
        let value = engine.identity_class_size(n, &RewriteSystem::preset(preset, mode)).unwrap();
        if !agrees(value, published) {
            let entry = format!("{preset} {mode} n={n}: brute force {value}, published {published}");
            if KNOWN_CONFLICTS.contains(&(preset, mode, n, value, published)) {
                known.push(entry + " (published value conflicts with its class count)");
            } else {
                bad.push(entry);
            }
        }
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed <= IDENTITY_BUDGET;
    let mut all = bad.clone();
    all.extend(known.iter().cloned());
    Outcome {
        pass: all.is_empty() && in_budget,
        known: bad.is_empty() && !known.is_empty() && in_budget,
        detail: format!(
            "{checked} entries, {} mismatches{}; {:.1?} (budget {:?})",
            all.len(),
            list(&all),
            elapsed,
            IDENTITY_BUDGET
        ),
    }
}

fn closed_forms(engine: &Engine) -> Outcome {
    let (mut checked, mut cells, mut bad) = (0, 0, Vec::new());
    for preset in Preset::NUMBERED {
        for mode in FIGURE_MODES {
            for kind in Kind::ALL {
                let Some(id) = formula_for(preset, mode, kind) else { continue };
                cells += 1;
                let cap = if mode == Mode::AdjBoth { FORMULA_N_MAX_DOUBLY } else { FORMULA_N_MAX };
                let sys = RewriteSystem::preset(preset, mode);
                for n in (id.min_n() as usize).max(1)..=cap {
                    let value = match kind {
                        Kind::Classes => engine.classes(n, &sys).unwrap().class_count,
                        Kind::Identity => engine.identity_class_size(n, &sys).unwrap(),
                    };
                    let formula = eval_u64(id, n as u32).unwrap();
                    checked += 1;
                    if !agrees(value, formula) {
                        bad.push(format!("{id} {preset} {mode} n={n}: {value} vs {formula}"));
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{cells} cells, {checked} values, {} mismatches{}", bad.len(), list(&bad)),
    )
}

fn characterizations(engine: &Engine) -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for ch in Characterization::ALL {
        for n in 1..=CHARACTERIZATION_N_MAX {
            let r = ch.check(n, engine).unwrap();
            checked += 1;
            if !r.success() {
                bad.push(format!(
                    "{} n={n}: predicted {} engine {} examples {:?}",
                    ch.name(),
                    r.predicted_set_size,
                    r.engine_set_size,
                    r.mismatch_examples.iter().map(ToString::to_string).collect::<Vec<_>>()
                ));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} characterizations x n<={CHARACTERIZATION_N_MAX}: {checked} checks, {} mismatches{}",
            Characterization::ALL.len(),
            bad.len(),
            list(&bad)
        ),
    )
}

fn properties(engine: &Engine) -> Outcome {
    let mut violations: BTreeMap<&str, u64> = BTreeMap::new();
    let mut bump = |name: &'static str, bad: bool| *violations.entry(name).or_insert(0) += u64::from(bad);
    let mut summaries: Vec<ClassesSummary> = Vec::new();

    let mut partitions: Vec<ReplacementPartition> = Preset::ALL.iter().map(Preset::partition).collect();
    partitions.push(parse_partition("321,312,231").unwrap());

    for part in &partitions {
        let sys = |mode| RewriteSystem::new(part.clone(), mode);
        let inv = |mode| RewriteSystem::new(part.inverse(), mode);
        let (g, a, b, v) = (sys(Mode::General), sys(Mode::AdjPositions), sys(Mode::AdjBoth), sys(Mode::AdjValues));
        let (g_inv, v_inv) = (inv(Mode::General), inv(Mode::AdjValues));
        for n in 1..=PROPERTY_N_MAX {
            for p in Permutation::all(n) {
                for s in [&g, &a, &b, &v] {
                    for q in s.neighbors(&p) {
                        bump("neighbor symmetry", !s.neighbors(&q).contains(&p));
                    }
                }
                let (ng, na, nb, nv) = (g.neighbors(&p), a.neighbors(&p), b.neighbors(&p), v.neighbors(&p));
                bump("mode monotonicity", !nb.is_subset(&na) || !na.is_subset(&ng));
                bump("mode monotonicity", !nv.is_subset(&g_inv.neighbors(&p)) || !nb.is_subset(&v_inv.neighbors(&p)));
            }
            let per_mode: Vec<ClassesSummary> = [&g, &a, &b, &v].iter().map(|s| engine.classes(n, s).unwrap()).collect();
            bump("mode monotonicity", per_mode[0].class_count > per_mode[1].class_count);
            bump("mode monotonicity", per_mode[1].class_count > per_mode[2].class_count);
            bump("inverse conjugation", per_mode[3].size_multiset() != per_mode[1].size_multiset());
            summaries.extend(per_mode);
        }
    }

    for fine in &partitions {
        for coarse in &partitions {
            if fine == coarse || !fine.refines(coarse) {
                continue;
            }
            for mode in ALL_MODES {
                for n in 1..=PROPERTY_N_MAX {
                    let f = engine.class_table(n, &RewriteSystem::new(fine.clone(), mode)).unwrap();
                    let c = engine.class_table(n, &RewriteSystem::new(coarse.clone(), mode)).unwrap();
                    for (_, members) in f.classes() {
                        bump("refinement monotonicity", members.iter().any(|p| !c.same_class(p, &members[0])));
                    }
                    bump("refinement monotonicity", f.summary().class_count < c.summary().class_count);
                }
            }
        }
    }

    let p3_adjacent = RewriteSystem::preset(Preset::P3, Mode::AdjPositions);
    for n in 1..=ODD_SIZES_N_MAX {
        let s = engine.classes(n, &p3_adjacent).unwrap();
        bump("odd class sizes", s.class_sizes.iter().any(|c| c % 2 == 0));
        summaries.push(s);
    }
    for n in RECURRENCE_NS {
        let here = engine.identity_class_size(n, &p3_adjacent).unwrap();
        let before = engine.identity_class_size(n - 1, &p3_adjacent).unwrap();
        bump("odd-n recurrence", here != n as u64 * before);
    }
    for s in &summaries {
        bump("class sizes sum to n!", s.total() != factorial(s.n));
    }

    let total: u64 = violations.values().sum();
    let parts: Vec<String> = violations.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Outcome::new(
        total == 0,
        format!("{total} violations ({}); {} summaries", parts.join(", "), summaries.len()),
    )
}

fn determinism() -> Outcome {
    let max = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).max(DETERMINISM_MIN_THREADS);
    let run = |sys: &RewriteSystem, t: usize| {
        let engine = Engine::with_threads(Some(t));
        let summary = serde_json::to_vec(&engine.classes(DETERMINISM_N, sys).unwrap()).unwrap();
        let table = engine.class_table(DETERMINISM_N, sys).unwrap().classes();
        (summary, table)
    };
    let mut parts = Vec::new();
    let mut same = true;
    // P5 is the required case; P2 adds one with many classes.
    for preset in [Preset::P5, Preset::P2] {
        let sys = RewriteSystem::preset(preset, Mode::General);
        let (one, all) = (run(&sys, 1), run(&sys, max));
        same &= one == all;
        parts.push(format!("{preset} general n={DETERMINISM_N} {} classes {} bytes", one.1.len(), one.0.len()));
    }
    Outcome::new(same, format!("1 thread vs {max} threads, identical: {same} ({})", parts.join(", ")))
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(" [{}]", items.join("; "))
    }
}

fn main() {
    let engine = Engine::default();
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: [(&str, Check); 6] = [
        ("published class counts", Box::new(|| class_counts(&engine))),
        ("published identity-class sizes", Box::new(|| identity_sizes(&engine))),
        ("closed forms vs brute force", Box::new(|| closed_forms(&engine))),
        ("characterizations vs engine", Box::new(|| characterizations(&engine))),
        ("property suites", Box::new(|| properties(&engine))),
        ("thread-count determinism", Box::new(determinism)),
    ];
    let (mut failed, mut unexplained) = (0, 0);
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        failed += usize::from(!out.pass);
        unexplained += usize::from(!out.pass && !out.known);
        println!(
            "acceptance criterion {} ({name}): {} : {}",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed; {} failing only on pinned published-data conflicts",
        criteria.len() - failed,
        criteria.len(),
        failed - unexplained
    );
    if unexplained > 0 {
        std::process::exit(1);
    }
}
