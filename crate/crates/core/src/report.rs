//! Tables of computed values next to published and closed-form ones, and
//! the full verification sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::characterize::{Base, Characterization};
use crate::engine::{ClassesSummary, Engine};
use crate::error::{Error, Result};
use crate::permutation::{factorial, Permutation};
use crate::rewrite::{Mode, Mutation, Preset, ReplacementPartition, RewriteSystem};
use crate::sequences::{eval_u64, formula_for, gf_convolution_check, Figure1, Kind};

/// First size reported; smaller groups are degenerate for length-3 patterns.
pub const START_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Agrees with every comparand that exists.
    Match,
    /// Disagrees with a closed form or an internal consistency check.
    Mismatch,
    /// Agrees with any closed form but not with the published table.
    PublishedDisagrees,
    /// Nothing to compare against.
    Unpublished,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::PublishedDisagrees => "PUBLISHED_DISAGREES",
            Status::Unpublished => "UNPUBLISHED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    /// Preset name, or the block listing for other partitions.
    pub preset: String,
    pub mode: Mode,
    /// `classes`, `identity`, `characterization:<name>` or `invariant:<name>`.
    pub kind: String,
    pub n: usize,
    /// Brute-force value; for invariant rows, the number of violations.
    #[serde(rename = "value")]
    pub brute_force: u64,
    pub published: Option<u64>,
    /// Closed-form value, or the value a check predicts.
    pub formula: Option<u64>,
    pub status: Status,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRow {
    /// Whether this row makes a verification run fail. Published
    /// disagreements only count when the fixture has no remark on them.
    pub fn is_failure(&self) -> bool {
        match self.status {
            Status::Mismatch => true,
            Status::PublishedDisagrees => self.note.is_none(),
            Status::Match | Status::Unpublished => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}'"))),
        }
    }
}

pub const CSV_COLUMNS: [&str; 9] =
    ["preset", "mode", "kind", "n", "value", "published", "formula", "status", "provenance"];

fn opt(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn render(rows: &[VerificationRow], format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(rows)
            .map(|s| s + "\n")
            .map_err(|e| Error::InvalidArgument(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
            w.write_record(CSV_COLUMNS).map_err(io)?;
            for r in rows {
                w.write_record([
                    r.preset.clone(),
                    r.mode.to_string(),
                    r.kind.clone(),
                    r.n.to_string(),
                    r.brute_force.to_string(),
                    opt(r.published),
                    opt(r.formula),
                    r.status.to_string(),
                    r.provenance.clone(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Text => Ok(render_text(rows)),
    }
}

fn render_text(rows: &[VerificationRow]) -> String {
    let header = ["preset", "mode", "kind", "n", "value", "published", "formula", "status"];
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.preset.clone(),
                r.mode.to_string(),
                r.kind.clone(),
                r.n.to_string(),
                r.brute_force.to_string(),
                opt(r.published),
                opt(r.formula),
                r.status.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cols: &[String]| {
        let parts: Vec<String> = cols
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| if (3..7).contains(&i) { format!("{c:>w$}") } else { format!("{c:<w$}") })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = line(&header.map(String::from));
    out.push('\n');
    for (row, r) in cells.iter().zip(rows) {
        out.push_str(&line(row));
        if let Some(note) = &r.note {
            out.push_str("  # ");
            out.push_str(note);
        }
        out.push('\n');
    }
    out
}

pub fn preset_of(partition: &ReplacementPartition) -> Option<Preset> {
    Preset::ALL.into_iter().find(|p| p.partition() == *partition)
}

/// Largest `n` a table covers when none is requested.
pub fn default_n_max(mode: Mode) -> usize {
    match mode {
        Mode::General => 7,
        Mode::AdjBoth => 10,
        Mode::AdjPositions | Mode::AdjValues => 8,
    }
}

/// Compares a brute-force value with the published table and any closed form.
fn figure_row(
    figure: &Figure1,
    partition: &ReplacementPartition,
    mode: Mode,
    kind: Kind,
    n: usize,
    value: u64,
) -> VerificationRow {
    let preset = preset_of(partition);
    let published = preset.and_then(|p| figure.published(p, mode, kind, n));
    let formula_id = preset.and_then(|p| formula_for(p, mode, kind));
    let formula = formula_id.and_then(|id| eval_u64(id, n as u32).ok());
    let status = if formula.is_some_and(|f| f != value) {
        Status::Mismatch
    } else if published.is_some_and(|p| p != value) {
        Status::PublishedDisagrees
    } else if published.is_some() || formula.is_some() {
        Status::Match
    } else {
        Status::Unpublished
    };
    let mut provenance = vec!["brute-force".to_string()];
    if published.is_some() {
        provenance.push(format!("figure1 v{}", figure.version));
    }
    if let Some(id) = formula_id.filter(|_| formula.is_some()) {
        provenance.push(format!("formula {id}"));
    }
    let note = match (status, preset) {
        (Status::PublishedDisagrees, Some(p)) => {
            figure.remark(p, mode, kind, n).map(|r| r.note.clone())
        }
        _ => None,
    };
    VerificationRow {
        preset: partition.label(),
        mode,
        kind: kind.name().to_string(),
        n,
        brute_force: value,
        published,
        formula,
        status,
        provenance: provenance.join("; "),
        note,
    }
}

fn identity_size(summary: &ClassesSummary) -> u64 {
    // The identity has rank 0, so it represents its own class.
    debug_assert_eq!(summary.representative_ranks.first(), Some(&0));
    summary.class_sizes[0]
}

/// What [`table`] should compute.
#[derive(Clone, Debug)]
pub struct TableRequest {
    pub partitions: Vec<ReplacementPartition>,
    pub modes: Vec<Mode>,
    pub kinds: Vec<Kind>,
    /// `None` uses [`default_n_max`] per mode.
    pub n_max: Option<usize>,
    pub threads: Option<usize>,
    pub figure: Figure1,
}

impl TableRequest {
    pub fn new(partitions: Vec<ReplacementPartition>, modes: Vec<Mode>, kinds: Vec<Kind>) -> Self {
        TableRequest {
            partitions,
            modes,
            kinds,
            n_max: None,
            threads: None,
            figure: Figure1::embedded().clone(),
        }
    }
}

/// One row per (partition, mode, kind, n), `n` from [`START_N`].
pub fn table(req: &TableRequest, progress: &mut dyn FnMut(&str)) -> Result<Vec<VerificationRow>> {
    let engine = Engine::with_threads(req.threads);
    for &mode in &req.modes {
        let n_max = req.n_max.unwrap_or(default_n_max(mode));
        if n_max > engine.max_n(mode) {
            return Err(Error::TooLarge(format!(
                "n-max {n_max} exceeds the {mode} limit of {}",
                engine.max_n(mode)
            )));
        }
    }
    let mut rows = Vec::new();
    for partition in &req.partitions {
        for &mode in &req.modes {
            let system = RewriteSystem::new(partition.clone(), mode);
            for n in START_N..=req.n_max.unwrap_or(default_n_max(mode)) {
                progress(&format!("{} {mode} n={n}", partition.label()));
                let summary = if req.kinds.contains(&Kind::Classes) {
                    Some(engine.classes(n, &system)?)
                } else {
                    None
                };
                for &kind in &req.kinds {
                    let value = match (&summary, kind) {
                        (Some(s), Kind::Classes) => s.class_count,
                        (Some(s), Kind::Identity) => identity_size(s),
                        (None, _) => engine.identity_class_size(n, &system)?,
                    };
                    rows.push(figure_row(&req.figure, partition, mode, kind, n, value));
                }
            }
        }
    }
    Ok(rows)
}

/// Settings for [`verify`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub threads: Option<usize>,
    pub figure: Figure1,
    #[doc(hidden)]
    pub mutation: Option<Mutation>,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        VerifyConfig { n_max, threads: None, figure: Figure1::embedded().clone(), mutation: None }
    }
}

/// Largest `n` at which the exhaustive neighbor-symmetry check runs.
const SYMMETRY_N_MAX: usize = 6;

const SWEEP_MODES: [Mode; 3] = [Mode::General, Mode::AdjPositions, Mode::AdjBoth];

fn invariant_row(name: &str, label: String, mode: Mode, n: usize, violations: u64) -> VerificationRow {
    VerificationRow {
        preset: label,
        mode,
        kind: format!("invariant:{name}"),
        n,
        brute_force: violations,
        published: None,
        formula: Some(0),
        status: if violations == 0 { Status::Match } else { Status::Mismatch },
        provenance: "invariant".into(),
        note: None,
    }
}

fn symmetry_violations(n: usize, system: &RewriteSystem) -> u64 {
    let mut bad = 0;
    for p in Permutation::all(n) {
        for q in system.neighbors(&p) {
            if !system.neighbors(&q).contains(&p) {
                bad += 1;
            }
        }
    }
    bad
}

/// Every registered check up to `n_max`: published cells and closed forms,
/// characterizations, and structural invariants.
pub fn verify(cfg: &VerifyConfig, progress: &mut dyn FnMut(&str)) -> Result<Vec<VerificationRow>> {
    let engine = Engine::with_threads(cfg.threads);
    for mode in SWEEP_MODES {
        if cfg.n_max > engine.max_n(mode) {
            return Err(Error::TooLarge(format!(
                "n-max {} exceeds the {mode} limit of {}",
                cfg.n_max,
                engine.max_n(mode)
            )));
        }
    }
    let system = |partition: ReplacementPartition, mode: Mode| {
        RewriteSystem::new(partition, mode).with_mutation(cfg.mutation)
    };
    let mut rows = Vec::new();
    // (label, mode, n) -> summary, kept for the cross-mode invariants.
    let mut summaries: BTreeMap<(String, Mode, usize), ClassesSummary> = BTreeMap::new();

    for preset in Preset::NUMBERED {
        for mode in SWEEP_MODES {
            let sys = system(preset.partition(), mode);
            for n in START_N..=cfg.n_max {
                progress(&format!("{preset} {mode} n={n}"));
                let s = engine.classes(n, &sys)?;
                rows.push(figure_row(&cfg.figure, sys.partition(), mode, Kind::Classes, n, s.class_count));
                rows.push(figure_row(&cfg.figure, sys.partition(), mode, Kind::Identity, n, identity_size(&s)));
                let total_bad = u64::from(s.total() != factorial(n));
                rows.push(invariant_row("class-sizes-sum", preset.name().into(), mode, n, total_bad));
                if n <= SYMMETRY_N_MAX {
                    let bad = symmetry_violations(n, &sys);
                    rows.push(invariant_row("neighbor-symmetry", preset.name().into(), mode, n, bad));
                }
                summaries.insert((preset.name().into(), mode, n), s);
            }
        }
    }

    for preset in Preset::NUMBERED {
        for n in START_N..=cfg.n_max {
            let count = |mode| summaries[&(preset.name().to_string(), mode, n)].class_count;
            // A coarser relation has no more classes than a finer one.
            let (g, a, d) = (count(Mode::General), count(Mode::AdjPositions), count(Mode::AdjBoth));
            let bad = u64::from(g > a) + u64::from(a > d);
            rows.push(invariant_row("mode-monotonicity", preset.name().into(), Mode::General, n, bad));
        }
    }

    for n in START_N..=cfg.n_max {
        let s = &summaries[&("P3".to_string(), Mode::AdjPositions, n)];
        let even = s.class_sizes.iter().filter(|&&c| c % 2 == 0).count() as u64;
        rows.push(invariant_row("odd-class-sizes", "P3".into(), Mode::AdjPositions, n, even));
        if n % 2 == 1 && n > START_N {
            let prev = &summaries[&("P3".to_string(), Mode::AdjPositions, n - 1)];
            let bad = u64::from(identity_size(s) != n as u64 * identity_size(prev));
            rows.push(invariant_row("odd-n-recurrence", "P3".into(), Mode::AdjPositions, n, bad));
        }
    }

    for preset in Preset::NUMBERED {
        for n in START_N..=cfg.n_max.min(SYMMETRY_N_MAX + 1) {
            progress(&format!("{preset} values n={n}"));
            let values = engine.classes(n, &system(preset.partition(), Mode::AdjValues))?;
            let positions = &summaries[&(preset.name().to_string(), Mode::AdjPositions, n)];
            let bad = u64::from(values.size_multiset() != positions.size_multiset());
            rows.push(invariant_row("inverse-conjugation", preset.name().into(), Mode::AdjValues, n, bad));
        }
    }

    let conv = gf_convolution_check(cfg.n_max.max(4) as u32)?;
    rows.push(invariant_row(
        "catalan-convolution",
        "P4".into(),
        Mode::AdjPositions,
        cfg.n_max.max(4),
        u64::from(!conv.holds()),
    ));

    for ch in Characterization::ALL {
        for n in START_N..=cfg.n_max {
            progress(&format!("{} n={n}", ch.name()));
            rows.push(characterization_row(&ch, n, &engine, cfg.mutation)?);
        }
    }
    Ok(rows)
}

fn characterization_row(
    ch: &Characterization,
    n: usize,
    engine: &Engine,
    mutation: Option<Mutation>,
) -> Result<VerificationRow> {
    let report = ch.check_with(n, engine, mutation)?;
    let note = (!report.mismatch_examples.is_empty()).then(|| {
        let ex: Vec<String> = report.mismatch_examples.iter().map(|p| p.to_string()).collect();
        format!("mismatches: {}", ex.join(" "))
    });
    let what = if ch.base() == Base::All { "representatives" } else { "members" };
    Ok(VerificationRow {
        preset: report.partition.clone(),
        mode: report.mode,
        kind: format!("characterization:{}", ch.name().replace(' ', "-")),
        n,
        brute_force: report.engine_set_size,
        published: None,
        formula: Some(report.predicted_set_size),
        status: if report.success() { Status::Match } else { Status::Mismatch },
        provenance: format!("predicate {what} vs engine ({} class)", report.base),
        note,
    })
}

/// Whether any row fails the run.
pub fn has_failures(rows: &[VerificationRow]) -> bool {
    rows.iter().any(VerificationRow::is_failure)
}
