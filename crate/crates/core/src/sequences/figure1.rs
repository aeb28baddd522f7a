use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{Mode, Preset};

const EMBEDDED: &str = include_str!("../../data/figure1.json");

/// Which of the two published tables a cell belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Number of equivalence classes of `S_n`.
    Classes,
    /// Size of the class containing the identity.
    Identity,
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::Classes, Kind::Identity];

    pub fn name(&self) -> &'static str {
        match self {
            Kind::Classes => "classes",
            Kind::Identity => "identity",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "classes" => Ok(Kind::Classes),
            "identity" => Ok(Kind::Identity),
            other => Err(Error::InvalidArgument(format!("unknown kind '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub presets: Vec<Preset>,
    pub mode: Mode,
    pub kind: Kind,
    pub values: Vec<u64>,
    #[serde(default)]
    pub label: Option<String>,
    /// Shaded in the published table: the value has a proof, not only data.
    #[serde(default)]
    pub proven: bool,
}

/// An annotation on one published entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Remark {
    pub preset: Preset,
    pub mode: Mode,
    pub kind: Kind,
    pub n: usize,
    pub note: String,
}

/// The published summary tables, indexed from `start_n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Figure1 {
    pub version: u32,
    pub start_n: usize,
    pub cells: Vec<Cell>,
    #[serde(default)]
    pub remarks: Vec<Remark>,
}

impl Figure1 {
    pub fn embedded() -> &'static Figure1 {
        static CELL: OnceLock<Figure1> = OnceLock::new();
        CELL.get_or_init(|| Figure1::from_json(EMBEDDED).expect("embedded figure data is valid"))
    }

    pub fn from_json(text: &str) -> Result<Figure1> {
        let fig: Figure1 =
            serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        for cell in &fig.cells {
            if cell.presets.is_empty() || cell.values.is_empty() {
                return Err(Error::Fixture(format!(
                    "empty cell for {} {}",
                    cell.mode, cell.kind
                )));
            }
        }
        Ok(fig)
    }

    pub fn from_path(path: &Path) -> Result<Figure1> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        Figure1::from_json(&text)
    }

    pub fn cell(&self, preset: Preset, mode: Mode, kind: Kind) -> Option<&Cell> {
        self.cells
            .iter()
            .find(|c| c.mode == mode && c.kind == kind && c.presets.contains(&preset))
    }

    /// The published sequence for a cell, starting at `start_n`.
    pub fn expected(&self, preset: Preset, mode: Mode, kind: Kind) -> Result<Vec<BigUint>> {
        self.cell(preset, mode, kind)
            .map(|c| c.values.iter().map(|&v| BigUint::from(v)).collect())
            .ok_or_else(|| {
                Error::NoPublishedData(format!("no published values for {preset} {mode} {kind}"))
            })
    }

    /// The published value at a single `n`, if the cell reaches that far.
    pub fn published(&self, preset: Preset, mode: Mode, kind: Kind, n: usize) -> Option<u64> {
        let cell = self.cell(preset, mode, kind)?;
        n.checked_sub(self.start_n).and_then(|i| cell.values.get(i).copied())
    }

    pub fn remark(&self, preset: Preset, mode: Mode, kind: Kind, n: usize) -> Option<&Remark> {
        self.remarks
            .iter()
            .find(|r| r.preset == preset && r.mode == mode && r.kind == kind && r.n == n)
    }
}

/// Published sequence for a cell of the embedded tables.
pub fn figure1_expected(preset: Preset, mode: Mode, kind: Kind) -> Result<Vec<BigUint>> {
    Figure1::embedded().expected(preset, mode, kind)
}
