//! Equivalence classes of permutations under constrained pattern-replacement
//! moves: the move relation itself, exhaustive class computation over `S_n`,
//! structural characterizations of particular classes, closed-form
//! enumerations, and a verification report tying them together.

pub mod characterize;
pub mod engine;
pub mod error;
pub mod permutation;
pub mod report;
pub mod rewrite;
pub mod sequences;

pub use engine::{ClassesSummary, Engine, EngineConfig, WitnessPath};
pub use error::{Error, Result};
pub use permutation::{standardize, Permutation, Rank};
pub use rewrite::{
    apply_move, neighbors, occurrences, parse_partition, Mode, Move, Pattern, Preset,
    ReplacementPartition, RewriteSystem,
};
pub use sequences::{eval, figure1_expected, gf_convolution_check, Kind, SequenceId};
pub use characterize::{check_characterization, Base, Characterization, CharacterizationReport};
pub use report::{render, table, verify, Format, Status, TableRequest, VerificationRow, VerifyConfig};
