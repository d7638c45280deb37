//! Finite LA-semigroups (left almost semigroups) with exact-rational fuzzy
//! subsets, deciding every crisp and generalized `(∈_γ, ∈_γ∨q_δ)`-fuzzy ideal
//! class, plus verification campaigns that exercise the level-set, closure
//! and implication theorems on enumerated small structures.
//!
//! Entry points:
//! - [`algebra::CayleyTable`] and [`algebra::enumerate_la_semigroups`],
//! - [`crisp::is_crisp`] / [`crisp::enumerate_crisp`] for crisp ideal classes,
//! - [`fuzzy::FuzzySubset`] with lattice operations, the sup-min product and
//!   level cuts,
//! - [`gen::check_threshold`] and [`gen::check_pointwise`], two independent
//!   routes to every generalized fuzzy ideal verdict,
//! - [`theorems::run_campaign`] for seeded, reproducible theorem campaigns,
//! - [`io`] and [`cli`] for the JSON formats and the command-line tool.
//!
//! The `examples/` directory of this crate has one runnable program per
//! capability; `cargo run --example fuzzy_ideal_check` is a good start.

pub mod algebra;
pub mod cli;
pub mod crisp;
pub mod fuzzy;
pub mod gen;
pub mod io;
pub mod rat;
pub mod report;
pub mod theorems;

pub use algebra::{CayleyTable, ElemSet, EnumerationMode, Law, LawWitness};
pub use crisp::IdealKind;
pub use fuzzy::{CutKind, FuzzyPoint, FuzzySubset, PointRel, Thresholds};
pub use gen::{PointDefMode, Verdict};
pub use rat::Rat;
pub use report::ViolationReport;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("carrier size mismatch: expected {expected}, got {got}")]
    CarrierMismatch { expected: usize, got: usize },
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("table entry {entry} out of range for order {order}")]
    EntryOutOfRange { entry: usize, order: usize },
    #[error("bad label: {0}")]
    BadLabel(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("size {got} out of supported range {min}..={max}")]
    SizeOutOfRange { got: usize, min: usize, max: usize },
    #[error("grade {0} outside [0,1]")]
    GradeOutOfRange(Rat),
    #[error("thresholds must satisfy 0 <= gamma < delta <= 1, got gamma={gamma}, delta={delta}")]
    BadThresholds { gamma: Rat, delta: Rat },
    #[error("fuzzy point value {0} outside (0,1]")]
    BadPointValue(Rat),
    #[error("step subset needs hi >= delta and lo <= gamma with grades in [0,1]")]
    StepBounds,
    #[error("the pointwise check is undefined for quasi-ideals")]
    QuasiPointwise,
    #[error("the q-delta hypothesis requires 2*delta = 1 + gamma")]
    QDeltaUnbalanced,
    #[error("{op} closure is not stated for {kind:?}")]
    UnsupportedClosure { op: String, kind: IdealKind },
    #[error("fuzzy subset is not a characteristic function")]
    NotCharacteristic,
    #[error("cannot parse rational from '{0}'")]
    ParseRat(String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name '{0}'")]
    UnknownName(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
