//! Assembly dynamics: frontiers, sequences, exhaustive enumeration and the
//! verification predicates built on it.

pub mod engine;
pub mod enumerate;
pub mod error;
pub mod frontier;
pub mod predicates;
pub mod run;

pub use engine::Engine;
pub use enumerate::{enumerate, explore, EnumOptions, EnumerationResult, Visit, DEFAULT_STATE_LIMIT};
pub use error::SimError;
pub use frontier::{attachment_for, frontier, frontier_with, replay, step, AssemblySequence, Attachment};
pub use predicates::{
    default_window, is_directed, is_mismatch_free, is_strongly_directed, verify_strict, verify_weak,
    DirectedWitness, MismatchWitness, ShapeWitness, Verdict,
};
pub use run::{run, Run, RunOptions};
