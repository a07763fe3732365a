//! Constructive machinery on paths: stretching, pumping, reflected families,
//! square witnesses and periodic structure of directed systems.

pub mod error;
pub mod fixtures;
pub mod path;
pub mod periodic;
pub mod sdp;
pub mod stretch;
pub mod witness;

pub use error::AnalysisError;
pub use periodic::{periodic_structure, simulated_points, validate, Comparison, Component, ComponentKind, PeriodicStructure};
pub use path::{extract_path, find_repetition, find_triple_repetition, PathStep, TilePath};
pub use stretch::{
    grow_two_arms, pump_path, pump_steps, reflect_segment_family, stretch_path, stretch_steps, two_arm_stretch, Flip,
    Mode, Stretched, TwoArm,
};

pub use sdp::{sdp_contains, SemiDoublyPeriodicSet};
pub use witness::{even_square_witness, odd_lower_bound_witness, CornerWitness};
