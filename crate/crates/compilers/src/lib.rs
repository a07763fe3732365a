//! Tile-set generators and converters.

pub mod atam;
pub mod eps;
pub mod error;
pub mod scale2;
pub mod squares;
pub mod symmetric;
pub mod zigzag;

pub use atam::{AGlue, ARun, ATamSystem, ATile};
pub use eps::{compile_eps_symmetric, eps_symmetric, EpsVerdict, ShapeTree};
pub use error::CompileError;
pub use scale2::{atam_tree, compile_scale2, shape_to_tree_atam, shape_tree, verify_scaled};
pub use squares::{gen_odd_rect, gen_odd_square};
pub use symmetric::{gen_odd_symmetric_weak, is_odd_symmetric, odd_symmetry_axes, Axis};
pub use zigzag::{
    check_compact_zigzag, compare_conversion, convert_zigzag, decode_counter, gen_counter_zigzag,
    ConversionComparison, TileForm, ZigzagReport,
};
