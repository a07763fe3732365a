//! Semantics of the reflexive tile assembly model: lattice geometry, reflections,
//! complementary glues, oriented tiles, assemblies and their stability.

pub mod assembly;
pub mod canonical;
pub mod error;
pub mod geometry;
pub mod glue;
pub mod mincut;
pub mod reflection;
pub mod system;
pub mod tile;

pub use assembly::{Assembly, BindingGraph, Configuration};
pub use canonical::{canonical_key, canonical_key_assembly, CanonicalKey};
pub use error::CoreError;
pub use geometry::{Point, Shape, Side, Window};
pub use glue::{binds, is_mismatch, Glue};
pub use reflection::{side_map, Reflection};
pub use system::TileSystem;
pub use tile::{observed_glue, OrientedTile, TileSet, TileType};
