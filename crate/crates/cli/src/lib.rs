//! Documents, renderers and the `rtam` command line.

pub mod app;
pub mod doc;
pub mod render;

pub use app::{run_cli, Outcome};
pub use doc::{parse_atam, parse_shape, parse_tileset, serialize_atam, serialize_tileset, DocError, TileSetDocument};
pub use render::{render, Format};
