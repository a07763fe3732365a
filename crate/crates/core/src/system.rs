//! Tile systems: tile set, seed and temperature.

use crate::assembly::Assembly;
use crate::error::CoreError;
use crate::geometry::Point;
use crate::tile::{OrientedTile, TileSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSystem {
    pub tiles: TileSet,
    /// Seed placements with fixed orientations.
    pub seed: Assembly,
    pub temperature: u32,
}

impl TileSystem {
    pub fn new(tiles: TileSet, seed: Assembly, temperature: u32) -> Result<Self, CoreError> {
        if seed.is_empty() {
            return Err(CoreError::EmptySeed);
        }
        if temperature == 0 {
            return Err(CoreError::ZeroTemperature);
        }
        for (_, ot) in seed.iter() {
            tiles.try_get(ot.tile)?;
        }
        Ok(TileSystem { tiles, seed, temperature })
    }

    /// Convenience constructor for a one-tile seed.
    pub fn singly_seeded(
        tiles: TileSet,
        seed: OrientedTile,
        at: Point,
        temperature: u32,
    ) -> Result<Self, CoreError> {
        TileSystem::new(tiles, Assembly::single(at, seed), temperature)
    }

    pub fn single_seed(&self) -> Option<(Point, OrientedTile)> {
        if self.seed.len() == 1 {
            self.seed.iter().next()
        } else {
            None
        }
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }
}
