//! Tile types, oriented tiles and tile sets.

use std::collections::HashMap;

use crate::error::CoreError;
use crate::geometry::Side;
use crate::glue::Glue;
use crate::reflection::Reflection;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TileType {
    pub name: String,
    /// Default-orientation glues indexed by [`Side::index`].
    pub glues: [Glue; 4],
}

impl TileType {
    pub fn new(name: impl Into<String>, n: Glue, e: Glue, s: Glue, w: Glue) -> Self {
        TileType { name: name.into(), glues: [n, e, s, w] }
    }

    pub fn glue(&self, side: Side) -> &Glue {
        &self.glues[side.index()]
    }

    pub fn set_glue(&mut self, side: Side, g: Glue) {
        self.glues[side.index()] = g;
    }

    /// Glue seen on world side `s` when placed with reflection `r`.
    pub fn observed(&self, r: Reflection, s: Side) -> &Glue {
        self.glue(r.side_map(s))
    }

    /// Reflections that leave every observed glue unchanged.
    pub fn stabilizer(&self) -> Vec<Reflection> {
        Reflection::ALL
            .into_iter()
            .filter(|&r| Side::ALL.iter().all(|&s| self.observed(r, s) == self.glue(s)))
            .collect()
    }

    /// Least reflection producing the same observed glues as `r`.
    pub fn normalize(&self, r: Reflection) -> Reflection {
        self.stabilizer()
            .into_iter()
            .map(|k| r.compose(k))
            .min()
            .unwrap_or(r)
    }

    pub fn is_blank(&self) -> bool {
        self.glues.iter().all(Glue::is_null)
    }
}

/// A tile type (by index into its tile set) placed with a reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedTile {
    pub tile: usize,
    pub reflection: Reflection,
}

impl OrientedTile {
    pub fn new(tile: usize, reflection: Reflection) -> Self {
        OrientedTile { tile, reflection }
    }
}

/// Ordered tile types with unique names.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TileSet {
    tiles: Vec<TileType>,
    by_name: HashMap<String, usize>,
}

impl TileSet {
    pub fn new(tiles: Vec<TileType>) -> Result<Self, CoreError> {
        let mut by_name = HashMap::new();
        for (i, t) in tiles.iter().enumerate() {
            if by_name.insert(t.name.clone(), i).is_some() {
                return Err(CoreError::DuplicateTile(t.name.clone()));
            }
        }
        Ok(TileSet { tiles, by_name })
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, i: usize) -> &TileType {
        &self.tiles[i]
    }

    pub fn try_get(&self, i: usize) -> Result<&TileType, CoreError> {
        self.tiles.get(i).ok_or(CoreError::TileIndex(i))
    }

    pub fn index_of(&self, name: &str) -> Result<usize, CoreError> {
        self.by_name.get(name).copied().ok_or_else(|| CoreError::UnknownTile(name.to_string()))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TileType> {
        self.tiles.iter()
    }

    pub fn tiles(&self) -> &[TileType] {
        &self.tiles
    }

    pub fn observed(&self, ot: OrientedTile, s: Side) -> &Glue {
        self.tiles[ot.tile].observed(ot.reflection, s)
    }

    pub fn normalize(&self, ot: OrientedTile) -> OrientedTile {
        OrientedTile::new(ot.tile, self.tiles[ot.tile].normalize(ot.reflection))
    }
}

/// Glue seen on world side `s` of an oriented tile.
pub fn observed_glue<'a>(tiles: &'a TileSet, ot: OrientedTile, s: Side) -> &'a Glue {
    tiles.observed(ot, s)
}
