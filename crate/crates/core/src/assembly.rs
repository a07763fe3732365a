//! Assemblies, configurations and binding graphs.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::geometry::{Point, Side, Window};
use crate::glue::{binds, is_mismatch};
use crate::mincut::{global_min_cut, Edge};
use crate::reflection::Reflection;
use crate::tile::{OrientedTile, TileSet};

/// Partial map from lattice points to oriented tiles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Assembly {
    placements: BTreeMap<Point, OrientedTile>,
}

impl Assembly {
    pub fn empty() -> Self {
        Assembly::default()
    }

    pub fn single(p: Point, ot: OrientedTile) -> Self {
        Assembly { placements: BTreeMap::from([(p, ot)]) }
    }

    pub fn from_placements<I: IntoIterator<Item = (Point, OrientedTile)>>(
        items: I,
    ) -> Result<Self, CoreError> {
        let mut a = Assembly::empty();
        for (p, ot) in items {
            a.insert(p, ot)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, p: Point, ot: OrientedTile) -> Result<(), CoreError> {
        if self.placements.contains_key(&p) {
            return Err(CoreError::Occupied(p));
        }
        self.placements.insert(p, ot);
        Ok(())
    }

    /// Copy with one more placement.
    pub fn with(&self, p: Point, ot: OrientedTile) -> Result<Self, CoreError> {
        let mut a = self.clone();
        a.insert(p, ot)?;
        Ok(a)
    }

    pub fn get(&self, p: Point) -> Option<OrientedTile> {
        self.placements.get(&p).copied()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.placements.contains_key(&p)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, OrientedTile)> + '_ {
        self.placements.iter().map(|(&p, &ot)| (p, ot))
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.placements.keys().copied()
    }

    pub fn bounds(&self) -> Option<Window> {
        Window::bounding(self.domain())
    }

    pub fn configuration(&self) -> Configuration {
        Configuration { typing: self.placements.iter().map(|(&p, ot)| (p, ot.tile)).collect() }
    }

    /// Applies a global reflection about the origin, then a translation.
    pub fn transformed(&self, r: Reflection, shift: Point) -> Assembly {
        let placements = self
            .placements
            .iter()
            .map(|(&p, ot)| (r.apply(p) + shift, OrientedTile::new(ot.tile, ot.reflection.compose(r))))
            .collect();
        Assembly { placements }
    }

    /// Points of the given tile types.
    pub fn positions_of(&self, types: &[usize]) -> Vec<Point> {
        self.iter().filter(|(_, ot)| types.contains(&ot.tile)).map(|(p, _)| p).collect()
    }

    pub fn binding_graph(&self, tiles: &TileSet) -> BindingGraph {
        let vertices: Vec<Point> = self.domain().collect();
        let index: BTreeMap<Point, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut edges = Vec::new();
        for (i, &p) in vertices.iter().enumerate() {
            let ot = self.placements[&p];
            for s in [Side::E, Side::N] {
                let q = p.step(s);
                if let Some(&j) = index.get(&q) {
                    let w = binds(tiles.observed(ot, s), tiles.observed(self.placements[&q], s.opposite()));
                    if w > 0 {
                        edges.push((i, j, w as u64));
                    }
                }
            }
        }
        BindingGraph { vertices, edges }
    }

    pub fn is_tau_stable(&self, tiles: &TileSet, tau: u32) -> bool {
        let g = self.binding_graph(tiles);
        match global_min_cut(g.vertices.len(), &g.edges) {
            None => true,
            Some(c) => c >= tau as u64,
        }
    }

    /// Abutting sides that are neither both null nor bound, as `(point, side)` with side E or N.
    pub fn mismatches(&self, tiles: &TileSet) -> Vec<(Point, Side)> {
        let mut out = Vec::new();
        for (&p, &ot) in &self.placements {
            for s in [Side::E, Side::N] {
                if let Some(&o) = self.placements.get(&p.step(s)) {
                    if is_mismatch(tiles.observed(ot, s), tiles.observed(o, s.opposite())) {
                        out.push((p, s));
                    }
                }
            }
        }
        out
    }

    /// Total strength binding a tile at `p` (placed as `ot`) to its occupied neighbors.
    pub fn strength_at(&self, tiles: &TileSet, p: Point, ot: OrientedTile) -> u32 {
        p.neighbors()
            .into_iter()
            .filter_map(|(s, q)| {
                let o = self.placements.get(&q)?;
                Some(binds(tiles.observed(ot, s), tiles.observed(*o, s.opposite())) as u32)
            })
            .sum()
    }
}

/// Orientation-free view of an assembly: point to tile index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Configuration {
    pub typing: BTreeMap<Point, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BindingGraph {
    pub vertices: Vec<Point>,
    /// `(i, j, strength)` over indices into `vertices`.
    pub edges: Vec<Edge>,
}

impl BindingGraph {
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}
