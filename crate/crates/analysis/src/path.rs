//! Simple paths through binding graphs, with input and output sides.

use std::collections::{BTreeMap, VecDeque};

use rtam_core::{binds, Assembly, OrientedTile, Point, Reflection, Side, TileSet};
use rtam_sim::{attachment_for, AssemblySequence, Engine};

use crate::error::AnalysisError;
use crate::stretch::Mode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilePath {
    pub locations: Vec<Point>,
    pub tiles: Vec<OrientedTile>,
}

/// A path element with its tile and default-frame input/output sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub tile: usize,
    /// Orientation in the source path; stretching changes it only as needed.
    pub reflection: Reflection,
    pub input: Option<Side>,
    pub output: Option<Side>,
}

impl PathStep {
    pub fn reversed(self) -> PathStep {
        PathStep { tile: self.tile, reflection: self.reflection, input: self.output, output: self.input }
    }
}

impl TilePath {
    pub fn from_points(a: &Assembly, points: &[Point]) -> Result<Self, AnalysisError> {
        let tiles = points
            .iter()
            .map(|&p| a.get(p).ok_or(AnalysisError::NotInDomain(p)))
            .collect::<Result<_, _>>()?;
        Ok(TilePath { locations: points.to_vec(), tiles })
    }

    pub fn len(&self) -> usize {
        self.locations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locations.is_empty()
    }

    /// World side of element `i` facing element `i - 1`.
    pub fn input(&self, i: usize) -> Option<Side> {
        (i > 0).then(|| self.locations[i].side_towards(self.locations[i - 1])).flatten()
    }

    /// World side of element `i` facing element `i + 1`.
    pub fn output(&self, i: usize) -> Option<Side> {
        self.locations.get(i + 1).and_then(|&q| self.locations[i].side_towards(q))
    }

    pub fn steps(&self) -> Vec<PathStep> {
        (0..self.len())
            .map(|i| {
                let r = self.tiles[i].reflection;
                PathStep {
                    tile: self.tiles[i].tile,
                    reflection: r,
                    input: self.input(i).map(|s| r.side_map(s)),
                    output: self.output(i).map(|s| r.side_map(s)),
                }
            })
            .collect()
    }

    /// Checks adjacency and positive binding of consecutive elements.
    pub fn validate(&self, tiles: &TileSet) -> Result<(), AnalysisError> {
        for i in 1..self.len() {
            let s = self.input(i).ok_or(AnalysisError::BrokenPath(i - 1, i))?;
            let w = binds(tiles.observed(self.tiles[i], s), tiles.observed(self.tiles[i - 1], s.opposite()));
            if w == 0 {
                return Err(AnalysisError::BrokenPath(i - 1, i));
            }
        }
        Ok(())
    }

    pub fn assembly(&self) -> Result<Assembly, AnalysisError> {
        Ok(Assembly::from_placements(self.locations.iter().copied().zip(self.tiles.iter().copied()))
            .map_err(|_| AnalysisError::Collision(self.locations[0]))?)
    }

    /// Assembly sequence growing the path from its first element.
    pub fn sequence(&self, engine: &Engine) -> Result<AssemblySequence, AnalysisError> {
        let mut seq = AssemblySequence { seed: vec![(self.locations[0], self.tiles[0])], steps: vec![] };
        let mut a = Assembly::single(self.locations[0], self.tiles[0]);
        for i in 1..self.len() {
            let p = self.locations[i];
            let att = attachment_for(engine, &a, p, self.tiles[i]).ok_or(AnalysisError::Collision(p))?;
            a.insert(p, self.tiles[i]).map_err(|_| AnalysisError::Collision(p))?;
            seq.steps.push(att);
        }
        Ok(seq)
    }

    /// Number of consecutive pairs bound on east/west sides.
    pub fn ew_bonds(&self) -> usize {
        (1..self.len()).filter(|&i| self.input(i).is_some_and(|s| !s.is_vertical())).count()
    }

    pub fn ns_bonds(&self) -> usize {
        (1..self.len()).filter(|&i| self.input(i).is_some_and(Side::is_vertical)).count()
    }

    /// First mode in which every step moves along one of the mode's output sides.
    pub fn monotone_mode(&self) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| (0..self.len().saturating_sub(1)).all(|i| self.output(i).is_some_and(|s| m.outputs().contains(&s))))
    }

    pub fn end(&self) -> Point {
        *self.locations.last().expect("non-empty path")
    }
}

/// Shortest path from `x` to `y` through positive-strength bonds.
pub fn extract_path(tiles: &TileSet, a: &Assembly, x: Point, y: Point) -> Result<TilePath, AnalysisError> {
    shortest_to(tiles, a, x, |p| p == y).ok_or(AnalysisError::Disconnected(x, y)).and_then(|pts| {
        for p in [x, y] {
            if !a.contains(p) {
                return Err(AnalysisError::NotInDomain(p));
            }
        }
        TilePath::from_points(a, &pts)
    })
}

/// Breadth-first search from `x` to the nearest point accepted by `goal`.
pub fn shortest_to<F: Fn(Point) -> bool>(tiles: &TileSet, a: &Assembly, x: Point, goal: F) -> Option<Vec<Point>> {
    a.get(x)?;
    let mut prev: BTreeMap<Point, Point> = BTreeMap::new();
    let mut queue = VecDeque::from([x]);
    prev.insert(x, x);
    while let Some(p) = queue.pop_front() {
        if goal(p) {
            let mut out = vec![p];
            let mut cur = p;
            while cur != x {
                cur = prev[&cur];
                out.push(cur);
            }
            out.reverse();
            return Some(out);
        }
        let ot = a.get(p)?;
        for (s, q) in p.neighbors() {
            if prev.contains_key(&q) {
                continue;
            }
            if let Some(o) = a.get(q) {
                if binds(tiles.observed(ot, s), tiles.observed(o, s.opposite())) > 0 {
                    prev.insert(q, p);
                    queue.push_back(q);
                }
            }
        }
    }
    None
}

/// Lexicographically least `(i, j)` holding the same tile type in the same normalized reflection.
pub fn find_repetition(tiles: &TileSet, p: &TilePath) -> Option<(usize, usize)> {
    let norm: Vec<OrientedTile> = p.tiles.iter().map(|&t| tiles.normalize(t)).collect();
    (0..norm.len()).find_map(|i| ((i + 1)..norm.len()).find(|&j| norm[j] == norm[i]).map(|j| (i, j)))
}

/// Lexicographically least triple of indices holding the same tile type.
pub fn find_triple_repetition(p: &TilePath) -> Option<(usize, usize, usize)> {
    let n = p.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.tiles[j].tile != p.tiles[i].tile {
                continue;
            }
            if let Some(k) = ((j + 1)..n).find(|&k| p.tiles[k].tile == p.tiles[i].tile) {
                return Some((i, j, k));
            }
        }
    }
    None
}
