//! Exhaustive enumeration of assemblies inside a bounding window.
//!
//! Expansion is level-synchronous (one tile per level) and parallel within a level.
//! With `reduce` set, a state branches only on a settled location: one whose
//! attachable options are the only options that can ever occupy it. Every
//! window-terminal assembly is still reached, since each must fill that location
//! with one of those options and attachments commute.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rtam_core::{Assembly, OrientedTile, Point, Side, TileSystem, Window};

use crate::engine::Engine;
use crate::error::SimError;
use crate::frontier::Attachment;

pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub window: Window,
    pub state_limit: usize,
    pub reduce: bool,
    pub collect_producible: bool,
    pub shuffle_seed: Option<u64>,
}

impl EnumOptions {
    pub fn new(window: Window) -> Self {
        EnumOptions {
            window,
            state_limit: DEFAULT_STATE_LIMIT,
            reduce: true,
            collect_producible: false,
            shuffle_seed: None,
        }
    }

    pub fn state_limit(mut self, limit: usize) -> Self {
        self.state_limit = limit;
        self
    }

    pub fn full(mut self) -> Self {
        self.reduce = false;
        self
    }

    pub fn collect(mut self) -> Self {
        self.collect_producible = true;
        self
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationResult {
    /// Visited assemblies, filled only when requested.
    pub producible: Vec<Assembly>,
    pub producible_count: usize,
    /// Assemblies with no attachment left inside the window.
    pub leaves: Vec<Assembly>,
    /// Leaves with no attachment anywhere.
    pub terminal: Vec<Assembly>,
    pub escaped: bool,
    pub truncated: bool,
    pub aborted: bool,
}

impl EnumerationResult {
    pub fn complete(&self) -> bool {
        !self.escaped && !self.truncated && !self.aborted
    }
}

/// Dense occupancy grid over the window; cell value is option index + 1, 0 when empty.
#[derive(Clone, Debug)]
pub struct Grid {
    pub window: Window,
    w: usize,
    h: usize,
}

impl Grid {
    fn new(window: Window) -> Self {
        Grid { window, w: window.width() as usize, h: window.height() as usize }
    }

    fn index(&self, p: Point) -> Option<usize> {
        self.window
            .contains(p)
            .then(|| (p.y - self.window.min.y) as usize * self.w + (p.x - self.window.min.x) as usize)
    }

    fn point(&self, i: usize) -> Point {
        Point::new(self.window.min.x + (i % self.w) as i64, self.window.min.y + (i / self.w) as i64)
    }

    fn len(&self) -> usize {
        self.w * self.h
    }
}

/// A visited state handed to the visitor.
pub struct Visit<'a> {
    grid: &'a Grid,
    engine: &'a Engine,
    cells: &'a [u16],
    /// No attachment remains inside the window.
    pub is_leaf: bool,
    /// Some attachment lands outside the window.
    pub escape: Option<Attachment>,
}

impl<'a> Visit<'a> {
    pub fn placements(&self) -> Vec<(Point, OrientedTile)> {
        placements(self.grid, self.engine, self.cells)
    }

    pub fn assembly(&self) -> Assembly {
        Assembly::from_placements(self.placements()).expect("grid cells are distinct")
    }

    pub fn is_terminal(&self) -> bool {
        self.is_leaf && self.escape.is_none()
    }
}

fn placements(grid: &Grid, engine: &Engine, cells: &[u16]) -> Vec<(Point, OrientedTile)> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (grid.point(i), engine.options[c as usize - 1].ot))
        .collect()
}

struct Space {
    grid: Grid,
    engine: Engine,
    /// Per cell and side: sorted glue ids that possible occupants present on that side.
    presented: Vec<[Vec<u32>; 4]>,
    possible: Vec<Vec<u16>>,
    reduce: bool,
}

struct Expansion {
    children: Vec<Vec<u16>>,
    escape: Option<Attachment>,
    leaf: bool,
}

impl Space {
    fn neighbors(&self, cells: &[u16], i: usize) -> [Option<u16>; 4] {
        let p = self.grid.point(i);
        Side::ALL.map(|s| {
            let j = self.grid.index(p.step(s))?;
            let c = cells[j];
            (c != 0).then(|| c - 1)
        })
    }

    /// Fixpoint over-approximation of options that can ever occupy each cell.
    fn compute_possible(&mut self, seed: &[(usize, u16)]) {
        let n = self.grid.len();
        let fixed: HashSet<usize> = seed.iter().map(|e| e.0).collect();
        self.possible = vec![Vec::new(); n];
        self.presented = vec![Default::default(); n];
        for &(i, o) in seed {
            self.possible[i] = vec![o];
            for s in Side::ALL {
                self.presented[i][s.index()] = vec![self.engine.glue(o, s)];
            }
        }
        let tau = self.engine.tau;
        loop {
            let mut changed = false;
            for i in 0..n {
                if fixed.contains(&i) {
                    continue;
                }
                let p = self.grid.point(i);
                for o in 0..self.engine.options.len() as u16 {
                    if self.possible[i].binary_search(&o).is_ok() {
                        continue;
                    }
                    let pot: u32 = Side::ALL
                        .iter()
                        .map(|&s| match self.grid.index(p.step(s)) {
                            Some(j) => self.max_bind(o, s, j),
                            None => 0,
                        })
                        .sum();
                    if pot >= tau {
                        let at = self.possible[i].binary_search(&o).unwrap_err();
                        self.possible[i].insert(at, o);
                        for s in Side::ALL {
                            let g = self.engine.glue(o, s);
                            let list = &mut self.presented[i][s.index()];
                            if let Err(k) = list.binary_search(&g) {
                                list.insert(k, g);
                            }
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Best bond option `o` could get on side `s` from any possible occupant of cell `j`.
    fn max_bind(&self, o: u16, s: Side, j: usize) -> u32 {
        let g = self.engine.glue(o, s);
        if g == 0 {
            return 0;
        }
        self.presented[j][s.opposite().index()]
            .iter()
            .map(|&h| self.engine.bind(g, h))
            .max()
            .unwrap_or(0)
    }

    fn escape_of(&self, cells: &[u16]) -> Option<Attachment> {
        for (i, &c) in cells.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let p = self.grid.point(i);
            for s in Side::ALL {
                let q = p.step(s);
                if self.grid.window.contains(q) {
                    continue;
                }
                if let Some(o) = self.engine.can_extend(c - 1, s) {
                    let ot = self.engine.options[o as usize].ot;
                    let strength = self.engine.bind(self.engine.glue(o, s.opposite()), self.engine.glue(c - 1, s));
                    return Some(Attachment {
                        location: q,
                        tile: ot.tile,
                        reflection: ot.reflection,
                        bound_strength: strength,
                    });
                }
            }
        }
        None
    }

    fn settled(&self, cells: &[u16], i: usize, available: &[(u16, u32)]) -> bool {
        let p = self.grid.point(i);
        let nb = self.neighbors(cells, i);
        self.possible[i].iter().all(|&o| {
            if available.iter().any(|a| a.0 == o) {
                return true;
            }
            let pot: u32 = Side::ALL
                .iter()
                .map(|&s| match (nb[s.index()], self.grid.index(p.step(s))) {
                    (Some(n), _) => self.engine.bind(self.engine.glue(o, s), self.engine.glue(n, s.opposite())),
                    (None, Some(j)) => self.max_bind(o, s, j),
                    (None, None) => 0,
                })
                .sum();
            pot < self.engine.tau
        })
    }

    fn expand(&self, cells: &[u16]) -> Expansion {
        let mut spots: Vec<(usize, Vec<(u16, u32)>)> = Vec::new();
        for i in 0..cells.len() {
            if cells[i] != 0 {
                continue;
            }
            let nb = self.neighbors(cells, i);
            if nb.iter().all(Option::is_none) {
                continue;
            }
            let att = self.engine.attachable(nb);
            if !att.is_empty() {
                spots.push((i, att));
            }
        }
        let escape = self.escape_of(cells);
        let leaf = spots.is_empty();
        let chosen: Vec<&(usize, Vec<(u16, u32)>)> = if self.reduce {
            let best = spots
                .iter()
                .filter(|(i, att)| self.settled(cells, *i, att))
                .min_by_key(|(i, att)| (att.len(), *i));
            match best {
                Some(b) => vec![b],
                None => spots.iter().collect(),
            }
        } else {
            spots.iter().collect()
        };
        let mut children = Vec::new();
        for (i, att) in chosen {
            for &(o, _) in att {
                let mut next = cells.to_vec();
                next[*i] = o + 1;
                children.push(next);
            }
        }
        Expansion { children, escape, leaf }
    }
}

/// Enumerates with default options and no visitor.
pub fn enumerate(sys: &TileSystem, window: Window, state_limit: usize) -> Result<EnumerationResult, SimError> {
    explore(sys, &EnumOptions::new(window).state_limit(state_limit), |_| ControlFlow::Continue(()))
}

/// Breadth-first closure from the seed. The visitor sees every visited state in a
/// deterministic order and may stop the search.
pub fn explore<F>(sys: &TileSystem, opts: &EnumOptions, mut visit: F) -> Result<EnumerationResult, SimError>
where
    F: FnMut(&Visit) -> ControlFlow<()>,
{
    let grid = Grid::new(opts.window);
    let engine = Engine::new(sys);
    let mut start = vec![0u16; grid.len()];
    let mut seed = Vec::new();
    for (p, ot) in sys.seed.iter() {
        let i = grid.index(p).ok_or(SimError::SeedOutsideWindow)?;
        let o = engine.option_of(ot).expect("seed tile belongs to the tile set");
        start[i] = o + 1;
        seed.push((i, o));
    }
    let mut space = Space { grid, engine, presented: Vec::new(), possible: Vec::new(), reduce: opts.reduce };
    if opts.reduce {
        space.compute_possible(&seed);
    }
    let mut rng = opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
    let mut result = EnumerationResult::default();
    let mut level = vec![start];
    loop {
        if let Some(rng) = rng.as_mut() {
            level.shuffle(rng);
        }
        let expansions: Vec<Expansion> = level.par_iter().map(|c| space.expand(c)).collect();
        let mut order: Vec<usize> = (0..level.len()).collect();
        order.sort_by(|&a, &b| level[a].cmp(&level[b]));
        for &k in &order {
            let (cells, ex) = (&level[k], &expansions[k]);
            result.producible_count += 1;
            let v = Visit { grid: &space.grid, engine: &space.engine, cells, is_leaf: ex.leaf, escape: ex.escape };
            if ex.escape.is_some() {
                result.escaped = true;
            }
            if opts.collect_producible {
                result.producible.push(v.assembly());
            }
            if ex.leaf {
                let a = v.assembly();
                if ex.escape.is_none() {
                    result.terminal.push(a.clone());
                }
                result.leaves.push(a);
            }
            if visit(&v).is_break() {
                result.aborted = true;
                return Ok(result);
            }
        }
        let mut next: Vec<Vec<u16>> = expansions.into_iter().flat_map(|e| e.children).collect();
        next.par_sort_unstable();
        next.dedup();
        if next.is_empty() {
            break;
        }
        if result.producible_count + next.len() > opts.state_limit {
            result.truncated = true;
            break;
        }
        level = next;
    }
    Ok(result)
}
