//! Shapes scaled by two from 2×2 blocks of temperature-2 tiles.
//!
//! Each source cell becomes a block grown in a fixed order. In the frame where
//! the parent block lies south, with cells `A = (0,0)`, `B = (1,0)`,
//! `C = (1,1)` and `D = (0,1)`:
//! - `A` binds the parent by one strength-2 glue;
//! - `B` binds the parent and `A` cooperatively;
//! - `C` binds `B` by one strength-2 glue;
//! - `D` binds `A` and `C` cooperatively.
//!
//! `A` and `C` are held by one bond each and may flip across it, so each shows
//! the same glue on both of its lateral sides. The outward copy faces a
//! neighboring block and must be bound there too. Each block picks one of the
//! two mirror images of this layout, and the compiler searches for a choice in
//! which every outward copy meets a compatible side. The root block holds the
//! seed in a corner, two single-bond tiles beside it and a cooperative tile opposite.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::ControlFlow;

use rtam_core::{Glue, OrientedTile, Point, Reflection, Shape, Side, TileSet, TileSystem, TileType, Window};
use rtam_sim::{is_mismatch_free, verify_strict, Verdict};

use crate::atam::{AGlue, ATamSystem, ATile};
use crate::eps::ShapeTree;
use crate::error::CompileError;

/// Enumeration budget per verification of a candidate block layout.
pub const SCALE2_STATE_LIMIT: usize = 200_000;
/// Candidate layouts confirmed by enumeration per tree and seed cell.
pub const SCALE2_ATTEMPTS: usize = 64;
/// Spanning trees tried after the breadth-first one.
pub const SCALE2_TREES: usize = 64;

/// Spanning tree of `s` by breadth-first search from its least cell, with the
/// last cell reached as the seed. That cell has no children, so it is a leaf.
pub fn shape_tree(s: &Shape) -> (ShapeTree, Point) {
    let start = *s.cells().iter().next().expect("non-empty shape");
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut edges = Vec::new();
    let mut last = start;
    while let Some(p) = queue.pop_front() {
        last = p;
        for (_, q) in p.neighbors() {
            if s.contains(q) && seen.insert(q) {
                edges.push((p, q));
                queue.push_back(q);
            }
        }
    }
    (ShapeTree::new(s.cells().clone(), edges), last)
}

/// τ=1 aTAM system with one tile per cell whose binding graph is `shape_tree(s)`.
pub fn shape_to_tree_atam(s: &Shape) -> ATamSystem {
    let (tree, seed) = shape_tree(s);
    tree_atam(s, &tree, seed)
}

fn tree_atam(s: &Shape, tree: &ShapeTree, seed: Point) -> ATamSystem {
    let cells: Vec<Point> = s.cells().iter().copied().collect();
    let mut glues: BTreeMap<Point, [AGlue; 4]> =
        cells.iter().map(|&p| (p, [AGlue::null(), AGlue::null(), AGlue::null(), AGlue::null()])).collect();
    for (k, &(a, b)) in tree.edges.iter().enumerate() {
        let side = a.side_towards(b).expect("tree edges join neighbors");
        glues.get_mut(&a).expect("cell")[side.index()] = AGlue::new(format!("t{k}"), 1);
        glues.get_mut(&b).expect("cell")[side.opposite().index()] = AGlue::new(format!("t{k}"), 1);
    }
    let tiles = cells.iter().map(|p| ATile::new(format!("c{}_{}", p.x, p.y), glues[p].clone())).collect();
    let idx = cells.iter().position(|&p| p == seed).expect("seed cell");
    ATamSystem { tiles, seed: (idx, seed), temperature: 1 }
}

/// Recovers the binding tree of a one-tile-per-cell aTAM system from its glues.
pub fn atam_tree(a: &ATamSystem) -> Option<(Shape, ShapeTree, Point)> {
    let run = a.run(100_000);
    if !run.terminal {
        return None;
    }
    let mut edges = Vec::new();
    for (&p, &t) in &run.placements {
        for s in [Side::N, Side::E] {
            let q = p.step(s);
            if let Some(&u) = run.placements.get(&q) {
                if crate::atam::abinds(a.tiles[t].glue(s), a.tiles[u].glue(s.opposite())) > 0 {
                    edges.push((p, q));
                }
            }
        }
    }
    let shape = Shape::new(run.placements.keys().copied()).ok()?;
    let tree = ShapeTree::new(shape.cells().clone(), edges);
    tree.spans(&shape).then_some((shape, tree, a.seed.1))
}

/// A symmetry of the square, as an integer matrix on offsets from a block center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Sym([[i64; 2]; 2]);

const SYMS: [Sym; 8] = [
    Sym([[1, 0], [0, 1]]),
    Sym([[-1, 0], [0, 1]]),
    Sym([[1, 0], [0, -1]]),
    Sym([[-1, 0], [0, -1]]),
    Sym([[0, 1], [1, 0]]),
    Sym([[0, -1], [1, 0]]),
    Sym([[0, 1], [-1, 0]]),
    Sym([[0, -1], [-1, 0]]),
];

impl Sym {
    fn vec(&self, x: i64, y: i64) -> (i64, i64) {
        (self.0[0][0] * x + self.0[0][1] * y, self.0[1][0] * x + self.0[1][1] * y)
    }

    fn side(&self, s: Side) -> Side {
        let o = s.offset();
        let (x, y) = self.vec(o.x, o.y);
        Point::ORIGIN.side_towards(Point::new(x, y)).expect("unit vector")
    }

    /// In-block cell `(i, j)` with `i, j` in `{0, 1}`.
    fn cell(&self, c: (i64, i64)) -> Point {
        let (x, y) = self.vec(2 * c.0 - 1, 2 * c.1 - 1);
        Point::new((x + 1) / 2, (y + 1) / 2)
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const CELLS: [(i64, i64); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];

/// Bonds inside a block: (cell, side, strength); the partner is the neighbor cell.
struct Gadget {
    bonds: &'static [(usize, Side, u8)],
    /// Single-bond cells and the lateral side that faces into the block.
    laterals: &'static [(usize, Side)],
    /// Sides through which each cell is meant to attach, besides the parent bonds.
    inputs: &'static [(usize, Side)],
}

// Child block, parent to the south of A and B.
const CHILD: Gadget = Gadget {
    bonds: &[(A, Side::E, 1), (A, Side::N, 1), (B, Side::N, 2), (C, Side::W, 1)],
    laterals: &[(A, Side::E), (C, Side::W)],
    inputs: &[(B, Side::W), (C, Side::S), (D, Side::S), (D, Side::E)],
};

// Root block, seed at A; here B and D are the single-bond cells and C cooperates.
const ROOT: Gadget = Gadget {
    bonds: &[(A, Side::E, 2), (A, Side::N, 2), (B, Side::N, 1), (D, Side::E, 1)],
    laterals: &[(B, Side::N), (D, Side::E)],
    inputs: &[(B, Side::W), (D, Side::S), (C, Side::S), (C, Side::W)],
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    label: usize,
    primed: bool,
    strength: u8,
}

impl Slot {
    fn complement(self) -> Slot {
        Slot { primed: !self.primed, ..self }
    }
}

struct Builder {
    slots: BTreeMap<(Point, Side), Slot>,
    next: usize,
}

impl Builder {
    fn bond(&mut self, p: Point, s: Side, strength: u8) -> Result<(), ()> {
        let q = p.step(s);
        let here = self.slots.get(&(p, s)).copied();
        let there = self.slots.get(&(q, s.opposite())).copied();
        match (here, there) {
            (None, None) => {
                let g = Slot { label: self.next, primed: false, strength };
                self.next += 1;
                self.slots.insert((p, s), g);
                self.slots.insert((q, s.opposite()), g.complement());
                Ok(())
            }
            (Some(g), None) if g.strength == strength => {
                self.slots.insert((q, s.opposite()), g.complement());
                Ok(())
            }
            (None, Some(g)) if g.strength == strength => {
                self.slots.insert((p, s), g.complement());
                Ok(())
            }
            (Some(g), Some(h)) if h == g.complement() && g.strength == strength => Ok(()),
            _ => Err(()),
        }
    }
}

/// Per-block frame: symmetry and the world cells of A, B, C, D.
fn block_cells(p: Point, g: Sym) -> [Point; 4] {
    CELLS.map(|c| {
        let q = g.cell(c);
        Point::new(2 * p.x + q.x, 2 * p.y + q.y)
    })
}

/// Glue assignment for one choice of tree, root frame and block frames.
fn assign(
    tree: &ShapeTree,
    order: &[(Point, Option<Point>)],
    frames: &BTreeMap<Point, Sym>,
) -> Option<BTreeMap<(Point, Side), Slot>> {
    let mut b = Builder { slots: BTreeMap::new(), next: 0 };
    let mut inputs: BTreeSet<(Point, Side)> = BTreeSet::new();
    for &(p, parent) in order {
        let g = frames[&p];
        let cells = block_cells(p, g);
        let gadget = if parent.is_none() { &ROOT } else { &CHILD };
        if let Some(par) = parent {
            // A's parent bond first, so a lateral copy in the parent cannot take it.
            let down = g.side(Side::S);
            debug_assert_eq!(p.step(down), par);
            b.bond(cells[A], down, 2).ok()?;
            b.bond(cells[B], down, 1).ok()?;
            inputs.extend([(cells[A], down), (cells[B], down)]);
        }
        inputs.extend(gadget.inputs.iter().map(|&(c, s)| (cells[c], g.side(s))));
        for &(c, s, st) in gadget.bonds {
            b.bond(cells[c], g.side(s), st).ok()?;
        }
        for &(c, inner) in gadget.laterals {
            let inner = g.side(inner);
            let v = b.slots[&(cells[c], inner)];
            let outer = (cells[c], inner.opposite());
            match b.slots.get(&outer) {
                None => {
                    b.slots.insert(outer, v);
                }
                Some(&w) if w == v => {}
                _ => return None,
            }
        }
    }
    // Outward lateral copies must be bound by whatever faces them.
    let pending: Vec<((Point, Side), Slot)> = b.slots.iter().map(|(&k, &v)| (k, v)).collect();
    let occupied: BTreeSet<Point> = tree.cells.iter().flat_map(|&p| block_cells(p, SYMS[0])).collect();
    for ((p, s), v) in pending {
        let q = p.step(s);
        if !occupied.contains(&q) {
            continue;
        }
        match b.slots.get(&(q, s.opposite())) {
            None => {
                b.slots.insert((q, s.opposite()), v.complement());
            }
            Some(&w) if w == v.complement() => {}
            _ => return None,
        }
    }
    // Tiles each tile depends on through its designed inputs.
    let mut ancestors: BTreeMap<Point, BTreeSet<Point>> = BTreeMap::new();
    for &(p, s) in &inputs {
        ancestors.entry(p).or_default().insert(p.step(s));
    }
    loop {
        let mut grew = false;
        let snapshot = ancestors.clone();
        for set in ancestors.values_mut() {
            let extra: Vec<Point> = set.iter().flat_map(|q| snapshot.get(q).into_iter().flatten().copied()).collect();
            for q in extra {
                grew |= set.insert(q);
            }
        }
        if !grew {
            break;
        }
    }
    // Glues on one axis that can all be bound before the tile arrives leave the
    // other axis free, so the glues on that axis must look the same either way.
    for &p in ancestors.keys() {
        let early = |s: Side| -> u8 {
            let q = p.step(s);
            match b.slots.get(&(p, s)) {
                Some(v) if !ancestors.get(&q).is_some_and(|a| a.contains(&p)) => v.strength,
                _ => 0,
            }
        };
        for (s, t) in [(Side::N, Side::E), (Side::E, Side::N)] {
            if early(s) + early(s.opposite()) >= 2 && b.slots.get(&(p, t)) != b.slots.get(&(p, t.opposite())) {
                return None;
            }
        }
    }
    Some(b.slots)
}

fn build_system(
    cells: &BTreeSet<Point>,
    slots: &BTreeMap<(Point, Side), Slot>,
    seed: Point,
) -> Result<TileSystem, CompileError> {
    let list: Vec<Point> = cells.iter().copied().collect();
    let mut tiles = Vec::new();
    for &p in &list {
        let mut g = Vec::new();
        for s in Side::ALL {
            g.push(match slots.get(&(p, s)) {
                Some(v) => Glue::new(format!("g{}", v.label), v.primed, v.strength)?,
                None => Glue::null(),
            });
        }
        tiles.push(TileType::new(format!("b{}_{}", p.x, p.y), g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone()));
    }
    let idx = list.iter().position(|&p| p == seed).expect("seed cell");
    let ts = TileSet::new(tiles)?;
    Ok(TileSystem::singly_seeded(ts, OrientedTile::new(idx, Reflection::D), seed, 2)?)
}

/// Candidate frame choices for every block, in a fixed order.
fn frame_choices(order: &[(Point, Option<Point>)]) -> Vec<Vec<Sym>> {
    order
        .iter()
        .map(|&(p, parent)| match parent {
            None => SYMS.to_vec(),
            Some(par) => {
                let dir = p.side_towards(par).expect("tree neighbors");
                SYMS.iter().copied().filter(|g| g.side(Side::S) == dir).collect()
            }
        })
        .collect()
}

fn bfs_order(tree: &ShapeTree, root: Point) -> Vec<(Point, Option<Point>)> {
    let mut order = vec![(root, None)];
    let mut seen = BTreeSet::from([root]);
    let mut i = 0;
    while i < order.len() {
        let p = order[i].0;
        for q in tree.neighbors(p) {
            if seen.insert(q) {
                order.push((q, Some(p)));
            }
        }
        i += 1;
    }
    order
}

/// Strict assembly of the scaled shape and mismatch-freeness, by enumeration.
pub fn verify_scaled(sys: &TileSystem, s: &Shape, state_limit: usize) -> Verdict<String> {
    let scaled = s.scaled(2);
    let b = scaled.bounds();
    let seed = sys.seed.domain().next().unwrap_or(Point::ORIGIN);
    let w = Window::around(seed, b.width().max(b.height()) + 1);
    match (verify_strict(sys, &scaled, w, state_limit), is_mismatch_free(sys, w, state_limit)) {
        (Ok(Verdict::Holds), Ok(Verdict::Holds)) => Verdict::Holds,
        (Ok(Verdict::Refuted(x)), _) => Verdict::Refuted(format!("wrong terminal domain of {} cells", x.assembly().len())),
        (_, Ok(Verdict::Refuted(m))) => Verdict::Refuted(format!("mismatch at {} {}", m.at, m.side)),
        (Ok(Verdict::Inconclusive(r)), _) | (_, Ok(Verdict::Inconclusive(r))) => Verdict::Inconclusive(r),
        (Err(e), _) | (_, Err(e)) => Verdict::Inconclusive(e.to_string()),
    }
}

/// Layouts for a given tree and seed cell, in search order.
fn layouts(tree: &ShapeTree, root: Point, mut visit: impl FnMut(&BTreeMap<(Point, Side), Slot>, Point) -> bool) -> bool {
    let order = bfs_order(tree, root);
    let choices = frame_choices(&order);
    let mut pick = vec![0usize; order.len()];
    loop {
        let frames: BTreeMap<Point, Sym> = order.iter().zip(&pick).zip(&choices).map(|((&(p, _), &k), c)| (p, c[k])).collect();
        if let Some(slots) = assign(tree, &order, &frames) {
            let seed = block_cells(root, frames[&root])[A];
            if visit(&slots, seed) {
                return true;
            }
        }
        // Odometer over frame choices, last block fastest.
        let mut i = order.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// τ=2 system strictly assembling `s` scaled by two without mismatches.
///
/// Blocks follow the binding tree of `shape_to_tree_atam(s)` rooted at its seed
/// leaf. Layout choices whose glues conflict are skipped; the first consistent
/// choice that enumeration confirms is returned. Failing that, the other seed
/// cells and further spanning trees are tried, with at most
/// `SCALE2_ATTEMPTS` confirmations per tree and seed cell.
pub fn compile_scale2(s: &Shape) -> Result<TileSystem, CompileError> {
    let (tree, leaf) = shape_tree(s);
    let cells: BTreeSet<Point> = s.cells().iter().flat_map(|&p| block_cells(p, SYMS[0])).collect();
    let mut roots = vec![leaf];
    roots.extend(s.cells().iter().copied().filter(|&p| p != leaf));
    let mut trees = vec![tree.clone()];
    let _ = crate::eps::for_each_spanning_tree(s, |t| {
        if *t != tree {
            trees.push(t.clone());
        }
        if trees.len() > SCALE2_TREES {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    for t in &trees {
        for &root in &roots {
            let mut found = None;
            let mut tried = 0;
            layouts(t, root, |slots, seed| {
                tried += 1;
                if tried > SCALE2_ATTEMPTS {
                    return true;
                }
                let Ok(sys) = build_system(&cells, slots, seed) else { return false };
                if verify_scaled(&sys, s, SCALE2_STATE_LIMIT).holds() {
                    found = Some(sys);
                    return true;
                }
                false
            });
            if let Some(sys) = found {
                return Ok(sys);
            }
        }
    }
    Err(CompileError::NoLayout)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(cells: &[(i64, i64)]) -> Shape {
        Shape::new(cells.iter().map(|&(x, y)| Point::new(x, y))).unwrap()
    }

    #[test]
    fn symmetries_permute_block_cells() {
        for g in SYMS {
            let cells: BTreeSet<Point> = CELLS.iter().map(|&c| g.cell(c)).collect();
            assert_eq!(cells.len(), 4);
            assert!(cells.iter().all(|p| (0..2).contains(&p.x) && (0..2).contains(&p.y)));
            let sides: BTreeSet<Side> = Side::ALL.iter().map(|&s| g.side(s)).collect();
            assert_eq!(sides.len(), 4);
        }
    }

    #[test]
    fn tree_seed_is_a_leaf() {
        let sq = Shape::square(2).unwrap();
        let a = shape_to_tree_atam(&sq);
        assert_eq!(a.tiles.len(), 4);
        let (s, t, seed) = atam_tree(&a).unwrap();
        assert_eq!(s, sq);
        assert_eq!(t.edges.len(), 3);
        assert_eq!(t.neighbors(seed).count(), 1);
        let one = shape(&[(0, 0)]);
        assert_eq!(shape_to_tree_atam(&one).tiles.len(), 1);
    }

    #[test]
    fn single_cell_and_domino() {
        for s in [shape(&[(0, 0)]), shape(&[(0, 0), (1, 0)])] {
            let sys = compile_scale2(&s).unwrap();
            assert_eq!(sys.tile_count(), 4 * s.len());
            assert!(verify_scaled(&sys, &s, SCALE2_STATE_LIMIT).holds());
        }
    }
}
