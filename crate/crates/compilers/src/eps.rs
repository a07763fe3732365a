//! ε-symmetric shapes: spanning trees whose axes are symmetric at all but one
//! vertex, a search for such trees, and the τ=1 compiler they certify.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use rtam_core::{Glue, OrientedTile, Point, Reflection, Shape, Side, TileSet, TileSystem, TileType};

use crate::error::CompileError;

/// Trees examined before the search turns to random sampling.
pub const DEFAULT_TREE_BUDGET: usize = 200_000;

fn edge(a: Point, b: Point) -> (Point, Point) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeTree {
    pub cells: BTreeSet<Point>,
    /// Each edge joins lattice neighbors, smaller point first.
    pub edges: BTreeSet<(Point, Point)>,
}

impl ShapeTree {
    pub fn new<I: IntoIterator<Item = (Point, Point)>>(cells: BTreeSet<Point>, edges: I) -> Self {
        ShapeTree { cells, edges: edges.into_iter().map(|(a, b)| edge(a, b)).collect() }
    }

    pub fn has_edge(&self, a: Point, b: Point) -> bool {
        self.edges.contains(&edge(a, b))
    }

    pub fn neighbors(&self, p: Point) -> impl Iterator<Item = Point> + '_ {
        p.neighbors().into_iter().map(|(_, q)| q).filter(move |&q| self.has_edge(p, q))
    }

    /// A spanning tree of the grid graph of `s`.
    pub fn spans(&self, s: &Shape) -> bool {
        if &self.cells != s.cells() || self.edges.len() + 1 != self.cells.len() {
            return false;
        }
        if !self.edges.iter().all(|&(a, b)| s.contains(a) && s.contains(b) && a.manhattan(b) == 1) {
            return false;
        }
        let Some(&start) = self.cells.iter().next() else { return false };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for q in self.neighbors(p) {
                if seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Vertices and edges reachable from `u` without passing through `v`.
    fn branch(&self, v: Point, u: Point) -> (BTreeSet<Point>, BTreeSet<(Point, Point)>) {
        let mut verts = BTreeSet::from([u]);
        let mut edges = BTreeSet::new();
        let mut stack = vec![u];
        while let Some(p) = stack.pop() {
            for q in self.neighbors(p) {
                if q == v {
                    continue;
                }
                edges.insert(edge(p, q));
                if verts.insert(q) {
                    stack.push(q);
                }
            }
        }
        (verts, edges)
    }

    /// Maximal runs of tree edges along rows (`horizontal`) or columns.
    pub fn axes(&self, horizontal: bool) -> Vec<Vec<Point>> {
        let step = if horizontal { Side::E } else { Side::N };
        let back = step.opposite();
        let mut out = Vec::new();
        for &p in &self.cells {
            if self.has_edge(p, p.step(back)) {
                continue;
            }
            let mut run = vec![p];
            let mut q = p;
            while self.has_edge(q, q.step(step)) {
                q = q.step(step);
                run.push(q);
            }
            out.push(run);
        }
        out
    }

    /// Vertices of an axis whose off-axis branches, as a multiset, are not
    /// carried onto themselves by the mirror across the axis line.
    pub fn asymmetric_vertices(&self, axis: &[Point], horizontal: bool) -> Vec<Point> {
        let off = if horizontal { [Side::N, Side::S] } else { [Side::E, Side::W] };
        let line = if horizontal { axis[0].y } else { axis[0].x };
        let reflect = |p: Point| if horizontal { Point::new(p.x, 2 * line - p.y) } else { Point::new(2 * line - p.x, p.y) };
        axis.iter()
            .copied()
            .filter(|&v| {
                let mut branches: Vec<_> = off
                    .iter()
                    .map(|&s| v.step(s))
                    .filter(|&u| self.has_edge(v, u))
                    .map(|u| self.branch(v, u))
                    .collect();
                let mut mirrored: Vec<_> = branches
                    .iter()
                    .map(|(vs, es)| {
                        let rv: BTreeSet<Point> = vs.iter().map(|&p| reflect(p)).collect();
                        let re: BTreeSet<(Point, Point)> = es.iter().map(|&(a, b)| edge(reflect(a), reflect(b))).collect();
                        (rv, re)
                    })
                    .collect();
                branches.sort();
                mirrored.sort();
                branches != mirrored
            })
            .collect()
    }

    /// Every axis has at most one asymmetric vertex.
    pub fn is_eps_symmetric(&self) -> bool {
        [true, false]
            .iter()
            .all(|&h| self.axes(h).iter().all(|a| self.asymmetric_vertices(a, h).len() <= 1))
    }
}

/// Visits spanning trees of `s` in lexicographic order of their edge index sets
/// over `s.edges()`.
pub fn for_each_spanning_tree<F>(s: &Shape, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&ShapeTree) -> ControlFlow<()>,
{
    let cells: Vec<Point> = s.cells().iter().copied().collect();
    let index: BTreeMap<Point, usize> = cells.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let edges: Vec<(usize, usize)> = s.edges().iter().map(|(a, b)| (index[a], index[b])).collect();
    let need = cells.len().saturating_sub(1);
    let mut chosen = Vec::with_capacity(need);
    let parent: Vec<usize> = (0..cells.len()).collect();
    let build = |chosen: &[usize]| {
        ShapeTree::new(s.cells().clone(), chosen.iter().map(|&e| (cells[edges[e].0], cells[edges[e].1])))
    };
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&ShapeTree) -> ControlFlow<()>>(
        i: usize,
        edges: &[(usize, usize)],
        need: usize,
        chosen: &mut Vec<usize>,
        parent: &mut Vec<usize>,
        build: &dyn Fn(&[usize]) -> ShapeTree,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if chosen.len() == need {
            return visit(&build(chosen));
        }
        if edges.len() - i < need - chosen.len() {
            return ControlFlow::Continue(());
        }
        let (a, b) = edges[i];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            chosen.push(i);
            rec(i + 1, edges, need, chosen, parent, build, visit)?;
            chosen.pop();
            parent[ra] = ra;
        }
        rec(i + 1, edges, need, chosen, parent, build, visit)
    }
    let mut parent = parent;
    rec(0, &edges, need, &mut chosen, &mut parent, &build, &mut visit)
}

/// Uniform-edge-order Kruskal tree.
pub fn random_spanning_tree<R: Rng>(s: &Shape, rng: &mut R) -> ShapeTree {
    let mut edges = s.edges();
    edges.shuffle(rng);
    let cells: Vec<Point> = s.cells().iter().copied().collect();
    let index: BTreeMap<Point, usize> = cells.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut kept = Vec::new();
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
        if ra != rb {
            parent[ra] = rb;
            kept.push((a, b));
        }
    }
    ShapeTree::new(s.cells().clone(), kept)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsVerdict {
    Certificate(ShapeTree),
    /// Every spanning tree was examined and none qualifies.
    NotSymmetric,
    Inconclusive(String),
}

/// Looks for an ε-symmetric spanning tree of `s`. Trees are examined in
/// canonical order up to `budget`, after which `budget` random trees are sampled.
pub fn eps_symmetric(s: &Shape, budget: usize) -> EpsVerdict {
    eps_symmetric_seeded(s, budget, 0)
}

pub fn eps_symmetric_seeded(s: &Shape, budget: usize, rng_seed: u64) -> EpsVerdict {
    if s.is_empty() {
        return EpsVerdict::NotSymmetric;
    }
    let mut found = None;
    let mut seen = 0usize;
    let flow = for_each_spanning_tree(s, |t| {
        if seen >= budget {
            return ControlFlow::Break(());
        }
        seen += 1;
        if t.is_eps_symmetric() {
            found = Some(t.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if let Some(t) = found {
        return EpsVerdict::Certificate(t);
    }
    if flow.is_continue() {
        return EpsVerdict::NotSymmetric;
    }
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(rng_seed);
    for _ in 0..budget {
        let t = random_spanning_tree(s, &mut rng);
        if t.is_eps_symmetric() {
            return EpsVerdict::Certificate(t);
        }
    }
    EpsVerdict::Inconclusive(format!("no certificate among {budget} ordered and {budget} random trees"))
}

/// One tile type per cell, one glue label per tree edge, seeded at the least cell.
pub fn compile_eps_symmetric(s: &Shape, t: &ShapeTree) -> Result<TileSystem, CompileError> {
    if !t.spans(s) {
        return Err(CompileError::NotCertificate("not a spanning tree of the shape".into()));
    }
    if !t.is_eps_symmetric() {
        return Err(CompileError::NotCertificate("an axis has two asymmetric vertices".into()));
    }
    let cells: Vec<Point> = s.cells().iter().copied().collect();
    let mut glues: BTreeMap<Point, [Glue; 4]> =
        cells.iter().map(|&p| (p, [Glue::null(), Glue::null(), Glue::null(), Glue::null()])).collect();
    for (k, &(a, b)) in t.edges.iter().enumerate() {
        let label = format!("e{k}");
        let side = a.side_towards(b).expect("tree edges join neighbors");
        glues.get_mut(&a).expect("cell")[side.index()] = Glue::new(label.clone(), false, 1)?;
        glues.get_mut(&b).expect("cell")[side.opposite().index()] = Glue::new(label, true, 1)?;
    }
    let tiles: Vec<TileType> = cells
        .iter()
        .map(|p| {
            let [n, e, s, w] = glues[p].clone();
            TileType::new(format!("c{}_{}", p.x, p.y), n, e, s, w)
        })
        .collect();
    Ok(TileSystem::singly_seeded(TileSet::new(tiles)?, OrientedTile::new(0, Reflection::D), cells[0], 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(cells: &[(i64, i64)]) -> Shape {
        Shape::new(cells.iter().map(|&(x, y)| Point::new(x, y))).unwrap()
    }

    #[test]
    fn spanning_tree_counts() {
        let count = |s: &Shape| {
            let mut n = 0;
            let _ = for_each_spanning_tree(s, |_| {
                n += 1;
                ControlFlow::Continue(())
            });
            n
        };
        assert_eq!(count(&Shape::square(2).unwrap()), 4);
        assert_eq!(count(&Shape::square(3).unwrap()), 192);
        assert_eq!(count(&shape(&[(0, 0)])), 1);
        assert_eq!(count(&Shape::rect(4, 1).unwrap()), 1);
    }

    #[test]
    fn lines_and_cells_are_certified() {
        assert!(matches!(eps_symmetric(&shape(&[(0, 0)]), 10), EpsVerdict::Certificate(_)));
        assert!(matches!(eps_symmetric(&Shape::rect(5, 1).unwrap(), 10), EpsVerdict::Certificate(_)));
    }

    #[test]
    fn two_asymmetric_branches_on_one_axis_fail() {
        // A bar with a hook up at the left end and a hook down at the right end.
        let s = shape(&[(0, 1), (0, 0), (1, 0), (2, 0), (3, 0), (3, -1)]);
        assert_eq!(eps_symmetric(&s, 1000), EpsVerdict::NotSymmetric);
    }

    #[test]
    fn compiler_rejects_non_certificates() {
        let s = shape(&[(0, 1), (0, 0), (1, 0), (2, 0), (3, 0), (3, -1)]);
        let mut t = None;
        let _ = for_each_spanning_tree(&s, |x| {
            t = Some(x.clone());
            ControlFlow::Break(())
        });
        assert!(compile_eps_symmetric(&s, &t.unwrap()).is_err());
        let line = Shape::rect(3, 1).unwrap();
        let EpsVerdict::Certificate(t) = eps_symmetric(&line, 10) else { panic!() };
        assert_eq!(compile_eps_symmetric(&line, &t).unwrap().tile_count(), 3);
    }
}
