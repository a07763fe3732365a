//! Oracles and generators shared by the compiler tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use rtam_core::{Glue, OrientedTile, Point, Reflection, Shape, Side, TileSet, TileSystem, TileType};

type Edge = (Point, Point);

/// All fixed polyominoes with `1..=max` cells, translated so the minimum corner is the origin.
pub fn polyominoes(max: usize) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    let mut level: HashSet<Vec<Point>> = HashSet::from([vec![Point::ORIGIN]]);
    for size in 1..=max {
        let mut sorted: Vec<Vec<Point>> = level.iter().cloned().collect();
        sorted.sort();
        out.extend(sorted.iter().cloned());
        if size == max {
            break;
        }
        let mut next = HashSet::new();
        for cells in &sorted {
            let set: BTreeSet<Point> = cells.iter().copied().collect();
            for p in cells {
                for (_, q) in p.neighbors() {
                    if set.contains(&q) {
                        continue;
                    }
                    let mut grown: Vec<Point> = cells.iter().copied().chain([q]).collect();
                    let mx = grown.iter().map(|p| p.x).min().unwrap();
                    let my = grown.iter().map(|p| p.y).min().unwrap();
                    for g in grown.iter_mut() {
                        *g = Point::new(g.x - mx, g.y - my);
                    }
                    grown.sort();
                    next.insert(grown);
                }
            }
        }
        level = next;
    }
    out
}

fn norm(a: Point, b: Point) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn grid_edges(cells: &BTreeSet<Point>) -> Vec<Edge> {
    let mut out = Vec::new();
    for &p in cells {
        for q in [Point::new(p.x + 1, p.y), Point::new(p.x, p.y + 1)] {
            if cells.contains(&q) {
                out.push((p, q));
            }
        }
    }
    out
}

fn component(cells: &BTreeSet<Point>, edges: &BTreeSet<Edge>, start: Point, removed: Option<Point>) -> BTreeSet<Point> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for q in cells {
            if Some(*q) == removed || seen.contains(q) {
                continue;
            }
            if edges.contains(&norm(p, *q)) {
                seen.insert(*q);
                stack.push(*q);
            }
        }
    }
    seen
}

/// The definition evaluated directly on one tree: scan every row and column
/// line for maximal tree-connected runs, and at each run vertex compare the
/// multiset of branches hanging off the run with its mirror image.
pub fn tree_is_eps_symmetric(cells: &BTreeSet<Point>, edges: &BTreeSet<Edge>) -> bool {
    let (x0, x1) = (cells.iter().map(|p| p.x).min().unwrap(), cells.iter().map(|p| p.x).max().unwrap());
    let (y0, y1) = (cells.iter().map(|p| p.y).min().unwrap(), cells.iter().map(|p| p.y).max().unwrap());
    let mut axes: Vec<(bool, Vec<Point>)> = Vec::new();
    for y in y0..=y1 {
        let mut run: Vec<Point> = Vec::new();
        for x in x0..=x1 + 1 {
            let p = Point::new(x, y);
            let continues = run.last().is_some_and(|&l| edges.contains(&norm(l, p)));
            if continues {
                run.push(p);
            } else {
                if !run.is_empty() {
                    axes.push((true, std::mem::take(&mut run)));
                }
                if cells.contains(&p) {
                    run.push(p);
                }
            }
        }
    }
    for x in x0..=x1 {
        let mut run: Vec<Point> = Vec::new();
        for y in y0..=y1 + 1 {
            let p = Point::new(x, y);
            let continues = run.last().is_some_and(|&l| edges.contains(&norm(l, p)));
            if continues {
                run.push(p);
            } else {
                if !run.is_empty() {
                    axes.push((false, std::mem::take(&mut run)));
                }
                if cells.contains(&p) {
                    run.push(p);
                }
            }
        }
    }
    for (horizontal, axis) in axes {
        let on_axis: BTreeSet<Point> = axis.iter().copied().collect();
        let line = if horizontal { axis[0].y } else { axis[0].x };
        let mirror = |p: Point| if horizontal { Point::new(p.x, 2 * line - p.y) } else { Point::new(2 * line - p.x, p.y) };
        let mut bad = 0;
        for &v in &axis {
            let mut branches = Vec::new();
            for (_, u) in v.neighbors() {
                if on_axis.contains(&u) || !edges.contains(&norm(v, u)) {
                    continue;
                }
                let verts = component(cells, edges, u, Some(v));
                let bedges: BTreeSet<Edge> =
                    edges.iter().copied().filter(|(a, b)| verts.contains(a) && verts.contains(b)).collect();
                branches.push((verts, bedges));
            }
            let mut mirrored: Vec<_> = branches
                .iter()
                .map(|(vs, es)| {
                    let mv: BTreeSet<Point> = vs.iter().map(|&p| mirror(p)).collect();
                    let me: BTreeSet<Edge> = es.iter().map(|&(a, b)| norm(mirror(a), mirror(b))).collect();
                    (mv, me)
                })
                .collect();
            branches.sort();
            mirrored.sort();
            if branches != mirrored {
                bad += 1;
            }
        }
        if bad > 1 {
            return false;
        }
    }
    true
}

/// Some subset of `|cells| - 1` grid edges forms a tree that satisfies the definition.
pub fn oracle_eps_symmetric(cells: &[Point]) -> bool {
    let set: BTreeSet<Point> = cells.iter().copied().collect();
    let all = grid_edges(&set);
    let need = set.len() - 1;
    let n = all.len();
    if need == 0 {
        return tree_is_eps_symmetric(&set, &BTreeSet::new());
    }
    let mut idx: Vec<usize> = (0..need).collect();
    loop {
        let edges: BTreeSet<Edge> = idx.iter().map(|&i| all[i]).collect();
        let start = *set.iter().next().unwrap();
        if component(&set, &edges, start, None).len() == set.len() && tree_is_eps_symmetric(&set, &edges) {
            return true;
        }
        // Next combination in lexicographic order.
        let mut i = need;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - need + i {
                idx[i] += 1;
                for j in i + 1..need {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return false;
            }
        }
    }
}

pub fn shape(cells: &[Point]) -> Shape {
    Shape::new(cells.iter().copied()).unwrap()
}

/// Random singly seeded τ=1 system over a small alphabet.
pub fn random_system<R: Rng>(rng: &mut R) -> TileSystem {
    let types = rng.gen_range(1..=4);
    let labels = ["a", "b", "c"];
    let mut tiles = Vec::new();
    for i in 0..types {
        let mut g = Vec::new();
        for _ in Side::ALL {
            if rng.gen_bool(0.55) {
                g.push(Glue::null());
            } else {
                g.push(Glue::new(labels[rng.gen_range(0..labels.len())], rng.gen_bool(0.5), 1).unwrap());
            }
        }
        tiles.push(TileType::new(format!("t{i}"), g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone()));
    }
    let ts = TileSet::new(tiles).unwrap();
    TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1).unwrap()
}
