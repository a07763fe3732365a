//! Fixture systems: directed periodic growth, random path and square producers.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rtam_core::{Assembly, Glue, OrientedTile, Point, Reflection, Side, TileSet, TileSystem, TileType, Window};
use rtam_sim::{run, RunOptions};

use crate::path::TilePath;

fn g(text: &str) -> Glue {
    if text.is_empty() {
        Glue::null()
    } else {
        Glue::parse(text, 1).expect("fixture glue")
    }
}

/// Tile from `[n, e, s, w]` glue texts; an empty string is the null glue.
pub fn tile(name: &str, glues: [&str; 4]) -> TileType {
    let [n, e, s, w] = glues.map(g);
    TileType::new(name, n, e, s, w)
}

/// Temperature-1 system seeded with the first tile in reflection D at the origin.
pub fn system(tiles: Vec<TileType>) -> TileSystem {
    let ts = TileSet::new(tiles).expect("fixture tile names are unique");
    TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1).expect("fixture system")
}

/// Directed systems covering finite growth, rays, combs, wedges and the plane.
pub fn periodic_suite() -> Vec<(&'static str, TileSystem)> {
    vec![
        ("blank", system(vec![tile("s", ["", "", "", ""])])),
        (
            "finite-hook",
            system(vec![tile("s", ["a", "", "", ""]), tile("p", ["", "b", "a'", ""]), tile("q", ["", "", "", "b'"])]),
        ),
        ("north-column", system(vec![tile("s", ["a", "", "", ""]), tile("c", ["a", "", "a'", ""])])),
        ("two-way-column", system(vec![tile("s", ["a", "", "a", ""]), tile("c", ["a", "", "a'", ""])])),
        (
            "cross",
            system(vec![tile("s", ["a", "b", "a", "b"]), tile("c", ["a", "", "a'", ""]), tile("r", ["", "b", "", "b'"])]),
        ),
        ("plane", system(vec![tile("s", ["a", "b", "a", "b"]), tile("p", ["a", "b", "a'", "b'"])])),
        (
            "period-two-row",
            system(vec![tile("s", ["", "b", "", ""]), tile("r1", ["", "d", "", "b'"]), tile("r2", ["", "b", "", "d'"])]),
        ),
        (
            "comb",
            system(vec![
                tile("s", ["", "b", "", ""]),
                tile("r1", ["", "d", "", "b'"]),
                tile("r2", ["c", "b", "", "d'"]),
                tile("c", ["c", "", "c'", ""]),
            ]),
        ),
        (
            "wedge",
            system(vec![tile("s", ["", "b", "", ""]), tile("a", ["c", "", "c", "b'"]), tile("t", ["", "b", "c'", ""])]),
        ),
        (
            "ladder",
            system(vec![
                tile("s", ["c", "b", "", ""]),
                tile("r", ["", "b", "", "b'"]),
                tile("u", ["", "e", "c'", ""]),
                tile("t", ["", "e", "", "e'"]),
            ]),
        ),
        (
            "row-of-columns",
            system(vec![tile("s", ["c", "b", "c", "b"]), tile("r", ["c", "b", "c", "b'"]), tile("v", ["c", "", "c'", ""])]),
        ),
        (
            "l-ray",
            system(vec![tile("s", ["", "b", "", ""]), tile("k", ["c", "", "", "b'"]), tile("v", ["c", "", "c'", ""])]),
        ),
    ]
}

/// A system whose tiles form one chain of unique edge glues, and the path assembly it produces.
pub fn random_path_system<R: Rng>(rng: &mut R, len: usize) -> (TileSystem, TilePath) {
    let walk = loop {
        if let Some(w) = self_avoiding_walk(rng, len) {
            break w;
        }
    };
    let refl: Vec<Reflection> = (0..len).map(|_| Reflection::ALL[rng.gen_range(0..4)]).collect();
    let mut tiles: Vec<TileType> = (0..len).map(|i| tile(&format!("t{i}"), ["", "", "", ""])).collect();
    for i in 0..len.saturating_sub(1) {
        let out = walk[i].side_towards(walk[i + 1]).expect("adjacent");
        let label = format!("e{i}");
        tiles[i].set_glue(refl[i].side_map(out), g(&label));
        tiles[i + 1].set_glue(refl[i + 1].side_map(out.opposite()), g(&format!("{label}'")));
    }
    let ts = TileSet::new(tiles).expect("unique names");
    let sys = TileSystem::singly_seeded(ts, OrientedTile::new(0, refl[0]), Point::ORIGIN, 1).expect("valid");
    let path = TilePath { locations: walk, tiles: (0..len).map(|i| OrientedTile::new(i, refl[i])).collect() };
    (sys, path)
}

/// Simple walk from the origin whose first step goes north or east.
fn self_avoiding_walk<R: Rng>(rng: &mut R, len: usize) -> Option<Vec<Point>> {
    let mut walk = vec![Point::ORIGIN];
    let mut seen = BTreeSet::from([Point::ORIGIN]);
    while walk.len() < len {
        let last = *walk.last().expect("non-empty");
        let sides: Vec<Side> = if walk.len() == 1 { vec![Side::N, Side::E] } else { Side::ALL.to_vec() };
        let open: Vec<Point> = sides.iter().map(|&s| last.step(s)).filter(|p| !seen.contains(p)).collect();
        let &next = open.get(rng.gen_range(0..open.len().max(1)))?;
        seen.insert(next);
        walk.push(next);
    }
    Some(walk)
}

/// One tile per cell bound along the given tree edges, each placed in `refl[cell]`;
/// returns the system seeded at `seed` and the full assembly it produces.
pub fn tree_system(cells: &[Point], edges: &[(Point, Point)], refl: &[Reflection], seed: Point) -> (TileSystem, Assembly) {
    let index = |p: Point| cells.iter().position(|&c| c == p).expect("edge endpoint is a cell");
    let mut tiles: Vec<TileType> = cells.iter().map(|p| tile(&format!("c{}_{}", p.x, p.y), ["", "", "", ""])).collect();
    for (k, &(p, q)) in edges.iter().enumerate() {
        let s = p.side_towards(q).expect("adjacent");
        let label = format!("g{k}");
        tiles[index(p)].set_glue(refl[index(p)].side_map(s), g(&label));
        tiles[index(q)].set_glue(refl[index(q)].side_map(s.opposite()), g(&format!("{label}'")));
    }
    let ts = TileSet::new(tiles).expect("unique names");
    let i = index(seed);
    let sys = TileSystem::singly_seeded(ts, OrientedTile::new(i, refl[i]), seed, 1).expect("valid");
    let full = Assembly::from_placements(cells.iter().enumerate().map(|(i, &p)| (p, OrientedTile::new(i, refl[i]))))
        .expect("distinct cells");
    (sys, full)
}

/// [`tree_system`] over a random spanning tree of the `n`×`n` square with random
/// reflections and a random seed cell.
pub fn random_tree_square<R: Rng>(rng: &mut R, n: i64) -> (TileSystem, Assembly) {
    let cells: Vec<Point> = (0..n).flat_map(|x| (0..n).map(move |y| Point::new(x, y))).collect();
    let mut edges: Vec<(Point, Point)> = Vec::new();
    for &p in &cells {
        for q in [p.step(Side::E), p.step(Side::N)] {
            if q.x < n && q.y < n {
                edges.push((p, q));
            }
        }
    }
    edges.shuffle(rng);
    let index = |p: Point| (p.x * n + p.y) as usize;
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let mut tree = Vec::new();
    for (p, q) in edges {
        let (a, b) = (find(&mut parent, index(p)), find(&mut parent, index(q)));
        if a != b {
            parent[a] = b;
            tree.push((p, q));
        }
    }
    let refl: Vec<Reflection> = cells.iter().map(|_| Reflection::ALL[rng.gen_range(0..4)]).collect();
    let seed = cells[rng.gen_range(0..cells.len())];
    tree_system(&cells, &tree, &refl, seed)
}

/// Systems with `types` tile types over a two-letter alphabet with a producible
/// assembly filling an `n`×`n` box around the seed that uses every type, found by search.
pub fn small_square_candidates(types: usize, n: i64, limit: usize) -> Vec<(TileSystem, Assembly, Point)> {
    let glues = ["", "a", "a'", "b", "b'"];
    let mut out = Vec::new();
    let per_tile = glues.len().pow(4);
    let total = per_tile.pow(types as u32);
    // A stride coprime to the code space visits varied tile sets early.
    for k in 0..total {
        if out.len() >= limit {
            break;
        }
        let mut c = (k * 7919) % total;
        let mut tiles = Vec::new();
        for t in 0..types {
            let mut sides = [""; 4];
            for s in sides.iter_mut() {
                *s = glues[c % glues.len()];
                c /= glues.len();
            }
            tiles.push(tile(&format!("t{t}"), sides));
        }
        let sys = system(tiles);
        let hit = (0..n * n).find_map(|k| {
            let origin = Point::new(-(k % n), -(k / n));
            let a = fill_box(&sys, Window::new(origin, origin + Point::new(n - 1, n - 1)))?;
            let used: BTreeSet<usize> = a.iter().map(|(_, ot)| ot.tile).collect();
            (used.len() == types).then_some((a, origin))
        });
        if let Some((a, origin)) = hit {
            out.push((sys, a, origin));
        }
    }
    out
}

/// A producible assembly filling `w` exactly, from a few single runs confined to `w`.
fn fill_box(sys: &TileSystem, w: Window) -> Option<Assembly> {
    let target = (w.width() * w.height()) as usize;
    [None, Some(1), Some(2), Some(3)].into_iter().find_map(|rng_seed| {
        let r = run(sys, &RunOptions { rng_seed, ..RunOptions::new(w) }).ok()?;
        (r.assembly.len() == target).then_some(r.assembly)
    })
}
