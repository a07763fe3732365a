//! Weak assembly of shapes with a mirror line through lattice points.

use std::collections::BTreeSet;

use rtam_core::{Assembly, Glue, OrientedTile, Point, Reflection, Shape, Side, TileSet, TileSystem, TileType};

use crate::error::CompileError;
use crate::squares::{gen_odd_rect, glue};

/// A mirror line of a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axis {
    /// The line `x = l`.
    Vertical(i64),
    /// The line `y = l`.
    Horizontal(i64),
}

fn mirror(a: Axis, p: Point) -> Point {
    match a {
        Axis::Vertical(l) => Point::new(2 * l - p.x, p.y),
        Axis::Horizontal(l) => Point::new(p.x, 2 * l - p.y),
    }
}

/// Every integer mirror line, vertical lines first.
pub fn odd_symmetry_axes(s: &Shape) -> Vec<Axis> {
    if s.is_empty() {
        return Vec::new();
    }
    let b = s.bounds();
    let verticals = (b.min.x..=b.max.x).map(Axis::Vertical);
    let horizontals = (b.min.y..=b.max.y).map(Axis::Horizontal);
    verticals
        .chain(horizontals)
        .filter(|&a| s.cells().iter().all(|&p| s.contains(mirror(a, p))))
        .collect()
}

pub fn is_odd_symmetric(s: &Shape) -> Option<Axis> {
    odd_symmetry_axes(s).into_iter().next()
}

/// Swaps the roles of x and y in a tile system.
fn transpose(sys: &TileSystem) -> Result<TileSystem, CompileError> {
    let tiles: Vec<TileType> = sys
        .tiles
        .iter()
        .map(|t| {
            let g = |s: Side| t.glue(s).clone();
            TileType::new(t.name.clone(), g(Side::E), g(Side::N), g(Side::W), g(Side::S))
        })
        .collect();
    let seed = Assembly::from_placements(sys.seed.iter().map(|(p, ot)| (Point::new(p.y, p.x), ot)))?;
    Ok(TileSystem::new(TileSet::new(tiles)?, seed, sys.temperature)?)
}

/// Canvas over the bounding box: a column of unique tiles on the mirror line
/// grown north from the seed, and from each column tile a mirrored row with one
/// tile type per distance from the line.
fn vertical_canvas(s: &Shape, l: i64) -> Result<(TileSystem, BTreeSet<String>), CompileError> {
    let b = s.bounds();
    let height = b.height();
    let half = (b.max.x - l).max(l - b.min.x);
    let mut tiles = Vec::new();
    let mut black = BTreeSet::new();
    for k in 0..height {
        let y = b.min.y + k;
        let name = if k == 0 { "seed".to_string() } else { format!("V{k}") };
        let north = if k + 1 < height { glue(&format!("v{}", k + 1), false) } else { Glue::null() };
        let south = if k > 0 { glue(&format!("v{k}"), true) } else { Glue::null() };
        let row = if half > 0 { glue(&format!("r{k}_1"), false) } else { Glue::null() };
        tiles.push(TileType::new(name.clone(), north, row.clone(), south, row));
        if s.contains(Point::new(l, y)) {
            black.insert(name);
        }
        for m in 1..=half {
            let name = format!("H{k}_{m}");
            let east = if m < half { glue(&format!("r{k}_{}", m + 1), false) } else { Glue::null() };
            let west = glue(&format!("r{k}_{m}"), true);
            tiles.push(TileType::new(name.clone(), Glue::null(), east, Glue::null(), west));
            if s.contains(Point::new(l + m, y)) {
                black.insert(name);
            }
        }
    }
    let ts = TileSet::new(tiles)?;
    let sys = TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::new(l, b.min.y), 1)?;
    Ok((sys, black))
}

/// τ=1 system whose terminal assemblies fill the bounding box of `s` and mark
/// exactly the cells of `s` with black tile types.
pub fn gen_odd_symmetric_weak(s: &Shape) -> Result<(TileSystem, BTreeSet<String>), CompileError> {
    let axes = odd_symmetry_axes(s);
    let b = s.bounds();
    let full = s.len() as i64 == b.width() * b.height();
    if full && b.width() % 2 == 1 && b.height() % 2 == 1 {
        let sys = gen_odd_rect(b.height(), b.width())?;
        let sys = TileSystem::singly_seeded(
            sys.tiles.clone(),
            OrientedTile::new(0, Reflection::D),
            Point::new((b.min.x + b.max.x) / 2, (b.min.y + b.max.y) / 2),
            1,
        )?;
        let black = sys.tiles.iter().map(|t| t.name.clone()).collect();
        return Ok((sys, black));
    }
    match axes.first() {
        Some(Axis::Vertical(l)) => vertical_canvas(s, *l),
        Some(Axis::Horizontal(l)) => {
            let flipped = Shape::new(s.cells().iter().map(|p| Point::new(p.y, p.x)))?;
            let (sys, black) = vertical_canvas(&flipped, *l)?;
            Ok((transpose(&sys)?, black))
        }
        None => Err(CompileError::NotOddSymmetric),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(cells: &[(i64, i64)]) -> Shape {
        Shape::new(cells.iter().map(|&(x, y)| Point::new(x, y))).unwrap()
    }

    #[test]
    fn axes_of_small_shapes() {
        assert_eq!(odd_symmetry_axes(&shape(&[(0, 0)])), vec![Axis::Vertical(0), Axis::Horizontal(0)]);
        assert_eq!(odd_symmetry_axes(&shape(&[(0, 0), (0, 1)])), vec![Axis::Vertical(0)]);
        assert_eq!(is_odd_symmetric(&shape(&[(0, 0), (1, 0), (0, 1)])), None);
        assert_eq!(is_odd_symmetric(&shape(&[(0, 0), (1, 0), (1, 1), (2, 0)])), Some(Axis::Vertical(1)));
        assert_eq!(is_odd_symmetric(&shape(&[(0, 0), (0, 1), (1, 1), (0, 2)])), Some(Axis::Horizontal(1)));
    }

    #[test]
    fn canvas_sizes() {
        let plus = shape(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
        let (sys, black) = gen_odd_symmetric_weak(&plus).unwrap();
        assert_eq!(sys.tile_count(), 6);
        assert_eq!(black.len(), 4);
        let column = shape(&[(0, 0), (0, 1), (0, 2)]);
        let (sys, black) = gen_odd_symmetric_weak(&column).unwrap();
        assert_eq!(sys.tile_count(), 2);
        assert_eq!(black.len(), 2);
        assert!(gen_odd_symmetric_weak(&shape(&[(0, 0), (1, 0), (0, 1)])).is_err());
    }
}
