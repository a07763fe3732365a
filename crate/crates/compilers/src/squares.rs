//! Odd squares and rectangles from a mirrored column and mirrored rows.

use rtam_core::{Glue, OrientedTile, Point, Reflection, TileSet, TileSystem, TileType};

use crate::error::CompileError;

pub(crate) fn glue(label: &str, primed: bool) -> Glue {
    Glue::new(label, primed, 1).expect("generated glue is valid")
}

/// Strict assembler of an `n`-tall, `m`-wide rectangle with `(n + m) / 2` tile types.
///
/// The seed sits at the center. `V1..` tiles grow the center column in both
/// directions since a flipped `V` still binds the seed; each column tile
/// exposes the same east/west glue, so `H1..` rows grow both ways from it.
pub fn gen_odd_rect(n: i64, m: i64) -> Result<TileSystem, CompileError> {
    for d in [n, m] {
        if d < 1 || d % 2 == 0 {
            return Err(CompileError::EvenDimension(d));
        }
    }
    let (zv, zh) = ((n - 1) / 2, (m - 1) / 2);
    let row = if zh > 0 { glue("h1", false) } else { Glue::null() };
    let up = if zv > 0 { glue("v1", false) } else { Glue::null() };
    let mut tiles = vec![TileType::new("seed", up.clone(), row.clone(), up, row.clone())];
    for k in 1..=zv {
        let north = if k < zv { glue(&format!("v{}", k + 1), false) } else { Glue::null() };
        let south = glue(&format!("v{k}"), true);
        tiles.push(TileType::new(format!("V{k}"), north, row.clone(), south, row.clone()));
    }
    for k in 1..=zh {
        let east = if k < zh { glue(&format!("h{}", k + 1), false) } else { Glue::null() };
        let west = glue(&format!("h{k}"), true);
        tiles.push(TileType::new(format!("H{k}"), Glue::null(), east, Glue::null(), west));
    }
    let ts = TileSet::new(tiles)?;
    Ok(TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1)?)
}

pub fn gen_odd_square(n: i64) -> Result<TileSystem, CompileError> {
    gen_odd_rect(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rtam_core::{Shape, Window};
    use rtam_sim::{frontier, verify_strict, DEFAULT_STATE_LIMIT};

    #[test]
    fn tile_counts() {
        assert_eq!(gen_odd_square(5).unwrap().tile_count(), 5);
        assert_eq!(gen_odd_square(1).unwrap().tile_count(), 1);
        assert!(gen_odd_square(1).unwrap().tiles.get(0).is_blank());
        assert_eq!(gen_odd_rect(3, 5).unwrap().tile_count(), 4);
        assert_eq!(gen_odd_rect(1, 1).unwrap().tile_count(), 1);
        assert!(gen_odd_square(4).is_err());
        assert!(gen_odd_rect(3, 0).is_err());
    }

    #[test]
    fn bare_seed_frontier() {
        // The seed exposes both glue pairs, so the column and the center row start together.
        let sys = gen_odd_square(3).unwrap();
        let f = frontier(&sys, &sys.seed);
        let mut locs: Vec<Point> = f.iter().map(|a| a.location).collect();
        locs.sort();
        assert_eq!(locs, vec![Point::new(-1, 0), Point::new(0, -1), Point::new(0, 1), Point::new(1, 0)]);
    }

    #[test]
    fn strict_small_rects() {
        for (n, m) in [(1, 3), (3, 1), (3, 5), (5, 3)] {
            let sys = gen_odd_rect(n, m).unwrap();
            let shape = Shape::rect(m, n).unwrap();
            let v = verify_strict(&sys, &shape, Window::around(Point::ORIGIN, 5), DEFAULT_STATE_LIMIT).unwrap();
            assert!(v.holds(), "{n}x{m}: {v:?}");
        }
    }
}
