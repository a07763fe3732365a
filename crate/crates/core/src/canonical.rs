//! Keys identifying configurations and assemblies up to reflection and translation.

use crate::assembly::{Assembly, Configuration};
use crate::geometry::{Point, Window};
use crate::reflection::Reflection;
use crate::tile::TileSet;

/// Sorted `(x, y, tile, reflection bits)` entries of the least transformed image.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub Vec<(i64, i64, usize, u8)>);

fn least_image<F>(points: &[(Point, usize, Reflection)], tag: F) -> CanonicalKey
where
    F: Fn(usize, Reflection) -> u8,
{
    let mut best: Option<Vec<(i64, i64, usize, u8)>> = None;
    for r in Reflection::ALL {
        let moved: Vec<(Point, usize, Reflection)> =
            points.iter().map(|&(p, t, q)| (r.apply(p), t, q.compose(r))).collect();
        let origin = Window::bounding(moved.iter().map(|e| e.0)).map_or(Point::ORIGIN, |w| w.min);
        let mut img: Vec<_> = moved
            .into_iter()
            .map(|(p, t, q)| {
                let p = p - origin;
                (p.x, p.y, t, tag(t, q))
            })
            .collect();
        img.sort_unstable();
        if best.as_ref().map_or(true, |b| img < *b) {
            best = Some(img);
        }
    }
    CanonicalKey(best.unwrap_or_default())
}

/// Equal for configurations related by a reflection and a translation.
pub fn canonical_key(c: &Configuration) -> CanonicalKey {
    let pts: Vec<_> = c.typing.iter().map(|(&p, &t)| (p, t, Reflection::D)).collect();
    least_image(&pts, |_, _| 0)
}

/// As [`canonical_key`] but keeps orientations, folding the global reflection into each tile
/// and normalizing symmetric tiles.
pub fn canonical_key_assembly(tiles: &TileSet, a: &Assembly) -> CanonicalKey {
    let pts: Vec<_> = a.iter().map(|(p, ot)| (p, ot.tile, ot.reflection)).collect();
    least_image(&pts, |t, r| tiles.get(t).normalize(r).bits())
}
