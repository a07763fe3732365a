//! Assembly sequences that push corner tiles of a purported square apart.

use std::collections::BTreeSet;

use rtam_core::{Assembly, Point};
use rtam_sim::Engine;

use crate::error::AnalysisError;
use crate::path::{extract_path, find_triple_repetition, shortest_to, TilePath};
use crate::stretch::{grow_two_arms, pump_steps, two_arm_stretch, TwoArm};

/// A two-arm stretch whose main path ends at copies of two square corners.
#[derive(Clone, Debug)]
pub struct CornerWitness {
    pub growth: TwoArm,
    /// Stretched positions of the main path's first and last elements.
    pub ends: (Point, Point),
}

impl CornerWitness {
    pub fn manhattan(&self) -> i64 {
        self.ends.0.manhattan(self.ends.1)
    }

    /// Whether the two ends cannot both lie in an `n`×`n` box.
    pub fn exceeds_box(&self, n: i64) -> bool {
        let d = self.ends.1 - self.ends.0;
        d.x.abs() >= n || d.y.abs() >= n
    }
}

fn seed_of(alpha: &Assembly, seed: Point) -> Result<(), AnalysisError> {
    alpha.get(seed).map(|_| ()).ok_or(AnalysisError::NotInDomain(seed))
}

fn ends(t: &TwoArm) -> (Point, Point) {
    let m = t.main_path();
    (m.locations[0], m.end())
}

/// Even-side square witness: joins the corner opposite the visited quadrant to the
/// corner-to-corner path, then stretches the result through the seed's junction.
pub fn even_square_witness(
    engine: &Engine,
    alpha: &Assembly,
    seed: Point,
    origin: Point,
    n: i64,
) -> Result<CornerWitness, AnalysisError> {
    seed_of(alpha, seed)?;
    let tiles = &engine.tiles;
    let h = n / 2;
    let a = origin;
    let b = origin + Point::new(0, n - 1);
    let c = origin + Point::new(n - 1, n - 1);
    let d = origin + Point::new(n - 1, 0);
    let in_nw = |p: Point| p.x - origin.x < h && p.y - origin.y >= h && p.y - origin.y < n && p.x >= origin.x;
    let in_se = |p: Point| p.x - origin.x >= h && p.x - origin.x < n && p.y - origin.y < h && p.y >= origin.y;
    let pac = extract_path(tiles, alpha, a, c)?;
    let (other, visited): (Point, &dyn Fn(Point) -> bool) =
        if pac.locations.iter().any(|&p| in_nw(p)) { (d, &in_nw) } else { (b, &in_se) };
    let on_pac: BTreeSet<Point> = pac.locations.iter().copied().collect();
    let spur = shortest_to(tiles, alpha, other, |p| on_pac.contains(&p)).ok_or(AnalysisError::Disconnected(other, a))?;
    let y = *spur.last().expect("non-empty");
    let iy = pac.locations.iter().position(|&p| p == y).expect("on path");
    let z = pac.locations.iter().position(|&p| visited(p)).ok_or_else(|| {
        AnalysisError::Precondition("corner path avoids both off-diagonal quadrants".into())
    })?;
    let mut main = spur.clone();
    if z >= iy {
        main.extend(&pac.locations[iy + 1..]);
    } else {
        main.extend(pac.locations[..iy].iter().rev());
    }
    let main = TilePath::from_points(alpha, &main)?;
    let on_main: BTreeSet<Point> = main.locations.iter().copied().collect();
    let sp = shortest_to(tiles, alpha, seed, |p| on_main.contains(&p)).ok_or(AnalysisError::Disconnected(seed, y))?;
    let seed_path = TilePath::from_points(alpha, &sp)?;
    let growth = two_arm_stretch(engine, &seed_path, &main, seed_path.end())?;
    let ends = ends(&growth);
    Ok(CornerWitness { growth, ends })
}

/// Odd-side lower-bound witness: pumps a repeated tile type on the corner-to-corner
/// path `2n` times so the corner copies end up too far apart.
pub fn odd_lower_bound_witness(
    engine: &Engine,
    alpha: &Assembly,
    seed: Point,
    origin: Point,
    n: i64,
) -> Result<CornerWitness, AnalysisError> {
    seed_of(alpha, seed)?;
    let tiles = &engine.tiles;
    let a = origin;
    let c = origin + Point::new(n - 1, n - 1);
    let pac = extract_path(tiles, alpha, a, c)?;
    let on_pac: BTreeSet<Point> = pac.locations.iter().copied().collect();
    let sp = shortest_to(tiles, alpha, seed, |p| on_pac.contains(&p)).ok_or(AnalysisError::Disconnected(seed, a))?;
    let seed_path = TilePath::from_points(alpha, &sp)?;
    let x = seed_path.end();
    let kx = pac.locations.iter().position(|&p| p == x).expect("on path");
    let (i, j, k) = find_triple_repetition(&pac)
        .ok_or_else(|| AnalysisError::Precondition("no tile type repeats three times".into()))?;
    let steps = pac.steps();
    let (g, f) = [(i, j), (i, k), (j, k)]
        .into_iter()
        .find(|&(g, f)| steps[f].input != steps[g].output)
        .expect("three copies always admit a non-degenerate pair");
    let copies = 2 * n as usize;
    let pumped = pump_steps(&steps, g, f, copies)?;
    let junction = if kx < f { kx } else { kx + copies * (f - g) };
    let growth = grow_two_arms(engine, seed, seed_path.tiles[0], &seed_path.steps(), &pumped, junction)?;
    let ends = ends(&growth);
    Ok(CornerWitness { growth, ends })
}
