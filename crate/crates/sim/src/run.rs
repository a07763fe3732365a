//! Single assembly runs inside a window, without exhaustive branching.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rtam_core::{Assembly, Point, Side, TileSystem, Window};

use crate::engine::Engine;
use crate::error::SimError;
use crate::frontier::{AssemblySequence, Attachment};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub window: Window,
    /// Random choices when set, otherwise the least location and option.
    pub rng_seed: Option<u64>,
    pub max_steps: usize,
}

impl RunOptions {
    pub fn new(window: Window) -> Self {
        RunOptions { window, rng_seed: None, max_steps: usize::MAX }
    }
}

#[derive(Clone, Debug)]
pub struct Run {
    pub assembly: Assembly,
    pub sequence: AssemblySequence,
    /// Some attachment outside the window was available and skipped.
    pub escaped: bool,
    /// No attachment is available inside the window.
    pub stuck: bool,
}

/// Grows one assembly from the seed until nothing fits inside the window.
pub fn run(sys: &TileSystem, opts: &RunOptions) -> Result<Run, SimError> {
    let engine = Engine::new(sys);
    let mut a = sys.seed.clone();
    let mut grid: std::collections::HashMap<Point, u16> = std::collections::HashMap::new();
    for (p, ot) in a.iter() {
        if !opts.window.contains(p) {
            return Err(SimError::SeedOutsideWindow);
        }
        grid.insert(p, engine.option_of(ot).ok_or(SimError::MultiTileSeed)?);
    }
    let mut rng = opts.rng_seed.map(ChaCha8Rng::seed_from_u64);
    let mut open: BTreeSet<Point> = BTreeSet::new();
    for p in grid.keys() {
        open.extend(p.neighbors().map(|(_, q)| q).into_iter().filter(|q| !grid.contains_key(q)));
    }
    let mut seq = AssemblySequence { seed: a.iter().collect(), steps: vec![] };
    let mut escaped = false;
    let mut pool: Vec<Point> = Vec::new();
    while seq.steps.len() < opts.max_steps {
        if open.is_empty() {
            break;
        }
        let p = match rng.as_mut() {
            Some(r) => {
                pool.clear();
                pool.extend(open.iter().copied());
                pool[r.gen_range(0..pool.len())]
            }
            None => *open.iter().next().expect("non-empty"),
        };
        open.remove(&p);
        let nb = Side::ALL.map(|s| grid.get(&p.step(s)).copied());
        let mut cands = engine.attachable(nb);
        if cands.is_empty() {
            continue;
        }
        if !opts.window.contains(p) {
            escaped = true;
            continue;
        }
        if let Some(r) = rng.as_mut() {
            cands.shuffle(r);
        }
        let (o, strength) = cands[0];
        let ot = engine.options[o as usize].ot;
        grid.insert(p, o);
        a.insert(p, ot)?;
        seq.steps.push(Attachment { location: p, tile: ot.tile, reflection: ot.reflection, bound_strength: strength });
        open.extend(p.neighbors().map(|(_, q)| q).into_iter().filter(|q| !grid.contains_key(q)));
    }
    let stuck = open.is_empty();
    Ok(Run { assembly: a, sequence: seq, escaped, stuck })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rtam_core::{Glue, OrientedTile, Reflection, TileSet, TileType};

    fn column() -> TileSystem {
        let a = Glue::new("a", false, 1).unwrap();
        let ts = TileSet::new(vec![TileType::new("c", a.clone(), Glue::null(), a.complement().unwrap(), Glue::null())]).unwrap();
        TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1).unwrap()
    }

    #[test]
    fn column_fills_window_and_escapes() {
        let r = run(&column(), &RunOptions::new(Window::around(Point::ORIGIN, 3))).unwrap();
        assert_eq!(r.assembly.len(), 7);
        assert!(r.escaped && r.stuck);
        let again = crate::frontier::replay(&column(), &r.sequence).unwrap();
        assert_eq!(again, r.assembly);
    }

    #[test]
    fn random_runs_agree_on_domain() {
        let sys = column();
        let w = Window::around(Point::ORIGIN, 4);
        for s in 0..5 {
            let opts = RunOptions { rng_seed: Some(s), ..RunOptions::new(w) };
            assert_eq!(run(&sys, &opts).unwrap().assembly.len(), 9);
        }
    }
}
