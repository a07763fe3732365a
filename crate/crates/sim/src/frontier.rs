//! Single-tile attachment semantics on unbounded assemblies.

use std::collections::BTreeSet;

use rtam_core::{Assembly, OrientedTile, Point, Reflection, Side, TileSystem};

use crate::engine::Engine;
use crate::error::SimError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attachment {
    pub location: Point,
    pub tile: usize,
    pub reflection: Reflection,
    pub bound_strength: u32,
}

impl Attachment {
    pub fn oriented(&self) -> OrientedTile {
        OrientedTile::new(self.tile, self.reflection)
    }
}

/// Seed followed by single-tile attachments.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AssemblySequence {
    pub seed: Vec<(Point, OrientedTile)>,
    pub steps: Vec<Attachment>,
}

impl AssemblySequence {
    pub fn final_assembly(&self) -> Result<Assembly, SimError> {
        let mut a = Assembly::from_placements(self.seed.iter().copied())?;
        for s in &self.steps {
            a.insert(s.location, s.oriented()).map_err(|_| SimError::Occupied(s.location))?;
        }
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.seed.len() + self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seed.is_empty() && self.steps.is_empty()
    }
}

fn neighbor_opts(engine: &Engine, a: &Assembly, p: Point) -> [Option<u16>; 4] {
    Side::ALL.map(|s| a.get(p.step(s)).and_then(|ot| engine.option_of(ot)))
}

/// Every attachment available to `a`, one per location and normalized placement.
pub fn frontier_with(engine: &Engine, a: &Assembly) -> Vec<Attachment> {
    let empty: BTreeSet<Point> = a
        .domain()
        .flat_map(|p| p.neighbors().map(|(_, q)| q))
        .filter(|q| !a.contains(*q))
        .collect();
    let mut out = Vec::new();
    for p in empty {
        for (o, strength) in engine.attachable(neighbor_opts(engine, a, p)) {
            let ot = engine.options[o as usize].ot;
            out.push(Attachment { location: p, tile: ot.tile, reflection: ot.reflection, bound_strength: strength });
        }
    }
    out
}

pub fn frontier(sys: &TileSystem, a: &Assembly) -> Vec<Attachment> {
    frontier_with(&Engine::new(sys), a)
}

pub fn step(a: &Assembly, att: &Attachment) -> Result<Assembly, SimError> {
    a.with(att.location, att.oriented()).map_err(|_| SimError::Occupied(att.location))
}

/// Replays a sequence, checking that each attachment is in the frontier when applied.
pub fn replay(sys: &TileSystem, seq: &AssemblySequence) -> Result<Assembly, SimError> {
    let engine = Engine::new(sys);
    let mut a = if seq.seed.is_empty() {
        sys.seed.clone()
    } else {
        Assembly::from_placements(seq.seed.iter().copied())?
    };
    for (i, att) in seq.steps.iter().enumerate() {
        if a.contains(att.location) {
            return Err(SimError::Occupied(att.location));
        }
        let nb = neighbor_opts(&engine, &a, att.location);
        let opt = engine.option_of(att.oriented());
        let ok = opt.is_some_and(|o| engine.strength_with(o, nb) >= sys.temperature);
        if !ok {
            return Err(SimError::InvalidAttachment { step: i, location: att.location });
        }
        a = step(&a, att)?;
    }
    Ok(a)
}

/// Builds the attachment record for placing `ot` at `p` next to `a`, if it is attachable.
pub fn attachment_for(engine: &Engine, a: &Assembly, p: Point, ot: OrientedTile) -> Option<Attachment> {
    if a.contains(p) {
        return None;
    }
    let o = engine.option_of(ot)?;
    let strength = engine.strength_with(o, neighbor_opts(engine, a, p));
    (strength >= engine.tau).then_some(Attachment {
        location: p,
        tile: ot.tile,
        reflection: ot.reflection,
        bound_strength: strength,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rtam_core::{Glue, TileSet, TileType};

    fn system() -> TileSystem {
        let n = Glue::null;
        let a = Glue::new("a", false, 1).unwrap();
        let ts = TileSet::new(vec![
            TileType::new("seed", a.clone(), n(), n(), n()),
            TileType::new("cap", n(), n(), a.complement().unwrap(), n()),
        ])
        .unwrap();
        TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1).unwrap()
    }

    #[test]
    fn single_north_attachment() {
        let sys = system();
        let f = frontier(&sys, &sys.seed);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].location, Point::new(0, 1));
        let a = step(&sys.seed, &f[0]).unwrap();
        assert_eq!(a.len(), 2);
        assert!(frontier(&sys, &a).is_empty());
        assert!(step(&a, &f[0]).is_err());
    }

    #[test]
    fn replay_rejects_unbound_tile() {
        let sys = system();
        let bad = Attachment { location: Point::new(1, 0), tile: 1, reflection: Reflection::D, bound_strength: 1 };
        let seq = AssemblySequence { seed: vec![], steps: vec![bad] };
        assert!(matches!(replay(&sys, &seq), Err(SimError::InvalidAttachment { .. })));
    }

    #[test]
    fn blank_seed_has_empty_frontier() {
        let n = Glue::null;
        let ts = TileSet::new(vec![TileType::new("s", n(), n(), n(), n())]).unwrap();
        let sys = TileSystem::singly_seeded(ts, OrientedTile::new(0, Reflection::D), Point::ORIGIN, 1).unwrap();
        assert!(frontier(&sys, &sys.seed).is_empty());
    }
}
