//! Glue-interned view of a tile system for fast attachment queries.

use std::collections::HashMap;

use rtam_core::{Glue, OrientedTile, Reflection, Side, TileSet, TileSystem};

/// One distinct placement of a tile: type plus normalized reflection.
#[derive(Clone, Debug)]
pub struct Opt {
    pub ot: OrientedTile,
    /// Interned glue id seen on each world side; 0 is null.
    pub glues: [u32; 4],
}

#[derive(Clone, Debug)]
pub struct Engine {
    pub tiles: TileSet,
    pub tau: u32,
    strength: Vec<u32>,
    comp: Vec<u32>,
    pub options: Vec<Opt>,
    by_glue: HashMap<(usize, u32), Vec<u16>>,
    lookup: HashMap<OrientedTile, u16>,
}

impl Engine {
    pub fn new(sys: &TileSystem) -> Self {
        Engine::from_tiles(&sys.tiles, sys.temperature)
    }

    pub fn from_tiles(tiles: &TileSet, tau: u32) -> Self {
        let mut ids: HashMap<Glue, u32> = HashMap::new();
        let mut strength = vec![0];
        let mut comp = vec![0];
        let mut intern = |g: &Glue, ids: &mut HashMap<Glue, u32>| -> u32 {
            if g.is_null() {
                return 0;
            }
            if let Some(&i) = ids.get(g) {
                return i;
            }
            let c = g.complement().expect("non-null");
            let (a, b) = (strength.len() as u32, strength.len() as u32 + 1);
            ids.insert(g.clone(), a);
            ids.insert(c, b);
            strength.extend([g.strength() as u32; 2]);
            comp.extend([b, a]);
            a
        };
        let mut options = Vec::new();
        let mut lookup = HashMap::new();
        for (i, t) in tiles.iter().enumerate() {
            for r in Reflection::ALL {
                let ot = OrientedTile::new(i, t.normalize(r));
                if lookup.contains_key(&ot) {
                    continue;
                }
                let glues = Side::ALL.map(|s| intern(t.observed(ot.reflection, s), &mut ids));
                lookup.insert(ot, options.len() as u16);
                options.push(Opt { ot, glues });
            }
        }
        let mut by_glue: HashMap<(usize, u32), Vec<u16>> = HashMap::new();
        for (k, o) in options.iter().enumerate() {
            for s in Side::ALL {
                if o.glues[s.index()] != 0 {
                    by_glue.entry((s.index(), o.glues[s.index()])).or_default().push(k as u16);
                }
            }
        }
        Engine { tiles: tiles.clone(), tau, strength, comp, options, by_glue, lookup }
    }

    /// Strength of the bond between glue ids `a` and `b`.
    pub fn bind(&self, a: u32, b: u32) -> u32 {
        if a != 0 && self.comp[a as usize] == b {
            self.strength[a as usize]
        } else {
            0
        }
    }

    pub fn option_of(&self, ot: OrientedTile) -> Option<u16> {
        let n = OrientedTile::new(ot.tile, self.tiles.get(ot.tile).normalize(ot.reflection));
        self.lookup.get(&n).copied()
    }

    pub fn glue(&self, opt: u16, s: Side) -> u32 {
        self.options[opt as usize].glues[s.index()]
    }

    /// Options whose glue on world side `s` binds glue id `g` presented by the neighbor.
    pub fn partners(&self, s: Side, g: u32) -> &[u16] {
        if g == 0 {
            return &[];
        }
        self.by_glue.get(&(s.index(), self.comp[g as usize])).map_or(&[], Vec::as_slice)
    }

    /// Options attachable at a location whose neighbors present `neighbor[s]`
    /// (the option placed on side `s`, if any), with their total strength.
    pub fn attachable(&self, neighbor: [Option<u16>; 4]) -> Vec<(u16, u32)> {
        let mut cands: Vec<u16> = Vec::new();
        for s in Side::ALL {
            if let Some(o) = neighbor[s.index()] {
                cands.extend_from_slice(self.partners(s, self.glue(o, s.opposite())));
            }
        }
        cands.sort_unstable();
        cands.dedup();
        cands
            .into_iter()
            .filter_map(|c| {
                let total = self.strength_with(c, neighbor);
                (total >= self.tau).then_some((c, total))
            })
            .collect()
    }

    pub fn strength_with(&self, c: u16, neighbor: [Option<u16>; 4]) -> u32 {
        Side::ALL
            .iter()
            .filter_map(|&s| {
                let o = neighbor[s.index()]?;
                Some(self.bind(self.glue(c, s), self.glue(o, s.opposite())))
            })
            .sum()
    }

    /// Whether some option could attach on side `s` of `opt` using that single bond.
    pub fn can_extend(&self, opt: u16, s: Side) -> Option<u16> {
        let g = self.glue(opt, s);
        self.partners(s.opposite(), g)
            .iter()
            .copied()
            .find(|&c| self.bind(self.glue(c, s.opposite()), g) >= self.tau)
    }
}
