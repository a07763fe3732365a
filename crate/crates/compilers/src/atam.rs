//! Plain aTAM systems: fixed orientations, equal labels bind.

use std::collections::{BTreeMap, BTreeSet};

use rtam_core::{Point, Side, TileSystem};

/// A side glue; an empty label is no glue.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AGlue {
    pub label: String,
    pub strength: u8,
}

impl AGlue {
    pub fn new(label: impl Into<String>, strength: u8) -> Self {
        AGlue { label: label.into(), strength }
    }

    pub fn null() -> Self {
        AGlue { label: String::new(), strength: 0 }
    }

    pub fn is_null(&self) -> bool {
        self.label.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ATile {
    pub name: String,
    /// Indexed by `Side::index` (N, E, S, W).
    pub glues: [AGlue; 4],
}

impl ATile {
    pub fn new(name: impl Into<String>, glues: [AGlue; 4]) -> Self {
        ATile { name: name.into(), glues }
    }

    pub fn glue(&self, s: Side) -> &AGlue {
        &self.glues[s.index()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ATamSystem {
    pub tiles: Vec<ATile>,
    pub seed: (usize, Point),
    pub temperature: u32,
}

/// Bond strength between two facing glues.
pub fn abinds(a: &AGlue, b: &AGlue) -> u32 {
    if !a.is_null() && a == b {
        a.strength as u32
    } else {
        0
    }
}

#[derive(Clone, Debug, Default)]
pub struct ARun {
    pub placements: BTreeMap<Point, usize>,
    pub order: Vec<(Point, usize)>,
    /// Number of available attachments before each step.
    pub choices: Vec<usize>,
    pub terminal: bool,
}

impl ARun {
    /// Every step had exactly one available attachment.
    pub fn single_frontier(&self) -> bool {
        self.choices.iter().all(|&c| c == 1)
    }
}

impl ATamSystem {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.tiles.iter().position(|t| t.name == name)
    }

    pub fn strength_at(&self, a: &BTreeMap<Point, usize>, p: Point, t: usize) -> u32 {
        p.neighbors()
            .iter()
            .filter_map(|&(s, q)| a.get(&q).map(|&u| abinds(self.tiles[t].glue(s), self.tiles[u].glue(s.opposite()))))
            .sum()
    }

    /// Attachable (location, tile) pairs in location order.
    pub fn attachments(&self, a: &BTreeMap<Point, usize>) -> Vec<(Point, usize)> {
        let spots: BTreeSet<Point> = a
            .keys()
            .flat_map(|p| p.neighbors().into_iter().map(|(_, q)| q))
            .filter(|q| !a.contains_key(q))
            .collect();
        self.attachments_at(a, &spots)
    }

    fn attachments_at(&self, a: &BTreeMap<Point, usize>, spots: &BTreeSet<Point>) -> Vec<(Point, usize)> {
        let mut out = Vec::new();
        for &q in spots {
            for t in 0..self.tiles.len() {
                if self.strength_at(a, q, t) >= self.temperature {
                    out.push((q, t));
                }
            }
        }
        out
    }

    /// Grows from the seed taking the first attachment each step.
    pub fn run(&self, max_steps: usize) -> ARun {
        let mut r = ARun::default();
        r.placements.insert(self.seed.1, self.seed.0);
        let mut spots: BTreeSet<Point> = self.seed.1.neighbors().iter().map(|&(_, q)| q).collect();
        for _ in 0..max_steps {
            // Only spots next to a glue can host a tile.
            let live: BTreeSet<Point> = spots
                .iter()
                .copied()
                .filter(|q| {
                    q.neighbors().iter().any(|&(s, n)| {
                        r.placements.get(&n).is_some_and(|&u| !self.tiles[u].glue(s.opposite()).is_null())
                    })
                })
                .collect();
            spots = live;
            let opts = self.attachments_at(&r.placements, &spots);
            if opts.is_empty() {
                r.terminal = true;
                return r;
            }
            r.choices.push(opts.len());
            let (p, t) = opts[0];
            r.placements.insert(p, t);
            r.order.push((p, t));
            spots.remove(&p);
            spots.extend(p.neighbors().iter().map(|&(_, q)| q).filter(|q| !r.placements.contains_key(q)));
        }
        r
    }

    /// Reads an RTAM tile set with labels taken verbatim, primes included.
    pub fn reinterpret(sys: &TileSystem) -> Option<ATamSystem> {
        let (p, ot) = sys.single_seed()?;
        let tiles = sys
            .tiles
            .iter()
            .map(|t| {
                let glues = Side::ALL.map(|s| {
                    let g = t.glue(s);
                    if g.is_null() {
                        AGlue::null()
                    } else {
                        AGlue::new(g.display_label(), g.strength())
                    }
                });
                ATile::new(t.name.clone(), glues)
            })
            .collect();
        Some(ATamSystem { tiles, seed: (ot.tile, p), temperature: sys.temperature })
    }

    /// Mirror image across the x axis.
    pub fn flipped_vertically(&self) -> ATamSystem {
        let tiles = self
            .tiles
            .iter()
            .map(|t| {
                let [n, e, s, w] = t.glues.clone();
                ATile::new(t.name.clone(), [s, e, n, w])
            })
            .collect();
        let (i, p) = self.seed;
        ATamSystem { tiles, seed: (i, Point::new(p.x, -p.y)), temperature: self.temperature }
    }
}
