//! Periodic structure of directed temperature-1 systems: a core box around the
//! seed plus, per diagonal quadrant, a union of semi-doubly-periodic sets.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rtam_core::{binds, Assembly, OrientedTile, Point, TileSystem, Window};
use rtam_sim::{is_directed, run, RunOptions, Verdict};

use crate::error::AnalysisError;
use crate::sdp::SemiDoublyPeriodicSet;
use crate::stretch::Mode;

/// State limit for the directedness check on the core window.
pub const CORE_STATE_LIMIT: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Empty,
    /// Every generator pair is collinear: finitely many rays.
    Rays,
    Periodic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub quadrant: Mode,
    pub sets: Vec<SemiDoublyPeriodicSet>,
}

fn independent(s: &SemiDoublyPeriodicSet) -> bool {
    s.u.x * s.v.y - s.u.y * s.v.x != 0
}

impl Component {
    pub fn kind(&self) -> ComponentKind {
        if self.sets.is_empty() {
            ComponentKind::Empty
        } else if self.sets.iter().any(independent) {
            ComponentKind::Periodic
        } else {
            ComponentKind::Rays
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.sets.iter().any(|s| s.contains(p))
    }
}

#[derive(Clone, Debug)]
pub struct PeriodicStructure {
    pub seed: Point,
    /// Core radius `4|T| + c + 1` with `c = 0` for a single-tile seed.
    pub radius: i64,
    /// Occupied points of the core box.
    pub core: BTreeSet<Point>,
    /// One component per quadrant in [`Mode::ALL`] order.
    pub components: Vec<Component>,
}

/// Quadrant of `p` relative to `seed`; points on the axes go to the eastern or northern side.
fn quadrant(seed: Point, p: Point) -> Mode {
    let d = p - seed;
    match (d.x >= 0, d.y >= 0) {
        (true, true) => Mode::NE,
        (false, true) => Mode::NW,
        (true, false) => Mode::SE,
        (false, false) => Mode::SW,
    }
}

fn in_cone(m: Mode, u: Point) -> bool {
    let (sx, sy) = match m {
        Mode::NE => (1, 1),
        Mode::NW => (-1, 1),
        Mode::SE => (1, -1),
        Mode::SW => (-1, -1),
    };
    u != Point::ORIGIN && u.x * sx >= 0 && u.y * sy >= 0
}

impl PeriodicStructure {
    pub fn core_box(&self) -> Window {
        Window::around(self.seed, self.radius)
    }

    pub fn contains(&self, p: Point) -> bool {
        if self.core_box().contains(p) {
            return self.core.contains(&p);
        }
        self.components.iter().any(|c| c.contains(p))
    }

    /// Predicted occupied points inside `w`.
    pub fn points_in(&self, w: Window) -> BTreeSet<Point> {
        let mut out: BTreeSet<Point> = self.core.iter().copied().filter(|&p| w.contains(p)).collect();
        for c in &self.components {
            for s in &c.sets {
                expand(s, w, &mut out);
            }
        }
        out
    }
}

fn expand(s: &SemiDoublyPeriodicSet, w: Window, out: &mut BTreeSet<Point>) {
    let walk = |start: Point, g: Point, f: &mut dyn FnMut(Point)| {
        let mut p = start;
        loop {
            if !w.contains(p) {
                break;
            }
            f(p);
            if g == Point::ORIGIN {
                break;
            }
            p = p + g;
        }
    };
    walk(s.base, s.u, &mut |p| walk(p, s.v, &mut |q| {
        out.insert(q);
    }));
}

/// Occupied points of a single run confined to `w`.
pub fn simulated_points(sys: &TileSystem, w: Window) -> Result<BTreeSet<Point>, AnalysisError> {
    Ok(run(sys, &RunOptions::new(w))?.assembly.domain().collect())
}

/// Breadth-first parent map over bound neighbors from `root`.
fn bfs_tree(sys: &TileSystem, a: &Assembly, root: Point) -> BTreeMap<Point, Point> {
    let mut prev = BTreeMap::from([(root, root)]);
    let mut queue = VecDeque::from([root]);
    while let Some(p) = queue.pop_front() {
        let ot = a.get(p).expect("occupied");
        for (s, q) in p.neighbors() {
            if prev.contains_key(&q) {
                continue;
            }
            if let Some(o) = a.get(q) {
                if binds(sys.tiles.observed(ot, s), sys.tiles.observed(o, s.opposite())) > 0 {
                    prev.insert(q, p);
                    queue.push_back(q);
                }
            }
        }
    }
    prev
}

/// Predicts the occupied set from a run on a window of radius `2c'` and
/// checks directedness on the core window first.
pub fn periodic_structure(sys: &TileSystem) -> Result<PeriodicStructure, AnalysisError> {
    if sys.temperature != 1 {
        return Err(AnalysisError::Precondition("periodic structure needs temperature 1".into()));
    }
    let (seed, _) = sys.single_seed().ok_or(AnalysisError::Precondition("needs a single-tile seed".into()))?;
    let radius = 4 * sys.tile_count() as i64 + 1;
    let core_box = Window::around(seed, radius);
    if let Verdict::Refuted(_) = is_directed(sys, core_box, CORE_STATE_LIMIT)? {
        return Err(AnalysisError::Precondition("system is not directed".into()));
    }
    let train = Window::around(seed, 2 * radius);
    let alpha = run(sys, &RunOptions::new(train))?.assembly;
    let occupied: HashSet<Point> = alpha.domain().collect();
    let core = alpha.domain().filter(|&p| core_box.contains(p)).collect();

    // Candidate generators: displacement to the next occurrence of the same
    // oriented tile along seed paths.
    let tree = bfs_tree(sys, &alpha, seed);
    let norm = |p: Point| -> OrientedTile { sys.tiles.normalize(alpha.get(p).expect("occupied")) };
    let mut gens: BTreeSet<Point> = BTreeSet::new();
    for &q in tree.keys() {
        if core_box.contains(q) {
            continue;
        }
        let mut path = vec![q];
        while *path.last().unwrap() != seed {
            path.push(tree[path.last().unwrap()]);
        }
        path.reverse();
        for i in 0..path.len() {
            if let Some(j) = ((i + 1)..path.len()).find(|&j| norm(path[j]) == norm(path[i])) {
                let u = path[j] - path[i];
                if u.x.abs().max(u.y.abs()) <= radius {
                    gens.insert(u);
                }
            }
        }
    }

    let found: Vec<Point> = gens.iter().copied().collect();
    for (i, &u) in found.iter().enumerate() {
        for &v in &found[i + 1..] {
            let w = u + v;
            if w != Point::ORIGIN && w.x.abs().max(w.y.abs()) <= radius {
                gens.insert(w);
            }
        }
    }

    let components = Mode::ALL
        .iter()
        .map(|&m| {
            let pts: Vec<Point> = occupied
                .iter()
                .copied()
                .filter(|&p| !core_box.contains(p) && quadrant(seed, p) == m)
                .collect();
            let cone: Vec<Point> = gens.iter().copied().filter(|&u| in_cone(m, u)).collect();
            Component { quadrant: m, sets: quadrant_sets(&occupied, train, &pts, &cone) }
        })
        .collect();
    Ok(PeriodicStructure { seed, radius, core, components })
}

fn quadrant_sets(occupied: &HashSet<Point>, train: Window, pts: &[Point], cone: &[Point]) -> Vec<SemiDoublyPeriodicSet> {
    // good[u] holds points whose forward ray along u stays occupied inside the training window.
    let ray_ok = |p: Point, u: Point| {
        let mut q = p;
        while train.contains(q) {
            if !occupied.contains(&q) {
                return false;
            }
            q = q + u;
        }
        true
    };
    let good: BTreeMap<Point, HashSet<Point>> =
        cone.iter().map(|&u| (u, pts.iter().copied().filter(|&p| ray_ok(p, u)).collect())).collect();
    let in_good = |p: Point, v: Point| v == Point::ORIGIN || good[&v].contains(&p);
    let valid = |b: Point, u: Point, v: Point| {
        if !occupied.contains(&b) || !good[&u].contains(&b) {
            return false;
        }
        // Require each generator to be observed at least twice inside the window.
        for w in [u * 2, v * 2, u + v] {
            if !train.contains(b + w) {
                return false;
            }
        }
        let mut p = b;
        while train.contains(p) {
            if !in_good(p, v) {
                return false;
            }
            p = p + u;
        }
        true
    };
    let mut pairs = Vec::new();
    for (i, &u) in cone.iter().enumerate() {
        pairs.push((u, Point::ORIGIN));
        for &v in &cone[i + 1..] {
            pairs.push((u, v));
        }
    }
    let mut sets = Vec::new();
    let mut covered: HashSet<Point> = HashSet::new();
    for &(u, v) in &pairs {
        for &b in pts {
            if !valid(b, u, v) {
                continue;
            }
            let dominated = valid(b - u, u, v) || (v != Point::ORIGIN && valid(b - v, u, v));
            if !dominated {
                sets.push(SemiDoublyPeriodicSet::new(b, u, v));
                let mut tmp = BTreeSet::new();
                expand(&SemiDoublyPeriodicSet::new(b, u, v), train, &mut tmp);
                covered.extend(tmp);
            }
        }
    }
    // Points of the training window not explained by any periodic set stay as singletons.
    let mut rest: Vec<Point> = pts.iter().copied().filter(|p| !covered.contains(p)).collect();
    rest.sort();
    sets.extend(rest.into_iter().map(|b| SemiDoublyPeriodicSet::new(b, Point::ORIGIN, Point::ORIGIN)));
    sets.sort_by_key(|s| (s.base, s.u, s.v));
    sets
}

/// Points where prediction and a fresh run on the radius-`3c'` window disagree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    pub window: Option<Window>,
    pub missing: BTreeSet<Point>,
    pub extra: BTreeSet<Point>,
}

impl Comparison {
    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn validate(sys: &TileSystem, s: &PeriodicStructure) -> Result<Comparison, AnalysisError> {
    let w = Window::around(s.seed, 3 * s.radius);
    let sim = simulated_points(sys, w)?;
    let pred = s.points_in(w);
    Ok(Comparison {
        window: Some(w),
        missing: sim.difference(&pred).copied().collect(),
        extra: pred.difference(&sim).copied().collect(),
    })
}
