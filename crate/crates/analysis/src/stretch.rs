//! Stretching paths into monotone staircases, two-arm growth, pumping and
//! reflected repeat families.

use rtam_core::{Assembly, OrientedTile, Point, Reflection, Side};
use rtam_sim::{attachment_for, AssemblySequence, Engine};

use crate::error::AnalysisError;
use crate::path::{PathStep, TilePath};

/// Diagonal quadrant a stretched path grows into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    NE,
    NW,
    SE,
    SW,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::NE, Mode::NW, Mode::SE, Mode::SW];

    /// Vertical output first, then horizontal.
    pub fn outputs(self) -> [Side; 2] {
        match self {
            Mode::NE => [Side::N, Side::E],
            Mode::NW => [Side::N, Side::W],
            Mode::SE => [Side::S, Side::E],
            Mode::SW => [Side::S, Side::W],
        }
    }

    pub fn inputs(self) -> [Side; 2] {
        self.outputs().map(Side::opposite)
    }

    /// The two quadrants sharing exactly one output side with `self`.
    pub fn perpendicular(self) -> [Mode; 2] {
        match self {
            Mode::NE | Mode::SW => [Mode::NW, Mode::SE],
            Mode::NW | Mode::SE => [Mode::NE, Mode::SW],
        }
    }

    fn output_on_axis(self, vertical: bool) -> Side {
        self.outputs()[if vertical { 0 } else { 1 }]
    }
}

/// Sets the flip bit of `r` for the axis of `default` so that it shows on world side `world`.
fn with_side(r: Reflection, default: Side, world: Side) -> Reflection {
    let bit = if default.is_vertical() { 1 } else { 2 };
    let want = if default == world { 0 } else { bit };
    Reflection::from_bits((r.bits() & !bit) | want)
}

/// Reflection of a path tile entered on world side `world_in` whose output faces the mode's quadrant.
fn orient(step: &PathStep, world_in: Side, mode: Mode, index: usize) -> Result<Reflection, AnalysisError> {
    let d_in = step.input.ok_or(AnalysisError::DegenerateStep(index))?;
    if Some(d_in) == step.output {
        return Err(AnalysisError::DegenerateStep(index));
    }
    if d_in.is_vertical() != world_in.is_vertical() {
        return Err(AnalysisError::BrokenPath(index.saturating_sub(1), index));
    }
    let mut r = with_side(step.reflection, d_in, world_in);
    if let Some(d_out) = step.output {
        if d_out.is_vertical() != d_in.is_vertical() {
            r = with_side(r, d_out, mode.output_on_axis(d_out.is_vertical()));
        }
    }
    Ok(r)
}

/// Incrementally built assembly sequence that checks every attachment.
pub struct Builder<'e> {
    engine: &'e Engine,
    pub assembly: Assembly,
    pub sequence: AssemblySequence,
}

impl<'e> Builder<'e> {
    pub fn new(engine: &'e Engine, at: Point, ot: OrientedTile) -> Self {
        Builder {
            engine,
            assembly: Assembly::single(at, ot),
            sequence: AssemblySequence { seed: vec![(at, ot)], steps: vec![] },
        }
    }

    pub fn place(&mut self, p: Point, ot: OrientedTile) -> Result<(), AnalysisError> {
        let att = attachment_for(self.engine, &self.assembly, p, ot).ok_or(AnalysisError::Collision(p))?;
        self.assembly.insert(p, ot).map_err(|_| AnalysisError::Collision(p))?;
        self.sequence.steps.push(att);
        Ok(())
    }

    /// Grows `steps` from an already placed tile at `from` whose output shows on `world_out`.
    pub fn grow(
        &mut self,
        from: Point,
        world_out: Side,
        steps: &[PathStep],
        mode: Mode,
        first_index: usize,
    ) -> Result<TilePath, AnalysisError> {
        if !mode.outputs().contains(&world_out) {
            return Err(AnalysisError::AnchorIncompatible(world_out));
        }
        let mut path = TilePath { locations: vec![], tiles: vec![] };
        let (mut prev, mut out) = (from, Some(world_out));
        for (k, step) in steps.iter().enumerate() {
            let dir = out.ok_or(AnalysisError::DegenerateStep(first_index + k))?;
            let p = prev.step(dir);
            let r = orient(step, dir.opposite(), mode, first_index + k)?;
            let ot = OrientedTile::new(step.tile, r);
            self.place(p, ot)?;
            path.locations.push(p);
            path.tiles.push(ot);
            out = step.output.map(|d| r.side_map(d));
            prev = p;
        }
        Ok(path)
    }
}

/// A stretched path and the sequence that grows it from its anchor.
#[derive(Clone, Debug)]
pub struct Stretched {
    pub path: TilePath,
    pub sequence: AssemblySequence,
}

/// Re-reflects every tile after the anchor so the path grows monotonically into `mode`.
pub fn stretch_path(engine: &Engine, p: &TilePath, mode: Mode) -> Result<Stretched, AnalysisError> {
    stretch_steps(engine, p.locations[0], p.tiles[0], &p.steps(), mode)
}

/// As [`stretch_path`] for abstract steps; `steps[0]` is the fixed anchor.
pub fn stretch_steps(
    engine: &Engine,
    at: Point,
    anchor: OrientedTile,
    steps: &[PathStep],
    mode: Mode,
) -> Result<Stretched, AnalysisError> {
    let mut b = Builder::new(engine, at, anchor);
    let mut path = TilePath { locations: vec![at], tiles: vec![anchor] };
    if steps.len() > 1 {
        let out = steps[0].output.ok_or(AnalysisError::DegenerateStep(0))?;
        let rest = b.grow(at, anchor.reflection.side_map(out), &steps[1..], mode, 1)?;
        path.locations.extend(rest.locations);
        path.tiles.extend(rest.tiles);
    }
    Ok(Stretched { path, sequence: b.sequence })
}

/// Result of growing a seed path and two arms of a main path from a junction.
#[derive(Clone, Debug)]
pub struct TwoArm {
    pub sequence: AssemblySequence,
    pub assembly: Assembly,
    pub seed_part: TilePath,
    /// Arm toward the first element of the main path, junction excluded.
    pub first_arm: TilePath,
    /// Arm toward the last element of the main path, junction excluded.
    pub second_arm: TilePath,
    pub junction: Point,
}

impl TwoArm {
    /// Stretched main path from its first element to its last.
    pub fn main_path(&self) -> TilePath {
        let mut locations: Vec<Point> = self.first_arm.locations.iter().rev().copied().collect();
        let mut tiles: Vec<OrientedTile> = self.first_arm.tiles.iter().rev().copied().collect();
        locations.push(self.junction);
        tiles.push(self.assembly.get(self.junction).expect("junction placed"));
        locations.extend(&self.second_arm.locations);
        tiles.extend(&self.second_arm.tiles);
        TilePath { locations, tiles }
    }
}

/// Grows `seed_path` monotonically, then the parts of `main_path` on either side of
/// `junction` into the two quadrants perpendicular to the seed path's quadrant.
pub fn two_arm_stretch(
    engine: &Engine,
    seed_path: &TilePath,
    main_path: &TilePath,
    junction: Point,
) -> Result<TwoArm, AnalysisError> {
    if seed_path.end() != junction {
        return Err(AnalysisError::Precondition("seed path must end at the junction".into()));
    }
    let k = main_path
        .locations
        .iter()
        .position(|&p| p == junction)
        .ok_or_else(|| AnalysisError::Precondition("main path must pass through the junction".into()))?;
    grow_two_arms(engine, seed_path.locations[0], seed_path.tiles[0], &seed_path.steps(), &main_path.steps(), k)
}

/// Abstract form of [`two_arm_stretch`]: `seed_steps` runs from the anchor to the
/// junction and `main[k]` is the junction.
pub fn grow_two_arms(
    engine: &Engine,
    at: Point,
    anchor: OrientedTile,
    seed_steps: &[PathStep],
    main: &[PathStep],
    k: usize,
) -> Result<TwoArm, AnalysisError> {
    let first: Vec<PathStep> = main[..k].iter().rev().map(|s| s.reversed()).collect();
    let second: Vec<PathStep> = main[k + 1..].to_vec();
    let (o_first, o_second) = (main[k].input, main[k].output);
    let mut b = Builder::new(engine, at, anchor);
    let mut seed_part = TilePath { locations: vec![at], tiles: vec![anchor] };
    let (junction, jot, modes) = if seed_steps.len() == 1 {
        let w = |o: Option<Side>| o.map(|d| anchor.reflection.side_map(d));
        let (w1, w2) = (w(o_first), w(o_second));
        let fits = |m: Mode, s: Option<Side>| s.map_or(true, |s| m.outputs().contains(&s));
        let pairs = [(Mode::NW, Mode::SE), (Mode::SE, Mode::NW), (Mode::NE, Mode::SW), (Mode::SW, Mode::NE)];
        let modes = pairs
            .into_iter()
            .find(|&(m1, m2)| fits(m1, w1) && fits(m2, w2))
            .ok_or(AnalysisError::JunctionCannotSplit)?;
        (at, anchor, modes)
    } else {
        let out0 = seed_steps[0].output.ok_or(AnalysisError::DegenerateStep(0))?;
        let w0 = anchor.reflection.side_map(out0);
        let ms = Mode::ALL.into_iter().find(|m| m.outputs().contains(&w0)).expect("every side lies in some quadrant");
        let last = seed_steps.len() - 1;
        let mid = b.grow(at, w0, &seed_steps[1..last], ms, 1)?;
        let (prev, prev_out) = match mid.locations.last() {
            Some(&p) => {
                let ot = *mid.tiles.last().expect("parallel");
                (p, ot.reflection.side_map(seed_steps[last - 1].output.ok_or(AnalysisError::DegenerateStep(last - 1))?))
            }
            None => (at, w0),
        };
        seed_part.locations.extend(&mid.locations);
        seed_part.tiles.extend(&mid.tiles);
        let j = prev.step(prev_out);
        let d_in = seed_steps[last].input.ok_or(AnalysisError::DegenerateStep(last))?;
        let base = with_side(main[k].reflection, d_in, prev_out.opposite());
        let free = if d_in.is_vertical() { 2 } else { 1 };
        let [p1, p2] = ms.perpendicular();
        let mut found = None;
        for bit in [0u8, free] {
            let r = Reflection::from_bits(base.bits() ^ bit);
            let w = |o: Option<Side>| o.map(|d| r.side_map(d));
            let (w1, w2) = (w(o_first), w(o_second));
            let fits = |m: Mode, s: Option<Side>| s.map_or(true, |s| m.outputs().contains(&s));
            let choice = match (w1.is_some(), w2.is_some()) {
                (true, true) => [(p1, p2), (p2, p1)].into_iter().find(|&(a, c)| fits(a, w1) && fits(c, w2)),
                _ => Some((ms, ms)).filter(|&(a, c)| fits(a, w1) && fits(c, w2)),
            };
            if let Some(m) = choice {
                found = Some((r, m));
                break;
            }
        }
        let (r, modes) = found.ok_or(AnalysisError::JunctionCannotSplit)?;
        if Some(d_in) == o_first || Some(d_in) == o_second {
            return Err(AnalysisError::DegenerateStep(last));
        }
        let jot = OrientedTile::new(main[k].tile, r);
        b.place(j, jot)?;
        seed_part.locations.push(j);
        seed_part.tiles.push(jot);
        (j, jot, modes)
    };
    let mut arms = [TilePath { locations: vec![], tiles: vec![] }, TilePath { locations: vec![], tiles: vec![] }];
    for (idx, (steps, out, mode)) in [(first, o_first, modes.0), (second, o_second, modes.1)].into_iter().enumerate() {
        if steps.is_empty() {
            continue;
        }
        let out = out.ok_or(AnalysisError::DegenerateStep(k))?;
        arms[idx] = b.grow(junction, jot.reflection.side_map(out), &steps, mode, 0)?;
    }
    let [first_arm, second_arm] = arms;
    Ok(TwoArm { sequence: b.sequence, assembly: b.assembly, seed_part, first_arm, second_arm, junction })
}

/// Repeats the segment `[i, j)` of a monotone path `copies` times by translation.
pub fn pump_path(
    engine: &Engine,
    p: &TilePath,
    i: usize,
    j: usize,
    copies: usize,
) -> Result<Stretched, AnalysisError> {
    check_repeat(engine, p, i, j, copies)?;
    let u = p.locations[j] - p.locations[i];
    let mut out = TilePath { locations: p.locations[..i].to_vec(), tiles: p.tiles[..i].to_vec() };
    for t in 0..copies as i64 {
        for k in i..j {
            out.locations.push(p.locations[k] + u * t);
            out.tiles.push(p.tiles[k]);
        }
    }
    let shift = u * (copies as i64 - 1);
    for k in j..p.len() {
        out.locations.push(p.locations[k] + shift);
        out.tiles.push(p.tiles[k]);
    }
    let sequence = out.sequence(engine)?;
    Ok(Stretched { path: out, sequence })
}

fn check_repeat(engine: &Engine, p: &TilePath, i: usize, j: usize, copies: usize) -> Result<(), AnalysisError> {
    if copies == 0 {
        return Err(AnalysisError::NoCopies);
    }
    if !(i < j && j < p.len()) || engine.tiles.normalize(p.tiles[i]) != engine.tiles.normalize(p.tiles[j]) {
        return Err(AnalysisError::NotRepetition(i, j));
    }
    if p.monotone_mode().is_none() {
        return Err(AnalysisError::NotMonotone);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flip {
    Keep,
    Flip,
}

/// One pumped path per pattern, each repeat unit optionally mirrored across the
/// axis parallel to the step that joins consecutive units.
pub fn reflect_segment_family(
    engine: &Engine,
    p: &TilePath,
    i: usize,
    j: usize,
    copies: usize,
    patterns: &[Vec<Flip>],
) -> Result<Vec<Stretched>, AnalysisError> {
    check_repeat(engine, p, i, j, copies)?;
    let boundary = p.output(j - 1).ok_or(AnalysisError::BadBoundary)?;
    let mirror = if boundary.is_vertical() { Reflection::H } else { Reflection::V };
    let u = p.locations[j] - p.locations[i];
    let mut family = Vec::new();
    for pattern in patterns {
        if pattern.len() != copies {
            return Err(AnalysisError::Precondition("pattern length must equal copies".into()));
        }
        if pattern[0] == Flip::Flip && p.input(i).map_or(true, |s| s.is_vertical() != boundary.is_vertical()) {
            return Err(AnalysisError::BadBoundary);
        }
        let mut out = TilePath { locations: p.locations[..i].to_vec(), tiles: p.tiles[..i].to_vec() };
        let place = |out: &mut TilePath, origin: Point, rel: Point, ot: OrientedTile, flip: bool| {
            if flip {
                out.locations.push(origin + mirror.apply(rel));
                out.tiles.push(OrientedTile::new(ot.tile, ot.reflection.compose(mirror)));
            } else {
                out.locations.push(origin + rel);
                out.tiles.push(ot);
            }
        };
        let mut cur = p.locations[i];
        let mut last = false;
        for &f in pattern {
            let flip = f == Flip::Flip;
            for k in i..j {
                place(&mut out, cur, p.locations[k] - p.locations[i], p.tiles[k], flip);
            }
            cur = cur + if flip { mirror.apply(u) } else { u };
            last = flip;
        }
        for k in j..p.len() {
            place(&mut out, cur, p.locations[k] - p.locations[j], p.tiles[k], last);
        }
        let sequence = out.sequence(engine)?;
        family.push(Stretched { path: out, sequence });
    }
    Ok(family)
}

/// Abstract pumping between two elements of the same type: the element at `f` is
/// re-entered as if it were `g`, and the stretch `g+1 .. f-1` repeats `copies` times.
pub fn pump_steps(steps: &[PathStep], g: usize, f: usize, copies: usize) -> Result<Vec<PathStep>, AnalysisError> {
    if !(g < f && f < steps.len()) || steps[g].tile != steps[f].tile {
        return Err(AnalysisError::NotRepetition(g, f));
    }
    if steps[f].input.is_none() || steps[f].input == steps[g].output || steps[g].output.is_none() {
        return Err(AnalysisError::DegenerateStep(f));
    }
    let mut unit = vec![PathStep { output: steps[g].output, ..steps[f] }];
    unit.extend_from_slice(&steps[g + 1..f]);
    let mut out = steps[..f].to_vec();
    for _ in 0..copies {
        out.extend_from_slice(&unit);
    }
    out.extend_from_slice(&steps[f..]);
    Ok(out)
}
