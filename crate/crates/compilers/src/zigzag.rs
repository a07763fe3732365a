//! Compact zig-zag aTAM systems, a binary counter built from them, and their
//! conversion to reflexive systems.

use std::collections::{BTreeMap, BTreeSet};

use rtam_core::{Assembly, Glue, OrientedTile, Point, Reflection, Side, TileSet, TileSystem, TileType};

use crate::atam::{abinds, AGlue, ATamSystem, ATile};
use crate::error::CompileError;

/// Step limit for simulating the aTAM input.
pub const ZIGZAG_STEP_LIMIT: usize = 200_000;

fn g(label: impl Into<String>, strength: u8) -> AGlue {
    AGlue::new(label, strength)
}

fn no() -> AGlue {
    AGlue::null()
}

fn t(name: impl Into<String>, n: AGlue, e: AGlue, s: AGlue, w: AGlue) -> ATile {
    ATile::new(name, [n, e, s, w])
}

/// Temperature-2 compact zig-zag counter through `0..2^width`.
///
/// Rows grow north from a seed at the origin and span columns `-width..=0`;
/// column `-width` is a wall and column 0 holds the low bit. A ramp of corner
/// tiles widens the first rows to full width and ends in a copy row reading 0.
/// Each value then takes an increment row going west and a copy row going east.
/// The increment row that carries out of the wall exposes nothing, so growth halts.
pub fn gen_counter_zigzag(width: u32) -> Result<ATamSystem, CompileError> {
    if width == 0 {
        return Err(CompileError::EvenDimension(0));
    }
    let w = width as usize;
    let top = |j: usize| if j + 1 < w { g(format!("u{j}"), 2) } else { g("w", 2) };
    let mut tiles = vec![
        t("seed", g("l0", 1), no(), no(), g("s", 2)),
        t("corner0", top(0), g("s", 2), no(), no()),
    ];
    for j in 0..w.saturating_sub(1) {
        tiles.push(t(format!("ramp_ae{j}"), g("ne", 1), g(format!("re{j}"), 1), g(format!("u{j}"), 2), no()));
        if j > 0 {
            tiles.push(t(format!("ramp_me{j}"), g("n", 1), g(format!("re{j}"), 1), g("b0", 1), g(format!("re{j}"), 1)));
        }
        tiles.push(t(format!("ramp_ee{j}"), g(format!("r{j}"), 2), no(), g("l0", 1), g(format!("re{j}"), 1)));
        let k = j + 1;
        tiles.push(t(format!("ramp_aw{k}"), g("l0", 1), no(), g(format!("r{j}"), 2), g(format!("rw{k}"), 1)));
        if k > 1 {
            tiles.push(t(format!("ramp_mw{k}"), g("b0", 1), g(format!("rw{k}"), 1), g("n", 1), g(format!("rw{k}"), 1)));
        }
        tiles.push(t(format!("ramp_xw{k}"), g("b0", 1), g(format!("rw{k}"), 1), g("ne", 1), g(format!("x{k}"), 2)));
        tiles.push(t(format!("ramp_b{k}"), top(k), g(format!("x{k}"), 2), no(), no()));
    }
    for v in 0..2u8 {
        tiles.push(t(format!("inc_lsb{v}"), g(format!("l{}", 1 - v), 1), no(), g(format!("e{v}"), 2), g(format!("c{v}"), 1)));
    }
    if w > 1 {
        for b in 0..2u8 {
            for c in 0..2u8 {
                tiles.push(t(
                    format!("inc_b{b}c{c}"),
                    g(format!("b{}", b ^ c), 1),
                    g(format!("c{c}"), 1),
                    g(format!("b{b}"), 1),
                    g(format!("c{}", b & c), 1),
                ));
            }
        }
    }
    tiles.push(t("inc_wall0", g("w", 2), g("c0", 1), g("wall", 1), no()));
    tiles.push(t("inc_wall1", no(), g("c1", 1), g("wall", 1), no()));
    tiles.push(t("copy_wall", g("wall", 1), g("k", 1), g("w", 2), no()));
    if w > 1 {
        for b in 0..2u8 {
            tiles.push(t(format!("copy_b{b}"), g(format!("b{b}"), 1), g("k", 1), g(format!("b{b}"), 1), g("k", 1)));
        }
    }
    for v in 0..2u8 {
        tiles.push(t(format!("copy_lsb{v}"), g(format!("e{v}"), 2), no(), g(format!("l{v}"), 1), g("k", 1)));
    }
    Ok(ATamSystem { tiles, seed: (0, Point::ORIGIN), temperature: 2 })
}

/// Values spelled by the copy rows of a counter assembly, bottom to top.
pub fn decode_counter(names: &BTreeMap<Point, String>) -> Vec<u64> {
    let mut rows: BTreeMap<i64, Vec<(i64, &str)>> = BTreeMap::new();
    for (p, n) in names {
        rows.entry(p.y).or_default().push((p.x, n.as_str()));
    }
    let mut out = Vec::new();
    for (_, mut row) in rows {
        // A wall tile misplaced below a corner shares its row with ramp tiles.
        if !row.iter().any(|(_, n)| *n == "copy_wall") || !row.iter().all(|(_, n)| n.starts_with("copy_")) {
            continue;
        }
        row.sort();
        let mut v = 0u64;
        for (_, n) in row.iter().filter(|(_, n)| *n != "copy_wall") {
            let bit = n.strip_prefix("copy_b").or_else(|| n.strip_prefix("copy_lsb"));
            if let Some(b) = bit {
                v = 2 * v + b.parse::<u64>().unwrap_or(0);
            }
        }
        out.push(v);
    }
    out
}

/// How a tile first attached in the reference run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TileForm {
    Seed,
    /// Row start held by one strength-2 south bond.
    RowStart,
    /// Held by one strength-2 east or west bond beyond the previous row, exposing a strength-2 north glue.
    Corner,
    /// A corner bound to the seed.
    SeedCorner,
    Cooperative,
    Unused,
}

#[derive(Clone, Debug)]
pub struct ZigzagReport {
    pub ok: bool,
    pub diagnostics: Vec<String>,
    /// Rows grow toward negative y.
    pub southward: bool,
    pub forms: Vec<TileForm>,
    /// Positions of corner tiles in the terminal assembly.
    pub corners: BTreeSet<Point>,
    pub placements: BTreeMap<Point, usize>,
}

/// Checks that `a` grows by a single frontier in alternating full rows that
/// widen by at most one column, with strength 2 used only by row starts and corners.
pub fn check_compact_zigzag(a: &ATamSystem) -> ZigzagReport {
    let mut diag = Vec::new();
    if a.temperature != 2 {
        diag.push(format!("temperature is {}, expected 2", a.temperature));
        return ZigzagReport {
            ok: false,
            diagnostics: diag,
            southward: false,
            forms: vec![TileForm::Unused; a.tiles.len()],
            corners: BTreeSet::new(),
            placements: BTreeMap::new(),
        };
    }
    let run = a.run(ZIGZAG_STEP_LIMIT);
    if !run.terminal {
        diag.push(format!("no terminal assembly within {ZIGZAG_STEP_LIMIT} steps"));
    }
    if let Some((k, c)) = run.choices.iter().enumerate().find(|(_, &c)| c != 1) {
        diag.push(format!("step {k} has {c} available attachments"));
    }
    let seed = a.seed.1;
    let ys: Vec<i64> = run.order.iter().map(|(p, _)| p.y - seed.y).collect();
    let southward = ys.iter().any(|&y| y < 0);
    if southward && ys.iter().any(|&y| y > 0) {
        diag.push("growth leaves the seed row in both vertical directions".into());
    }
    let dy = if southward { -1 } else { 1 };

    // Rows in attachment order, each a run of consecutive placements.
    let mut rows: Vec<(i64, Vec<i64>)> = vec![(seed.y, vec![seed.x])];
    for &(p, _) in &run.order {
        match rows.last_mut() {
            Some((y, xs)) if *y == p.y => xs.push(p.x),
            _ => {
                if p.y != rows.last().map(|r| r.0).unwrap_or(seed.y) + dy {
                    diag.push(format!("tile at {p} does not start the next row"));
                }
                rows.push((p.y, vec![p.x]));
            }
        }
    }
    let mut last_dir = 0;
    let mut spans: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    for (i, (y, xs)) in rows.iter().enumerate() {
        let mut dir = 0;
        for pair in xs.windows(2) {
            let d = pair[1] - pair[0];
            if d.abs() != 1 || (dir != 0 && d != dir) {
                diag.push(format!("row {y} is not grown in one direction"));
                break;
            }
            dir = d;
        }
        if dir != 0 && last_dir != 0 && dir == last_dir && i > 0 {
            diag.push(format!("row {y} does not alternate direction"));
        }
        if dir != 0 {
            last_dir = dir;
        }
        let lo = *xs.iter().min().unwrap_or(&0);
        let hi = *xs.iter().max().unwrap_or(&0);
        if let Some(&(plo, phi)) = spans.get(&(y - dy)) {
            if lo < plo - 1 || hi > phi + 1 || (hi - lo) > (phi - plo) + 1 {
                diag.push(format!("row {y} widens by more than one column"));
            }
        }
        spans.insert(*y, (lo, hi));
    }

    let mut forms = vec![TileForm::Unused; a.tiles.len()];
    forms[a.seed.0] = TileForm::Seed;
    let mut corners = BTreeSet::new();
    let mut placed: BTreeMap<Point, usize> = BTreeMap::new();
    placed.insert(seed, a.seed.0);
    let (up, down) = if southward { (Side::S, Side::N) } else { (Side::N, Side::S) };
    for &(p, ti) in &run.order {
        let tile = &a.tiles[ti];
        let bonds: Vec<(Side, u32, Point)> = p
            .neighbors()
            .iter()
            .filter_map(|&(s, q)| placed.get(&q).map(|&u| (s, abinds(tile.glue(s), a.tiles[u].glue(s.opposite())), q)))
            .filter(|b| b.1 > 0)
            .collect();
        let strong: Vec<&(Side, u32, Point)> = bonds.iter().filter(|b| b.1 >= 2).collect();
        let form = match strong.as_slice() {
            [] => TileForm::Cooperative,
            [(s, _, q)] if *s == down => {
                let lateral = [Side::E, Side::W].iter().filter(|&&l| !tile.glue(l).is_null()).count();
                let lateral_weak = [Side::E, Side::W].iter().all(|&l| tile.glue(l).strength <= 1);
                if lateral > 1 || !lateral_weak || tile.glue(up).strength >= 2 {
                    diag.push(format!("row start {} at {p} does not match the row-start form", tile.name));
                }
                let _ = q;
                TileForm::RowStart
            }
            [(s, _, q)] if !s.is_vertical() => {
                let other = s.opposite();
                if tile.glue(up).strength < 2 || !tile.glue(down).is_null() || !tile.glue(other).is_null() {
                    diag.push(format!("corner {} at {p} does not match the corner form", tile.name));
                }
                if *q == seed {
                    TileForm::SeedCorner
                } else {
                    let beyond = spans.get(&(p.y - dy)).map(|&(lo, hi)| p.x < lo || p.x > hi).unwrap_or(true);
                    if !beyond {
                        diag.push(format!("corner {} at {p} lies above the previous row", tile.name));
                    }
                    corners.insert(p);
                    TileForm::Corner
                }
            }
            _ => {
                diag.push(format!("{} at {p} uses strength 2 outside a row start or corner", tile.name));
                TileForm::Cooperative
            }
        };
        if form == TileForm::Cooperative && bonds.len() < 2 {
            diag.push(format!("{} at {p} is held by a single bond", tile.name));
        }
        match forms[ti] {
            TileForm::Unused => forms[ti] = form,
            f if f != form => diag.push(format!("{} attaches in more than one form", tile.name)),
            _ => {}
        }
        placed.insert(p, ti);
    }
    diag.dedup();
    ZigzagReport { ok: diag.is_empty(), diagnostics: diag, southward, forms, corners, placements: run.placements }
}

fn rglue(a: &AGlue, side: Side) -> Result<Glue, CompileError> {
    if a.is_null() {
        return Ok(Glue::null());
    }
    Ok(Glue::new(a.label.clone(), matches!(side, Side::S | Side::W), a.strength)?)
}

/// Reflexive system with the same terminal shape up to a few misplaced tiles.
///
/// Labels become primed on south and west sides. Row starts get identical east
/// and west glues, corners get identical north and south glues, and a corner
/// bound to the seed is kept as is while the seed copies its north glue south.
/// Southward systems are flipped to grow north first.
pub fn convert_zigzag(a: &ATamSystem) -> Result<TileSystem, CompileError> {
    let mut report = check_compact_zigzag(a);
    let mut src = a.clone();
    if report.southward {
        src = a.flipped_vertically();
        report = check_compact_zigzag(&src);
    }
    if !report.ok {
        return Err(CompileError::NotZigzag(report.diagnostics));
    }
    let seeded_corner = report.forms.contains(&TileForm::SeedCorner);
    let mut tiles = Vec::with_capacity(src.tiles.len());
    for (i, at) in src.tiles.iter().enumerate() {
        let mut gl = [Glue::null(), Glue::null(), Glue::null(), Glue::null()];
        for s in Side::ALL {
            gl[s.index()] = rglue(at.glue(s), s)?;
        }
        match report.forms[i] {
            TileForm::RowStart => {
                let (e, w) = (Side::E.index(), Side::W.index());
                if gl[e].is_null() {
                    gl[e] = gl[w].clone();
                } else {
                    gl[w] = gl[e].clone();
                }
            }
            TileForm::Corner => gl[Side::S.index()] = gl[Side::N.index()].clone(),
            TileForm::Seed if seeded_corner => gl[Side::S.index()] = gl[Side::N.index()].clone(),
            _ => {}
        }
        let [n, e, s, w] = gl;
        tiles.push(TileType::new(at.name.clone(), n, e, s, w));
    }
    let ts = TileSet::new(tiles)?;
    let (si, sp) = src.seed;
    Ok(TileSystem::singly_seeded(ts, OrientedTile::new(si, Reflection::D), sp, 2)?)
}

/// Agreement between an aTAM terminal assembly and a converted terminal assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionComparison {
    /// Global reflection about the seed that aligns the two.
    pub alignment: Reflection,
    /// Tiles present only in the converted assembly.
    pub misplaced: Vec<Point>,
}

impl ConversionComparison {
    /// Each misplaced tile sits directly below a corner, at most one per row.
    pub fn misplaced_under_corners(&self, corners: &BTreeSet<Point>) -> bool {
        let mut rows = BTreeSet::new();
        self.misplaced.iter().all(|p| corners.contains(&Point::new(p.x, p.y + 1)) && rows.insert(p.y))
    }
}

/// Aligns `terminal` with the aTAM placements so that every aTAM tile is matched
/// by type; returns the alignment and the extra tiles.
pub fn compare_conversion(
    placements: &BTreeMap<Point, usize>,
    seed: Point,
    terminal: &Assembly,
) -> Option<ConversionComparison> {
    for r in Reflection::ALL {
        let shift = seed - r.apply(seed);
        let moved = terminal.transformed(r, shift);
        let covers = placements.iter().all(|(p, &ti)| moved.get(*p).map(|ot| ot.tile) == Some(ti));
        if covers {
            let misplaced = moved.domain().filter(|p| !placements.contains_key(p)).collect();
            return Some(ConversionComparison { alignment: r, misplaced });
        }
    }
    None
}
