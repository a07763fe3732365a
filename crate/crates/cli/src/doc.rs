//! Text documents for tile systems, plain aTAM systems and shapes.
//!
//! Tile systems are TOML:
//!
//! ```toml
//! version = 1
//! temperature = 1
//!
//! [[seed]]
//! tile = "seed"
//! reflection = "D"
//! x = 0
//! y = 0
//!
//! [[tile]]
//! name = "seed"
//! n = { label = "a", strength = 1 }
//! s = { label = "a'", strength = 1 }
//! ```
//!
//! A trailing apostrophe marks a primed glue. Missing sides are null. An
//! optional `black` list names the tile types that mark a weakly assembled shape.
//! Documents with `model = "atam"` hold plain aTAM systems, where equal labels bind.

use std::collections::BTreeSet;

use rtam_compilers::{AGlue, ATamSystem, ATile};
use rtam_core::{Assembly, Glue, OrientedTile, Point, Reflection, Shape, Side, TileSet, TileSystem, TileType};
use serde::Deserialize;
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocError {
    #[error("{0}")]
    Syntax(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field(field: impl Into<String>, message: impl ToString) -> DocError {
    DocError::Field { field: field.into(), message: message.to_string() }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
pub struct GlueDoc {
    #[serde(default)]
    pub label: String,
    #[serde(default)]
    pub strength: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileDoc {
    pub name: String,
    #[serde(default)]
    pub n: GlueDoc,
    #[serde(default)]
    pub e: GlueDoc,
    #[serde(default)]
    pub s: GlueDoc,
    #[serde(default)]
    pub w: GlueDoc,
}

impl TileDoc {
    fn sides(&self) -> [&GlueDoc; 4] {
        [&self.n, &self.e, &self.s, &self.w]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedDoc {
    pub tile: String,
    #[serde(default = "default_reflection")]
    pub reflection: String,
    pub x: i64,
    pub y: i64,
}

fn default_reflection() -> String {
    "D".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub version: u32,
    #[serde(default)]
    pub model: Option<String>,
    pub temperature: u32,
    #[serde(default)]
    pub black: Vec<String>,
    pub seed: Vec<SeedDoc>,
    pub tile: Vec<TileDoc>,
}

fn parse_doc(text: &str) -> Result<SystemDoc, DocError> {
    let doc: SystemDoc = toml::from_str(text).map_err(|e| DocError::Syntax(e.to_string()))?;
    if doc.version != FORMAT_VERSION {
        return Err(field("version", format!("unsupported version {}", doc.version)));
    }
    Ok(doc)
}

fn glue_of(g: &GlueDoc, at: &str) -> Result<Glue, DocError> {
    Glue::parse(&g.label, g.strength).map_err(|e| field(at, e))
}

fn glue_doc(g: &Glue) -> GlueDoc {
    GlueDoc { label: g.display_label(), strength: g.strength() }
}

const SIDE_KEYS: [&str; 4] = ["n", "e", "s", "w"];

/// A tile system with the black tile names of its document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSetDocument {
    pub system: TileSystem,
    pub black: BTreeSet<String>,
}

pub fn parse_tileset(text: &str) -> Result<TileSetDocument, DocError> {
    let doc = parse_doc(text)?;
    if let Some(m) = &doc.model {
        if m != "rtam" {
            return Err(field("model", format!("expected a reflexive tile system, found {m:?}")));
        }
    }
    let mut tiles = Vec::new();
    for (i, t) in doc.tile.iter().enumerate() {
        let mut g = Vec::new();
        for (k, d) in t.sides().into_iter().enumerate() {
            g.push(glue_of(d, &format!("tile[{i}].{}", SIDE_KEYS[k]))?);
        }
        tiles.push(TileType::new(t.name.clone(), g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone()));
    }
    let tiles = TileSet::new(tiles).map_err(|e| field("tile", e))?;
    let mut seed = Assembly::empty();
    for (i, s) in doc.seed.iter().enumerate() {
        let idx = tiles.index_of(&s.tile).map_err(|e| field(format!("seed[{i}].tile"), e))?;
        let r: Reflection = s.reflection.parse().map_err(|e| field(format!("seed[{i}].reflection"), e))?;
        seed.insert(Point::new(s.x, s.y), OrientedTile::new(idx, r)).map_err(|e| field(format!("seed[{i}]"), e))?;
    }
    for (i, b) in doc.black.iter().enumerate() {
        tiles.index_of(b).map_err(|e| field(format!("black[{i}]"), e))?;
    }
    let system = TileSystem::new(tiles, seed, doc.temperature).map_err(|e| field("system", e))?;
    Ok(TileSetDocument { system, black: doc.black.into_iter().collect() })
}

pub fn serialize_tileset(sys: &TileSystem) -> String {
    serialize_tileset_with_black(sys, &BTreeSet::new())
}

pub fn serialize_tileset_with_black(sys: &TileSystem, black: &BTreeSet<String>) -> String {
    let doc = SystemDoc {
        version: FORMAT_VERSION,
        model: None,
        temperature: sys.temperature,
        black: black.iter().cloned().collect(),
        seed: sys
            .seed
            .iter()
            .map(|(p, ot)| SeedDoc {
                tile: sys.tiles.get(ot.tile).name.clone(),
                reflection: ot.reflection.letter().to_string(),
                x: p.x,
                y: p.y,
            })
            .collect(),
        tile: sys
            .tiles
            .iter()
            .map(|t| TileDoc {
                name: t.name.clone(),
                n: glue_doc(t.glue(Side::N)),
                e: glue_doc(t.glue(Side::E)),
                s: glue_doc(t.glue(Side::S)),
                w: glue_doc(t.glue(Side::W)),
            })
            .collect(),
    };
    emit(&doc)
}

fn quoted(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

/// Writes a document with one inline table per glue; null sides are omitted.
fn emit(doc: &SystemDoc) -> String {
    let mut out = format!("version = {}\n", doc.version);
    if let Some(m) = &doc.model {
        out += &format!("model = {}\n", quoted(m));
    }
    out += &format!("temperature = {}\n", doc.temperature);
    if !doc.black.is_empty() {
        let names: Vec<String> = doc.black.iter().map(|b| quoted(b)).collect();
        out += &format!("black = [{}]\n", names.join(", "));
    }
    for s in &doc.seed {
        out += &format!(
            "\n[[seed]]\ntile = {}\nreflection = {}\nx = {}\ny = {}\n",
            quoted(&s.tile),
            quoted(&s.reflection),
            s.x,
            s.y
        );
    }
    for t in &doc.tile {
        out += &format!("\n[[tile]]\nname = {}\n", quoted(&t.name));
        for (k, g) in t.sides().into_iter().enumerate() {
            if !g.label.is_empty() {
                out += &format!("{} = {{ label = {}, strength = {} }}\n", SIDE_KEYS[k], quoted(&g.label), g.strength);
            }
        }
    }
    out
}

pub fn parse_atam(text: &str) -> Result<ATamSystem, DocError> {
    let doc = parse_doc(text)?;
    if doc.model.as_deref() != Some("atam") {
        return Err(field("model", "expected model = \"atam\""));
    }
    let mut tiles: Vec<ATile> = Vec::new();
    for (i, t) in doc.tile.iter().enumerate() {
        if tiles.iter().any(|u| u.name == t.name) {
            return Err(field(format!("tile[{i}].name"), format!("duplicate tile name {:?}", t.name)));
        }
        let mut glues = [AGlue::null(), AGlue::null(), AGlue::null(), AGlue::null()];
        for (k, d) in t.sides().into_iter().enumerate() {
            let at = format!("tile[{i}].{}", SIDE_KEYS[k]);
            glues[k] = match (d.label.is_empty(), d.strength) {
                (true, 0) => AGlue::null(),
                (true, _) => return Err(field(at, "null glue must have strength 0")),
                (false, 0) => return Err(field(at, "non-null glue must have positive strength")),
                (false, s) if s > 2 => return Err(field(at, "strength exceeds 2")),
                (false, s) => AGlue::new(d.label.clone(), s),
            };
        }
        tiles.push(ATile::new(t.name.clone(), glues));
    }
    let [s] = doc.seed.as_slice() else {
        return Err(field("seed", "an aTAM document needs exactly one seed tile"));
    };
    let idx = tiles
        .iter()
        .position(|t| t.name == s.tile)
        .ok_or_else(|| field("seed[0].tile", format!("unknown tile {:?}", s.tile)))?;
    if doc.temperature == 0 {
        return Err(field("temperature", "temperature must be positive"));
    }
    Ok(ATamSystem { tiles, seed: (idx, Point::new(s.x, s.y)), temperature: doc.temperature })
}

pub fn serialize_atam(a: &ATamSystem) -> String {
    let g = |g: &AGlue| GlueDoc { label: g.label.clone(), strength: if g.is_null() { 0 } else { g.strength } };
    let doc = SystemDoc {
        version: FORMAT_VERSION,
        model: Some("atam".into()),
        temperature: a.temperature,
        black: Vec::new(),
        seed: vec![SeedDoc {
            tile: a.tiles[a.seed.0].name.clone(),
            reflection: default_reflection(),
            x: a.seed.1.x,
            y: a.seed.1.y,
        }],
        tile: a
            .tiles
            .iter()
            .map(|t| TileDoc { name: t.name.clone(), n: g(&t.glues[0]), e: g(&t.glues[1]), s: g(&t.glues[2]), w: g(&t.glues[3]) })
            .collect(),
    };
    emit(&doc)
}

/// Parses a JSON point list `[[x, y], ...]` or an ASCII grid of `#` cells and
/// `.` gaps whose first line is the top row and whose bottom-left is the origin.
pub fn parse_shape(text: &str) -> Result<Shape, DocError> {
    let t = text.trim();
    if t.starts_with('[') {
        let pts: Vec<(i64, i64)> = serde_json::from_str(t).map_err(|e| DocError::Syntax(e.to_string()))?;
        return Shape::new(pts.into_iter().map(|(x, y)| Point::new(x, y))).map_err(|e| field("shape", e));
    }
    let rows: Vec<&str> = t.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let mut cells = Vec::new();
    for (r, line) in rows.iter().enumerate() {
        let y = (rows.len() - 1 - r) as i64;
        for (x, c) in line.chars().enumerate() {
            match c {
                '#' => cells.push(Point::new(x as i64, y)),
                '.' => {}
                other => return Err(field(format!("line {}", r + 1), format!("unexpected character {other:?}"))),
            }
        }
    }
    Shape::new(cells).map_err(|e| field("shape", e))
}

pub fn shape_to_json(s: &Shape) -> String {
    let pts: Vec<(i64, i64)> = s.cells().iter().map(|p| (p.x, p.y)).collect();
    serde_json::to_string(&pts).expect("points serialize")
}

pub fn shape_to_grid(s: &Shape) -> String {
    let b = s.bounds();
    let mut out = String::new();
    for y in (b.min.y..=b.max.y).rev() {
        for x in b.min.x..=b.max.x {
            out.push(if s.contains(Point::new(x, y)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}
