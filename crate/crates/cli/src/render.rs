//! ASCII and SVG pictures of assemblies.

use std::fmt::Write;
use std::str::FromStr;

use rtam_core::{Assembly, Point, Side, TileSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            other => Err(format!("unknown format {other:?}, expected ascii or svg")),
        }
    }
}

pub fn render(a: &Assembly, tiles: &TileSet, seed: &[Point], format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(a, tiles, seed),
        Format::Svg => render_svg(a, tiles, seed),
    }
}

fn label(a: &Assembly, tiles: &TileSet, seed: &[Point], p: Point) -> Option<String> {
    let ot = a.get(p)?;
    let star = if seed.contains(&p) { "*" } else { "" };
    Some(format!("{}:{}{}", tiles.get(ot.tile).name, ot.reflection.letter(), star))
}

/// One cell per tile as `name:R`, a `*` on seed tiles and `.` for empty
/// locations; the top line is the largest y. The first line gives the
/// lower-left corner.
pub fn render_ascii(a: &Assembly, tiles: &TileSet, seed: &[Point]) -> String {
    let Some(b) = a.bounds() else { return "(empty)\n".into() };
    let width = b.points().filter_map(|p| label(a, tiles, seed, p)).map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = format!("origin {}\n", b.min);
    for y in (b.min.y..=b.max.y).rev() {
        let row: Vec<String> = (b.min.x..=b.max.x)
            .map(|x| {
                let s = label(a, tiles, seed, Point::new(x, y)).unwrap_or_else(|| ".".into());
                format!("{s:<width$}")
            })
            .collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}

const CELL: i64 = 60;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Squares labeled with type and reflection, observed glue labels along each
/// edge, seed tiles outlined in bold.
pub fn render_svg(a: &Assembly, tiles: &TileSet, seed: &[Point]) -> String {
    let Some(b) = a.bounds() else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n".into();
    };
    let (w, h) = (b.width() * CELL, b.height() * CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" font-family=\"monospace\" font-size=\"10\">"
    );
    for (p, ot) in a.iter() {
        let x = (p.x - b.min.x) * CELL;
        let y = (b.max.y - p.y) * CELL;
        let stroke = if seed.contains(&p) { 3 } else { 1 };
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"white\" stroke=\"black\" stroke-width=\"{stroke}\"/>"
        );
        let name = escape(&format!("{}:{}", tiles.get(ot.tile).name, ot.reflection.letter()));
        let _ = writeln!(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{name}</text>", x + CELL / 2, y + CELL / 2 + 4);
        for s in Side::ALL {
            let g = tiles.observed(ot, s);
            if g.is_null() {
                continue;
            }
            let (gx, gy) = match s {
                Side::N => (x + CELL / 2, y + 11),
                Side::S => (x + CELL / 2, y + CELL - 3),
                Side::E => (x + CELL - 3, y + CELL / 2 - 8),
                Side::W => (x + 3, y + CELL / 2 - 8),
            };
            let anchor = match s {
                Side::E => "end",
                Side::W => "start",
                _ => "middle",
            };
            let text = escape(&format!("{}{}", g.display_label(), if g.strength() == 2 { "²" } else { "" }));
            let _ = writeln!(out, "<text x=\"{gx}\" y=\"{gy}\" text-anchor=\"{anchor}\" fill=\"gray\">{text}</text>");
        }
    }
    out.push_str("</svg>\n");
    out
}
