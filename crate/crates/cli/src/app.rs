//! The `rtam` command line. Exit codes: 0 the property holds or the artifact
//! was produced, 1 refuted (a witness is printed), 2 inconclusive, 3 usage,
//! parse or input errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rtam_analysis::{extract_path, find_repetition, periodic_structure, pump_path, stretch_path, validate, Mode, TilePath};
use rtam_compilers::{
    compile_eps_symmetric, compile_scale2, convert_zigzag, eps_symmetric, gen_counter_zigzag, gen_odd_rect,
    gen_odd_square, gen_odd_symmetric_weak, CompileError, EpsVerdict,
};
use rtam_core::{Assembly, OrientedTile, Point, Reflection, Shape, TileSystem, Window};
use rtam_sim::{
    default_window, enumerate, is_directed, is_mismatch_free, run, verify_strict, verify_weak, Engine, RunOptions,
    ShapeWitness, Verdict, DEFAULT_STATE_LIMIT,
};

use crate::doc::{parse_atam, parse_shape, parse_tileset, serialize_atam, serialize_tileset, serialize_tileset_with_black};
use crate::render::{render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Margin added around a target shape's box for verification windows.
pub const VERIFY_MARGIN: i64 = 2;
/// Window radius around the seed when no shape or window is given.
pub const DEFAULT_RADIUS: i64 = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn note(mut self, s: impl AsRef<str>) -> Self {
        self.stderr.push_str(s.as_ref());
        if !self.stderr.ends_with('\n') {
            self.stderr.push('\n');
        }
        self
    }
}

struct Fail(i32, String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(EXIT_USAGE, e.to_string())
    }
}

type Res = Result<Outcome, Fail>;

#[derive(Parser, Debug)]
#[command(name = "rtam", version, about = "Reflexive tile assembly toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Input {
    /// Tile set document; stdin when omitted or `-`.
    input: Option<PathBuf>,
    /// Replaces the reflection of a single-tile seed.
    #[arg(long, value_parser = parse_reflection)]
    seed_reflection: Option<Reflection>,
}

#[derive(Args, Debug)]
struct Search {
    /// Window radius around the seed.
    #[arg(long)]
    window: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
    state_limit: usize,
    #[arg(long, default_value = "ascii")]
    format: Format,
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// `square:N`, `rect:WxH` or a shape document path.
    #[arg(long)]
    shape: String,
}

#[derive(Args, Debug)]
struct PathArgs {
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    from: Point,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    to: Point,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Grows one assembly and renders it.
    Simulate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
        /// Random attachment order from this seed instead of the least attachment.
        #[arg(long)]
        rng_seed: Option<u64>,
    },
    /// Enumerates producible assemblies and renders the terminal ones.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
        /// Terminal assemblies to render.
        #[arg(long, default_value_t = 4)]
        show: usize,
    },
    /// Checks that every terminal assembly has the given shape
    VerifyStrict {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        search: Search,
    },
    /// Checks that the black tiles of every terminal assembly form the given shape
    VerifyWeak {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        search: Search,
        /// Comma-separated black tile names; the document's list when omitted.
        #[arg(long, value_delimiter = ',')]
        black: Vec<String>,
    },
    /// Checks that the system has a single terminal assembly
    CheckDirected {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
    },
    /// Checks that no producible assembly has a mismatched abutting side
    CheckMismatchFree {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
    },
    /// Odd n×n square with n tile types.
    GenSquare { n: i64 },
    /// Odd n×m rectangle (n rows, m columns).
    GenRect { n: i64, m: i64 },
    /// Weak assembly of a shape with an integer mirror line.
    GenWeak {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Searches for a spanning tree certifying ε-symmetry.
    CheckEps {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value_t = rtam_compilers::eps::DEFAULT_TREE_BUDGET)]
        budget: usize,
    },
    /// τ=1 strict mismatch-free system for an ε-symmetric shape.
    CompileEps {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value_t = rtam_compilers::eps::DEFAULT_TREE_BUDGET)]
        budget: usize,
    },
    /// τ=2 system for the shape scaled by two.
    CompileScale2 {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Zig-zag binary counter as a plain aTAM document.
    GenCounter { width: u32 },
    /// Converts a zig-zag aTAM document into a reflexive tile set.
    ConvertZigzag {
        /// aTAM document; stdin when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// Stretches the binding path between two tiles of a grown assembly.
    Stretch {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        path: PathArgs,
        #[arg(long, default_value = "NE", value_parser = parse_mode)]
        mode: Mode,
        #[command(flatten)]
        search: Search,
    },
    /// Pumps the first repeated tile on the binding path between two tiles.
    Pump {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        path: PathArgs,
        #[arg(long, default_value_t = 2)]
        copies: usize,
        #[command(flatten)]
        search: Search,
    },
    /// Core box and periodic quadrant sets of a directed τ=1 system.
    PeriodicStructure {
        #[command(flatten)]
        input: Input,
    },
}

fn parse_reflection(s: &str) -> Result<Reflection, String> {
    s.parse().map_err(|e: rtam_core::CoreError| e.to_string())
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, found {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(Point::new(p(x)?, p(y)?))
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    Mode::ALL.into_iter().find(|m| format!("{m:?}") == s.to_uppercase()).ok_or_else(|| format!("unknown mode {s:?}"))
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Fail> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Fail(EXIT_USAGE, format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load(input: &Input, stdin: &mut dyn Read) -> Result<(TileSystem, BTreeSet<String>), Fail> {
    let d = parse_tileset(&read_input(&input.input, stdin)?)?;
    let mut sys = d.system;
    if let Some(r) = input.seed_reflection {
        let (p, ot) = sys.single_seed().ok_or_else(|| Fail(EXIT_USAGE, "--seed-reflection needs a single-tile seed".into()))?;
        sys = TileSystem::singly_seeded(sys.tiles.clone(), OrientedTile::new(ot.tile, r), p, sys.temperature)?;
    }
    Ok((sys, d.black))
}

fn load_shape(spec: &str) -> Result<Shape, Fail> {
    let dims = |t: &str| -> Result<i64, Fail> { t.parse::<i64>().map_err(|e| Fail(EXIT_USAGE, format!("{t:?}: {e}"))) };
    if let Some(n) = spec.strip_prefix("square:") {
        return Ok(Shape::square(dims(n)?)?);
    }
    if let Some(r) = spec.strip_prefix("rect:") {
        let (w, h) = r.split_once('x').ok_or_else(|| Fail(EXIT_USAGE, format!("expected rect:WxH, found {spec:?}")))?;
        return Ok(Shape::rect(dims(w)?, dims(h)?)?);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Fail(EXIT_USAGE, format!("{spec}: {e}")))?;
    Ok(parse_shape(&text)?)
}

fn seed_points(sys: &TileSystem) -> Vec<Point> {
    sys.seed.domain().collect()
}

fn seed_window(sys: &TileSystem, radius: i64) -> Window {
    let b = sys.seed.bounds().expect("seed is non-empty");
    b.grow(radius)
}

fn show(sys: &TileSystem, a: &Assembly, f: Format) -> String {
    render(a, &sys.tiles, &seed_points(sys), f)
}

fn verdict_outcome<W>(v: Verdict<W>, witness: impl FnOnce(&W) -> String) -> Outcome {
    match v {
        Verdict::Holds => Outcome::new(EXIT_OK, "holds\n".into()),
        Verdict::Refuted(w) => Outcome::new(EXIT_REFUTED, format!("refuted\n{}", witness(&w))),
        Verdict::Inconclusive(r) => Outcome::new(EXIT_INCONCLUSIVE, format!("inconclusive: {r}\n")),
    }
}

fn shape_witness(sys: &TileSystem, w: &ShapeWitness, f: Format) -> String {
    let what = match w {
        ShapeWitness::Infeasible(_) => "producible assembly that fits no copy of the shape",
        ShapeWitness::Terminal(_) => "terminal assembly with the wrong shape",
    };
    format!("{what}\n{}", show(sys, w.assembly(), f))
}

fn compile_fail(e: CompileError) -> Fail {
    match e {
        CompileError::NotOddSymmetric | CompileError::NotCertificate(_) | CompileError::NotZigzag(_) => {
            Fail(EXIT_REFUTED, e.to_string())
        }
        CompileError::NoLayout => Fail(EXIT_INCONCLUSIVE, e.to_string()),
        other => Fail(EXIT_USAGE, other.to_string()),
    }
}

fn grown_path(sys: &TileSystem, path: &PathArgs, search: &Search) -> Result<TilePath, Fail> {
    let w = seed_window(sys, search.window.unwrap_or(DEFAULT_RADIUS));
    let r = run(sys, &RunOptions::new(w))?;
    extract_path(&sys.tiles, &r.assembly, path.from, path.to).map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))
}

fn path_summary(p: &TilePath) -> String {
    let b = Window::bounding(p.locations.iter().copied()).expect("paths are non-empty");
    format!(
        "length {}\new bonds {}\nns bonds {}\nextent {}x{}\nmonotone {}\n",
        p.len(),
        p.ew_bonds(),
        p.ns_bonds(),
        b.width(),
        b.height(),
        p.monotone_mode().map_or("no".to_string(), |m| format!("{m:?}"))
    )
}

fn execute(cmd: Cmd, stdin: &mut dyn Read) -> Res {
    match cmd {
        Cmd::Simulate { input, search, rng_seed } => {
            let (sys, _) = load(&input, stdin)?;
            let mut opts = RunOptions::new(seed_window(&sys, search.window.unwrap_or(DEFAULT_RADIUS)));
            opts.rng_seed = rng_seed;
            let r = run(&sys, &opts)?;
            let out = Outcome::new(EXIT_OK, show(&sys, &r.assembly, search.format));
            Ok(if r.escaped { out.note("growth escaped the window") } else { out })
        }
        Cmd::Enumerate { input, search, show: count } => {
            let (sys, _) = load(&input, stdin)?;
            let w = seed_window(&sys, search.window.unwrap_or(DEFAULT_RADIUS));
            let r = enumerate(&sys, w, search.state_limit)?;
            let mut s = format!(
                "producible {}\nterminal {}\nescaped {}\ntruncated {}\n",
                r.producible_count,
                r.terminal.len(),
                r.escaped,
                r.truncated
            );
            for a in r.terminal.iter().take(count) {
                s.push('\n');
                s.push_str(&show(&sys, a, search.format));
            }
            Ok(Outcome::new(if r.complete() { EXIT_OK } else { EXIT_INCONCLUSIVE }, s))
        }
        Cmd::VerifyStrict { input, shape, search } => {
            let (sys, _) = load(&input, stdin)?;
            let s = load_shape(&shape.shape)?;
            let w = search.window.map_or_else(|| default_window(&sys, &s, VERIFY_MARGIN), |r| seed_window(&sys, r));
            let v = verify_strict(&sys, &s, w, search.state_limit)?;
            Ok(verdict_outcome(v, |x| shape_witness(&sys, x, search.format)))
        }
        Cmd::VerifyWeak { input, shape, search, black } => {
            let (sys, doc_black) = load(&input, stdin)?;
            let black: BTreeSet<String> = if black.is_empty() { doc_black } else { black.into_iter().collect() };
            if black.is_empty() {
                return Err(Fail(EXIT_USAGE, "no black tile types given".into()));
            }
            let s = load_shape(&shape.shape)?;
            let w = search.window.map_or_else(|| default_window(&sys, &s, VERIFY_MARGIN), |r| seed_window(&sys, r));
            let v = verify_weak(&sys, &s, &black, w, search.state_limit)?;
            Ok(verdict_outcome(v, |x| shape_witness(&sys, x, search.format)))
        }
        Cmd::CheckDirected { input, search } => {
            let (sys, _) = load(&input, stdin)?;
            let w = seed_window(&sys, search.window.unwrap_or(DEFAULT_RADIUS));
            let v = is_directed(&sys, w, search.state_limit)?;
            Ok(verdict_outcome(v, |x| {
                format!("{}\n{}", show(&sys, &x.first, search.format), show(&sys, &x.second, search.format))
            }))
        }
        Cmd::CheckMismatchFree { input, search } => {
            let (sys, _) = load(&input, stdin)?;
            let w = seed_window(&sys, search.window.unwrap_or(DEFAULT_RADIUS));
            let v = is_mismatch_free(&sys, w, search.state_limit)?;
            Ok(verdict_outcome(v, |x| {
                format!("mismatch at {} side {}\n{}", x.at, x.side, show(&sys, &x.assembly, search.format))
            }))
        }
        Cmd::GenSquare { n } => Ok(Outcome::new(EXIT_OK, serialize_tileset(&gen_odd_square(n).map_err(compile_fail)?))),
        Cmd::GenRect { n, m } => Ok(Outcome::new(EXIT_OK, serialize_tileset(&gen_odd_rect(n, m).map_err(compile_fail)?))),
        Cmd::GenWeak { shape } => {
            let s = load_shape(&shape.shape)?;
            let (sys, black) = gen_odd_symmetric_weak(&s).map_err(compile_fail)?;
            Ok(Outcome::new(EXIT_OK, serialize_tileset_with_black(&sys, &black)))
        }
        Cmd::CheckEps { shape, budget } => {
            let s = load_shape(&shape.shape)?;
            Ok(match eps_symmetric(&s, budget) {
                EpsVerdict::Certificate(t) => {
                    let mut out = String::from("holds\n");
                    for (a, b) in &t.edges {
                        let _ = writeln!(out, "{},{} {},{}", a.x, a.y, b.x, b.y);
                    }
                    Outcome::new(EXIT_OK, out)
                }
                EpsVerdict::NotSymmetric => Outcome::new(EXIT_REFUTED, "refuted: no spanning tree qualifies\n".into()),
                EpsVerdict::Inconclusive(r) => Outcome::new(EXIT_INCONCLUSIVE, format!("inconclusive: {r}\n")),
            })
        }
        Cmd::CompileEps { shape, budget } => {
            let s = load_shape(&shape.shape)?;
            match eps_symmetric(&s, budget) {
                EpsVerdict::Certificate(t) => {
                    Ok(Outcome::new(EXIT_OK, serialize_tileset(&compile_eps_symmetric(&s, &t).map_err(compile_fail)?)))
                }
                EpsVerdict::NotSymmetric => Err(Fail(EXIT_REFUTED, "shape is not ε-symmetric".into())),
                EpsVerdict::Inconclusive(r) => Err(Fail(EXIT_INCONCLUSIVE, r)),
            }
        }
        Cmd::CompileScale2 { shape } => {
            let s = load_shape(&shape.shape)?;
            Ok(Outcome::new(EXIT_OK, serialize_tileset(&compile_scale2(&s).map_err(compile_fail)?)))
        }
        Cmd::GenCounter { width } => {
            Ok(Outcome::new(EXIT_OK, serialize_atam(&gen_counter_zigzag(width).map_err(compile_fail)?)))
        }
        Cmd::ConvertZigzag { input } => {
            let a = parse_atam(&read_input(&input, stdin)?)?;
            match convert_zigzag(&a) {
                Ok(sys) => Ok(Outcome::new(EXIT_OK, serialize_tileset(&sys))),
                Err(CompileError::NotZigzag(d)) => {
                    Ok(Outcome::new(EXIT_REFUTED, format!("not a compact zig-zag system\n{}\n", d.join("\n"))))
                }
                Err(e) => Err(compile_fail(e)),
            }
        }
        Cmd::Stretch { input, path, mode, search } => {
            let (sys, _) = load(&input, stdin)?;
            let p = grown_path(&sys, &path, &search)?;
            let st = stretch_path(&Engine::new(&sys), &p, mode).map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            let a = st.path.assembly().map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            Ok(Outcome::new(EXIT_OK, format!("{}{}", path_summary(&st.path), render(&a, &sys.tiles, &[], search.format))))
        }
        Cmd::Pump { input, path, copies, search } => {
            let (sys, _) = load(&input, stdin)?;
            let p = grown_path(&sys, &path, &search)?;
            let Some((i, j)) = find_repetition(&sys.tiles, &p) else {
                return Ok(Outcome::new(EXIT_REFUTED, format!("refuted: no repeated tile on a path of length {}\n", p.len())));
            };
            let st = pump_path(&Engine::new(&sys), &p, i, j, copies).map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            let a = st.path.assembly().map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            Ok(Outcome::new(
                EXIT_OK,
                format!("repeat {i} {j}\n{}{}", path_summary(&st.path), render(&a, &sys.tiles, &[], search.format)),
            ))
        }
        Cmd::PeriodicStructure { input } => {
            let (sys, _) = load(&input, stdin)?;
            let s = periodic_structure(&sys).map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            let mut out = format!("seed {}\nradius {}\ncore {} points\n", s.seed, s.radius, s.core.len());
            for c in &s.components {
                let _ = writeln!(out, "{:?} {:?}", c.quadrant, c.kind());
                for d in &c.sets {
                    let _ = writeln!(out, "  base {} u {} v {}", d.base, d.u, d.v);
                }
            }
            let cmp = validate(&sys, &s).map_err(|e| Fail(EXIT_INCONCLUSIVE, e.to_string()))?;
            let _ = writeln!(out, "validation missing {} extra {}", cmp.missing.len(), cmp.extra.len());
            Ok(Outcome::new(if cmp.exact() { EXIT_OK } else { EXIT_REFUTED }, out))
        }
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run_cli<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::new(EXIT_OK, text)
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(cli.cmd, stdin) {
        Ok(o) => o,
        Err(Fail(code, msg)) => Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
