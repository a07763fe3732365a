//! Verification predicates: directedness, mismatch-freeness, strict and weak assembly.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rtam_core::{canonical_key, canonical_key_assembly, Assembly, Point, Reflection, Shape, Side, TileSystem, Window};

use crate::enumerate::{explore, EnumOptions, EnumerationResult, Visit};
use crate::error::SimError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Refuted(W),
    Inconclusive(String),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Refuted(w) => Some(w),
            _ => None,
        }
    }
}

fn inconclusive_reason(r: &EnumerationResult) -> String {
    match (r.escaped, r.truncated) {
        (true, true) => "growth escaped the window and the state limit was hit".into(),
        (true, false) => "growth escaped the window".into(),
        (false, true) => "state limit reached".into(),
        (false, false) => "search aborted".into(),
    }
}

fn require_single_seed(sys: &TileSystem) -> Result<(), SimError> {
    sys.single_seed().map(|_| ()).ok_or(SimError::MultiTileSeed)
}

/// Two terminal assemblies with different configurations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedWitness {
    pub first: Assembly,
    pub second: Assembly,
}

fn directedness(
    sys: &TileSystem,
    opts: &EnumOptions,
    oriented: bool,
) -> Result<Verdict<DirectedWitness>, SimError> {
    require_single_seed(sys)?;
    let mut seen: Option<(rtam_core::CanonicalKey, Assembly)> = None;
    let mut witness = None;
    let r = explore(sys, opts, |v| {
        if !v.is_terminal() {
            return ControlFlow::Continue(());
        }
        let a = v.assembly();
        let key = if oriented {
            canonical_key_assembly(&sys.tiles, &a)
        } else {
            canonical_key(&a.configuration())
        };
        match &seen {
            None => seen = Some((key, a)),
            Some((k, first)) if *k != key => {
                witness = Some(DirectedWitness { first: first.clone(), second: a });
                return ControlFlow::Break(());
            }
            _ => {}
        }
        ControlFlow::Continue(())
    })?;
    if let Some(w) = witness {
        return Ok(Verdict::Refuted(w));
    }
    if r.complete() {
        Ok(Verdict::Holds)
    } else {
        Ok(Verdict::Inconclusive(inconclusive_reason(&r)))
    }
}

/// All terminal assemblies share one configuration up to reflection and translation.
pub fn is_directed(sys: &TileSystem, window: Window, state_limit: usize) -> Result<Verdict<DirectedWitness>, SimError> {
    directedness(sys, &EnumOptions::new(window).state_limit(state_limit), false)
}

/// All terminal assemblies agree including tile orientations.
pub fn is_strongly_directed(
    sys: &TileSystem,
    window: Window,
    state_limit: usize,
) -> Result<Verdict<DirectedWitness>, SimError> {
    directedness(sys, &EnumOptions::new(window).state_limit(state_limit), true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchWitness {
    pub assembly: Assembly,
    /// Lower-left or lower tile of the offending pair and the side facing its partner.
    pub at: Point,
    pub side: Side,
}

pub fn is_mismatch_free(
    sys: &TileSystem,
    window: Window,
    state_limit: usize,
) -> Result<Verdict<MismatchWitness>, SimError> {
    let mut witness = None;
    let opts = EnumOptions::new(window).state_limit(state_limit);
    let r = explore(sys, &opts, |v| {
        let a = v.assembly();
        if let Some(&(at, side)) = a.mismatches(&sys.tiles).first() {
            witness = Some(MismatchWitness { assembly: a, at, side });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if let Some(w) = witness {
        return Ok(Verdict::Refuted(w));
    }
    if r.complete() {
        Ok(Verdict::Holds)
    } else {
        Ok(Verdict::Inconclusive(inconclusive_reason(&r)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeWitness {
    /// A producible assembly that cannot grow into any copy of the shape.
    Infeasible(Assembly),
    /// A terminal assembly with the wrong domain or black set.
    Terminal(Assembly),
}

impl ShapeWitness {
    pub fn assembly(&self) -> &Assembly {
        match self {
            ShapeWitness::Infeasible(a) | ShapeWitness::Terminal(a) => a,
        }
    }
}

/// Images of a shape under the four reflections, each normalized to its bounding box.
fn images(shape: &Shape) -> Vec<Vec<Point>> {
    let mut out: Vec<Vec<Point>> = Reflection::ALL
        .iter()
        .map(|&r| {
            let pts: Vec<Point> = shape.cells().iter().map(|&p| r.apply(p)).collect();
            let min = Window::bounding(pts.iter().copied()).expect("non-empty").min;
            let mut v: Vec<Point> = pts.into_iter().map(|p| p - min).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether `points` fits inside some reflected, translated copy of the shape.
struct Fitter {
    images: Vec<(Vec<Point>, BTreeSet<Point>)>,
}

impl Fitter {
    fn new(shape: &Shape) -> Self {
        Fitter { images: images(shape).into_iter().map(|v| { let s = v.iter().copied().collect(); (v, s) }).collect() }
    }

    fn fits(&self, points: &[Point]) -> bool {
        let Some(&first) = points.first() else {
            return true;
        };
        self.images.iter().any(|(cells, set)| {
            cells.iter().any(|&c| {
                let shift = first - c;
                points.iter().all(|&p| set.contains(&(p - shift)))
            })
        })
    }
}

/// Default verification window: centered on the seed, radius max(w, h) − 1 + margin.
pub fn default_window(sys: &TileSystem, shape: &Shape, margin: i64) -> Window {
    let seed = sys.seed.domain().next().unwrap_or(Point::ORIGIN);
    let b = shape.bounds();
    Window::around(seed, b.width().max(b.height()) - 1 + margin)
}

fn shape_check<F>(
    sys: &TileSystem,
    shape: &Shape,
    opts: &EnumOptions,
    select: F,
) -> Result<Verdict<ShapeWitness>, SimError>
where
    F: Fn(&Assembly) -> Vec<Point>,
{
    require_single_seed(sys)?;
    let fitter = Fitter::new(shape);
    let target = shape.normal_form();
    let mut witness = None;
    let mut unsure_escape = false;
    let r = explore(sys, opts, |v: &Visit| {
        let a = v.assembly();
        if !fitter.fits(&select(&a)) {
            witness = Some(ShapeWitness::Infeasible(a));
            return ControlFlow::Break(());
        }
        if let Some(e) = v.escape {
            let grown = a.with(e.location, e.oriented()).expect("escape lands on an empty cell");
            let pts = select(&grown);
            if !fitter.fits(&pts) {
                witness = Some(ShapeWitness::Infeasible(grown));
                return ControlFlow::Break(());
            }
            unsure_escape = true;
        }
        if v.is_terminal() && rtam_core::geometry::normal_form(select(&a)) != target {
            witness = Some(ShapeWitness::Terminal(a));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if let Some(w) = witness {
        return Ok(Verdict::Refuted(w));
    }
    if r.complete() && !unsure_escape {
        Ok(Verdict::Holds)
    } else {
        Ok(Verdict::Inconclusive(inconclusive_reason(&r)))
    }
}

/// Every terminal assembly's domain equals `shape` up to reflection and translation.
pub fn verify_strict(
    sys: &TileSystem,
    shape: &Shape,
    window: Window,
    state_limit: usize,
) -> Result<Verdict<ShapeWitness>, SimError> {
    let opts = EnumOptions::new(window).state_limit(state_limit);
    shape_check(sys, shape, &opts, |a| a.domain().collect())
}

/// Every terminal assembly's black-typed positions equal `shape` up to reflection and translation.
pub fn verify_weak(
    sys: &TileSystem,
    shape: &Shape,
    black: &BTreeSet<String>,
    window: Window,
    state_limit: usize,
) -> Result<Verdict<ShapeWitness>, SimError> {
    let black_ids: Vec<usize> = black.iter().map(|n| sys.tiles.index_of(n)).collect::<Result<_, _>>()?;
    let opts = EnumOptions::new(window).state_limit(state_limit);
    shape_check(sys, shape, &opts, |a| a.positions_of(&black_ids))
}

/// Per-type placement counts; handy for summaries.
pub fn type_histogram(a: &Assembly) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for (_, ot) in a.iter() {
        *h.entry(ot.tile).or_insert(0) += 1;
    }
    h
}
