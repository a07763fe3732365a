//! Lattice points, sides, windows and shapes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, side: Side) -> Point {
        self + side.offset()
    }

    pub fn manhattan(self, other: Point) -> i64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    pub fn chebyshev(self, other: Point) -> i64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }

    pub fn neighbors(self) -> [(Side, Point); 4] {
        Side::ALL.map(|s| (s, self.step(s)))
    }

    /// Side of `self` that faces the adjacent point `other`.
    pub fn side_towards(self, other: Point) -> Option<Side> {
        Side::ALL.into_iter().find(|&s| self.step(s) == other)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<i64> for Point {
    type Output = Point;
    fn mul(self, k: i64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    N,
    E,
    S,
    W,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::N, Side::E, Side::S, Side::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::N => Side::S,
            Side::E => Side::W,
            Side::S => Side::N,
            Side::W => Side::E,
        }
    }

    pub fn offset(self) -> Point {
        match self {
            Side::N => Point::new(0, 1),
            Side::E => Point::new(1, 0),
            Side::S => Point::new(0, -1),
            Side::W => Point::new(-1, 0),
        }
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Side::N | Side::S)
    }

    pub fn letter(self) -> char {
        match self {
            Side::N => 'N',
            Side::E => 'E',
            Side::S => 'S',
            Side::W => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Side> {
        match c.to_ascii_uppercase() {
            'N' => Some(Side::N),
            'E' => Some(Side::E),
            'S' => Some(Side::S),
            'W' => Some(Side::W),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Closed axis-aligned box of lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub min: Point,
    pub max: Point,
}

impl Window {
    pub fn new(min: Point, max: Point) -> Self {
        Window { min, max }
    }

    pub fn around(center: Point, radius: i64) -> Self {
        Window::new(
            center - Point::new(radius, radius),
            center + Point::new(radius, radius),
        )
    }

    /// Smallest window holding every point; `None` for an empty iterator.
    pub fn bounding<I: IntoIterator<Item = Point>>(points: I) -> Option<Self> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut w = Window::new(first, first);
        for p in it {
            w.min.x = w.min.x.min(p.x);
            w.min.y = w.min.y.min(p.y);
            w.max.x = w.max.x.max(p.x);
            w.max.y = w.max.y.max(p.y);
        }
        Some(w)
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn width(&self) -> i64 {
        self.max.x - self.min.x + 1
    }

    pub fn height(&self) -> i64 {
        self.max.y - self.min.y + 1
    }

    pub fn grow(&self, margin: i64) -> Self {
        Window::new(
            self.min - Point::new(margin, margin),
            self.max + Point::new(margin, margin),
        )
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.min.y..=self.max.y)
            .flat_map(move |y| (self.min.x..=self.max.x).map(move |x| Point::new(x, y)))
    }
}

/// Finite, non-empty, 4-connected set of lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    cells: BTreeSet<Point>,
}

impl Shape {
    pub fn new<I: IntoIterator<Item = Point>>(cells: I) -> Result<Self, CoreError> {
        let cells: BTreeSet<Point> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(CoreError::EmptyShape);
        }
        if !is_connected(&cells) {
            return Err(CoreError::DisconnectedShape);
        }
        Ok(Shape { cells })
    }

    pub fn rect(width: i64, height: i64) -> Result<Self, CoreError> {
        if width < 1 || height < 1 {
            return Err(CoreError::EmptyShape);
        }
        Shape::new(Window::new(Point::ORIGIN, Point::new(width - 1, height - 1)).points())
    }

    pub fn square(n: i64) -> Result<Self, CoreError> {
        Shape::rect(n, n)
    }

    pub fn cells(&self) -> &BTreeSet<Point> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.cells.contains(&p)
    }

    pub fn bounds(&self) -> Window {
        Window::bounding(self.cells.iter().copied()).expect("shape is non-empty")
    }

    /// Adjacent cell pairs `(p, q)` with `q` north or east of `p`, in sorted order.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for &p in &self.cells {
            for s in [Side::E, Side::N] {
                let q = p.step(s);
                if self.cells.contains(&q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Scales every cell to a `c`×`c` block.
    pub fn scaled(&self, c: i64) -> Shape {
        let cells = self.cells.iter().flat_map(|p| {
            (0..c).flat_map(move |dy| (0..c).map(move |dx| Point::new(p.x * c + dx, p.y * c + dy)))
        });
        Shape { cells: cells.collect() }
    }

    /// Representative of the class under reflection and translation.
    pub fn normal_form(&self) -> Vec<Point> {
        normal_form(self.cells.iter().copied())
    }

    pub fn congruent(&self, other: &Shape) -> bool {
        self.len() == other.len() && self.normal_form() == other.normal_form()
    }
}

/// Least sorted cell list over the four reflections, each shifted so its bounding box sits at the origin.
pub fn normal_form<I: IntoIterator<Item = Point>>(points: I) -> Vec<Point> {
    let pts: Vec<Point> = points.into_iter().collect();
    let mut best: Option<Vec<Point>> = None;
    for r in crate::reflection::Reflection::ALL {
        let mut img: Vec<Point> = pts.iter().map(|&p| r.apply(p)).collect();
        if let Some(w) = Window::bounding(img.iter().copied()) {
            for p in &mut img {
                *p = *p - w.min;
            }
        }
        img.sort();
        if best.as_ref().map_or(true, |b| img < *b) {
            best = Some(img);
        }
    }
    best.unwrap_or_default()
}

pub fn is_connected(cells: &BTreeSet<Point>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for (_, q) in p.neighbors() {
            if cells.contains(&q) && seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    seen.len() == cells.len()
}
