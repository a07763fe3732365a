//! Semi-doubly-periodic sets `{b + n·u + m·v : n, m ≥ 0}`.

use rtam_core::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SemiDoublyPeriodicSet {
    pub base: Point,
    pub u: Point,
    pub v: Point,
}

fn cross(a: Point, b: Point) -> i64 {
    a.x * b.y - a.y * b.x
}

impl SemiDoublyPeriodicSet {
    pub fn new(base: Point, u: Point, v: Point) -> Self {
        SemiDoublyPeriodicSet { base, u, v }
    }

    pub fn contains(&self, p: Point) -> bool {
        sdp_contains(self, p)
    }
}

/// Exact membership: Cramer's rule when `u`, `v` are independent, otherwise a
/// bounded scan along their common line.
pub fn sdp_contains(s: &SemiDoublyPeriodicSet, p: Point) -> bool {
    let d = p - s.base;
    let (u, v) = (s.u, s.v);
    let det = cross(u, v);
    if det != 0 {
        let nn = cross(d, v);
        let mm = cross(u, d);
        return nn % det == 0 && mm % det == 0 && nn / det >= 0 && mm / det >= 0;
    }
    if u == Point::ORIGIN && v == Point::ORIGIN {
        return d == Point::ORIGIN;
    }
    if cross(d, u) != 0 || cross(d, v) != 0 {
        return false;
    }
    // All three vectors are collinear; reduce to one coordinate.
    let pick = |q: Point| if u.x != 0 || v.x != 0 { q.x } else { q.y };
    let (du, dv, dd) = (pick(u), pick(v), pick(d));
    let bound = dd.abs() + (du.abs() + 1) * (dv.abs() + 1);
    (0..=bound).any(|n| {
        let rest = dd - n * du;
        if dv == 0 {
            rest == 0
        } else {
            rest % dv == 0 && rest / dv >= 0
        }
    })
}
