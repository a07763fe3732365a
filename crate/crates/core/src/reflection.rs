//! The Klein four-group of tile flips.

use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;
use crate::geometry::{Point, Side};

/// `D` identity, `V` flip across the horizontal axis (north and south swap),
/// `H` flip across the vertical axis (east and west swap), `B` both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Reflection {
    #[default]
    D = 0,
    V = 1,
    H = 2,
    B = 3,
}

impl Reflection {
    pub const ALL: [Reflection; 4] = [Reflection::D, Reflection::V, Reflection::H, Reflection::B];

    pub fn from_bits(bits: u8) -> Reflection {
        Reflection::ALL[(bits & 3) as usize]
    }

    pub fn bits(self) -> u8 {
        self as u8
    }

    pub fn compose(self, other: Reflection) -> Reflection {
        Reflection::from_bits(self.bits() ^ other.bits())
    }

    pub fn flips_vertical(self) -> bool {
        self.bits() & 1 != 0
    }

    pub fn flips_horizontal(self) -> bool {
        self.bits() & 2 != 0
    }

    /// Default-orientation side that shows up on world side `s`.
    pub fn side_map(self, s: Side) -> Side {
        match s {
            Side::N | Side::S if self.flips_vertical() => s.opposite(),
            Side::E | Side::W if self.flips_horizontal() => s.opposite(),
            _ => s,
        }
    }

    pub fn apply(self, p: Point) -> Point {
        let x = if self.flips_horizontal() { -p.x } else { p.x };
        let y = if self.flips_vertical() { -p.y } else { p.y };
        Point::new(x, y)
    }

    pub fn letter(self) -> char {
        match self {
            Reflection::D => 'D',
            Reflection::V => 'V',
            Reflection::H => 'H',
            Reflection::B => 'B',
        }
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Reflection {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "D" | "d" => Ok(Reflection::D),
            "V" | "v" => Ok(Reflection::V),
            "H" | "h" => Ok(Reflection::H),
            "B" | "b" => Ok(Reflection::B),
            other => Err(CoreError::BadReflection(other.to_string())),
        }
    }
}

/// Free function form of [`Reflection::side_map`].
pub fn side_map(r: Reflection, s: Side) -> Side {
    r.side_map(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Reflection::*;
    use Side::*;

    // Rows D, V, H, B; columns N, E, S, W; filled in by hand.
    const TABLE: [[Side; 4]; 4] = [
        [N, E, S, W],
        [S, E, N, W],
        [N, W, S, E],
        [S, W, N, E],
    ];

    #[test]
    fn side_map_matches_hand_table() {
        for (ri, r) in Reflection::ALL.into_iter().enumerate() {
            for (si, s) in Side::ALL.into_iter().enumerate() {
                assert_eq!(r.side_map(s), TABLE[ri][si], "{r} {s}");
            }
        }
        assert_eq!(side_map(H, W), E);
        assert_eq!(side_map(D, N), N);
        assert_eq!(side_map(B, S), N);
    }

    #[test]
    fn group_laws() {
        for a in Reflection::ALL {
            assert_eq!(a.compose(a), D);
            for b in Reflection::ALL {
                assert_eq!(a.compose(b), b.compose(a));
                for s in Side::ALL {
                    assert_eq!(a.compose(b).side_map(s), a.side_map(b.side_map(s)));
                }
            }
        }
    }

    #[test]
    fn side_map_agrees_with_point_reflection() {
        for r in Reflection::ALL {
            for s in Side::ALL {
                assert_eq!(r.apply(r.side_map(s).offset()), s.offset());
            }
        }
    }

    #[test]
    fn parse_letters() {
        for r in Reflection::ALL {
            assert_eq!(r.letter().to_string().parse::<Reflection>().unwrap(), r);
        }
        assert!("X".parse::<Reflection>().is_err());
    }
}
