use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("no complement of null glue")]
    NullComplement,
    #[error("strength exceeds 2")]
    StrengthTooLarge,
    #[error("null glue must have strength 0 and no prime")]
    MalformedNull,
    #[error("non-null glue must have positive strength")]
    ZeroStrength,
    #[error("unknown reflection {0:?}")]
    BadReflection(String),
    #[error("duplicate tile name {0:?}")]
    DuplicateTile(String),
    #[error("unknown tile {0:?}")]
    UnknownTile(String),
    #[error("tile index {0} out of range")]
    TileIndex(usize),
    #[error("location {0} already occupied")]
    Occupied(crate::geometry::Point),
    #[error("shape is empty")]
    EmptyShape,
    #[error("shape is not connected")]
    DisconnectedShape,
    #[error("seed must contain at least one tile")]
    EmptySeed,
    #[error("temperature must be positive")]
    ZeroTemperature,
}
