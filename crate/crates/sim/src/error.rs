use rtam_core::{CoreError, Point};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("location {0} already occupied")]
    Occupied(Point),
    #[error("attachment at {location} is not in the frontier (step {step})")]
    InvalidAttachment { step: usize, location: Point },
    #[error("verification requires a single-tile seed")]
    MultiTileSeed,
    #[error("window does not contain the seed")]
    SeedOutsideWindow,
    #[error("tile system has temperature {0}, expected {1}")]
    Temperature(u32, u32),
}
