use rtam_core::{CoreError, Point};
use rtam_sim::SimError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("point {0} is not occupied")]
    NotInDomain(Point),
    #[error("no path joins {0} and {1} in the binding graph")]
    Disconnected(Point, Point),
    #[error("path locations {0} and {1} are not bound neighbors")]
    BrokenPath(usize, usize),
    #[error("degenerate path step at index {0}")]
    DegenerateStep(usize),
    #[error("anchor output side {0} does not fit the stretch mode")]
    AnchorIncompatible(rtam_core::Side),
    #[error("junction tile cannot orient its outputs into opposite quadrants")]
    JunctionCannotSplit,
    #[error("path is not coordinate-monotone")]
    NotMonotone,
    #[error("indices {0} and {1} do not hold the same oriented tile")]
    NotRepetition(usize, usize),
    #[error("placement at {0} collides or does not bind")]
    Collision(Point),
    #[error("copies must be at least 1")]
    NoCopies,
    #[error("unit boundary is not a single straight step")]
    BadBoundary,
    #[error("{0}")]
    Precondition(String),
}
