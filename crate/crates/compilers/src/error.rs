use rtam_core::CoreError;
use rtam_sim::SimError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompileError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error("dimension {0} must be odd and positive")]
    EvenDimension(i64),
    #[error("shape has no line of mirror symmetry")]
    NotOddSymmetric,
    #[error("tree is not an epsilon-symmetric spanning tree of the shape: {0}")]
    NotCertificate(String),
    #[error("not a compact zig-zag system: {}", .0.join("; "))]
    NotZigzag(Vec<String>),
    #[error("no conflict-free block layout found")]
    NoLayout,
}
