use thiserror::Error;

/// Errors raised while validating inputs or evaluating invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("deformation index k = {0} is too small (need k >= 3)")]
    InvalidLevel(u32),
    #[error("spin {spin} exceeds the cap {max} at k = {k}")]
    SpinOutOfRange { spin: String, max: String, k: u32 },
    #[error("projection {m} is not valid for spin {j}")]
    BadProjection { j: String, m: String },
    #[error("inadmissible coupling: {0}")]
    Inadmissible(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },
    #[error("strand count {0} must be even and at least 2")]
    OddStrands(usize),
    #[error("inconsistent orientations: {0}")]
    Orientation(String),
    #[error("color mismatch: {0}")]
    ColorMismatch(String),
    #[error("malformed node handle {0}")]
    BadNode(usize),
    #[error("fusion trees carry different boundary data")]
    BoundaryMismatch,
    #[error("crossing count {count} exceeds the state-sum cap {cap}")]
    CrossingCap { count: usize, cap: usize },
    #[error("graph size n = {n} outside {min}..={max}")]
    GraphRange { n: usize, min: usize, max: usize },
    #[error("invalid plat specification: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
