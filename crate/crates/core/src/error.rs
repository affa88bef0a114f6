use thiserror::Error;

use crate::graph::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(ValidationReport),

    #[error("epsilon must be non-negative, got {0}")]
    NegativeEpsilon(f64),

    #[error("tau must be non-negative, got {0}")]
    NegativeTau(f64),

    #[error("tau {tau} exceeds 2 * epsilon (epsilon = {epsilon})")]
    TauTooLarge { epsilon: f64, tau: f64 },

    #[error("band lower end {l} exceeds upper end {r}")]
    ReversedBand { l: f64, r: f64 },

    #[error("band [{inner_l}, {inner_r}] is not contained in [{outer_l}, {outer_r}]")]
    NotNested {
        inner_l: f64,
        inner_r: f64,
        outer_l: f64,
        outer_r: f64,
    },

    #[error("vertex `{0}` is not a down fork")]
    NotDownFork(String),

    #[error("diagram contains more than one kind of point")]
    MixedKinds,

    #[error("interpolation time {0} is outside [0, 1]")]
    TimeOutOfRange(f64),

    #[error("initial diagram mismatch: the initial graph does not realize the first diagram")]
    InitialMismatch,

    #[error("step {step} is not admissible")]
    Inadmissible { step: usize },

    #[error("step {step}: truncated smoothing does not reproduce the next diagram")]
    StepMismatch { step: usize },

    #[error("vineyard parameters: expected {expected}, got {got}")]
    ParamCount { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
