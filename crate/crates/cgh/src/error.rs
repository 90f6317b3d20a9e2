use thiserror::Error;

pub type Result<T> = std::result::Result<T, CghError>;

#[derive(Debug, Error)]
pub enum CghError {
    #[error("vertex {v} out of range for ground set of {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("operation requires even uniformity, got r = {0}")]
    OddUniformity(usize),

    #[error("operation requires odd uniformity, got r = {0}")]
    EvenUniformity(usize),

    #[error("operation requires uniformity {expected}, got r = {got}")]
    WrongUniformity { expected: usize, got: usize },

    #[error("sequence is not a tight path in the host")]
    NotTightPath,

    #[error("sequence has repeated vertices")]
    RepeatedVertices,

    #[error("edge {0:?} is invalid: {1}")]
    BadEdge(Vec<usize>, String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("coloring is not a valid {s}-coloring: {msg}")]
    BadColoring { s: usize, msg: String },

    #[error("edge {0:?} violates the two-per-class condition")]
    NotColorRegular(Vec<usize>),

    #[error("extension set is empty; end is stuck")]
    StuckEnd,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
