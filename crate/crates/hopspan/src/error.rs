//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by construction, verification, and I/O routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {index} has non-finite coordinates")]
    NonFinitePoint { index: usize },

    #[error("points {a} and {b} coincide exactly")]
    DuplicatePoint { a: usize, b: usize },

    #[error("coincident input points")]
    CoincidentPoints,

    #[error("point {index} does not lie strictly {side} the axis (y = {y})")]
    WrongSideOfAxis {
        side: &'static str,
        index: usize,
        y: f64,
    },

    #[error("identical cells given where a distinct pair is required")]
    IdenticalCells,

    #[error("epsilon {0} outside the open interval (0, 2/3)")]
    EpsOutOfRange(f64),

    #[error("{side} side of the scene has diameter {diam:.6} > 1")]
    SceneDiameterExceeded { side: &'static str, diam: f64 },

    #[error("hull boundary misses a nonempty family disk centered at ({x}, {y})")]
    NetInfeasible { x: f64, y: f64 },

    #[error("points are not concyclic: radius spread {spread:e} exceeds tolerance")]
    NotConcyclic { spread: f64 },

    #[error("unit disk graph is disconnected: gap of {dist:.6} between points {a} and {b}")]
    DisconnectedCircle { a: usize, b: usize, dist: f64 },

    #[error("spanner contains edges absent from the base graph: {0:?}")]
    ForeignEdges(Vec<(u32, u32)>),

    #[error("edge ({a}, {b}) is out of range or not in ascending order")]
    MalformedEdge { a: u32, b: u32 },

    #[error("points are not in convex position")]
    NotConvexPosition,

    #[error("instance has {n} points, exhaustive search is capped at {max}")]
    TooManyPoints { n: usize, max: usize },

    #[error("graph matches neither impossibility template: {0}")]
    TemplateMismatch(String),

    #[error("no feasible radius for the requested polygon parameters")]
    InfeasibleRadius,

    #[error("invalid parameter: {0}")]
    BadParam(String),

    #[error("rejection sampling failed to place point {index} within {attempts} attempts")]
    SamplingExhausted { index: usize, attempts: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed edge list at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
