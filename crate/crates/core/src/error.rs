use thiserror::Error;

/// Errors produced by the geometry, solver, and I/O layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point is off the upper hyperboloid sheet: {0}")]
    OffHyperboloid(String),
    #[error("vector is not a unit spacelike normal: {0}")]
    InvalidLine(String),
    #[error("coincident points")]
    Coincident,
    #[error("chart coordinates ({x}, {y}) lie outside the open unit disk")]
    OutsideDisk { x: f64, y: f64 },
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex at vertex {0}")]
    NonConvex(usize),
    #[error("line does not support the polygon: {0}")]
    NotSupporting(String),
    #[error("construction requires an odd number of vertices, got {0}")]
    EvenGon(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no bracket for the target value found in ({lo}, {hi})")]
    BracketFailure { lo: f64, hi: f64 },
    #[error("solver did not converge after {iterations} iterations (max residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("solution left the ordinary reduced family: {0}")]
    LeftFamily(String),
    #[error("polygon is not an ordinary reduced polygon: {0}")]
    NotOrdinaryReduced(String),
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status: 2 for invalid input, 3 for numerical failure, 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BracketFailure { .. } | Error::NoConvergence { .. } | Error::LeftFamily(_) => 3,
            Error::Io(_) => 4,
            _ => 2,
        }
    }
}
