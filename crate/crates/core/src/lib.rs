//! Width, thickness, and ordinary reduced polygons in the hyperbolic plane.
//!
//! Everything works in the hyperboloid model: points are unit timelike
//! vectors on the upper sheet of `x² + y² − t² = −1`, lines are unit spacelike
//! normals. The Klein chart is used for convexity tests and rendering.

pub mod corpus;
pub mod error;
pub mod extremal;
pub mod hcore;
pub mod io;
pub mod optimize;
pub mod polygon;
pub mod reduced;
pub mod render;
pub mod width;

pub use error::{Error, Result};
pub use hcore::{HLine, HPoint, LineRelation};
pub use polygon::ConvexPolygon;
