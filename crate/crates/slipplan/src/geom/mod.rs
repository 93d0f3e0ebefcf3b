//! Convex geometry: 2D support polygons and 3D signed distance queries.

pub mod convex;
pub mod polygon;

pub use convex::{Obb, Support, SweptPair, Witness};
pub use polygon::{convex_hull, rects_overlap, ConvexPolygon};
