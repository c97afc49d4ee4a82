//! Exact planar lattice-polytope geometry.

pub mod lifted;
pub mod linalg;
mod point;
mod polygon;
mod stacked;
mod summands;

pub use point::{orient, primitive, primitive_direction, Point2};
pub use polygon::{
    area2, hull2, lattice_edge_vectors, lattice_length, lattice_points, minkowski_sum2, pick_area,
    EdgeVector, Polygon,
};
pub use stacked::{volume_oracle, volume_stacked, StackedHull};
pub use summands::{
    summand_decompositions, summand_decompositions_bounded, SummandPair, DEFAULT_EDGE_BOUND,
};
