//! Triangle construction, coordinate systems, the function `J`, circumcircle
//! tests, region classification, and named centers.

pub mod centers;
pub mod coords;
pub mod region;
pub mod triangle;

pub use centers::{named_center, CenterName};
pub use coords::{
    bary_to_cartesian, bary_to_tri, canonical_eq, cartesian_to_bary, cartesian_to_tri,
    circumcircle_power, compute_j, inside_circumcircle, on_circumcircle, tri_to_bary, BaryPoint,
    PointClass, TriPoint,
};
pub use region::{region_classify, RegionLabel};
pub use triangle::{cross2, Point2, Sideline, Triangle, VertexId};
