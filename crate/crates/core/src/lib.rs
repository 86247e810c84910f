//! Extrema of weighted sums of squared distances to the sidelines of a
//! triangle.
//!
//! For a triangle with sides `a, b, c` and area `S`, any point of the plane
//! has directed distances `(x, y, z)` to the sidelines satisfying
//! `ax + by + cz = 2S`. Given weights `(l, m, n)`, this crate classifies and
//! computes the extrema of
//!
//! ```text
//! F(X) = l*x^2 + m*y^2 + n*z^2
//! ```
//!
//! over the whole plane. When an extremum is attained it sits at the
//! isogonal conjugate of the point whose homogeneous barycentric coordinates
//! are the weights, and its value is `4S^2 / J` with
//! `J = a^2/l + b^2/m + c^2/n`. The crate provides:
//!
//! - [`geom`]: triangles, trilinear/barycentric coordinates, `J`,
//!   circumcircle tests, region classification, named centers;
//! - [`conjugate`]: the isogonal conjugation map with its degenerate
//!   extensions;
//! - [`extremum`]: the complete case classification of the objective;
//! - [`oracle`]: independent numeric verification (generic linear solve,
//!   grid and ray probes, finite differences);
//! - [`report`]: inequality reports, the circumcenter/orthocenter example,
//!   and SVG figures.

pub mod conjugate;
pub mod error;
pub mod extremum;
pub mod geom;
pub mod oracle;
pub mod report;
pub mod tol;

pub use conjugate::{is_involution_fixed_under, isogonal};
pub use error::{Error, Result};
pub use extremum::{
    eval_objective, mass_vector_identity, scale_weights, solve_extremum, ExtremumKind,
    ExtremumResult, WeightTriple,
};
pub use geom::{
    bary_to_cartesian, bary_to_tri, canonical_eq, cartesian_to_bary, cartesian_to_tri,
    circumcircle_power, compute_j, cross2, inside_circumcircle, named_center, on_circumcircle,
    region_classify, tri_to_bary, BaryPoint, CenterName, Point2, PointClass, RegionLabel,
    Sideline, TriPoint, Triangle, VertexId,
};
pub use report::{circum_ortho_example, inequality_report, render_svg, Annotation};
pub use tol::{set_tolerance, tolerance, DEFAULT_TOLERANCE};
