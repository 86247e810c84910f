//! Region classification of a finite point relative to the triangle and its
//! circumcircle.
//!
//! The plane splits by the sign pattern of the sum-normalized barycentric
//! coordinates: all positive is the triangle interior; exactly one negative
//! is the angular region across the opposite sideline, which `J` further
//! splits into an inner part, the circle arc, and an outer part; exactly two
//! negative is the vertical-angle region at the positive coordinate's
//! vertex, where `J` is always negative.

use crate::error::{Error, Result};
use crate::geom::coords::{on_circumcircle, BaryPoint};
use crate::geom::triangle::{Sideline, Triangle, VertexId};
use crate::tol::{sign_with, Sign};

/// Where a finite point sits; exactly one label applies (up to tolerance).
///
/// The vertex parameter names the reference vertex of the one- or
/// two-negative sign pattern. `SideRegionInCircle` and
/// `SideRegionOutsideCircle` are the `J > 0` and `J < 0` halves of the
/// one-negative region, separated by the circumcircle arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionLabel {
    InteriorSigma,
    SideRegionInCircle(VertexId),
    OnArc(VertexId),
    SideRegionOutsideCircle(VertexId),
    VerticalRegion(VertexId),
    OnSideline(Sideline),
    Vertex(VertexId),
    OnCircumcircleOther,
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegionLabel::InteriorSigma => write!(f, "InteriorSigma"),
            RegionLabel::SideRegionInCircle(v) => write!(f, "SideRegionInCircle({v})"),
            RegionLabel::OnArc(v) => write!(f, "OnArc({v})"),
            RegionLabel::SideRegionOutsideCircle(v) => {
                write!(f, "SideRegionOutsideCircle({v})")
            }
            RegionLabel::VerticalRegion(v) => write!(f, "VerticalRegion({v})"),
            RegionLabel::OnSideline(s) => write!(f, "OnSideline({s})"),
            RegionLabel::Vertex(v) => write!(f, "Vertex({v})"),
            RegionLabel::OnCircumcircleOther => write!(f, "OnCircumcircleOther"),
        }
    }
}

/// Classifies a finite point by the sign pattern of its sum-normalized
/// coordinates, refining one-negative patterns by the sign of `J`.
pub fn region_classify(t: &Triangle, p: &BaryPoint) -> Result<RegionLabel> {
    if !p.is_finite() {
        return Err(Error::PointAtInfinity);
    }
    let s = p.sum();
    let (l, m, n) = p.coords();
    let norm = [l / s, m / s, n / s];
    let scale = norm.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let signs = [
        sign_with(norm[0], scale),
        sign_with(norm[1], scale),
        sign_with(norm[2], scale),
    ];
    let zeros: Vec<usize> = (0..3).filter(|&i| signs[i] == Sign::Zero).collect();
    match zeros.len() {
        2 => {
            let nonzero = (0..3).find(|i| !zeros.contains(i)).unwrap();
            return Ok(RegionLabel::Vertex(VertexId::from_index(nonzero)));
        }
        1 => {
            let v = VertexId::from_index(zeros[0]);
            return Ok(RegionLabel::OnSideline(v.opposite_side()));
        }
        0 => {}
        _ => unreachable!("sum-normalized coordinates cannot all vanish"),
    }

    let negatives: Vec<usize> = (0..3).filter(|&i| signs[i] == Sign::Negative).collect();
    match negatives.len() {
        0 => {
            if on_circumcircle(t, p)? {
                // Unreachable for exact arithmetic: the circle meets the
                // closed triangle only at the vertices.
                return Ok(RegionLabel::OnCircumcircleOther);
            }
            Ok(RegionLabel::InteriorSigma)
        }
        1 => {
            let v = VertexId::from_index(negatives[0]);
            // J on the sum-normalized coordinates, so its sign is the
            // projective one regardless of the sign of the input's sum.
            let (a2, b2, c2) = (t.a() * t.a(), t.b() * t.b(), t.c() * t.c());
            let j = a2 / norm[0] + b2 / norm[1] + c2 / norm[2];
            let j_scale = (a2 / norm[0]).abs().max((b2 / norm[1]).abs()).max((c2 / norm[2]).abs());
            Ok(match sign_with(j, j_scale) {
                Sign::Positive => RegionLabel::SideRegionInCircle(v),
                Sign::Zero => RegionLabel::OnArc(v),
                Sign::Negative => RegionLabel::SideRegionOutsideCircle(v),
            })
        }
        2 => {
            if on_circumcircle(t, p)? {
                return Ok(RegionLabel::OnCircumcircleOther);
            }
            // J is always negative on the two-negative (vertical) regions.
            debug_assert!(
                {
                    let (a2, b2, c2) = (t.a() * t.a(), t.b() * t.b(), t.c() * t.c());
                    a2 / norm[0] + b2 / norm[1] + c2 / norm[2] < 0.0
                },
                "two-negative pattern must have J < 0"
            );
            let pos = (0..3).find(|i| !negatives.contains(i)).unwrap();
            Ok(RegionLabel::VerticalRegion(VertexId::from_index(pos)))
        }
        _ => unreachable!("sum-normalized coordinates add to one"),
    }
}
