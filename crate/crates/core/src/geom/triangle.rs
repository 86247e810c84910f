//! Triangle construction and the canonical Cartesian embedding.
//!
//! Every triangle carries a positively oriented embedding. The canonical one
//! (used by [`Triangle::from_sides`]) places `B = (0,0)`, `C = (a,0)` and `A`
//! in the upper half-plane; [`Triangle::from_vertices`] keeps the supplied
//! coordinates, swapping two vertices if needed so the signed area is
//! positive. All directed distances in the crate take their signs from this
//! embedding.

use crate::error::{Error, Result};
use crate::tol::{is_zero_with, tolerance};

/// A point in the embedding plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Cross product of `(u - o)` and `(v - o)`; twice the signed area of the
/// triangle `o u v`.
pub fn cross2(o: Point2, u: Point2, v: Point2) -> f64 {
    (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x)
}

/// Vertices are named after the opposite-side convention: side `a = BC`
/// is opposite `A`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexId {
    A,
    B,
    C,
}

impl VertexId {
    pub const ALL: [VertexId; 3] = [VertexId::A, VertexId::B, VertexId::C];

    pub fn index(self) -> usize {
        match self {
            VertexId::A => 0,
            VertexId::B => 1,
            VertexId::C => 2,
        }
    }

    pub fn from_index(i: usize) -> VertexId {
        match i {
            0 => VertexId::A,
            1 => VertexId::B,
            2 => VertexId::C,
            _ => panic!("vertex index out of range: {i}"),
        }
    }

    /// The sideline not incident to this vertex.
    pub fn opposite_side(self) -> Sideline {
        match self {
            VertexId::A => Sideline::BC,
            VertexId::B => Sideline::CA,
            VertexId::C => Sideline::AB,
        }
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexId::A => write!(f, "A"),
            VertexId::B => write!(f, "B"),
            VertexId::C => write!(f, "C"),
        }
    }
}

/// One of the three sidelines, named by its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sideline {
    BC,
    CA,
    AB,
}

impl Sideline {
    pub fn opposite_vertex(self) -> VertexId {
        match self {
            Sideline::BC => VertexId::A,
            Sideline::CA => VertexId::B,
            Sideline::AB => VertexId::C,
        }
    }

    /// Endpoints in positive orientation order.
    pub fn endpoints(self) -> (VertexId, VertexId) {
        match self {
            Sideline::BC => (VertexId::B, VertexId::C),
            Sideline::CA => (VertexId::C, VertexId::A),
            Sideline::AB => (VertexId::A, VertexId::B),
        }
    }
}

impl std::fmt::Display for Sideline {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sideline::BC => write!(f, "BC"),
            Sideline::CA => write!(f, "CA"),
            Sideline::AB => write!(f, "AB"),
        }
    }
}

/// The fixed geometric context: sides, area, angles, circumradius, and a
/// positively oriented Cartesian embedding.
#[derive(Debug, Clone)]
pub struct Triangle {
    a: f64,
    b: f64,
    c: f64,
    area: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    circumradius: f64,
    va: Point2,
    vb: Point2,
    vc: Point2,
}

impl Triangle {
    /// Builds a triangle from its side lengths with the canonical embedding
    /// `B = (0,0)`, `C = (a,0)`, `A` above the x-axis.
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Triangle> {
        for s in [a, b, c] {
            if !s.is_finite() || s <= 0.0 {
                return Err(Error::NonPositiveSide);
            }
        }
        let scale = a.max(b).max(c);
        let tau = tolerance();
        if b + c - a <= tau * scale || c + a - b <= tau * scale || a + b - c <= tau * scale {
            return Err(Error::TriangleInequalityViolated);
        }
        let area = stable_heron(a, b, c);
        let ax = (a * a + c * c - b * b) / (2.0 * a);
        let ay = 2.0 * area / a;
        let va = Point2::new(ax, ay);
        let vb = Point2::new(0.0, 0.0);
        let vc = Point2::new(a, 0.0);
        Ok(Self::derive(a, b, c, area, va, vb, vc))
    }

    /// Builds a triangle from three vertices, keeping the supplied embedding.
    /// If the points are clockwise, the second and third are swapped so the
    /// signed area comes out positive.
    pub fn from_vertices(p1: Point2, p2: Point2, p3: Point2) -> Result<Triangle> {
        if !(p1.is_finite() && p2.is_finite() && p3.is_finite()) {
            return Err(Error::NonFinite);
        }
        let twice_area = cross2(p1, p2, p3);
        let scale = p1.dist(p2) * p1.dist(p3);
        if is_zero_with(twice_area, scale) {
            return Err(Error::CollinearVertices);
        }
        let (va, vb, vc) = if twice_area > 0.0 { (p1, p2, p3) } else { (p1, p3, p2) };
        let a = vb.dist(vc);
        let b = vc.dist(va);
        let c = va.dist(vb);
        let area = 0.5 * cross2(va, vb, vc);
        Ok(Self::derive(a, b, c, area, va, vb, vc))
    }

    fn derive(a: f64, b: f64, c: f64, area: f64, va: Point2, vb: Point2, vc: Point2) -> Triangle {
        let alpha = angle_from_sides(a, b, c);
        let beta = angle_from_sides(b, c, a);
        let gamma = angle_from_sides(c, a, b);
        let circumradius = a * b * c / (4.0 * area);
        Triangle { a, b, c, area, alpha, beta, gamma, circumradius, va, vb, vc }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn sides(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }
    pub fn area(&self) -> f64 {
        self.area
    }
    /// `2S`, the right-hand side of the constraint plane.
    pub fn twice_area(&self) -> f64 {
        2.0 * self.area
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn angles(&self) -> (f64, f64, f64) {
        (self.alpha, self.beta, self.gamma)
    }
    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }
    pub fn va(&self) -> Point2 {
        self.va
    }
    pub fn vb(&self) -> Point2 {
        self.vb
    }
    pub fn vc(&self) -> Point2 {
        self.vc
    }

    pub fn vertex(&self, v: VertexId) -> Point2 {
        match v {
            VertexId::A => self.va,
            VertexId::B => self.vb,
            VertexId::C => self.vc,
        }
    }

    /// Side length opposite the given vertex.
    pub fn side_len(&self, v: VertexId) -> f64 {
        match v {
            VertexId::A => self.a,
            VertexId::B => self.b,
            VertexId::C => self.c,
        }
    }

    /// Circumcenter of the stored embedding.
    pub fn circumcenter(&self) -> Point2 {
        let (p1, p2, p3) = (self.va, self.vb, self.vc);
        let d = 2.0
            * (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y));
        let s1 = p1.x * p1.x + p1.y * p1.y;
        let s2 = p2.x * p2.x + p2.y * p2.y;
        let s3 = p3.x * p3.x + p3.y * p3.y;
        let ux = (s1 * (p2.y - p3.y) + s2 * (p3.y - p1.y) + s3 * (p1.y - p2.y)) / d;
        let uy = (s1 * (p3.x - p2.x) + s2 * (p1.x - p3.x) + s3 * (p2.x - p1.x)) / d;
        Point2::new(ux, uy)
    }
}

/// Numerically stable Heron area (sorts the sides before combining).
fn stable_heron(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|u, v| v.partial_cmp(u).unwrap());
    let (x, y, z) = (s[0], s[1], s[2]);
    0.25 * ((x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))).sqrt()
}

fn angle_from_sides(opposite: f64, s1: f64, s2: f64) -> f64 {
    let cos = ((s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2)).clamp(-1.0, 1.0);
    cos.acos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    #[test]
    fn right_triangle_3_4_5() {
        let t = Triangle::from_sides(3.0, 4.0, 5.0).unwrap();
        assert!((t.area() - 6.0).abs() < 1e-12);
        assert!((t.gamma() - FRAC_PI_2).abs() < 1e-12);
        assert!((t.circumradius() - 2.5).abs() < 1e-12);
        // Canonical embedding.
        assert_eq!(t.vb(), Point2::new(0.0, 0.0));
        assert_eq!(t.vc(), Point2::new(3.0, 0.0));
        assert!((t.va().x - 3.0).abs() < 1e-12 && (t.va().y - 4.0).abs() < 1e-12);
    }

    #[test]
    fn equilateral() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        assert!((t.area() - 3f64.sqrt() / 4.0).abs() < 1e-12);
        for ang in [t.alpha(), t.beta(), t.gamma()] {
            assert!((ang - FRAC_PI_3).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_sides_rejected() {
        assert!(matches!(
            Triangle::from_sides(1.0, 1.0, 2.0),
            Err(Error::TriangleInequalityViolated)
        ));
        assert!(matches!(Triangle::from_sides(0.0, 1.0, 1.0), Err(Error::NonPositiveSide)));
        assert!(matches!(Triangle::from_sides(-3.0, 4.0, 5.0), Err(Error::NonPositiveSide)));
        assert!(matches!(
            Triangle::from_sides(f64::NAN, 4.0, 5.0),
            Err(Error::NonPositiveSide)
        ));
    }

    #[test]
    fn from_vertices_right_triangle() {
        let t = Triangle::from_vertices(
            Point2::new(0.0, 0.0),
            Point2::new(3.0, 0.0),
            Point2::new(0.0, 4.0),
        )
        .unwrap();
        let mut sides = [t.a(), t.b(), t.c()];
        sides.sort_by(|u, v| u.partial_cmp(v).unwrap());
        assert!((sides[0] - 3.0).abs() < 1e-12);
        assert!((sides[1] - 4.0).abs() < 1e-12);
        assert!((sides[2] - 5.0).abs() < 1e-12);
        assert!((t.area() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn from_vertices_collinear_rejected() {
        let r = Triangle::from_vertices(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        );
        assert!(matches!(r, Err(Error::CollinearVertices)));
    }

    #[test]
    fn from_vertices_fixes_orientation() {
        let t = Triangle::from_vertices(
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 0.0),
        )
        .unwrap();
        assert!((t.area() - 0.5).abs() < 1e-12);
        assert!(cross2(t.va(), t.vb(), t.vc()) > 0.0);
    }

    #[test]
    fn law_of_sines_and_angle_sum() {
        let t = Triangle::from_sides(2.0, 3.0, 4.0).unwrap();
        assert!((t.a() - 2.0 * t.circumradius() * t.alpha().sin()).abs() < 1e-12);
        assert!((t.b() - 2.0 * t.circumradius() * t.beta().sin()).abs() < 1e-12);
        assert!((t.c() - 2.0 * t.circumradius() * t.gamma().sin()).abs() < 1e-12);
        assert!((t.alpha() + t.beta() + t.gamma() - PI).abs() < 1e-12);
    }

    #[test]
    fn circumcenter_equidistant() {
        let t = Triangle::from_sides(2.0, 3.0, 4.0).unwrap();
        let o = t.circumcenter();
        for v in [t.va(), t.vb(), t.vc()] {
            assert!((o.dist(v) - t.circumradius()).abs() < 1e-12);
        }
    }
}
