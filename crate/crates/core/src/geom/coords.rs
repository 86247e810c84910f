//! Trilinear and barycentric coordinates and the conversions between them.
//!
//! A [`TriPoint`] holds the directed distances `(x, y, z)` of a point to the
//! lines `BC`, `CA`, `AB`; they satisfy `ax + by + cz = 2S`. A [`BaryPoint`]
//! is a homogeneous triple `(l : m : n)`; it is finite when the coordinate
//! sum is nonzero and at infinity otherwise. The two are linked by
//! `l = a*x / 2S` (and cyclic).
//!
//! Homogeneous coordinates are never silently normalized. Each operation
//! states whether it reads the raw homogeneous values or the sum-normalized
//! ones; `J` in particular is evaluated on the coordinates as given and
//! scales like `1/rho` when the point is scaled by `rho`.

use crate::error::{Error, Result};
use crate::geom::triangle::{cross2, Point2, Triangle};
use crate::tol::{is_zero_with, sign_with, tolerance, Sign};

/// Directed distances to the sidelines `BC`, `CA`, `AB` (in that order).
/// Positive on the side containing the opposite vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl TriPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        TriPoint { x, y, z }
    }
}

/// Projective class of a barycentric point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Finite,
    AtInfinity,
}

/// Homogeneous barycentric coordinates `(l : m : n)`, not all zero.
#[derive(Debug, Clone, Copy)]
pub struct BaryPoint {
    l: f64,
    m: f64,
    n: f64,
    class: PointClass,
}

impl BaryPoint {
    pub fn new(l: f64, m: f64, n: f64) -> Result<BaryPoint> {
        if !(l.is_finite() && m.is_finite() && n.is_finite()) {
            return Err(Error::NonFinite);
        }
        let scale = l.abs().max(m.abs()).max(n.abs());
        if scale == 0.0 {
            return Err(Error::ZeroHomogeneous);
        }
        let class = if is_zero_with(l + m + n, scale) {
            PointClass::AtInfinity
        } else {
            PointClass::Finite
        };
        Ok(BaryPoint { l, m, n, class })
    }

    /// Vertex `A`, `B` or `C` as a barycentric point.
    pub fn vertex(v: crate::geom::triangle::VertexId) -> BaryPoint {
        let mut c = [0.0; 3];
        c[v.index()] = 1.0;
        BaryPoint::new(c[0], c[1], c[2]).unwrap()
    }

    pub fn coords(&self) -> (f64, f64, f64) {
        (self.l, self.m, self.n)
    }

    pub fn coord(&self, i: usize) -> f64 {
        match i {
            0 => self.l,
            1 => self.m,
            2 => self.n,
            _ => panic!("coordinate index out of range: {i}"),
        }
    }

    pub fn class(&self) -> PointClass {
        self.class
    }

    pub fn is_finite(&self) -> bool {
        self.class == PointClass::Finite
    }

    pub fn sum(&self) -> f64 {
        self.l + self.m + self.n
    }

    fn max_abs(&self) -> f64 {
        self.l.abs().max(self.m.abs()).max(self.n.abs())
    }

    /// Number of coordinates that are zero within tolerance, and the index
    /// of the first nonzero one.
    pub(crate) fn zero_pattern(&self) -> (usize, [bool; 3]) {
        let scale = self.max_abs();
        let zs = [
            is_zero_with(self.l, scale),
            is_zero_with(self.m, scale),
            is_zero_with(self.n, scale),
        ];
        (zs.iter().filter(|z| **z).count(), zs)
    }

    /// Canonical representative: scaled so the largest-magnitude coordinate
    /// is `+-1` and the first nonzero coordinate is positive. The projective
    /// class is preserved.
    pub fn canonical(&self) -> BaryPoint {
        let max = self.max_abs();
        let mut c = [self.l / max, self.m / max, self.n / max];
        let tau = tolerance();
        if let Some(&lead) = c.iter().find(|v| v.abs() > tau) {
            if lead < 0.0 {
                for v in &mut c {
                    *v = -*v;
                }
            }
        }
        BaryPoint { l: c[0], m: c[1], n: c[2], class: self.class }
    }
}

/// Componentwise comparison of canonical forms.
pub fn canonical_eq(p: &BaryPoint, q: &BaryPoint, tol: f64) -> bool {
    let cp = p.canonical();
    let cq = q.canonical();
    (cp.l - cq.l).abs() <= tol && (cp.m - cq.m).abs() <= tol && (cp.n - cq.n).abs() <= tol
}

/// `(a*x, b*y, c*z) / 2S`. Always finite with coordinate sum 1 for a point
/// on the constraint plane.
pub fn tri_to_bary(t: &Triangle, p: TriPoint) -> BaryPoint {
    let two_s = t.twice_area();
    BaryPoint::new(t.a() * p.x / two_s, t.b() * p.y / two_s, t.c() * p.z / two_s)
        .expect("directed distances of a plane point cannot be all zero")
}

/// Inverse of [`tri_to_bary`] on sum-normalized coordinates.
pub fn bary_to_tri(t: &Triangle, p: &BaryPoint) -> Result<TriPoint> {
    if !p.is_finite() {
        return Err(Error::PointAtInfinity);
    }
    let s = p.sum();
    let two_s = t.twice_area();
    let (l, m, n) = p.coords();
    Ok(TriPoint::new(two_s * (l / s) / t.a(), two_s * (m / s) / t.b(), two_s * (n / s) / t.c()))
}

/// Affine combination of the vertices with sum-normalized weights.
pub fn bary_to_cartesian(t: &Triangle, p: &BaryPoint) -> Result<Point2> {
    if !p.is_finite() {
        return Err(Error::PointAtInfinity);
    }
    let s = p.sum();
    let (l, m, n) = (p.coords().0 / s, p.coords().1 / s, p.coords().2 / s);
    let (va, vb, vc) = (t.va(), t.vb(), t.vc());
    Ok(Point2::new(l * va.x + m * vb.x + n * vc.x, l * va.y + m * vb.y + n * vc.y))
}

/// Signed distances of a Cartesian point to the three sidelines, positive on
/// the side containing the opposite vertex.
pub fn cartesian_to_tri(t: &Triangle, q: Point2) -> TriPoint {
    let (va, vb, vc) = (t.va(), t.vb(), t.vc());
    TriPoint::new(
        cross2(vb, vc, q) / t.a(),
        cross2(vc, va, q) / t.b(),
        cross2(va, vb, q) / t.c(),
    )
}

/// Composition of [`cartesian_to_tri`] and [`tri_to_bary`].
pub fn cartesian_to_bary(t: &Triangle, q: Point2) -> BaryPoint {
    tri_to_bary(t, cartesian_to_tri(t, q))
}

/// `J = a^2/l + b^2/m + c^2/n` on the homogeneous coordinates as given.
///
/// Undefined on the sidelines; scaling the point by `rho` scales `J` by
/// `1/rho`, which callers that need a projective sign must account for.
pub fn compute_j(t: &Triangle, p: &BaryPoint) -> Result<f64> {
    let (zeros, _) = p.zero_pattern();
    if zeros > 0 {
        return Err(Error::ZeroCoordinate);
    }
    let (l, m, n) = p.coords();
    Ok(t.a() * t.a() / l + t.b() * t.b() / m + t.c() * t.c() / n)
}

/// Power of a Cartesian point with respect to the circumcircle:
/// `|PQ|^2 - R^2`, negative inside, zero on, positive outside.
pub fn circumcircle_power(t: &Triangle, q: Point2) -> f64 {
    let o = t.circumcenter();
    let dx = q.x - o.x;
    let dy = q.y - o.y;
    dx * dx + dy * dy - t.circumradius() * t.circumradius()
}

fn power_sign(t: &Triangle, p: &BaryPoint) -> Result<Sign> {
    let q = bary_to_cartesian(t, p)?;
    let pow = circumcircle_power(t, q);
    let r2 = t.circumradius() * t.circumradius();
    let scale = (pow + r2).abs().max(r2);
    Ok(sign_with(pow, scale))
}

/// Tolerance-based membership test for the circle through the vertices,
/// decided on the Cartesian embedding so it also works on sidelines.
pub fn on_circumcircle(t: &Triangle, p: &BaryPoint) -> Result<bool> {
    Ok(power_sign(t, p)?.is_zero())
}

/// Strict interior test for the circumcircle.
pub fn inside_circumcircle(t: &Triangle, p: &BaryPoint) -> Result<bool> {
    Ok(power_sign(t, p)?.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::triangle::VertexId;

    fn t345() -> Triangle {
        Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
    }

    #[test]
    fn incenter_trilinears_to_bary() {
        // Inradius of the 3-4-5 triangle is 1, so the incenter has directed
        // distances (1, 1, 1).
        let t = t345();
        let b = tri_to_bary(&t, TriPoint::new(1.0, 1.0, 1.0));
        let (l, m, n) = b.coords();
        assert!((l - 0.25).abs() < 1e-12);
        assert!((m - 1.0 / 3.0).abs() < 1e-12);
        assert!((n - 5.0 / 12.0).abs() < 1e-12);
        assert!((b.sum() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vertex_trilinears() {
        let t = t345();
        let b = tri_to_bary(&t, TriPoint::new(t.twice_area() / t.a(), 0.0, 0.0));
        assert!(canonical_eq(&b, &BaryPoint::vertex(VertexId::A), 1e-12));
    }

    #[test]
    fn lemoine_point_trilinears() {
        let t = t345();
        let b = tri_to_bary(&t, TriPoint::new(0.72, 0.96, 1.20));
        let (l, m, n) = b.coords();
        assert!((l - 0.18).abs() < 1e-12);
        assert!((m - 0.32).abs() < 1e-12);
        assert!((n - 0.50).abs() < 1e-12);
    }

    #[test]
    fn centroid_to_trilinears() {
        let t = t345();
        let p = BaryPoint::new(1.0, 1.0, 1.0).unwrap();
        let d = bary_to_tri(&t, &p).unwrap();
        assert!((d.x - 4.0 / 3.0).abs() < 1e-12);
        assert!((d.y - 1.0).abs() < 1e-12);
        assert!((d.z - 4.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn vertex_to_trilinears() {
        let t = t345();
        let d = bary_to_tri(&t, &BaryPoint::vertex(VertexId::A)).unwrap();
        assert!((d.x - 4.0).abs() < 1e-12 && d.y == 0.0 && d.z == 0.0);
    }

    #[test]
    fn at_infinity_rejected() {
        let t = t345();
        let p = BaryPoint::new(1.0, 1.0, -2.0).unwrap();
        assert_eq!(p.class(), PointClass::AtInfinity);
        assert!(matches!(bary_to_tri(&t, &p), Err(Error::PointAtInfinity)));
        assert!(matches!(bary_to_cartesian(&t, &p), Err(Error::PointAtInfinity)));
    }

    #[test]
    fn centroid_cartesian() {
        let t = t345();
        let q = bary_to_cartesian(&t, &BaryPoint::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        let g = Point2::new((t.va().x + t.vb().x + t.vc().x) / 3.0, (t.va().y + t.vb().y + t.vc().y) / 3.0);
        assert!(q.dist(g) < 1e-12);
    }

    #[test]
    fn cartesian_to_tri_signs() {
        let t = t345();
        let at_a = cartesian_to_tri(&t, t.va());
        assert!((at_a.x - t.twice_area() / t.a()).abs() < 1e-12);
        assert!(at_a.y.abs() < 1e-12 && at_a.z.abs() < 1e-12);
        // Across line BC from A: negative first coordinate.
        let below = cartesian_to_tri(&t, Point2::new(1.5, -1.0));
        assert!(below.x < 0.0);
    }

    #[test]
    fn j_values() {
        let t = t345();
        let j = compute_j(&t, &BaryPoint::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        assert!((j - 50.0).abs() < 1e-12);
        let j = compute_j(&t, &BaryPoint::new(-1.0, 1.0, 1.0).unwrap()).unwrap();
        assert!((j - 32.0).abs() < 1e-12);
        assert!(matches!(
            compute_j(&t, &BaryPoint::new(1.0, 0.0, 1.0).unwrap()),
            Err(Error::ZeroCoordinate)
        ));
    }

    #[test]
    fn circumcircle_membership() {
        let t = t345();
        assert!(on_circumcircle(&t, &BaryPoint::vertex(VertexId::A)).unwrap());
        assert!(inside_circumcircle(&t, &BaryPoint::new(1.0, 1.0, 1.0).unwrap()).unwrap());
        // (-1 : 1 : 1) maps to (0, -4), squarely outside the circle of
        // center (1.5, 2) and radius 2.5; its power is +32, matching J = 32.
        let p = BaryPoint::new(-1.0, 1.0, 1.0).unwrap();
        let q = bary_to_cartesian(&t, &p).unwrap();
        assert!(q.dist(Point2::new(0.0, -4.0)) < 1e-12);
        assert!((circumcircle_power(&t, q) - 32.0).abs() < 1e-12);
        assert!(!inside_circumcircle(&t, &p).unwrap());
        assert!(!on_circumcircle(&t, &p).unwrap());
    }

    #[test]
    fn circle_test_works_on_sidelines() {
        // J is undefined on a sideline but the power test still decides.
        let t = t345();
        let midpoint_bc = BaryPoint::new(0.0, 1.0, 1.0).unwrap();
        assert!(!on_circumcircle(&t, &midpoint_bc).unwrap());
        assert!(inside_circumcircle(&t, &midpoint_bc).unwrap());
        let outside_on_line = BaryPoint::new(0.0, -2.0, 3.0).unwrap();
        assert!(!on_circumcircle(&t, &outside_on_line).unwrap());
        assert!(!inside_circumcircle(&t, &outside_on_line).unwrap());
    }

    #[test]
    fn homogeneous_circle_clearing_matches_power_test() {
        // For points off the sidelines, membership agrees with
        // a^2 m n + b^2 n l + c^2 l m = 0 up to tolerance.
        let t = t345();
        let on_arc = cartesian_to_bary(
            &t,
            Point2::new(1.5, 2.0 - t.circumradius()), // bottom of the circle
        );
        let (l, m, n) = on_arc.coords();
        let clearing = t.a() * t.a() * m * n + t.b() * t.b() * n * l + t.c() * t.c() * l * m;
        assert!(clearing.abs() < 1e-12);
        assert!(on_circumcircle(&t, &on_arc).unwrap());
    }

    #[test]
    fn canonical_form() {
        let p = BaryPoint::new(9.0, 16.0, 25.0).unwrap();
        let c = p.canonical();
        let (l, m, n) = c.coords();
        assert!((l - 0.36).abs() < 1e-15 && (m - 0.64).abs() < 1e-15 && (n - 1.0).abs() < 1e-15);
        // Sign is fixed by the first nonzero coordinate.
        let q = BaryPoint::new(-9.0, -16.0, -25.0).unwrap();
        assert!(canonical_eq(&p, &q, 1e-15));
        let r = BaryPoint::new(0.0, -2.0, 1.0).unwrap();
        let (l, m, n) = r.canonical().coords();
        assert!(l == 0.0 && (m - 1.0).abs() < 1e-15 && (n + 0.5).abs() < 1e-15);
    }

    #[test]
    fn bary_point_validation() {
        assert!(matches!(BaryPoint::new(0.0, 0.0, 0.0), Err(Error::ZeroHomogeneous)));
        assert!(matches!(BaryPoint::new(f64::NAN, 1.0, 1.0), Err(Error::NonFinite)));
    }
}
