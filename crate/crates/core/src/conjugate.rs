//! Isogonal conjugation in homogeneous barycentric coordinates.
//!
//! Off the sidelines the map is `(l : m : n) -> (a^2/l : b^2/m : c^2/n)`.
//! Two identities drive its degenerate behavior: the coordinate sum of the
//! image equals `J` of the argument, and `J` of the image equals the
//! coordinate sum of the argument. A finite point on the circumcircle
//! (`J = 0`) therefore maps to a point at infinity, a point at infinity maps
//! back onto the circumcircle, and the map is an involution everywhere it is
//! defined.
//!
//! On a sideline (one zero coordinate) the reciprocal coordinate dominates
//! in the limit, so the whole sideline maps to the opposite vertex. At a
//! vertex the map is undefined: the preimage of a vertex is an entire
//! sideline, which a point-valued map cannot represent.

use crate::error::{Error, Result};
use crate::geom::coords::{canonical_eq, BaryPoint};
use crate::geom::triangle::{Triangle, VertexId};
use crate::tol::tolerance;

/// Isogonal conjugate of `p`, in canonical form.
pub fn isogonal(t: &Triangle, p: &BaryPoint) -> Result<BaryPoint> {
    let (zeros, pattern) = p.zero_pattern();
    match zeros {
        0 => {
            let (l, m, n) = p.coords();
            let q = BaryPoint::new(
                t.a() * t.a() / l,
                t.b() * t.b() / m,
                t.c() * t.c() / n,
            )?;
            Ok(q.canonical())
        }
        1 => {
            let i = pattern.iter().position(|z| *z).unwrap();
            Ok(BaryPoint::vertex(VertexId::from_index(i)))
        }
        _ => Err(Error::VertexUndefined),
    }
}

/// Diagnostic: does applying the conjugation twice return to `p`?
pub fn is_involution_fixed_under(t: &Triangle, p: &BaryPoint) -> Result<bool> {
    let twice = isogonal(t, &isogonal(t, p)?)?;
    Ok(canonical_eq(&twice, p, tolerance()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::coords::{
        bary_to_cartesian, cartesian_to_bary, on_circumcircle, PointClass,
    };
    use crate::geom::triangle::Point2;

    fn t345() -> Triangle {
        Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
    }

    #[test]
    fn centroid_maps_to_symmedian() {
        let t = t345();
        let g = BaryPoint::new(1.0, 1.0, 1.0).unwrap();
        let k = isogonal(&t, &g).unwrap();
        assert!(canonical_eq(&k, &BaryPoint::new(9.0, 16.0, 25.0).unwrap(), 1e-12));
    }

    #[test]
    fn incenter_is_fixed() {
        let t = t345();
        let i = BaryPoint::new(3.0, 4.0, 5.0).unwrap();
        assert!(canonical_eq(&isogonal(&t, &i).unwrap(), &i, 1e-12));
    }

    #[test]
    fn sideline_maps_to_opposite_vertex() {
        let t = t345();
        let p = BaryPoint::new(0.0, 0.4, 0.6).unwrap();
        let v = isogonal(&t, &p).unwrap();
        assert!(canonical_eq(&v, &BaryPoint::vertex(VertexId::A), 1e-15));
        // And similarly for zeros in the other positions.
        let p = BaryPoint::new(0.4, 0.0, -0.6).unwrap();
        assert!(canonical_eq(&isogonal(&t, &p).unwrap(), &BaryPoint::vertex(VertexId::B), 1e-15));
    }

    #[test]
    fn vertex_is_undefined() {
        let t = t345();
        let v = BaryPoint::vertex(VertexId::B);
        assert!(matches!(isogonal(&t, &v), Err(Error::VertexUndefined)));
    }

    #[test]
    fn involution_at_interior_point() {
        let t = t345();
        let p = BaryPoint::new(0.2, 0.5, 0.3).unwrap();
        assert!(is_involution_fixed_under(&t, &p).unwrap());
    }

    #[test]
    fn circle_point_maps_to_infinity_and_back() {
        let t = t345();
        let o = t.circumcenter();
        // A circumcircle point away from the vertices.
        let q = Point2::new(o.x, o.y - t.circumradius());
        let p = cartesian_to_bary(&t, q);
        assert!(on_circumcircle(&t, &p).unwrap());
        let img = isogonal(&t, &p).unwrap();
        assert_eq!(img.class(), PointClass::AtInfinity);
        // Coming back lands on the circle, at the original point.
        let back = isogonal(&t, &img).unwrap();
        assert_eq!(back.class(), PointClass::Finite);
        assert!(on_circumcircle(&t, &back).unwrap());
        assert!(canonical_eq(&back, &p, 1e-9));
        let back_xy = bary_to_cartesian(&t, &back).unwrap();
        assert!(back_xy.dist(q) < 1e-9);
    }

    #[test]
    fn equilateral_fixes_every_named_center() {
        use crate::geom::centers::{named_center, CenterName};
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        for name in CenterName::ALL {
            let p = named_center(&t, name);
            assert!(canonical_eq(&isogonal(&t, &p).unwrap(), &p, 1e-12), "{name}");
        }
    }

    #[test]
    fn scale_invariance() {
        let t = t345();
        let p = BaryPoint::new(0.3, -0.1, 0.5).unwrap();
        let q = BaryPoint::new(-0.6, 0.2, -1.0).unwrap();
        let ip = isogonal(&t, &p).unwrap();
        let iq = isogonal(&t, &q).unwrap();
        assert!(canonical_eq(&ip, &iq, 1e-12));
    }
}
