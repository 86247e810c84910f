//! The five named triangle centers used by the engine.

use crate::error::Error;
use crate::geom::coords::BaryPoint;
use crate::geom::triangle::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterName {
    Centroid,
    Incenter,
    Circumcenter,
    Orthocenter,
    Symmedian,
}

impl CenterName {
    pub const ALL: [CenterName; 5] = [
        CenterName::Centroid,
        CenterName::Incenter,
        CenterName::Circumcenter,
        CenterName::Orthocenter,
        CenterName::Symmedian,
    ];
}

impl std::str::FromStr for CenterName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "centroid" => Ok(CenterName::Centroid),
            "incenter" => Ok(CenterName::Incenter),
            "circumcenter" => Ok(CenterName::Circumcenter),
            "orthocenter" => Ok(CenterName::Orthocenter),
            "symmedian" => Ok(CenterName::Symmedian),
            other => Err(Error::UnknownCenter(other.to_string())),
        }
    }
}

impl std::fmt::Display for CenterName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CenterName::Centroid => "centroid",
            CenterName::Incenter => "incenter",
            CenterName::Circumcenter => "circumcenter",
            CenterName::Orthocenter => "orthocenter",
            CenterName::Symmedian => "symmedian",
        };
        f.write_str(s)
    }
}

/// Homogeneous barycentric coordinates of a named center.
///
/// Centroid `(1:1:1)`, incenter `(a:b:c)`, circumcenter
/// `(sin 2A : sin 2B : sin 2C)`, orthocenter `(tan A : tan B : tan C)`,
/// symmedian point `(a^2 : b^2 : c^2)`. The trigonometric forms are
/// evaluated from the side lengths so right angles give exact zeros; the
/// orthocenter uses the equivalent product form, which stays finite for
/// right triangles (where the orthocenter is the right-angle vertex).
pub fn named_center(t: &Triangle, name: CenterName) -> BaryPoint {
    let (a, b, c) = t.sides();
    let (l, m, n) = match name {
        CenterName::Centroid => (1.0, 1.0, 1.0),
        CenterName::Incenter => (a, b, c),
        CenterName::Circumcenter => {
            // sin 2A = 2 sin A cos A with sin A = a / 2R and the law of cosines.
            let two_r = 2.0 * t.circumradius();
            let sin2 = |opp: f64, s1: f64, s2: f64| {
                2.0 * (opp / two_r) * ((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2))
            };
            (sin2(a, b, c), sin2(b, c, a), sin2(c, a, b))
        }
        CenterName::Orthocenter => {
            // (tan A : tan B : tan C) = (sb*sc : sc*sa : sa*sb) with
            // sa = (b^2 + c^2 - a^2)/2 and cyclic.
            let sa = (b * b + c * c - a * a) / 2.0;
            let sb = (c * c + a * a - b * b) / 2.0;
            let sc = (a * a + b * b - c * c) / 2.0;
            (sb * sc, sc * sa, sa * sb)
        }
        CenterName::Symmedian => (a * a, b * b, c * c),
    };
    BaryPoint::new(l, m, n).expect("center coordinates are never all zero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::coords::{canonical_eq, compute_j};
    use crate::geom::region::{region_classify, RegionLabel};
    use crate::geom::triangle::Sideline;

    fn t345() -> Triangle {
        Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
    }

    #[test]
    fn symmedian_is_squared_sides() {
        let t = t345();
        let k = named_center(&t, CenterName::Symmedian);
        let expect = BaryPoint::new(9.0, 16.0, 25.0).unwrap();
        assert!(canonical_eq(&k, &expect, 1e-15));
    }

    #[test]
    fn equilateral_centers_coincide() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        let centroid = BaryPoint::new(1.0, 1.0, 1.0).unwrap();
        for name in CenterName::ALL {
            assert!(canonical_eq(&named_center(&t, name), &centroid, 1e-12), "{name}");
        }
    }

    #[test]
    fn right_triangle_circumcenter_on_hypotenuse() {
        let t = t345();
        let o = named_center(&t, CenterName::Circumcenter);
        // gamma = pi/2, so sin 2C = 0 and the center is the midpoint of AB.
        let (l, m, n) = o.coords();
        assert!((l - m).abs() < 1e-12);
        assert_eq!(n, 0.0);
        assert_eq!(region_classify(&t, &o).unwrap(), RegionLabel::OnSideline(Sideline::AB));
    }

    #[test]
    fn right_triangle_orthocenter_is_right_angle_vertex() {
        let t = t345();
        let h = named_center(&t, CenterName::Orthocenter);
        let c = BaryPoint::new(0.0, 0.0, 1.0).unwrap();
        assert!(canonical_eq(&h, &c, 1e-12));
    }

    #[test]
    fn acute_orthocenter_matches_tangents() {
        let t = Triangle::from_sides(5.0, 6.0, 7.0).unwrap();
        let h = named_center(&t, CenterName::Orthocenter);
        let tans =
            BaryPoint::new(t.alpha().tan(), t.beta().tan(), t.gamma().tan()).unwrap();
        assert!(canonical_eq(&h, &tans, 1e-12));
    }

    #[test]
    fn symmedian_j_is_sum_of_squares() {
        let t = t345();
        let g = named_center(&t, CenterName::Centroid);
        assert!((compute_j(&t, &g).unwrap() - 50.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_center_name() {
        assert!(matches!(
            "nagel".parse::<CenterName>(),
            Err(Error::UnknownCenter(_))
        ));
    }
}
