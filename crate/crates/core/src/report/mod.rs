//! Geometric-inequality reports and the circumcenter/orthocenter worked
//! example.
//!
//! Whenever the weights admit an attained extremum, evaluating the objective
//! at any concrete point `X` yields an inequality `F(X) >= 4S^2/J` (or the
//! reverse for maxima), tight exactly when `X` is the conjugate point. The
//! circumcenter weights `(sin 2A : sin 2B : sin 2C)` give the classical
//! instance: the minimum sits at the orthocenter with value
//! `4S cos A cos B cos C`, degenerating to zero at the right-angle vertex
//! for right triangles and turning negative for obtuse ones.

pub mod svg;

use crate::error::{Error, Result};
use crate::extremum::{eval_objective, solve_extremum, ExtremumKind, WeightTriple};
use crate::geom::centers::{named_center, CenterName};
use crate::geom::coords::{bary_to_tri, canonical_eq, BaryPoint};
use crate::geom::triangle::Triangle;
use crate::tol::tolerance;

pub use svg::{render_svg, Annotation};

/// One evaluated inequality `F(X) >= F_min` (or `F(X) <= F_max`).
#[derive(Debug, Clone)]
pub struct InequalityReport {
    /// `F(X)`.
    pub lhs: f64,
    /// The extremal bound `4S^2/J` (or 0 for vertex extrema).
    pub rhs: f64,
    /// Nonnegative slack: `lhs - rhs` for minima, `rhs - lhs` for maxima.
    pub slack: f64,
    /// Equality holds, i.e. `X` is the extremal point.
    pub tight: bool,
    pub m: BaryPoint,
    pub x: BaryPoint,
    pub n: BaryPoint,
    pub case_label: &'static str,
}

/// Evaluates the inequality generated by `weights` at the point `x`.
///
/// Errors with [`Error::NoBound`] when the weights admit no extremum or only
/// a degenerate sideline extremum.
pub fn inequality_report(
    t: &Triangle,
    weights: &WeightTriple,
    x: &BaryPoint,
) -> Result<InequalityReport> {
    let r = solve_extremum(t, weights);
    if !r.kind.is_attained_point() {
        return Err(Error::NoBound);
    }
    let n = r.point.expect("attained extremum has a point");
    let rhs = r.value.expect("attained extremum has a value");
    let lhs = eval_objective(weights, bary_to_tri(t, x)?);
    let slack = match r.kind {
        ExtremumKind::Min => lhs - rhs,
        _ => rhs - lhs,
    };
    let tight = canonical_eq(x, &n, tolerance());
    Ok(InequalityReport { lhs, rhs, slack, tight, m: weights.as_bary(), x: *x, n, case_label: r.case_label })
}

/// The circumcenter/orthocenter example, with the closed form alongside the
/// solver's answer for comparison.
#[derive(Debug, Clone)]
pub struct CircumOrthoExample {
    /// `(sin 2A, sin 2B, sin 2C)`.
    pub weights: WeightTriple,
    /// Solver-reported `J` (absent for the right-angle case).
    pub j: Option<f64>,
    /// Direct evaluation of the objective at the orthocenter.
    pub f_at_orthocenter: f64,
    /// Extremal value reported by the solver.
    pub solver_value: f64,
    /// `4S cos A cos B cos C`.
    pub closed_form: f64,
    pub kind: ExtremumKind,
    pub point: Option<BaryPoint>,
    pub case_label: &'static str,
}

/// Builds weights from the circumcenter and solves.
///
/// Acute: minimum at the orthocenter. Right: one weight vanishes and the
/// minimum 0 sits at the right-angle vertex (which is the orthocenter).
/// Obtuse: negative minimum at the orthocenter, out in the vertical region.
pub fn circum_ortho_example(t: &Triangle) -> CircumOrthoExample {
    let o = named_center(t, CenterName::Circumcenter);
    let (l, m, n) = o.coords();
    let weights = WeightTriple::new(l, m, n).expect("circumcenter weights are nonzero");
    let r = solve_extremum(t, &weights);

    let h = named_center(t, CenterName::Orthocenter);
    let f_at_orthocenter = bary_to_tri(t, &h)
        .map(|p| eval_objective(&weights, p))
        .expect("the orthocenter is a finite point");

    let (alpha, beta, gamma) = t.angles();
    let closed_form = 4.0 * t.area() * alpha.cos() * beta.cos() * gamma.cos();

    CircumOrthoExample {
        weights,
        j: r.j,
        f_at_orthocenter,
        solver_value: r.value.expect("circumcenter weights always attain an extremum"),
        closed_form,
        kind: r.kind,
        point: r.point,
        case_label: r.case_label,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::region::RegionLabel;
    use crate::geom::triangle::VertexId;

    fn t345() -> Triangle {
        Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
    }

    #[test]
    fn incenter_inequality_on_345() {
        let t = t345();
        let w = WeightTriple::new(1.0, 1.0, 1.0).unwrap();
        let incenter = named_center(&t, CenterName::Incenter);
        let rep = inequality_report(&t, &w, &incenter).unwrap();
        assert!((rep.lhs - 3.0).abs() < 1e-12);
        assert!((rep.rhs - 2.88).abs() < 1e-12);
        assert!((rep.slack - 0.12).abs() < 1e-12);
        assert!(!rep.tight);
    }

    #[test]
    fn symmedian_is_tight() {
        let t = t345();
        let w = WeightTriple::new(1.0, 1.0, 1.0).unwrap();
        let k = named_center(&t, CenterName::Symmedian);
        let rep = inequality_report(&t, &w, &k).unwrap();
        assert!(rep.tight);
        assert!(rep.slack.abs() < 1e-12);
    }

    #[test]
    fn no_bound_without_extremum() {
        let t = t345();
        let w = WeightTriple::new(2.0, -1.0, -1.0).unwrap();
        let x = named_center(&t, CenterName::Centroid);
        assert!(matches!(inequality_report(&t, &w, &x), Err(Error::NoBound)));
        // Degenerate sideline extrema give no pointwise bound either.
        let w = WeightTriple::new(1.0, 0.0, 0.0).unwrap();
        assert!(matches!(inequality_report(&t, &w, &x), Err(Error::NoBound)));
    }

    #[test]
    fn max_case_reverses_slack() {
        let t = t345();
        let w = WeightTriple::new(-1.0, -1.0, -1.0).unwrap();
        let x = named_center(&t, CenterName::Incenter);
        let rep = inequality_report(&t, &w, &x).unwrap();
        // F(X) = -3 <= -2.88 = F_max.
        assert!((rep.slack - 0.12).abs() < 1e-12);
        assert!(rep.slack >= 0.0);
    }

    #[test]
    fn equilateral_example() {
        let t = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
        let ex = circum_ortho_example(&t);
        assert_eq!(ex.kind, ExtremumKind::Min);
        let expect = 3f64.sqrt() / 8.0;
        assert!((ex.solver_value - expect).abs() < 1e-12);
        assert!((ex.closed_form - expect).abs() < 1e-12);
        assert!((ex.f_at_orthocenter - expect).abs() < 1e-12);
    }

    #[test]
    fn right_triangle_example() {
        let t = t345();
        let ex = circum_ortho_example(&t);
        assert_eq!(ex.kind, ExtremumKind::Min);
        assert_eq!(ex.case_label, "4.1");
        assert_eq!(ex.solver_value, 0.0);
        assert!(ex.closed_form.abs() < 1e-12);
        assert!(ex.f_at_orthocenter.abs() < 1e-12);
        assert!(canonical_eq(
            ex.point.as_ref().unwrap(),
            &BaryPoint::vertex(VertexId::C),
            1e-12
        ));
    }

    #[test]
    fn obtuse_triangle_example() {
        let t = Triangle::from_sides(2.0, 3.0, 4.0).unwrap();
        let ex = circum_ortho_example(&t);
        assert_eq!(ex.kind, ExtremumKind::Min);
        assert!(ex.solver_value < 0.0);
        assert!((ex.solver_value - ex.closed_form).abs() < 1e-9 * ex.closed_form.abs());
        assert!((ex.solver_value + 1.7475).abs() < 1e-3);
        // The orthocenter of an obtuse triangle sits in a vertical region.
        let h = ex.point.as_ref().unwrap();
        let region = crate::geom::region::region_classify(&t, h).unwrap();
        assert!(matches!(region, RegionLabel::VerticalRegion(_)), "{region}");
    }

    #[test]
    fn bound_identity_j_times_value() {
        // J * F_extremum = 4S^2 whenever both are defined.
        let t = Triangle::from_sides(5.0, 6.0, 7.0).unwrap();
        let ex = circum_ortho_example(&t);
        let four_s2 = t.twice_area() * t.twice_area();
        assert!((ex.j.unwrap() * ex.solver_value - four_s2).abs() < 1e-9 * four_s2);
    }
}
