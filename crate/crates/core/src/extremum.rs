//! The weighted objective `F(X) = l*x^2 + m*y^2 + n*z^2` over the constraint
//! plane `ax + by + cz = 2S`, and its full extremum classification.
//!
//! The weights, read as homogeneous barycentric coordinates, name a point
//! `M`. Whenever an extremum is attained it sits at the isogonal conjugate
//! `N` of `M` with value `4S^2 / J`, where `J = a^2/l + b^2/m + c^2/n`. The
//! case tree below dispatches on the zero count of the weights, the sign of
//! their sum, the count of negative weights, and the sign of `J`; each leaf
//! carries a stable case label.
//!
//! | label  | pattern                                  | outcome                       |
//! |--------|------------------------------------------|-------------------------------|
//! | 1.1    | no zeros, s > 0, all positive            | min `4S^2/J` at `N`           |
//! | 1.2    | no zeros, s > 0, one negative            | min iff `J < 0`, else none    |
//! | 1.3    | no zeros, s > 0, two negative            | none                          |
//! | 2.1    | no zeros, s < 0, all negative            | max `4S^2/J` at `N`           |
//! | 2.2.1  | no zeros, s < 0, one positive, `J <= 0`  | none                          |
//! | 2.2.2  | no zeros, s < 0, one positive, `J > 0`   | max `4S^2/J` at `N`           |
//! | 2.3    | no zeros, s < 0, two positive            | none                          |
//! | 3.1    | no zeros, s = 0, product < 0             | none                          |
//! | 3.2    | no zeros, s = 0, product > 0             | none                          |
//! | 4.1    | one zero, rest positive                  | min 0 at the zero's vertex    |
//! | 4.2    | one zero, rest negative                  | max 0 at the zero's vertex    |
//! | 4.3    | one zero, mixed signs                    | none                          |
//! | 5.1    | two zeros, remaining positive            | min 0 on the opposite side    |
//! | 5.2    | two zeros, remaining negative            | max 0 on the opposite side    |
//!
//! Sign patterns are handled for every coordinate position; the labels name
//! the pattern class, not the position. At the boundary `J = 0` of case 1.2
//! (and its mirror 2.2) the tangency degenerates and no extremum is
//! attained, so the solver reports none.

use crate::conjugate::isogonal;
use crate::error::{Error, Result};
use crate::geom::coords::{canonical_eq, compute_j, tri_to_bary, BaryPoint, TriPoint};
use crate::geom::region::{region_classify, RegionLabel};
use crate::geom::triangle::{Sideline, Triangle, VertexId};
use crate::tol::{is_zero_with, sign_with, Sign};

/// Weights `(l, m, n)`, not all zero, identified with a (possibly ideal)
/// point `M` in homogeneous barycentric coordinates.
#[derive(Debug, Clone, Copy)]
pub struct WeightTriple {
    l: f64,
    m: f64,
    n: f64,
}

impl WeightTriple {
    pub fn new(l: f64, m: f64, n: f64) -> Result<WeightTriple> {
        if !(l.is_finite() && m.is_finite() && n.is_finite()) {
            return Err(Error::NonFinite);
        }
        if l == 0.0 && m == 0.0 && n == 0.0 {
            return Err(Error::InvalidWeights);
        }
        Ok(WeightTriple { l, m, n })
    }

    pub fn coords(&self) -> (f64, f64, f64) {
        (self.l, self.m, self.n)
    }

    pub fn coord(&self, i: usize) -> f64 {
        [self.l, self.m, self.n][i]
    }

    pub fn sum(&self) -> f64 {
        self.l + self.m + self.n
    }

    pub fn max_abs(&self) -> f64 {
        self.l.abs().max(self.m.abs()).max(self.n.abs())
    }

    /// The weight point `M` as a homogeneous barycentric point.
    pub fn as_bary(&self) -> BaryPoint {
        BaryPoint::new(self.l, self.m, self.n).expect("weights are not all zero")
    }

    /// Per-coordinate tolerance signs, relative to the largest weight.
    pub fn signs(&self) -> [Sign; 3] {
        let scale = self.max_abs();
        [
            sign_with(self.l, scale),
            sign_with(self.m, scale),
            sign_with(self.n, scale),
        ]
    }

    pub fn zero_count(&self) -> usize {
        self.signs().iter().filter(|s| s.is_zero()).count()
    }

    /// `(rho*l, rho*m, rho*n)`; extrema move covariantly (values scale by
    /// `rho`, minima and maxima swap when `rho < 0`, the point is unchanged).
    pub fn scaled(&self, rho: f64) -> Result<WeightTriple> {
        if rho == 0.0 {
            return Err(Error::ZeroScale);
        }
        if !rho.is_finite() {
            return Err(Error::NonFinite);
        }
        WeightTriple::new(rho * self.l, rho * self.m, rho * self.n)
    }
}

/// Free-function form of [`WeightTriple::scaled`].
pub fn scale_weights(w: &WeightTriple, rho: f64) -> Result<WeightTriple> {
    w.scaled(rho)
}

/// `F(X) = l*x^2 + m*y^2 + n*z^2` at the given directed distances.
pub fn eval_objective(w: &WeightTriple, p: TriPoint) -> f64 {
    w.l * p.x * p.x + w.m * p.y * p.y + w.n * p.z * p.z
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Min,
    Max,
    NoExtremum,
    /// Minimum value attained on a whole sideline.
    DegenerateMinSet,
    /// Maximum value attained on a whole sideline.
    DegenerateMaxSet,
}

impl ExtremumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremumKind::Min => "Min",
            ExtremumKind::Max => "Max",
            ExtremumKind::NoExtremum => "NoExtremum",
            ExtremumKind::DegenerateMinSet => "DegenerateMinSet",
            ExtremumKind::DegenerateMaxSet => "DegenerateMaxSet",
        }
    }

    pub fn is_attained_point(self) -> bool {
        matches!(self, ExtremumKind::Min | ExtremumKind::Max)
    }
}

/// Complete answer of the solver. Carries enough data for an independent
/// recheck: `J`, the case label, and the regions of `M` and of the extremal
/// point.
#[derive(Debug, Clone)]
pub struct ExtremumResult {
    pub kind: ExtremumKind,
    /// Extremal value; absent only when no extremum exists.
    pub value: Option<f64>,
    /// Extremal point, canonical; present for point minima and maxima.
    pub point: Option<BaryPoint>,
    /// The sideline attaining the value, for the degenerate-set kinds.
    pub set_descriptor: Option<Sideline>,
    /// `J` on the homogeneous input weights; absent when a weight is zero.
    pub j: Option<f64>,
    pub case_label: &'static str,
    pub region_m: Option<RegionLabel>,
    pub region_n: Option<RegionLabel>,
}

/// Classifies and computes the extremum of `F` over the constraint plane.
pub fn solve_extremum(t: &Triangle, w: &WeightTriple) -> ExtremumResult {
    let signs = w.signs();
    let zero_positions: Vec<usize> = (0..3).filter(|&i| signs[i].is_zero()).collect();

    match zero_positions.len() {
        0 => solve_no_zero(t, w, &signs),
        1 => solve_one_zero(t, w, &signs, zero_positions[0]),
        2 => {
            let k = (0..3).find(|i| !zero_positions.contains(i)).unwrap();
            solve_two_zeros(t, w, signs[k], k)
        }
        _ => unreachable!("WeightTriple is never all zero"),
    }
}

fn solve_no_zero(t: &Triangle, w: &WeightTriple, signs: &[Sign; 3]) -> ExtremumResult {
    let (l, m, n) = w.coords();
    let (a2, b2, c2) = (t.a() * t.a(), t.b() * t.b(), t.c() * t.c());
    let j = a2 / l + b2 / m + c2 / n;
    let j_scale = (a2 / l).abs().max((b2 / m).abs()).max((c2 / n).abs());
    let j_sign = sign_with(j, j_scale);
    let negatives = signs.iter().filter(|s| s.is_negative()).count();

    match sign_with(w.sum(), w.max_abs()) {
        Sign::Positive => match negatives {
            0 => attained(t, w, j, ExtremumKind::Min, "1.1"),
            1 => {
                if j_sign.is_negative() {
                    attained(t, w, j, ExtremumKind::Min, "1.2")
                } else {
                    no_extremum(t, w, Some(j), "1.2")
                }
            }
            2 => no_extremum(t, w, Some(j), "1.3"),
            _ => unreachable!("three negative weights cannot sum positive"),
        },
        Sign::Negative => match negatives {
            3 => attained(t, w, j, ExtremumKind::Max, "2.1"),
            2 => {
                if j_sign.is_positive() {
                    attained(t, w, j, ExtremumKind::Max, "2.2.2")
                } else {
                    no_extremum(t, w, Some(j), "2.2.1")
                }
            }
            1 => no_extremum(t, w, Some(j), "2.3"),
            _ => unreachable!("three positive weights cannot sum negative"),
        },
        Sign::Zero => {
            let case = if l * m * n < 0.0 { "3.1" } else { "3.2" };
            no_extremum(t, w, Some(j), case)
        }
    }
}

fn solve_one_zero(
    t: &Triangle,
    w: &WeightTriple,
    signs: &[Sign; 3],
    zero_at: usize,
) -> ExtremumResult {
    let others: Vec<Sign> = (0..3).filter(|&i| i != zero_at).map(|i| signs[i]).collect();
    let vertex = VertexId::from_index(zero_at);
    if others.iter().all(|s| s.is_positive()) {
        vertex_extremum(t, w, ExtremumKind::Min, "4.1", vertex)
    } else if others.iter().all(|s| s.is_negative()) {
        vertex_extremum(t, w, ExtremumKind::Max, "4.2", vertex)
    } else {
        no_extremum(t, w, None, "4.3")
    }
}

fn solve_two_zeros(t: &Triangle, w: &WeightTriple, sign: Sign, nonzero_at: usize) -> ExtremumResult {
    let kind = if sign.is_positive() {
        ExtremumKind::DegenerateMinSet
    } else {
        ExtremumKind::DegenerateMaxSet
    };
    let case = if sign.is_positive() { "5.1" } else { "5.2" };
    let side = VertexId::from_index(nonzero_at).opposite_side();
    ExtremumResult {
        kind,
        value: Some(0.0),
        point: None,
        set_descriptor: Some(side),
        j: None,
        case_label: case,
        region_m: region_of(t, w),
        region_n: None,
    }
}

/// Attained point extremum: the conjugate of `M`, cross-checked against the
/// stationary (touch-point) coordinates `x0 = (2S/J)(a/l)` and cyclic.
fn attained(
    t: &Triangle,
    w: &WeightTriple,
    j: f64,
    kind: ExtremumKind,
    case: &'static str,
) -> ExtremumResult {
    let m_point = w.as_bary();
    let point = isogonal(t, &m_point).expect("weights have no zero coordinate here");

    let (l, m, n) = w.coords();
    let step = t.twice_area() / j;
    let touch = TriPoint::new(step * t.a() / l, step * t.b() / m, step * t.c() / n);
    let touch_bary = tri_to_bary(t, touch);
    debug_assert!(
        canonical_eq(&point, &touch_bary, 1e-9),
        "conjugate and touch-point disagree: {point:?} vs {touch_bary:?}"
    );

    let value = t.twice_area() * t.twice_area() / j;
    ExtremumResult {
        kind,
        value: Some(value),
        point: Some(point),
        set_descriptor: None,
        j: Some(j),
        case_label: case,
        region_m: region_of(t, w),
        region_n: region_classify(t, &point).ok(),
    }
}

fn vertex_extremum(
    t: &Triangle,
    w: &WeightTriple,
    kind: ExtremumKind,
    case: &'static str,
    vertex: VertexId,
) -> ExtremumResult {
    let point = BaryPoint::vertex(vertex);
    ExtremumResult {
        kind,
        value: Some(0.0),
        point: Some(point),
        set_descriptor: None,
        j: None,
        case_label: case,
        region_m: region_of(t, w),
        region_n: Some(RegionLabel::Vertex(vertex)),
    }
}

fn no_extremum(
    t: &Triangle,
    w: &WeightTriple,
    j: Option<f64>,
    case: &'static str,
) -> ExtremumResult {
    ExtremumResult {
        kind: ExtremumKind::NoExtremum,
        value: None,
        point: None,
        set_descriptor: None,
        j,
        case_label: case,
        region_m: region_of(t, w),
        region_n: None,
    }
}

fn region_of(t: &Triangle, w: &WeightTriple) -> Option<RegionLabel> {
    region_classify(t, &w.as_bary()).ok()
}

/// For zero-sum weights the vector `m*AB + n*AC` is independent of the base
/// point, and its squared length equals `-l*m*n*J`. Returns the pair
/// `(vsq, rhs)` computed by the two routes for external assertion.
pub fn mass_vector_identity(t: &Triangle, w: &WeightTriple) -> Result<(f64, f64)> {
    if !is_zero_with(w.sum(), w.max_abs()) {
        return Err(Error::SumNotZero);
    }
    if w.zero_count() > 0 {
        return Err(Error::ZeroCoordinate);
    }
    let (l, m, n) = w.coords();
    let (va, vb, vc) = (t.va(), t.vb(), t.vc());
    let vx = m * (vb.x - va.x) + n * (vc.x - va.x);
    let vy = m * (vb.y - va.y) + n * (vc.y - va.y);
    let vsq = vx * vx + vy * vy;
    let j = compute_j(t, &w.as_bary())?;
    Ok((vsq, -l * m * n * j))
}
