//! Independent numeric verification of the solver.
//!
//! Nothing here uses the closed-form extremum: the tangency conditions are
//! solved by generic Gaussian elimination, the objective is probed on a
//! Cartesian grid over a disk around the circumcenter and along rays inside
//! the constraint plane, and stationarity is checked by central finite
//! differences. The [`verify`] submodule packages these checks into a
//! solver-versus-oracle corpus run.

pub mod linsys;
pub mod sampling;
pub mod verify;

use crate::error::{Error, Result};
use crate::extremum::{eval_objective, WeightTriple};
use crate::geom::coords::{bary_to_tri, cartesian_to_tri, BaryPoint, TriPoint};
use crate::geom::triangle::{Point2, Triangle};
use crate::tol::is_zero_with;

/// Threshold a ray witness must clear before the probe reports a direction
/// as unbounded.
pub const UNBOUNDED_WITNESS: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeKind {
    Grid,
    Ray,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    Min,
    Max,
}

/// Result of a grid or ray probe.
#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub best_value: f64,
    pub best_point: TriPoint,
    pub samples: usize,
    pub probe_kind: ProbeKind,
    pub unbounded_below: bool,
    pub unbounded_above: bool,
}

/// Solves the stationarity system
/// `l*x/a = m*y/b = n*z/c` together with `ax + by + cz = 2S`
/// by dense elimination in the unknowns `(x, y, z, t)`.
///
/// Requires all weights nonzero; the system is singular exactly when `J`
/// vanishes.
pub fn lagrange_solve(t: &Triangle, w: &WeightTriple) -> Result<TriPoint> {
    if w.zero_count() > 0 {
        return Err(Error::ZeroCoordinate);
    }
    let (l, m, n) = w.coords();
    let (a, b, c) = t.sides();
    let matrix = vec![
        vec![l, 0.0, 0.0, -a],
        vec![0.0, m, 0.0, -b],
        vec![0.0, 0.0, n, -c],
        vec![a, b, c, 0.0],
    ];
    let rhs = vec![0.0, 0.0, 0.0, t.twice_area()];
    let sol = linsys::solve_dense(&matrix, &rhs)?;
    Ok(TriPoint::new(sol[0], sol[1], sol[2]))
}

/// Evaluates the objective on a regular Cartesian grid over the disk of the
/// given radius centered at the circumcenter, and reports the best sample.
/// Deterministic: samples are visited row-major and ties keep the first hit.
pub fn grid_scan(
    t: &Triangle,
    w: &WeightTriple,
    radius: f64,
    steps: usize,
    mode: ProbeMode,
) -> ProbeReport {
    assert!(radius > 0.0, "grid radius must be positive");
    assert!(steps >= 10, "grid needs at least 10 steps per axis");
    let center = t.circumcenter();
    let r2 = radius * radius;
    let step = 2.0 * radius / (steps - 1) as f64;

    let mut best_value = match mode {
        ProbeMode::Min => f64::INFINITY,
        ProbeMode::Max => f64::NEG_INFINITY,
    };
    let mut best_point = cartesian_to_tri(t, center);
    let mut samples = 0usize;

    for iy in 0..steps {
        let dy = -radius + step * iy as f64;
        for ix in 0..steps {
            let dx = -radius + step * ix as f64;
            if dx * dx + dy * dy > r2 {
                continue;
            }
            let p = cartesian_to_tri(t, Point2::new(center.x + dx, center.y + dy));
            let v = eval_objective(w, p);
            samples += 1;
            let better = match mode {
                ProbeMode::Min => v < best_value,
                ProbeMode::Max => v > best_value,
            };
            if better {
                best_value = v;
                best_point = p;
            }
        }
    }

    ProbeReport {
        best_value,
        best_point,
        samples,
        probe_kind: ProbeKind::Grid,
        unbounded_below: false,
        unbounded_above: false,
    }
}

/// Orthonormal basis (in distance coordinates) of the direction space of the
/// constraint plane, i.e. of `{d : a*d1 + b*d2 + c*d3 = 0}`.
pub fn plane_basis(t: &Triangle) -> ([f64; 3], [f64; 3]) {
    let (a, b, c) = t.sides();
    let norm = (a * a + b * b).sqrt();
    let u = [b / norm, -a / norm, 0.0];
    // normal x u, normalized.
    let nv = [a, b, c];
    let mut v = [
        nv[1] * u[2] - nv[2] * u[1],
        nv[2] * u[0] - nv[0] * u[2],
        nv[0] * u[1] - nv[1] * u[0],
    ];
    let vn = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    for x in &mut v {
        *x /= vn;
    }
    (u, v)
}

/// Walks rays inside the constraint plane looking for witnesses with
/// `|F| > 1e6` in either direction.
///
/// Along a ray from `p0` with in-plane direction `d` the objective is the
/// exact quadratic `q s^2 + beta s + F(p0)` with
/// `q = l d1^2 + m d2^2 + n d3^2`; a doubling walk (capped so that noise in
/// a mathematically vanishing `q` cannot take over) finds where it escapes.
pub fn ray_probe(t: &Triangle, w: &WeightTriple, trials: usize) -> ProbeReport {
    assert!(trials >= 4, "ray probe needs a few directions");
    assert!(w.zero_count() <= 1, "ray probe expects at most one zero weight");

    let p0 = bary_to_tri(t, &BaryPoint::new(1.0, 1.0, 1.0).unwrap())
        .expect("centroid is finite");
    let f0 = eval_objective(w, p0);
    let (u, v) = plane_basis(t);
    let (l, m, n) = w.coords();

    let mut report = ProbeReport {
        best_value: f0,
        best_point: p0,
        samples: trials,
        probe_kind: ProbeKind::Ray,
        unbounded_below: false,
        unbounded_above: false,
    };

    let s_start = t.circumradius().max(1.0);
    let s_cap = 1e9 * s_start;

    for k in 0..trials {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / trials as f64;
        let (cos, sin) = (theta.cos(), theta.sin());
        let d = [
            cos * u[0] + sin * v[0],
            cos * u[1] + sin * v[1],
            cos * u[2] + sin * v[2],
        ];
        let q = l * d[0] * d[0] + m * d[1] * d[1] + n * d[2] * d[2];
        let beta = 2.0 * (l * p0.x * d[0] + m * p0.y * d[1] + n * p0.z * d[2]);

        let mut s = s_start;
        while s <= s_cap {
            let val = q * s * s + beta * s + f0;
            if val.abs() > UNBOUNDED_WITNESS {
                let witness = TriPoint::new(p0.x + s * d[0], p0.y + s * d[1], p0.z + s * d[2]);
                if val > UNBOUNDED_WITNESS {
                    report.unbounded_above = true;
                } else {
                    report.unbounded_below = true;
                }
                if val.abs() > report.best_value.abs() {
                    report.best_value = val;
                    report.best_point = witness;
                }
                break;
            }
            s *= 2.0;
        }
    }
    report
}

/// Central finite differences of the objective along the two in-plane basis
/// directions. Small values certify stationarity within the plane.
pub fn fd_gradient(t: &Triangle, w: &WeightTriple, p: TriPoint, h: f64) -> (f64, f64) {
    assert!(h > 0.0, "finite-difference step must be positive");
    let (u, v) = plane_basis(t);
    let shift = |d: &[f64; 3], s: f64| {
        TriPoint::new(p.x + s * d[0], p.y + s * d[1], p.z + s * d[2])
    };
    let gu = (eval_objective(w, shift(&u, h)) - eval_objective(w, shift(&u, -h))) / (2.0 * h);
    let gv = (eval_objective(w, shift(&v, h)) - eval_objective(w, shift(&v, -h))) / (2.0 * h);
    (gu, gv)
}

/// Default finite-difference step, balancing truncation and rounding.
pub fn default_fd_step(t: &Triangle) -> f64 {
    1e-5 * t.circumradius()
}

/// Convenience: magnitude of the in-plane finite-difference gradient.
pub fn fd_gradient_norm(t: &Triangle, w: &WeightTriple, p: TriPoint, h: f64) -> f64 {
    let (gu, gv) = fd_gradient(t, w, p, h);
    gu.hypot(gv)
}

/// True when the reported extremal point lies inside the probe disk, which
/// is when a grid scan of that radius is conclusive.
pub fn point_in_probe_disk(t: &Triangle, p: &BaryPoint, radius: f64) -> bool {
    match crate::geom::coords::bary_to_cartesian(t, p) {
        Ok(q) => q.dist(t.circumcenter()) <= 0.9 * radius,
        Err(_) => false,
    }
}

/// Residual of the constraint plane for a probe point; used by tests.
pub fn plane_residual(t: &Triangle, p: TriPoint) -> f64 {
    t.a() * p.x + t.b() * p.y + t.c() * p.z - t.twice_area()
}

/// Checks that `p` satisfies the plane constraint within tolerance, scaled
/// by the largest term entering the residual.
pub fn on_constraint_plane(t: &Triangle, p: TriPoint) -> bool {
    let scale = (t.a() * p.x)
        .abs()
        .max((t.b() * p.y).abs())
        .max((t.c() * p.z).abs())
        .max(t.twice_area());
    is_zero_with(plane_residual(t, p), scale)
}
