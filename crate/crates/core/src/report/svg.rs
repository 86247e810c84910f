//! Standalone SVG figures: triangle, circumcircle, labeled points, and an
//! optional level curve of the objective.
//!
//! Output is deterministic: fixed sampling resolution, fixed coordinate
//! formatting, no external references. The level curve is traced by
//! marching squares over a 512x512 sampling of the window
//! `[-R, a+R] x [-R, 2R]`, interpolating sign changes linearly.

use std::io::Write;

use crate::error::Result;
use crate::extremum::{eval_objective, WeightTriple};
use crate::geom::coords::{bary_to_cartesian, cartesian_to_tri, BaryPoint};
use crate::geom::triangle::{Point2, Triangle};

/// Resolution of the level-curve sampling grid.
const CONIC_SAMPLES: usize = 512;
/// Pixel width of the rendered figure.
const CANVAS_W: f64 = 800.0;

/// A labeled finite point to draw.
#[derive(Debug, Clone)]
pub struct Annotation {
    pub point: BaryPoint,
    pub label: String,
}

impl Annotation {
    pub fn new(point: BaryPoint, label: impl Into<String>) -> Self {
        Annotation { point, label: label.into() }
    }
}

/// The fixed tracing window for level curves.
fn trace_window(t: &Triangle) -> (Point2, Point2) {
    let r = t.circumradius();
    (Point2::new(-r, -r), Point2::new(t.a() + r, 2.0 * r))
}

/// Writes a standalone SVG 1.1 document to `out`.
///
/// When both `level_value` and `weights` are given, the section of the level
/// surface `F = level_value` by the constraint plane is traced and drawn.
pub fn render_svg(
    t: &Triangle,
    annotations: &[Annotation],
    level_value: Option<f64>,
    weights: Option<&WeightTriple>,
    out: &mut dyn Write,
) -> Result<()> {
    // Viewport: triangle plus circumcircle, padded.
    let o = t.circumcenter();
    let r = t.circumradius();
    let xs = [t.va().x, t.vb().x, t.vc().x, o.x - r, o.x + r];
    let ys = [t.va().y, t.vb().y, t.vc().y, o.y - r, o.y + r];
    let min_x = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_x = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min_y = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_y = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.05 * (max_x - min_x).max(max_y - min_y);
    let (min_x, max_x, min_y, max_y) = (min_x - pad, max_x + pad, min_y - pad, max_y + pad);

    let scale = CANVAS_W / (max_x - min_x);
    let canvas_h = (max_y - min_y) * scale;
    let to_px = |p: Point2| -> (f64, f64) { ((p.x - min_x) * scale, (max_y - p.y) * scale) };
    let fmt = |v: f64| format!("{v:.2}");

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" \
         width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt(CANVAS_W),
        fmt(canvas_h),
        fmt(CANVAS_W),
        fmt(canvas_h)
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Circumcircle.
    let (ox, oy) = to_px(o);
    svg.push_str(&format!(
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
        fmt(ox),
        fmt(oy),
        fmt(r * scale)
    ));

    // Triangle edges.
    let (ax, ay) = to_px(t.va());
    let (bx, by) = to_px(t.vb());
    let (cx, cy) = to_px(t.vc());
    svg.push_str(&format!(
        "<path d=\"M {} {} L {} {} L {} {} Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        fmt(ax), fmt(ay), fmt(bx), fmt(by), fmt(cx), fmt(cy)
    ));

    // Level curve of the objective, if requested.
    if let (Some(level), Some(w)) = (level_value, weights) {
        let segments = level_curve_segments(t, w, level);
        if !segments.is_empty() {
            let mut d = String::new();
            for (p, q) in &segments {
                let (px, py) = to_px(*p);
                let (qx, qy) = to_px(*q);
                d.push_str(&format!("M {} {} L {} {} ", fmt(px), fmt(py), fmt(qx), fmt(qy)));
            }
            svg.push_str(&format!(
                "<path class=\"levelcurve\" d=\"{}\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"1\"/>\n",
                d.trim_end()
            ));
        }
    }

    // Labeled markers.
    for ann in annotations {
        let q = bary_to_cartesian(t, &ann.point)?;
        let (px, py) = to_px(q);
        svg.push_str(&format!(
            "<circle class=\"marker\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#2255cc\"/>\n",
            fmt(px),
            fmt(py)
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
            fmt(px + 6.0),
            fmt(py - 6.0),
            escape_xml(&ann.label)
        ));
    }

    svg.push_str("</svg>\n");
    out.write_all(svg.as_bytes())?;
    Ok(())
}

/// Marching-squares trace of `{F = level}` over the fixed window.
pub fn level_curve_segments(
    t: &Triangle,
    w: &WeightTriple,
    level: f64,
) -> Vec<(Point2, Point2)> {
    let (lo, hi) = trace_window(t);
    let nx = CONIC_SAMPLES;
    let ny = CONIC_SAMPLES;
    let dx = (hi.x - lo.x) / (nx - 1) as f64;
    let dy = (hi.y - lo.y) / (ny - 1) as f64;

    let mut values = vec![0.0f64; nx * ny];
    for iy in 0..ny {
        let y = lo.y + dy * iy as f64;
        for ix in 0..nx {
            let x = lo.x + dx * ix as f64;
            let p = cartesian_to_tri(t, Point2::new(x, y));
            values[iy * nx + ix] = eval_objective(w, p) - level;
        }
    }

    let mut segments = Vec::new();
    for iy in 0..ny - 1 {
        for ix in 0..nx - 1 {
            let x0 = lo.x + dx * ix as f64;
            let y0 = lo.y + dy * iy as f64;
            let f00 = values[iy * nx + ix];
            let f10 = values[iy * nx + ix + 1];
            let f01 = values[(iy + 1) * nx + ix];
            let f11 = values[(iy + 1) * nx + ix + 1];

            // Corner sign code; >= 0 counts as inside.
            let code = (usize::from(f00 >= 0.0))
                | (usize::from(f10 >= 0.0) << 1)
                | (usize::from(f11 >= 0.0) << 2)
                | (usize::from(f01 >= 0.0) << 3);
            if code == 0 || code == 15 {
                continue;
            }

            let lerp = |fa: f64, fb: f64| fa / (fa - fb);
            let bottom = Point2::new(x0 + dx * lerp(f00, f10), y0);
            let top = Point2::new(x0 + dx * lerp(f01, f11), y0 + dy);
            let left = Point2::new(x0, y0 + dy * lerp(f00, f01));
            let right = Point2::new(x0 + dx, y0 + dy * lerp(f10, f11));

            match code {
                1 | 14 => segments.push((left, bottom)),
                2 | 13 => segments.push((bottom, right)),
                3 | 12 => segments.push((left, right)),
                4 | 11 => segments.push((right, top)),
                6 | 9 => segments.push((bottom, top)),
                7 | 8 => segments.push((left, top)),
                5 | 10 => {
                    // Saddle cell: split by the center sample.
                    let center = 0.25 * (f00 + f10 + f01 + f11);
                    let flip = (center >= 0.0) == (code == 5);
                    if flip {
                        segments.push((left, bottom));
                        segments.push((right, top));
                    } else {
                        segments.push((left, top));
                        segments.push((bottom, right));
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    segments
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
