//! Output shaping: 12-significant-digit rounding, JSON payloads, and the
//! aligned human format.

use lemoine::{BaryPoint, ExtremumResult, PointClass, RegionLabel};
use serde::Serialize;

/// Rounds to 12 significant digits so repeated runs and platforms print
/// identical numbers.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - exp);
    if !factor.is_finite() || !(x * factor).is_finite() {
        return x;
    }
    (x * factor).round() / factor
}

pub fn fmt_num(x: f64) -> String {
    format!("{}", sig12(x))
}

pub fn canonical_triple(p: &BaryPoint) -> [f64; 3] {
    let (l, m, n) = p.canonical().coords();
    [sig12(l), sig12(m), sig12(n)]
}

pub fn triple_human(p: &BaryPoint) -> String {
    let [l, m, n] = canonical_triple(p);
    format!("{l}:{m}:{n}")
}

pub fn class_str(p: &BaryPoint) -> &'static str {
    match p.class() {
        PointClass::Finite => "Finite",
        PointClass::AtInfinity => "AtInfinity",
    }
}

/// JSON payload of `solve`; field order is the wire contract.
#[derive(Serialize)]
pub struct SolveJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_bary: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_set: Option<String>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<f64>,
    pub case: &'static str,
    #[serde(rename = "region_M", skip_serializing_if = "Option::is_none")]
    pub region_m: Option<String>,
    #[serde(rename = "region_N", skip_serializing_if = "Option::is_none")]
    pub region_n: Option<String>,
    pub diagnostics: Vec<String>,
}

pub fn solve_json(r: &ExtremumResult, diagnostics: Vec<String>) -> SolveJson {
    SolveJson {
        kind: r.kind.as_str(),
        value: r.value.map(sig12),
        point_bary: r.point.as_ref().map(canonical_triple),
        point_set: r.set_descriptor.map(|s| s.to_string()),
        j: r.j.map(sig12),
        case: r.case_label,
        region_m: r.region_m.as_ref().map(RegionLabel::to_string),
        region_n: r.region_n.as_ref().map(RegionLabel::to_string),
        diagnostics,
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("payloads serialize"));
}

/// Aligned `label value` rows; skips absent fields.
pub fn print_rows(rows: &[(&str, Option<String>)]) {
    for (label, value) in rows {
        if let Some(v) = value {
            println!("{label:<10} {v}");
        }
    }
}

pub fn solve_human(r: &ExtremumResult, diagnostics: &[String]) {
    print_rows(&[
        ("kind", Some(r.kind.as_str().to_string())),
        ("value", r.value.map(fmt_num)),
        ("point", r.point.as_ref().map(triple_human)),
        ("point_set", r.set_descriptor.map(|s| s.to_string())),
        ("J", r.j.map(fmt_num)),
        ("case", Some(r.case_label.to_string())),
        ("region M", r.region_m.as_ref().map(RegionLabel::to_string)),
        ("region N", r.region_n.as_ref().map(RegionLabel::to_string)),
    ]);
    for d in diagnostics {
        println!("note       {d}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_rounding() {
        assert_eq!(sig12(2.88), 2.88);
        assert_eq!(sig12(50.0), 50.0);
        // Rounded to 12 significant digits, printed in shortest form.
        assert_eq!(fmt_num(-29.387755102040817), "-29.387755102");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(sig12(1.2345678901234567), 1.23456789012);
    }

    #[test]
    fn canonical_triple_of_symmedian() {
        let p = BaryPoint::new(9.0, 16.0, 25.0).unwrap();
        assert_eq!(canonical_triple(&p), [0.36, 0.64, 1.0]);
    }
}
