use serde::{Deserialize, Serialize};

use super::mv::ParseError;
use crate::algebra::{Algebra, Space};
use crate::multivector::Multivector;

/// Output styles for [`serialize_mv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Shortest round-trip decimals, e.g. `e12 + e20 - 3e01`.
    Canonical,
    /// `{"space":"H2","coeffs":[...]}` in canonical blade order.
    Json,
    /// Small rationals recognised for display, e.g. `-1/3e0 + 1/3e1 - e2`. Lossy.
    Rational,
}

pub fn serialize_mv(a: &Multivector, style: Style) -> String {
    match style {
        Style::Canonical => serialize_canonical(a),
        Style::Json => serialize_json(a),
        Style::Rational => serialize_rational(a),
    }
}

fn join_terms(a: &Multivector, number: impl Fn(f64) -> String) -> String {
    let mut out = String::new();
    for (blade, &x) in a.algebra().blades().iter().zip(a.coeffs()) {
        if x == 0.0 {
            continue;
        }
        let negative = x.is_sign_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = number(x.abs());
        if blade.grade == 0 {
            out.push_str(&mag);
        } else {
            if mag != "1" {
                out.push_str(&mag);
            }
            out.push_str(blade.name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: blades in basis order, zero terms omitted, `0` for zero.
///
/// Coefficients use the shortest decimal that reads back to the same double,
/// so `parse_mv(serialize_canonical(a))` reproduces `a` bit for bit.
pub fn serialize_canonical(a: &Multivector) -> String {
    join_terms(a, |x| format!("{x}"))
}

/// Best rational `p/q` with `q <= 64` matching `x` to `1e-12` relative.
fn as_rational(x: f64) -> Option<(u64, u64)> {
    if !x.is_finite() || x > 1e12 {
        return None;
    }
    (1..=64u64).find_map(|q| {
        let p = (x * q as f64).round();
        ((p / q as f64 - x).abs() <= 1e-12 * x.max(1.0)).then_some((p as u64, q))
    })
}

/// Display text with simple fractions (`1/3`) in place of long decimals.
pub fn serialize_rational(a: &Multivector) -> String {
    join_terms(a, |x| match as_rational(x) {
        Some((p, 1)) => p.to_string(),
        Some((p, q)) => format!("{p}/{q}"),
        None => format!("{x}"),
    })
}

#[derive(Serialize, Deserialize)]
struct MvJson {
    space: Space,
    coeffs: Vec<f64>,
}

impl Serialize for Multivector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MvJson { space: self.space(), coeffs: self.coeffs().to_vec() }.serialize(serializer)
    }
}

pub fn serialize_json(a: &Multivector) -> String {
    let doc = MvJson { space: a.space(), coeffs: a.coeffs().to_vec() };
    serde_json::to_string(&doc).expect("finite coefficients serialize")
}

/// Reads the JSON form back into the table-backed algebra of its space.
pub fn parse_mv_json(text: &str) -> Result<Multivector, ParseError> {
    let doc: MvJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let alg = Algebra::get(doc.space);
    if doc.coeffs.len() != alg.size() {
        return Err(ParseError::Json(format!(
            "{} expects {} coefficients, got {}",
            doc.space,
            alg.size(),
            doc.coeffs.len()
        )));
    }
    Ok(Multivector::from_coeffs(alg, &doc.coeffs))
}
