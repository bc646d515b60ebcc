//! Evaluation of scene queries into structured records.

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Space};
use crate::error::{Error, Result};
use crate::geometry::{self, ChartPoint, GeomClass};
use crate::motion::Spinor;
use crate::multivector::Multivector;
use crate::text::{serialize_canonical, serialize_rational, Query, QueryOp, SceneDocument};
use crate::tol;

/// Result of one query.
#[derive(Debug, Clone, PartialEq)]
pub enum QueryValue {
    Scalar(f64),
    Bool(bool),
    Mv(Multivector),
    Chart(ChartPoint),
    Class(GeomClass),
    /// Several named parts, e.g. the two null points.
    Parts(Vec<(&'static str, QueryValue)>),
}

impl QueryValue {
    /// Every number carried by the value, in a fixed order.
    pub fn numbers(&self) -> Vec<f64> {
        match self {
            QueryValue::Scalar(x) => vec![*x],
            QueryValue::Bool(b) => vec![f64::from(u8::from(*b))],
            QueryValue::Mv(m) => m.coeffs().to_vec(),
            QueryValue::Chart(c) => c.coords.iter().copied().chain([c.weight]).collect(),
            QueryValue::Class(c) => vec![c.discriminant],
            QueryValue::Parts(parts) => parts.iter().flat_map(|(_, v)| v.numbers()).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            QueryValue::Scalar(x) => json!(x),
            QueryValue::Bool(b) => json!(b),
            QueryValue::Mv(m) => json!({
                "text": serialize_canonical(m),
                "pretty": serialize_rational(m),
                "space": m.space().name(),
                "coeffs": m.coeffs(),
            }),
            QueryValue::Chart(c) => json!({ "coords": c.coords, "weight": c.weight }),
            QueryValue::Class(c) => json!({
                "kind": c.kind.name(),
                "discriminant": c.discriminant,
                "tolerance_used": c.tolerance_used,
            }),
            QueryValue::Parts(parts) => {
                Value::Object(parts.iter().map(|(k, v)| (k.to_string(), v.to_json())).collect::<Map<_, _>>())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryRecord {
    /// The query as written.
    pub query: String,
    pub line: usize,
    pub outcome: std::result::Result<QueryValue, Error>,
    /// Class of a geometric multivector result.
    pub classification: Option<GeomClass>,
    pub diagnostics: Vec<(String, f64)>,
}

impl QueryRecord {
    pub fn is_ok(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn to_json(&self) -> Value {
        let (result, error) = match &self.outcome {
            Ok(v) => (v.to_json(), Value::Null),
            Err(e) => (Value::Null, json!({ "kind": e.kind(), "message": e.to_string() })),
        };
        let classification = match &self.classification {
            Some(c) => QueryValue::Class(*c).to_json(),
            None => Value::Null,
        };
        let diagnostics: Map<String, Value> = self.diagnostics.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "query": self.query,
            "line": self.line,
            "result": result,
            "error": error,
            "classification": classification,
            "diagnostics": diagnostics,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Re-run every query with products taken from the matrix representation.
    pub oracle: bool,
    /// Relative tolerance for `classify` queries.
    pub classify_tolerance: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { oracle: false, classify_tolerance: tol::NULL_RELATIVE }
    }
}

/// Evaluates every query of `doc` in order.
pub fn evaluate(doc: &SceneDocument, options: &EvalOptions) -> Vec<QueryRecord> {
    let oracle_doc = options.oracle.then(|| doc.rebind(Algebra::oracle_backed(doc.space)));
    doc.queries
        .iter()
        .map(|q| {
            let outcome = evaluate_query(doc, q, options);
            let classification = match &outcome {
                Ok(QueryValue::Mv(m)) => geometry::classify_with(m, options.classify_tolerance).ok(),
                _ => None,
            };
            let mut diagnostics = Vec::new();
            if let Some(odoc) = &oracle_doc {
                let other = evaluate_query(odoc, q, options);
                diagnostics.push(("oracle_max_deviation".to_string(), deviation(&outcome, &other)));
            }
            QueryRecord { query: q.text(), line: q.line, outcome, classification, diagnostics }
        })
        .collect()
}

/// Largest absolute difference between two outcomes; infinite when they disagree in kind.
fn deviation(a: &Result<QueryValue>, b: &Result<QueryValue>) -> f64 {
    match (a, b) {
        (Ok(x), Ok(y)) => {
            let (u, v) = (x.numbers(), y.numbers());
            if u.len() != v.len() {
                return f64::INFINITY;
            }
            u.iter().zip(&v).fold(0.0, |m, (p, q)| if p == q { m } else { m.max((p - q).abs()) })
        }
        (Err(e), Err(f)) if e.kind() == f.kind() => 0.0,
        _ => f64::INFINITY,
    }
}

fn arg<'a>(doc: &'a SceneDocument, q: &Query, i: usize) -> &'a Multivector {
    doc.get(&q.args[i]).expect("scene validation binds every argument")
}

fn mv(m: Multivector) -> Result<QueryValue> {
    Ok(QueryValue::Mv(m))
}

fn scalar(x: f64) -> Result<QueryValue> {
    Ok(QueryValue::Scalar(x))
}

/// Evaluates one query against the bindings of `doc`.
pub fn evaluate_query(doc: &SceneDocument, q: &Query, options: &EvalOptions) -> Result<QueryValue> {
    let a = || arg(doc, q, 0);
    let b = || arg(doc, q, 1);
    let c = || arg(doc, q, 2);
    let num = |i: usize| arg(doc, q, i).to_scalar();
    match q.op {
        QueryOp::Classify => Ok(QueryValue::Class(geometry::classify_with(a(), options.classify_tolerance)?)),
        QueryOp::Norm => scalar(a().pseudo_norm()),
        QueryOp::Normalize => mv(a().normalize()?),
        QueryOp::Reverse => mv(a().reverse()),
        QueryOp::Polar => mv(geometry::polar(a())),
        QueryOp::Dual => mv(a().dual()),
        QueryOp::Undual => mv(a().undual()),
        QueryOp::Chart => Ok(QueryValue::Chart(geometry::chart(a())?)),
        QueryOp::NullPoints => {
            let (p, m) = geometry::null_points(a())?;
            Ok(QueryValue::Parts(vec![("plus", QueryValue::Mv(p)), ("minus", QueryValue::Mv(m))]))
        }
        QueryOp::TouchPoint => mv(geometry::touch_point(a())?),
        QueryOp::Axes => {
            let (p, i) = geometry::axes(a())?;
            Ok(QueryValue::Parts(vec![("proper", QueryValue::Mv(p)), ("improper", QueryValue::Mv(i))]))
        }
        QueryOp::Exp => mv(a().exp_bivector()?),
        QueryOp::Product => mv(a().geometric_product(b())?),
        QueryOp::Wedge => mv(a().wedge(b())?),
        QueryOp::Inner => mv(a().inner(b())?),
        QueryOp::Join => mv(a().join(b())?),
        QueryOp::Commutator => mv(a().commutator(b())?),
        QueryOp::Distance => scalar(geometry::distance(a(), b())?),
        QueryOp::DistancePointLine => match doc.space {
            Space::H3 => scalar(geometry::distance_point_line_h3(a(), b())?),
            _ => scalar(geometry::distance_point_line_h2(a(), b())?),
        },
        QueryOp::DistancePointPlane => scalar(geometry::distance_point_plane_h3(a(), b())?),
        QueryOp::Angle => scalar(geometry::angle(a(), b())?),
        QueryOp::LineLineGap => {
            let g = geometry::line_line_gap_h2(a(), b())?;
            Ok(QueryValue::Parts(vec![
                ("distance", QueryValue::Scalar(g.distance)),
                ("perpendicular", QueryValue::Mv(g.perpendicular)),
                ("foot_a", QueryValue::Mv(g.foot_a)),
                ("foot_b", QueryValue::Mv(g.foot_b)),
            ]))
        }
        QueryOp::SkewLinesGap => {
            let g = geometry::skew_lines_gap(a(), b())?;
            Ok(QueryValue::Parts(vec![
                ("distance", QueryValue::Scalar(g.distance)),
                ("angle", QueryValue::Scalar(g.angle)),
                ("proper_axis", QueryValue::Mv(g.proper_axis)),
                ("improper_axis", QueryValue::Mv(g.improper_axis)),
            ]))
        }
        QueryOp::IsPerpendicular => Ok(QueryValue::Bool(geometry::is_perpendicular(a(), b())?)),
        QueryOp::Project => mv(geometry::project(a(), b())?),
        QueryOp::Reject => mv(geometry::reject(a(), b())?),
        QueryOp::Reflect => mv(geometry::reflect(a(), b())?),
        QueryOp::RightTriangleArea => scalar(geometry::right_triangle_area(a(), b(), c())?),
        QueryOp::TriangleArea => scalar(geometry::general_triangle_area(a(), b(), c())?),
        QueryOp::TranslateH1 => mv(Spinor::translation_h1(a().algebra(), num(0)?)?.apply(b())?),
        QueryOp::Translate => mv(Spinor::translation_h2(a(), num(1)?)?.apply(c())?),
        QueryOp::Rotate => mv(Spinor::rotation_h2(a(), num(1)?)?.apply(c())?),
        QueryOp::NullTranslate => {
            let s = match doc.space {
                Space::H3 => Spinor::null_translation_h3(a(), num(1)?)?,
                _ => Spinor::null_translation_h2(a(), num(1)?)?,
            };
            mv(s.apply(c())?)
        }
        QueryOp::Screw => mv(Spinor::screw_h3(a(), num(1)?, num(2)?)?.apply(arg(doc, q, 3))?),
        QueryOp::ApplyExp => mv(Spinor::from_generator(a())?.apply(b())?),
    }
}
