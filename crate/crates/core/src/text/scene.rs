//! Line-oriented scene files.
//!
//! ```text
//! # Fig-style example
//! space: H2
//! a = -1/2 e0 + e1 + 1/2 e2
//! P = e12 - 1/2 e20 + 1/3 e01
//! ? distance_point_line a P
//! ```
//!
//! Bindings may use earlier names (`Q = 2 P + e20`); queries name bindings.
//! Scalar parameters of motions are bindings too (`t = 1/2`).

use std::collections::HashMap;

use super::mv::{ParseError, Parser};
use crate::algebra::{Algebra, Space};
use crate::multivector::Multivector;

macro_rules! query_ops {
    ($($variant:ident => $name:literal, $arity:literal;)*) => {
        /// Operations available to `?` query lines.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum QueryOp {
            $($variant,)*
        }

        impl QueryOp {
            pub const ALL: &'static [QueryOp] = &[$(QueryOp::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(QueryOp::$variant => $name,)*
                }
            }

            /// Number of binding arguments the operation takes.
            pub fn arity(self) -> usize {
                match self {
                    $(QueryOp::$variant => $arity,)*
                }
            }
        }
    };
}

query_ops! {
    Classify => "classify", 1;
    Norm => "norm", 1;
    Normalize => "normalize", 1;
    Reverse => "reverse", 1;
    Polar => "polar", 1;
    Dual => "dual", 1;
    Undual => "undual", 1;
    Chart => "chart", 1;
    NullPoints => "null_points", 1;
    TouchPoint => "touch_point", 1;
    Axes => "axes", 1;
    Exp => "exp", 1;
    Product => "product", 2;
    Wedge => "wedge", 2;
    Inner => "inner", 2;
    Join => "join", 2;
    Commutator => "commutator", 2;
    Distance => "distance", 2;
    DistancePointLine => "distance_point_line", 2;
    DistancePointPlane => "distance_point_plane", 2;
    Angle => "angle", 2;
    LineLineGap => "line_line_gap", 2;
    SkewLinesGap => "skew_lines_gap", 2;
    IsPerpendicular => "is_perpendicular", 2;
    Project => "project", 2;
    Reject => "reject", 2;
    Reflect => "reflect", 2;
    RightTriangleArea => "right_triangle_area", 3;
    TriangleArea => "triangle_area", 3;
    TranslateH1 => "translate_h1", 2;
    Translate => "translate", 3;
    Rotate => "rotate", 3;
    NullTranslate => "null_translate", 3;
    Screw => "screw", 4;
    ApplyExp => "apply_exp", 2;
}

impl QueryOp {
    pub fn from_name(name: &str) -> Option<QueryOp> {
        QueryOp::ALL.iter().copied().find(|op| op.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Binding {
    pub name: String,
    /// Source text of the expression.
    pub expr: String,
    pub value: Multivector,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub op: QueryOp,
    pub args: Vec<String>,
    pub line: usize,
}

impl Query {
    /// The query as written, e.g. `angle a b`.
    pub fn text(&self) -> String {
        std::iter::once(self.op.name()).chain(self.args.iter().map(String::as_str)).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneDocument {
    pub space: Space,
    pub bindings: Vec<Binding>,
    pub queries: Vec<Query>,
}

impl SceneDocument {
    pub fn get(&self, name: &str) -> Option<&Multivector> {
        self.bindings.iter().find(|b| b.name == name).map(|b| &b.value)
    }

    /// The same document with every value viewed in `alg` (same space).
    pub fn rebind(&self, alg: &'static Algebra) -> SceneDocument {
        let mut doc = self.clone();
        for b in &mut doc.bindings {
            b.value = b.value.rebind(alg);
        }
        doc
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn looks_like_blade(s: &str) -> bool {
    s.len() > 1 && s.starts_with('e') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

fn column_of(line: &str, part: &str) -> usize {
    // `part` is always a subslice of `line`
    line[..part.as_ptr() as usize - line.as_ptr() as usize].chars().count()
}

/// Parses and validates a scene. A file with no content at all is an empty
/// H2 document; anything else needs the `space:` header first.
pub fn parse_scene(text: &str) -> Result<SceneDocument, ParseError> {
    let mut space: Option<Space> = None;
    let mut bindings: Vec<Binding> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut queries = Vec::new();

    for (n, raw) in text.split('\n').enumerate() {
        let line_no = n + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |column: usize, message: String| ParseError::Syntax { line: line_no, column, message };

        if let Some(rest) = content.strip_prefix("space:") {
            if space.is_some() {
                return Err(syntax(column_of(raw, content) + 1, "duplicate space header".into()));
            }
            let name = rest.trim();
            space = Some(
                Space::from_name(name).ok_or_else(|| ParseError::UnknownSpace { name: name.into(), line: line_no })?,
            );
            continue;
        }
        let alg = Algebra::get(space.ok_or(ParseError::MissingSpace)?);

        if let Some(rest) = content.strip_prefix('?') {
            let mut words = rest.split_whitespace();
            let op_name = words.next().ok_or_else(|| syntax(column_of(raw, content) + 2, "missing query operation".into()))?;
            let op = QueryOp::from_name(op_name)
                .ok_or_else(|| ParseError::UnknownQueryOp { op: op_name.into(), line: line_no })?;
            let args: Vec<String> = words.map(str::to_string).collect();
            if args.len() != op.arity() {
                return Err(ParseError::ArityMismatch {
                    op: op.name().into(),
                    expected: op.arity(),
                    found: args.len(),
                    line: line_no,
                });
            }
            if let Some(missing) = args.iter().find(|a| !index.contains_key(a.as_str())) {
                return Err(ParseError::UnboundName { name: missing.clone(), line: line_no });
            }
            queries.push(Query { op, args, line: line_no });
            continue;
        }

        let Some((lhs, rhs)) = content.split_once('=') else {
            return Err(syntax(
                column_of(raw, content) + 1,
                "expected `space: ...`, `name = expression` or `? op args`".into(),
            ));
        };
        let name = lhs.trim();
        if !is_identifier(name) || looks_like_blade(name) {
            return Err(syntax(column_of(raw, content) + 1, format!("{name:?} is not a valid binding name")));
        }
        if index.contains_key(name) {
            return Err(ParseError::DuplicateName { name: name.into(), line: line_no });
        }
        let lookup = |word: &str| index.get(word).map(|&i| bindings[i].value);
        let value = Parser::new(rhs, alg, line_no, Some(&lookup)).with_column_offset(column_of(raw, rhs)).expression()?;
        index.insert(name.to_string(), bindings.len());
        bindings.push(Binding { name: name.into(), expr: rhs.trim().into(), value, line: line_no });
    }

    Ok(SceneDocument { space: space.unwrap_or(Space::H2), bindings, queries })
}
