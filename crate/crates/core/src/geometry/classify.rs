use serde::Serialize;

use super::grade_of;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeomKind {
    Proper,
    Null,
    Improper,
}

impl GeomKind {
    pub fn name(self) -> &'static str {
        match self {
            GeomKind::Proper => "Proper",
            GeomKind::Null => "Null",
            GeomKind::Improper => "Improper",
        }
    }
}

/// Classification of a homogeneous object with the evidence used to decide it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeomClass {
    pub kind: GeomKind,
    /// `<A A>_0`, whose sign decides the class.
    pub discriminant: f64,
    /// Absolute threshold below which the discriminant counted as zero.
    pub tolerance_used: f64,
}

/// [`classify_with`] at the default relative tolerance.
pub fn classify(a: &Multivector) -> Result<GeomClass> {
    classify_with(a, tol::NULL_RELATIVE)
}

/// Proper, null or improper by the sign of `A^2`.
///
/// Vectors (H1 points, H2 lines, H3 planes) are proper when `A^2 > 0`;
/// higher grades (H2/H3 points, H3 lines) when `A^2 < 0`. The zero
/// multivector is null. For non-simple H3 bivectors only the scalar part of
/// the square is used.
pub fn classify_with(a: &Multivector, relative_tolerance: f64) -> Result<GeomClass> {
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(GeomClass { kind: GeomKind::Null, discriminant: 0.0, tolerance_used: 0.0 });
    }
    let g = grade_of(a)?;
    if g == 0 || g > a.algebra().dim() {
        return Err(Error::NonGeometricGrade { grade: g, space: a.space() });
    }
    let a = a.grade(g);
    let disc = (a * a).scalar_part();
    let tolerance_used = relative_tolerance * scale * scale;
    let kind = if disc.abs() <= tolerance_used {
        GeomKind::Null
    } else if (disc > 0.0) == (g == 1) {
        GeomKind::Proper
    } else {
        GeomKind::Improper
    };
    Ok(GeomClass { kind, discriminant: disc, tolerance_used })
}
