//! Objects, classification and measurements of hyperbolic space.
//!
//! | space | hyperplane | point | line |
//! |-------|------------|-------|------|
//! | H1 | - | vector `d e0 + a e1` | - |
//! | H2 | vector (line) | bivector | vector |
//! | H3 | vector (plane) | trivector | bivector |
//!
//! Measurement functions normalise their inputs themselves and refuse null
//! or improper arguments where the quantity is undefined.

mod area;
mod axes;
mod classify;
mod construct;
mod measure;
mod polar;
mod transform;

pub use area::{general_triangle_area, right_triangle_area};
pub use axes::axes;
pub use classify::{classify, classify_with, GeomClass, GeomKind};
pub use construct::{chart, line_h2, line_h3, line_join, origin, plane_h3, point, point_h1, ChartPoint};
pub use measure::{
    angle, distance, distance_point_line_h2, distance_point_line_h3, distance_point_plane_h3, line_line_gap_h2,
    meet_intersecting_lines, skew_lines_gap, LineGap, SkewGap,
};
pub use polar::{is_perpendicular, null_points, polar, touch_point};
pub use transform::{project, reflect, reject};

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

/// The single grade of `a`, ignoring round-off below `1e-12` relative.
pub(crate) fn grade_of(a: &Multivector) -> Result<usize> {
    a.homogeneous_grade(tol::SCALAR_RESIDUAL).ok_or(Error::NonHomogeneous)
}

/// Requires grade `k`, reporting the grade actually found otherwise.
pub(crate) fn expect_grade(a: &Multivector, k: usize) -> Result<Multivector> {
    let g = grade_of(a)?;
    if g != k {
        return Err(Error::NonGeometricGrade { grade: g, space: a.space() });
    }
    Ok(a.grade(k))
}

/// Normalised copy of a proper object.
pub(crate) fn normalized_proper(a: &Multivector) -> Result<Multivector> {
    match classify(a)?.kind {
        GeomKind::Proper => a.normalize().map_err(|_| Error::NullOrImproperInput),
        _ => Err(Error::NullOrImproperInput),
    }
}

pub(crate) fn same_space(a: &Multivector, b: &Multivector) -> Result<()> {
    if a.space() != b.space() {
        return Err(Error::AlgebraMismatch { left: a.space().name(), right: b.space().name() });
    }
    Ok(())
}
