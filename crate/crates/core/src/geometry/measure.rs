use serde::Serialize;

use super::{classify, expect_grade, grade_of, normalized_proper, same_space, GeomKind};
use crate::algebra::Space;
use crate::error::{Error, Result};
use crate::exp::split_bivector;
use crate::multivector::Multivector;
use crate::tol;

fn require_space(a: &Multivector, space: Space, op: &'static str) -> Result<()> {
    if a.space() != space {
        return Err(Error::UnsupportedSpace { op, space: a.space() });
    }
    Ok(())
}

/// Checks `cosh^2 - sinh^2 = 1` relative to `cosh^2`.
fn cross_check(cosh: f64, sinh: f64, what: &'static str) -> Result<()> {
    let deviation = (cosh * cosh - sinh * sinh - 1.0).abs();
    if deviation > tol::MEASURE_CROSS_CHECK * cosh * cosh.max(1.0) {
        return Err(Error::ConsistencyCheck { what, deviation });
    }
    Ok(())
}

/// Distance between two proper points of any dimension: `asinh ||P v Q||`.
///
/// Inputs are normalised here; `|P . Q| = cosh r` is checked alongside.
pub fn distance(p: &Multivector, q: &Multivector) -> Result<f64> {
    same_space(p, q)?;
    let k = p.algebra().point_grade();
    let p = normalized_proper(&expect_grade(p, k)?)?;
    let q = normalized_proper(&expect_grade(q, k)?)?;
    let sinh = p.join(&q)?.pseudo_norm();
    let cosh = p.inner(&q)?.to_scalar()?.abs();
    cross_check(cosh, sinh, "distance")?;
    Ok(sinh.asinh())
}

/// Shared body of the point-to-hyperplane and point-to-line distances.
fn distance_to_point(obj: &Multivector, p: &Multivector, what: &'static str) -> Result<f64> {
    let obj = normalized_proper(obj)?;
    let p = normalized_proper(&expect_grade(p, p.algebra().point_grade())?)?;
    let sinh = obj.join(&p)?.pseudo_norm();
    let cosh = obj.inner(&p)?.pseudo_norm();
    cross_check(cosh, sinh, what)?;
    Ok(sinh.asinh())
}

/// Distance from a proper point to a proper line of H2: `asinh |a v P|`.
pub fn distance_point_line_h2(a: &Multivector, p: &Multivector) -> Result<f64> {
    same_space(a, p)?;
    require_space(a, Space::H2, "distance_point_line_h2")?;
    distance_to_point(&expect_grade(a, 1)?, p, "distance_point_line_h2")
}

/// Distance from a proper point to a proper plane of H3: `asinh |a v P|`.
pub fn distance_point_plane_h3(a: &Multivector, p: &Multivector) -> Result<f64> {
    same_space(a, p)?;
    require_space(a, Space::H3, "distance_point_plane_h3")?;
    distance_to_point(&expect_grade(a, 1)?, p, "distance_point_plane_h3")
}

/// Distance from a proper point to a proper line of H3: `asinh ||L v P||`.
pub fn distance_point_line_h3(l: &Multivector, p: &Multivector) -> Result<f64> {
    same_space(l, p)?;
    require_space(l, Space::H3, "distance_point_line_h3")?;
    distance_to_point(&expect_grade(l, 2)?, p, "distance_point_line_h3")
}

fn clamped_acos(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// True when `m` is negligible next to unit-scale inputs.
fn vanishes(m: &Multivector) -> bool {
    m.max_abs() <= tol::INCIDENCE_RELATIVE
}

fn require_proper_meet(meet: &Multivector) -> Result<()> {
    match classify(meet)?.kind {
        GeomKind::Proper => Ok(()),
        _ => Err(Error::MeetNotProper),
    }
}

/// Angle between lines of H2, planes of H3, lines of H3, or a plane and a line of H3.
///
/// Inputs are normalised and must meet at a proper point (or proper line for
/// two planes). Lines and planes use `acos(a . b)`, two H3 lines use
/// `acos(-L . M)` and a plane with a line `acos ||a . L||`. Orientation is
/// kept, so reversing one argument gives the supplementary angle.
pub fn angle(a: &Multivector, b: &Multivector) -> Result<f64> {
    same_space(a, b)?;
    let space = a.space();
    let (ga, gb) = (grade_of(a)?, grade_of(b)?);
    match (space, ga, gb) {
        (Space::H2 | Space::H3, 1, 1) => {
            let a = normalized_proper(a)?;
            let b = normalized_proper(b)?;
            let meet = a.wedge(&b)?;
            if !vanishes(&meet) {
                require_proper_meet(&meet)?;
            }
            Ok(clamped_acos(a.inner(&b)?.to_scalar()?))
        }
        (Space::H3, 2, 2) => {
            let l = normalized_proper(a)?;
            let m = normalized_proper(b)?;
            if l.join(&m)?.to_scalar()?.abs() > tol::INCIDENCE_RELATIVE {
                return Err(Error::MeetNotProper);
            }
            let c = l.commutator(&m)?;
            if !vanishes(&c) {
                require_proper_meet(&c)?;
            }
            Ok(clamped_acos(-l.inner(&m)?.to_scalar()?))
        }
        (Space::H3, 1, 2) | (Space::H3, 2, 1) => {
            let (plane, line) = if ga == 1 { (a, b) } else { (b, a) };
            let plane = normalized_proper(plane)?;
            let line = normalized_proper(line)?;
            let meet = plane.wedge(&line)?;
            if !vanishes(&meet) {
                require_proper_meet(&meet)?;
            }
            Ok(plane.inner(&line)?.pseudo_norm().min(1.0).acos())
        }
        (Space::H1, ..) => Err(Error::UnsupportedSpace { op: "angle", space }),
        _ => Err(Error::NonGeometricGrade { grade: ga.max(gb), space }),
    }
}

/// Closest approach of two hyperparallel lines of H2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineGap {
    pub distance: f64,
    /// Normalised common perpendicular `(a ^ b) I^-1`.
    pub perpendicular: Multivector,
    /// Foot of the perpendicular on the first line.
    pub foot_a: Multivector,
    /// Foot of the perpendicular on the second line.
    pub foot_b: Multivector,
}

/// Common perpendicular and separation of two proper lines meeting at an improper point.
pub fn line_line_gap_h2(a: &Multivector, b: &Multivector) -> Result<LineGap> {
    same_space(a, b)?;
    require_space(a, Space::H2, "line_line_gap_h2")?;
    let a = normalized_proper(&expect_grade(a, 1)?)?;
    let b = normalized_proper(&expect_grade(b, 1)?)?;
    let meet = a.wedge(&b)?;
    if vanishes(&meet) || classify(&meet)?.kind != GeomKind::Improper {
        return Err(Error::NotHyperparallel);
    }
    let sinh = meet.pseudo_norm();
    let cosh = a.inner(&b)?.to_scalar()?.abs();
    cross_check(cosh, sinh, "line_line_gap_h2")?;
    let c = meet.undual().normalize()?;
    let foot_a = a.wedge(&c)?.normalize()?;
    let foot_b = b.wedge(&c)?.normalize()?;
    let feet_cosh = foot_a.inner(&foot_b)?.to_scalar()?.abs();
    let deviation = (feet_cosh - cosh).abs();
    if deviation > tol::MEASURE_CROSS_CHECK * cosh {
        return Err(Error::ConsistencyCheck { what: "line_line_gap_h2 feet", deviation });
    }
    Ok(LineGap { distance: sinh.asinh(), perpendicular: c, foot_a, foot_b })
}

/// Separation, angle and common-perpendicular axes of two skew lines of H3.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SkewGap {
    pub distance: f64,
    pub angle: f64,
    /// Proper axis of `L x M` (the common perpendicular).
    pub proper_axis: Multivector,
    /// Improper axis of `L x M` (its polar line).
    pub improper_axis: Multivector,
}

/// Closed-form gap between skew proper lines.
///
/// With `u = L . M` and `v = L v M`,
/// `2 sinh^2 r = w + sqrt(w^2 + 4 v^2)` where `w = u^2 + v^2 - 1`, and
/// `cos alpha = -u / cosh r`.
pub fn skew_lines_gap(l: &Multivector, m: &Multivector) -> Result<SkewGap> {
    same_space(l, m)?;
    require_space(l, Space::H3, "skew_lines_gap")?;
    let l = normalized_proper(&expect_grade(l, 2)?)?;
    let m = normalized_proper(&expect_grade(m, 2)?)?;
    let u = l.inner(&m)?.to_scalar()?;
    let v = l.join(&m)?.to_scalar()?;
    if v.abs() <= tol::INCIDENCE_RELATIVE {
        return Err(Error::LinesIntersect);
    }
    let w = u * u + v * v - 1.0;
    let root = (w * w + 4.0 * v * v).sqrt();
    // w + root loses digits when w is large and negative
    let two_sinh_sq = if w >= 0.0 { w + root } else { 4.0 * v * v / (root - w) };
    let sinh = (0.5 * two_sinh_sq).sqrt();
    let cosh = (1.0 + sinh * sinh).sqrt();
    let (proper_axis, improper_axis) = split_bivector(&l.commutator(&m)?)?;
    Ok(SkewGap { distance: sinh.asinh(), angle: clamped_acos(-u / cosh), proper_axis, improper_axis })
}

/// Intersection point of two coplanar lines of H3.
///
/// The result is `M ^ (L v X)` for the basis point `X` that gives the best
/// conditioned answer; the caller is responsible for the lines meeting.
pub fn meet_intersecting_lines(l: &Multivector, m: &Multivector) -> Result<Multivector> {
    same_space(l, m)?;
    require_space(l, Space::H3, "meet_intersecting_lines")?;
    let l = expect_grade(l, 2)?;
    let m = expect_grade(m, 2)?;
    let alg = l.algebra();
    let mut best = Multivector::zero(alg);
    for x in ["e123", "e320", "e130", "e210"] {
        let candidate = m.wedge(&l.join(&Multivector::blade(alg, x))?)?;
        if candidate.max_abs() > best.max_abs() {
            best = candidate;
        }
    }
    if best.is_zero() {
        return Err(Error::NullObject);
    }
    Ok(best)
}
