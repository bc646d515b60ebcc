use super::{classify, grade_of, same_space, GeomKind};
use crate::algebra::Space;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

/// Polar element `A I`.
///
/// Swaps proper and improper objects and fixes null ones; in H1 it sends
/// the chart coordinate `x` to `1/x`.
pub fn polar(a: &Multivector) -> Multivector {
    a.dual()
}

/// `x . y` vanishes relative to the scales of `x` and `y`.
pub fn is_perpendicular(x: &Multivector, y: &Multivector) -> Result<bool> {
    same_space(x, y)?;
    let dot = x.inner(y)?;
    Ok(dot.max_abs() <= tol::INCIDENCE_RELATIVE * x.max_abs() * y.max_abs())
}

/// The two null points on a proper object: `(N+, N-)`.
///
/// * H1 point `a`: `<a (1 +- I)>_1`, so `e1` gives `-e0 + e1` and `e0 + e1`;
/// * H2 line `a`: `<(a +- I)(a . e12)>_2`;
/// * H3 line `L`: `<(L +- I)(L . e123)>_3`.
///
/// The input is normalised first.
pub fn null_points(a: &Multivector) -> Result<(Multivector, Multivector)> {
    let g = grade_of(a)?;
    if classify(a)?.kind != GeomKind::Proper {
        return Err(Error::ImproperInput);
    }
    let a = a.grade(g).normalize()?;
    let alg = a.algebra();
    let i = Multivector::pseudoscalar(alg);
    match (alg.space(), g) {
        (Space::H1, 1) => Ok(((a * (i + 1.0)).grade(1), (a * (-i + 1.0)).grade(1))),
        (Space::H2, 1) | (Space::H3, 2) => {
            let anchor = a.inner(&crate::geometry::origin(alg))?;
            let k = alg.point_grade();
            Ok((((a + i) * anchor).grade(k), ((a - i) * anchor).grade(k)))
        }
        (space, grade) => Err(Error::NonGeometricGrade { grade, space }),
    }
}

/// Where a null object touches the absolute.
///
/// H1 null points are returned as given; H2 null lines and H3 null planes
/// touch at their polar; a null H3 line `L` touches at `<L (L . e123)>_3`.
pub fn touch_point(a: &Multivector) -> Result<Multivector> {
    let g = grade_of(a)?;
    if classify(a)?.kind != GeomKind::Null {
        return Err(Error::NotNull);
    }
    let a = a.grade(g);
    let alg = a.algebra();
    match (alg.space(), g) {
        (Space::H1, 1) => Ok(a),
        (Space::H2, 1) | (Space::H3, 1) => Ok(polar(&a)),
        (Space::H3, 2) => Ok((a * a.inner(&crate::geometry::origin(alg))?).grade(3)),
        (space, grade) => Err(Error::NonGeometricGrade { grade, space }),
    }
}
