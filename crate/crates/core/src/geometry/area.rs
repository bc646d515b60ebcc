use super::{classify, expect_grade, same_space, GeomKind};
use crate::algebra::Space;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

fn h2_point(p: &Multivector) -> Result<Multivector> {
    if p.space() != Space::H2 {
        return Err(Error::UnsupportedSpace { op: "triangle area", space: p.space() });
    }
    expect_grade(p, 2)
}

/// `|P v Q v R|` is negligible against the vertex scales.
fn collinear(p: &Multivector, q: &Multivector, r: &Multivector) -> Result<(bool, f64)> {
    let vol = p.join(q)?.join(r)?.to_scalar()?.abs();
    Ok((vol <= tol::SCALAR_RESIDUAL * p.max_abs() * q.max_abs() * r.max_abs(), vol))
}

/// Area of a triangle of H2 with a right angle at `P`.
///
/// `sin S = |P v Q v R| / (||Q|| ||R|| + |Q . R|)` with `P` normalised. `Q`
/// and `R` may be null (vertices at infinity), in which case the norms drop
/// out. The result lies in `[0, pi/2]`.
pub fn right_triangle_area(p: &Multivector, q: &Multivector, r: &Multivector) -> Result<f64> {
    same_space(p, q)?;
    same_space(p, r)?;
    let (p, q, r) = (h2_point(p)?, h2_point(q)?, h2_point(r)?);
    let p = match classify(&p)?.kind {
        GeomKind::Proper => p.normalize()?,
        GeomKind::Null => return Err(Error::NullVertexAtP),
        GeomKind::Improper => return Err(Error::NullOrImproperInput),
    };
    let prepare = |x: &Multivector| -> Result<(Multivector, f64)> {
        match classify(x)?.kind {
            GeomKind::Proper => Ok((x.normalize()?, 1.0)),
            GeomKind::Null => Ok((*x, 0.0)),
            GeomKind::Improper => Err(Error::NullOrImproperInput),
        }
    };
    let (q, q_norm) = prepare(&q)?;
    let (r, r_norm) = prepare(&r)?;
    let (degenerate, vol) = collinear(&p, &q, &r)?;
    if degenerate {
        return Ok(0.0);
    }
    let side_q = p.join(&q)?.normalize()?;
    let side_r = p.join(&r)?.normalize()?;
    let residual = side_q.inner(&side_r)?.to_scalar()?.abs();
    if residual > tol::INCIDENCE_RELATIVE {
        return Err(Error::NotRightAngled { residual });
    }
    let denom = q_norm * r_norm + q.inner(&r)?.to_scalar()?.abs();
    Ok((vol / denom).min(1.0).asin())
}

/// Area `gamma - alpha - beta` of a proper triangle of H2.
///
/// The edges `r = P v Q`, `q = P v R`, `p = R v Q` are built from positively
/// weighted normalised vertices and the three angles come from their inner
/// products; the result equals `pi` minus the interior angle sum.
pub fn general_triangle_area(p: &Multivector, q: &Multivector, r: &Multivector) -> Result<f64> {
    same_space(p, q)?;
    same_space(p, r)?;
    let orient = |x: &Multivector| -> Result<Multivector> {
        let x = h2_point(x)?;
        if classify(&x)?.kind != GeomKind::Proper {
            return Err(Error::NullOrImproperInput);
        }
        let x = x.normalize()?;
        Ok(if x.get("e12") < 0.0 { -x } else { x })
    };
    let (p, q, r) = (orient(p)?, orient(q)?, orient(r)?);
    if collinear(&p, &q, &r)?.0 {
        return Err(Error::DegenerateTriangle);
    }
    let edge = |x: &Multivector, y: &Multivector| x.join(y)?.normalize().map_err(|_| Error::DegenerateTriangle);
    let (er, eq, ep) = (edge(&p, &q)?, edge(&p, &r)?, edge(&r, &q)?);
    let cos = |x: &Multivector, y: &Multivector| -> Result<f64> { Ok(x.inner(y)?.to_scalar()?.clamp(-1.0, 1.0)) };
    let alpha = cos(&er, &eq)?.acos();
    let beta = cos(&er, &ep)?.acos();
    let gamma = cos(&eq, &ep)?.acos();
    Ok(gamma - alpha - beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::geometry::{origin, point};
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn ideal_right_triangle_is_half_pi() {
        let h2 = Algebra::h2();
        let q = point(h2, &[1.0, 0.0], 1.0);
        let r = point(h2, &[0.0, 1.0], 1.0);
        assert!((right_triangle_area(&origin(h2), &q, &r).unwrap() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn formulas_agree_on_right_triangle() {
        let h2 = Algebra::h2();
        let (p, q, r) = (origin(h2), point(h2, &[0.5, 0.0], 1.0), point(h2, &[0.0, 0.5], 1.0));
        let a = right_triangle_area(&p, &q, &r).unwrap();
        let b = general_triangle_area(&p, &q, &r).unwrap();
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        // hyperbolic Pythagoras: cosh c = cosh a cosh b, area from the angle sum
        assert!(a > 0.0 && a < FRAC_PI_2);
    }

    #[test]
    fn degenerate_cases() {
        let h2 = Algebra::h2();
        let q = point(h2, &[0.5, 0.0], 1.0);
        assert_eq!(right_triangle_area(&origin(h2), &q, &q).unwrap(), 0.0);
        let r = point(h2, &[-0.5, 0.0], 1.0);
        assert_eq!(general_triangle_area(&origin(h2), &q, &r), Err(Error::DegenerateTriangle));
        let skewed = point(h2, &[0.3, 0.4], 1.0);
        assert!(matches!(right_triangle_area(&origin(h2), &q, &skewed), Err(Error::NotRightAngled { .. })));
        let null = point(h2, &[1.0, 0.0], 1.0);
        assert_eq!(right_triangle_area(&null, &q, &r), Err(Error::NullVertexAtP));
    }

    #[test]
    fn near_ideal_and_tiny() {
        let h2 = Algebra::h2();
        let at = |rad: f64| move |t: f64| point(h2, &[rad * t.cos(), rad * t.sin()], 1.0);
        // Klein radius 1 - 1e-6: each angle is still of order sqrt(1e-6)
        let corner = at(1.0 - 1e-6);
        let s = general_triangle_area(&corner(0.1), &corner(2.2), &corner(4.0)).unwrap();
        assert!((s - 3.136_598_614_219_9).abs() < 1e-9, "{s}");
        let far = at(1.0 - 1e-8);
        let ideal = general_triangle_area(&far(0.1), &far(2.2), &far(4.0)).unwrap();
        assert!((ideal - PI).abs() < 1e-3, "{ideal}");
        let tiny = general_triangle_area(&origin(h2), &point(h2, &[1e-2, 0.0], 1.0), &point(h2, &[0.0, 1e-2], 1.0))
            .unwrap();
        assert!(tiny.abs() < 1e-4);
        // orientation of the vertex list does not matter
        let flipped = general_triangle_area(&corner(0.1), &corner(4.0), &corner(2.2)).unwrap();
        assert!((flipped - s).abs() < 1e-9);
    }
}
