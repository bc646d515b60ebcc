use serde::Serialize;

use super::expect_grade;
use crate::algebra::{Algebra, Space};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

/// Blade names carrying the chart coordinates of a point, by space.
fn coordinate_blades(space: Space) -> &'static [&'static str] {
    match space {
        Space::H1 => &["e0"],
        Space::H2 => &["e20", "e01"],
        Space::H3 => &["e320", "e130", "e210"],
    }
}

/// Point of H1 at signed distance `phi` from the origin: `-sinh(phi) e0 + cosh(phi) e1`.
pub fn point_h1(alg: &'static Algebra, phi: f64) -> Multivector {
    assert_eq!(alg.space(), Space::H1, "point_h1 needs the H1 algebra");
    Multivector::from_terms(alg, &[(-phi.sinh(), "e0"), (phi.cosh(), "e1")])
}

/// The origin `e1`, `e12` or `e123`.
pub fn origin(alg: &'static Algebra) -> Multivector {
    Multivector::basis(alg, alg.origin_index())
}

/// Point with chart coordinates `coords` (length `d`) and the given weight.
///
/// In H1 the chart coordinate `x` sits at `-x e0`, so `point(h1, &[x], 1.0)`
/// is `-x e0 + e1`.
pub fn point(alg: &'static Algebra, coords: &[f64], weight: f64) -> Multivector {
    let names = coordinate_blades(alg.space());
    assert_eq!(coords.len(), names.len(), "{} points have {} coordinates", alg.space(), names.len());
    let sign = if alg.space() == Space::H1 { -1.0 } else { 1.0 };
    let mut p = origin(alg);
    for (&x, name) in coords.iter().zip(names) {
        p += Multivector::blade(alg, name) * (sign * x);
    }
    p * weight
}

/// `d e0 + a e1 + b e2`.
pub fn line_h2(alg: &'static Algebra, d: f64, a: f64, b: f64) -> Multivector {
    assert_eq!(alg.space(), Space::H2, "line_h2 needs the H2 algebra");
    Multivector::from_terms(alg, &[(d, "e0"), (a, "e1"), (b, "e2")])
}

/// `d e0 + a e1 + b e2 + c e3`.
pub fn plane_h3(alg: &'static Algebra, d: f64, a: f64, b: f64, c: f64) -> Multivector {
    assert_eq!(alg.space(), Space::H3, "plane_h3 needs the H3 algebra");
    Multivector::from_terms(alg, &[(d, "e0"), (a, "e1"), (b, "e2"), (c, "e3")])
}

/// Line from Pluecker coordinates `[p10, p20, p30, p23, p31, p12]`.
///
/// Rejects coordinates with `p10 p23 + p20 p31 + p30 p12` above `1e-9`
/// relative to the squared coefficient scale.
pub fn line_h3(alg: &'static Algebra, p: [f64; 6]) -> Result<Multivector> {
    if alg.space() != Space::H3 {
        return Err(Error::UnsupportedSpace { op: "line_h3", space: alg.space() });
    }
    let residual = p[0] * p[3] + p[1] * p[4] + p[2] * p[5];
    let scale = p.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if residual.abs() > tol::PLUECKER_RELATIVE * scale * scale {
        return Err(Error::PlueckerViolation { residual });
    }
    let names = ["e10", "e20", "e30", "e23", "e31", "e12"];
    Ok(names.iter().zip(p).fold(Multivector::zero(alg), |acc, (n, x)| acc + Multivector::blade(alg, n) * x))
}

/// Line (H2) or line/plane (H3) through two or three points: `P v Q`.
pub fn line_join(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    p.join(q)
}

/// Klein chart coordinates of a point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChartPoint {
    pub coords: Vec<f64>,
    /// Coefficient of the origin blade that was divided out.
    pub weight: f64,
}

impl ChartPoint {
    pub fn radius_squared(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }
}

/// Chart coordinates `(x[, y[, z]])` obtained by dividing out the weight.
///
/// Fails with `WeightVanishes` when the weight is below `1e-12` relative to
/// the largest coefficient (a point at infinity of the chart).
pub fn chart(p: &Multivector) -> Result<ChartPoint> {
    let alg = p.algebra();
    let p = expect_grade(p, alg.point_grade())?;
    let weight = p.coeff(alg.origin_index());
    if weight.abs() <= tol::WEIGHT_FLOOR * p.max_abs() || weight == 0.0 {
        return Err(Error::WeightVanishes { weight });
    }
    let sign = if alg.space() == Space::H1 { -1.0 } else { 1.0 };
    let coords = coordinate_blades(alg.space()).iter().map(|n| sign * p.get(n) / weight).collect();
    Ok(ChartPoint { coords, weight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{classify, GeomKind};

    #[test]
    fn h1_parameterisation() {
        let h1 = Algebra::h1();
        assert_eq!(point_h1(h1, 0.0), Multivector::blade(h1, "e1"));
        let a = point_h1(h1, 1.0);
        assert!((chart(&a).unwrap().coords[0] - 1f64.tanh()).abs() < 1e-15);
        assert!((a.norm_squared() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn point_coordinates_round_trip() {
        let h2 = Algebra::h2();
        let p = point(h2, &[1.0 / 3.0, -0.5], 1.0);
        assert_eq!(p, Multivector::from_terms(h2, &[(1.0, "e12"), (1.0 / 3.0, "e20"), (-0.5, "e01")]));
        let c = chart(&(p * -2.0)).unwrap();
        assert_eq!(c.coords, vec![1.0 / 3.0, -0.5]);
        assert_eq!(c.weight, -2.0);
        let q = point(Algebra::h3(), &[0.1, 0.2, 0.3], 1.0);
        assert_eq!(chart(&q).unwrap().coords, vec![0.1, 0.2, 0.3]);
        assert_eq!(chart(&point(Algebra::h1(), &[0.25], 1.0)).unwrap().coords, vec![0.25]);
    }

    #[test]
    fn chart_at_infinity() {
        let h2 = Algebra::h2();
        let ideal = Multivector::from_terms(h2, &[(1.0, "e20")]);
        assert!(matches!(chart(&ideal), Err(Error::WeightVanishes { .. })));
    }

    #[test]
    fn pluecker_condition() {
        let h3 = Algebra::h3();
        assert!(line_h3(h3, [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]).is_ok());
        assert!(matches!(line_h3(h3, [1.0, 0.0, 0.0, 1.0, 0.0, 0.0]), Err(Error::PlueckerViolation { .. })));
    }

    #[test]
    fn join_of_points_is_a_proper_line() {
        let h2 = Algebra::h2();
        let l = line_join(&point(h2, &[0.1, 0.2], 1.0), &point(h2, &[-0.3, 0.5], 1.0)).unwrap();
        assert_eq!(classify(&l).unwrap().kind, GeomKind::Proper);
        let h3 = Algebra::h3();
        let m = line_join(&point(h3, &[0.1, 0.2, 0.0], 1.0), &point(h3, &[0.0, -0.3, 0.5], 1.0)).unwrap();
        assert_eq!(classify(&m).unwrap().kind, GeomKind::Proper);
        assert!(crate::exp::is_simple_bivector(&m));
    }
}
