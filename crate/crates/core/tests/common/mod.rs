#![allow(dead_code)]

use hypga::geometry::{point, point_h1};
use hypga::{Algebra, Multivector, Space};
use proptest::prelude::*;

pub const SPACES: [Space; 3] = [Space::H1, Space::H2, Space::H3];

pub fn space() -> impl Strategy<Value = Space> {
    prop::sample::select(SPACES.to_vec())
}

pub fn mv_in(alg: &'static Algebra, scale: f64) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-scale..scale, alg.size()).prop_map(move |c| Multivector::from_coeffs(alg, &c))
}

/// Random homogeneous element of grade `k`.
pub fn graded(alg: &'static Algebra, k: usize) -> impl Strategy<Value = Multivector> {
    mv_in(alg, 2.0).prop_map(move |m| m.grade(k))
}

pub fn bivector(alg: &'static Algebra, scale: f64) -> impl Strategy<Value = Multivector> {
    mv_in(alg, scale).prop_map(|m| m.grade(2))
}

/// Chart coordinates strictly inside the ball of radius `r`.
pub fn inside(dim: usize, r: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-r..r, dim).prop_filter("inside ball", move |c| c.iter().map(|x| x * x).sum::<f64>() < r * r)
}

/// Proper point, normalized; H1 points come from their parameter.
pub fn proper_point(alg: &'static Algebra) -> BoxedStrategy<Multivector> {
    if alg.space() == Space::H1 {
        (-3.0..3.0f64).prop_map(move |phi| point_h1(alg, phi)).boxed()
    } else {
        inside(alg.dim(), 0.9).prop_map(move |c| point(alg, &c, 1.0).normalize().unwrap()).boxed()
    }
}

/// Point outside the closed disk or ball.
pub fn improper_point(alg: &'static Algebra) -> BoxedStrategy<Multivector> {
    let d = alg.dim();
    prop::collection::vec(-3.0..3.0f64, d)
        .prop_filter("outside", |c| c.iter().map(|x| x * x).sum::<f64>() > 1.2)
        .prop_map(move |c| point(alg, &c, 1.0))
        .boxed()
}

/// Normalized proper line of H2 through two proper points.
pub fn proper_line_h2() -> impl Strategy<Value = Multivector> {
    let h2 = Algebra::h2();
    (proper_point(h2), proper_point(h2))
        .prop_filter("distinct", |(p, q)| p.max_abs_diff(q) > 1e-2)
        .prop_map(|(p, q)| p.join(&q).unwrap().normalize().unwrap())
}

/// Spinor value `exp(B)` for a moderate random bivector.
pub fn spinor_value(alg: &'static Algebra) -> impl Strategy<Value = Multivector> {
    bivector(alg, 0.8).prop_map(|b| b.exp_bivector().unwrap())
}

pub fn apply(s: &Multivector, a: &Multivector) -> Multivector {
    let inv = s.reverse() / s.norm_squared();
    (*s * *a * inv).grades(a.grade_mask())
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
