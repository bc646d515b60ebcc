mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::*;
use hypga::exp::{is_simple_bivector, split_bivector};
use hypga::geometry::{
    axes, classify, distance, distance_point_line_h2, general_triangle_area, meet_intersecting_lines, polar,
    right_triangle_area, skew_lines_gap,
};
use hypga::{Algebra, GeomKind, Multivector, Space, Spinor};
use proptest::prelude::*;

/// `a = k b` for some scalar `k`, up to `tol` relative to `a`.
fn proportional(a: &Multivector, b: &Multivector, tol: f64) -> bool {
    let dot: f64 = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x * y).sum();
    let bb: f64 = b.coeffs().iter().map(|y| y * y).sum();
    if bb == 0.0 {
        return a.max_abs() <= tol;
    }
    a.max_abs_diff(&(*b * (dot / bb))) <= tol * a.max_abs().max(1e-300)
}

fn proper_line_h3() -> impl Strategy<Value = Multivector> {
    let h3 = Algebra::h3();
    (proper_point(h3), proper_point(h3))
        .prop_filter("distinct", |(p, q)| p.max_abs_diff(q) > 1e-2)
        .prop_map(|(p, q)| p.join(&q).unwrap().normalize().unwrap())
}

fn right_triangle() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    let h2 = Algebra::h2();
    (proper_point(h2), proper_point(h2), -3.0..3.0f64)
        .prop_filter("distinct", |(p, q, _)| distance(p, q).unwrap() > 1e-2)
        .prop_filter_map("proper third vertex", |(p, q, t)| {
            let on_pq = p + q * t;
            if classify(&on_pq).ok()?.kind != GeomKind::Proper || distance(&p, &on_pq).ok()? < 1e-2 {
                return None;
            }
            let r = Spinor::rotation_h2(&p, FRAC_PI_2).ok()?.apply(&on_pq).ok()?;
            Some((p, q, r))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn point_pair_identity(
        (a, b) in prop_oneof![Just(Space::H1), Just(Space::H2)]
            .prop_flat_map(|s| (proper_point(Algebra::get(s)), proper_point(Algebra::get(s))))
    ) {
        let dot = a.inner(&b).unwrap().to_scalar().unwrap();
        let join = a.join(&b).unwrap().pseudo_norm();
        prop_assert!(close(dot * dot - join * join, 1.0, 1e-10));
    }

    #[test]
    fn line_point_identity(a in proper_line_h2(), p in proper_point(Algebra::h2())) {
        let cosh = a.inner(&p).unwrap().pseudo_norm();
        let sinh = a.join(&p).unwrap().to_scalar().unwrap();
        prop_assert!(close(cosh * cosh - sinh * sinh, 1.0, 1e-10));
        let r = distance_point_line_h2(&a, &p).unwrap();
        prop_assert!((r.sinh() - sinh.abs()).abs() < 1e-10 * r.cosh());
    }

    #[test]
    fn polarity_swaps_proper_and_improper(
        a in space().prop_flat_map(|s| {
            let alg = Algebra::get(s);
            (1..=alg.dim()).prop_flat_map(move |k| graded(alg, k))
        })
    ) {
        let before = classify(&a).unwrap().kind;
        let after = classify(&polar(&a)).unwrap().kind;
        let expected = match before {
            GeomKind::Proper => GeomKind::Improper,
            GeomKind::Improper => GeomKind::Proper,
            GeomKind::Null => GeomKind::Null,
        };
        prop_assert_eq!(after, expected);
    }

    #[test]
    fn perpendicular_passes_through_polar(a in proper_line_h2(), p in proper_point(Algebra::h2())) {
        let perp = a.inner(&p).unwrap();
        prop_assert!(perp.join(&polar(&a)).unwrap().max_abs() < 1e-12);
        prop_assert!(perp.join(&p).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn commutator_of_points_is_polar_of_their_line(p in proper_point(Algebra::h2()), q in proper_point(Algebra::h2())) {
        let cross = p.commutator(&q).unwrap();
        let line = p.join(&q).unwrap();
        prop_assert!(proportional(&cross, &polar(&line), 1e-10));
    }

    #[test]
    fn axes_of_random_bivectors(l in bivector(Algebra::h3(), 2.0).prop_filter("non-simple", |l| !is_simple_bivector(l))) {
        let (l1, l2) = axes(&l).unwrap();
        let i = Multivector::pseudoscalar(l.algebra());
        prop_assert!((l1 + l2).max_abs_diff(&l) < 1e-10);
        prop_assert!(l1.wedge(&l1).unwrap().max_abs() < 1e-10);
        prop_assert!(l2.wedge(&l2).unwrap().max_abs() < 1e-10);
        prop_assert!(l1.commutator(&l2).unwrap().max_abs() < 1e-10);
        prop_assert!((l1 * l1).scalar_part() < 0.0 && (l2 * l2).scalar_part() > 0.0);
        let sign = -l.join(&l).unwrap().to_scalar().unwrap().signum();
        let rule = l1.normalize().unwrap() * i * sign;
        prop_assert!(l2.normalize().unwrap().max_abs_diff(&rule) < 1e-10);
        prop_assert_eq!(split_bivector(&l).unwrap(), (l1, l2));
    }

    #[test]
    fn skew_line_distance(l in proper_line_h3(), k in proper_line_h3()) {
        let v = l.join(&k).unwrap().to_scalar().unwrap();
        prop_assume!(v.abs() > 1e-3);
        let gap = skew_lines_gap(&l, &k).unwrap();
        let q1 = meet_intersecting_lines(&gap.proper_axis, &l).unwrap();
        let p1 = meet_intersecting_lines(&gap.proper_axis, &k).unwrap();
        prop_assert!((gap.distance - distance(&q1, &p1).unwrap()).abs() < 1e-8);
        let u = l.inner(&k).unwrap().to_scalar().unwrap();
        prop_assert!((gap.angle.cos() + u / gap.distance.cosh()).abs() < 1e-9);
        prop_assert!((gap.distance.sinh() * gap.angle.sin() - v.abs()).abs() < 1e-9);
    }

    #[test]
    fn right_triangle_formulas_agree((p, q, r) in right_triangle()) {
        let right = right_triangle_area(&p, &q, &r).unwrap();
        let general = general_triangle_area(&p, &q, &r).unwrap();
        prop_assert!((right - general).abs() < 1e-9, "{} vs {}", right, general);
        prop_assert!(right <= FRAC_PI_2 + 1e-9);
        prop_assert!(general > 0.0 && general < PI);
    }

    #[test]
    fn measurements_survive_motions(
        s in bivector(Algebra::h2(), 1.5).prop_map(|b| Spinor::from_generator(&b).unwrap()),
        p in proper_point(Algebra::h2()),
        q in proper_point(Algebra::h2()),
        a in proper_line_h2(),
    ) {
        let m = |x: &Multivector| s.apply(x).unwrap();
        prop_assert!((distance(&p, &q).unwrap() - distance(&m(&p), &m(&q)).unwrap()).abs() < 1e-9);
        prop_assert!((distance_point_line_h2(&a, &p).unwrap() - distance_point_line_h2(&m(&a), &m(&p)).unwrap()).abs() < 1e-9);
        prop_assert_eq!(classify(&m(&a)).unwrap().kind, GeomKind::Proper);
    }
}
