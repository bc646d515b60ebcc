//! Acceptance run: criteria 1 to 11, one PASS/FAIL line each.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::{Command, ExitCode};
use std::time::Instant;

use hypga::exp::is_simple_bivector;
use hypga::geometry::{
    angle, axes, classify, distance, distance_point_line_h2, general_triangle_area, line_line_gap_h2,
    meet_intersecting_lines, point, point_h1, polar, right_triangle_area, skew_lines_gap,
};
use hypga::oracle::MatrixRep;
use hypga::repro::Provenance;
use hypga::{Algebra, GeomKind, Multivector, Space, Spinor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_mv(rng: &mut ChaCha8Rng, alg: &'static Algebra, scale: f64) -> Multivector {
    let c: Vec<f64> = (0..alg.size()).map(|_| rng.random_range(-scale..scale)).collect();
    Multivector::from_coeffs(alg, &c)
}

/// Normalized proper point with chart radius below `r` (H1: parameter in `[-r, r]`).
fn random_point(rng: &mut ChaCha8Rng, alg: &'static Algebra, r: f64) -> Multivector {
    if alg.space() == Space::H1 {
        return point_h1(alg, rng.random_range(-r..r));
    }
    loop {
        let c: Vec<f64> = (0..alg.dim()).map(|_| rng.random_range(-r..r)).collect();
        if c.iter().map(|x| x * x).sum::<f64>() < r * r {
            return point(alg, &c, 1.0).normalize().unwrap();
        }
    }
}

fn random_line_h3(rng: &mut ChaCha8Rng) -> Multivector {
    let h3 = Algebra::h3();
    loop {
        let (p, q) = (random_point(rng, h3, 0.9), random_point(rng, h3, 0.9));
        if p.max_abs_diff(&q) > 1e-2 {
            return p.join(&q).unwrap().normalize().unwrap();
        }
    }
}

fn scalar(m: Multivector) -> f64 {
    m.to_scalar().unwrap()
}

fn c1_h1_distance() -> Outcome {
    let h1 = Algebra::h1();
    let (a, b) = (point_h1(h1, 1.0), point_h1(h1, -0.5));
    let start = Instant::now();
    let r = distance(&a, &b).unwrap();
    let elapsed = start.elapsed();
    let err = (r - 1.5).abs();
    outcome(err <= 1e-12 && elapsed.as_secs_f64() < 1e-3, format!("r = {r}, |r - 3/2| = {err:.1e}, {elapsed:?}"))
}

fn c2_fig2a() -> Outcome {
    let h2 = Algebra::h2();
    let a = Multivector::from_terms(h2, &[(-1.5, "e0"), (3.0, "e1"), (0.5, "e2")]);
    let b = Multivector::from_terms(h2, &[(0.5, "e0"), (1.0, "e1"), (0.5, "e2")]);
    let m = a.wedge(&b).unwrap();
    let want_m = Multivector::from_terms(h2, &[(1.0, "e12"), (1.0, "e20"), (-3.0, "e01")]);
    let gap = line_line_gap_h2(&a, &b).unwrap();
    let want_c = Multivector::from_terms(h2, &[(-1.0 / 3.0, "e0"), (1.0 / 3.0, "e1"), (-1.0, "e2")]);
    let cosh_lines = scalar(a.inner(&b).unwrap()).abs() / (a.pseudo_norm() * b.pseudo_norm());
    let cosh_feet = distance(&gap.foot_a, &gap.foot_b).unwrap().cosh();
    let (em, ec, ed) = (m.max_abs_diff(&want_m), gap.perpendicular.max_abs_diff(&want_c), (cosh_lines - cosh_feet).abs());
    outcome(em <= 1e-12 && ec <= 1e-12 && ed <= 1e-9, format!("a^b err {em:.1e}, c err {ec:.1e}, cosh r mismatch {ed:.1e}"))
}

fn c3_fig3a() -> Outcome {
    let h2 = Algebra::h2();
    let a = Multivector::from_terms(h2, &[(-0.5, "e0"), (1.0, "e1"), (0.5, "e2")]);
    let p = Multivector::from_terms(h2, &[(1.0, "e12"), (-0.5, "e20"), (1.0 / 3.0, "e01")]);
    let r = distance_point_line_h2(&a, &p).unwrap();
    let err = (r.sinh() - (5.0 / 6.0) / (23f64.sqrt() / 6.0)).abs();
    let exact = polar(&a) == Multivector::from_terms(h2, &[(0.5, "e12"), (1.0, "e20"), (0.5, "e01")]);
    outcome(err <= 1e-12 && exact, format!("sinh r err {err:.1e}, polar exact: {exact}"))
}

fn c4_null_translation() -> Outcome {
    let h2 = Algebra::h2();
    let k = 1.0 / 5f64.sqrt();
    let n = Multivector::from_terms(h2, &[(1.0, "e12"), (-2.0 * k, "e20"), (-k, "e01")]);
    let p = Multivector::from_terms(h2, &[(1.0, "e12"), (1.0 / 3.0, "e20"), (-0.5, "e01")]);
    let theta = 1.0;
    let s = Spinor::null_translation_h2(&n, theta).unwrap();
    let expansion = p + p.commutator(&n).unwrap() * theta - n * p * n * (0.25 * theta * theta);
    let err = s.apply(&p).unwrap().max_abs_diff(&expansion);
    outcome(err <= 1e-14, format!("max deviation {err:.1e}"))
}

/// Random object of the given grade whose class is clear of the null threshold.
fn clear_object(rng: &mut ChaCha8Rng, alg: &'static Algebra, grade: usize) -> Multivector {
    loop {
        let m = random_mv(rng, alg, 1.0).grade(grade);
        let c = classify(&m).unwrap();
        if c.discriminant.abs() > 1e-3 * m.max_abs() * m.max_abs() {
            return m;
        }
    }
}

fn c5_invariance() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut class_flips = 0;
    let mut actions = 0;
    for (seed, space) in [Space::H1, Space::H2, Space::H3].into_iter().enumerate() {
        let alg = Algebra::get(space);
        let mut rng = rng(50 + seed as u64);
        for _ in 0..1000 {
            let s = Spinor::from_generator(&random_mv(&mut rng, alg, 0.7).grade(2)).unwrap();
            let m = |x: &Multivector| s.apply(x).unwrap();
            let (p, q) = (random_point(&mut rng, alg, 0.8), random_point(&mut rng, alg, 0.8));
            worst = worst.max((distance(&p, &q).unwrap() - distance(&m(&p), &m(&q)).unwrap()).abs());
            if space != Space::H1 {
                // two lines (H2) or planes (H3) through a common proper point
                let c = random_point(&mut rng, alg, 0.8);
                let mut through = |c: &Multivector| {
                    let mut x = *c;
                    for _ in 1..alg.dim() {
                        x = x.join(&random_point(&mut rng, alg, 0.8)).unwrap();
                    }
                    x.normalize().unwrap()
                };
                let (u, v) = (through(&c), through(&c));
                worst = worst.max((angle(&u, &v).unwrap() - angle(&m(&u), &m(&v)).unwrap()).abs());
            }
            for grade in 1..=alg.dim() {
                let x = clear_object(&mut rng, alg, grade);
                if classify(&x).unwrap().kind != classify(&m(&x)).unwrap().kind {
                    class_flips += 1;
                }
            }
            actions += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-9 && class_flips == 0 && elapsed.as_secs_f64() < 10.0,
        format!("{actions} actions, max measurement drift {worst:.1e}, class changes {class_flips}, {elapsed:.2?}"),
    )
}

fn c6_identities() -> Outcome {
    let mut rng = rng(6);
    let mut worst: f64 = 0.0;
    for space in [Space::H1, Space::H2] {
        let alg = Algebra::get(space);
        for _ in 0..10_000 {
            let (a, b) = (random_point(&mut rng, alg, if space == Space::H1 { 2.0 } else { 0.9 }), random_point(&mut rng, alg, 0.9));
            let (dot, join) = (scalar(a.inner(&b).unwrap()), a.join(&b).unwrap().pseudo_norm());
            worst = worst.max((dot * dot - join * join - 1.0).abs());
        }
    }
    let h2 = Algebra::h2();
    for _ in 0..10_000 {
        let line = loop {
            let (p, q) = (random_point(&mut rng, h2, 0.9), random_point(&mut rng, h2, 0.9));
            if p.max_abs_diff(&q) > 1e-2 {
                break p.join(&q).unwrap().normalize().unwrap();
            }
        };
        let p = random_point(&mut rng, h2, 0.9);
        let (cosh, sinh) = (line.inner(&p).unwrap().pseudo_norm(), scalar(line.join(&p).unwrap()));
        worst = worst.max((cosh * cosh - sinh * sinh - 1.0).abs());
    }
    outcome(worst <= 1e-10, format!("3 x 10000 cases, max |identity - 1| = {worst:.1e}"))
}

fn c7_axes() -> Outcome {
    let h3 = Algebra::h3();
    let i = Multivector::pseudoscalar(h3);
    let mut rng = rng(7);
    let mut worst: f64 = 0.0;
    let mut order_failures = 0;
    let mut count = 0;
    while count < 1000 {
        let l = random_mv(&mut rng, h3, 1.0).grade(2);
        if is_simple_bivector(&l) {
            continue;
        }
        count += 1;
        let (l1, l2) = axes(&l).unwrap();
        let (s1, s2) = ((l1 * l1).scalar_part(), (l2 * l2).scalar_part());
        if !(s1 < 0.0 && 0.0 < s2) {
            order_failures += 1;
        }
        let sign = -scalar(l.join(&l).unwrap()).signum();
        let rule = l2.normalize().unwrap().max_abs_diff(&(l1.normalize().unwrap() * i * sign));
        for e in [
            (l1 + l2).max_abs_diff(&l),
            l1.wedge(&l1).unwrap().max_abs(),
            l2.wedge(&l2).unwrap().max_abs(),
            l1.commutator(&l2).unwrap().max_abs(),
            rule,
        ] {
            worst = worst.max(e);
        }
    }
    outcome(worst <= 1e-10 && order_failures == 0, format!("{count} bivectors, max residual {worst:.1e}, square-order failures {order_failures}"))
}

fn c8_skew() -> Outcome {
    let mut rng = rng(8);
    let (mut worst_r, mut worst_a): (f64, f64) = (0.0, 0.0);
    let mut count = 0;
    while count < 500 {
        let (l, k) = (random_line_h3(&mut rng), random_line_h3(&mut rng));
        let v = scalar(l.join(&k).unwrap());
        if v.abs() < 1e-3 {
            continue;
        }
        count += 1;
        let gap = skew_lines_gap(&l, &k).unwrap();
        let q1 = meet_intersecting_lines(&gap.proper_axis, &l).unwrap();
        let p1 = meet_intersecting_lines(&gap.proper_axis, &k).unwrap();
        worst_r = worst_r.max((gap.distance - distance(&q1, &p1).unwrap()).abs());
        let u = scalar(l.inner(&k).unwrap());
        worst_a = worst_a.max((gap.angle.cos() + u / gap.distance.cosh()).abs());
    }
    outcome(worst_r <= 1e-8 && worst_a <= 1e-9, format!("{count} pairs, r vs feet {worst_r:.1e}, cos alpha residual {worst_a:.1e}"))
}

fn c9_triangles() -> Outcome {
    let h2 = Algebra::h2();
    let mut rng = rng(9);
    let (mut worst, mut max_right): (f64, f64) = (0.0, 0.0);
    let mut count = 0;
    while count < 500 {
        let (p, q) = (random_point(&mut rng, h2, 0.85), random_point(&mut rng, h2, 0.85));
        let on_pq = p + q * rng.random_range(-3.0..3.0);
        if distance(&p, &q).unwrap() < 1e-2
            || classify(&on_pq).unwrap().kind != GeomKind::Proper
            || distance(&p, &on_pq).unwrap() < 1e-2
        {
            continue;
        }
        count += 1;
        let r = Spinor::rotation_h2(&p, FRAC_PI_2).unwrap().apply(&on_pq).unwrap();
        let right = right_triangle_area(&p, &q, &r).unwrap();
        let general = general_triangle_area(&p, &q, &r).unwrap();
        worst = worst.max((right - general).abs());
        max_right = max_right.max(right);
    }
    let rad = 1.0 - 1e-6;
    let corner = |t: f64| point(h2, &[rad * t.cos(), rad * t.sin()], 1.0);
    let ideal = general_triangle_area(&corner(0.1), &corner(2.2), &corner(4.0)).unwrap();
    let ideal_gap = (ideal - PI).abs();
    let parts = [worst <= 1e-9, ideal_gap <= 1e-3, max_right <= FRAC_PI_2 + 1e-9];
    outcome(
        parts.iter().all(|&x| x),
        format!(
            "{count} right triangles, formula gap {worst:.1e} [{}]; near-ideal at chart radius 1-1e-6: |S - pi| = {ideal_gap:.3e} [{}]; max right area - pi/2 = {:.1e} [{}]",
            tag(parts[0]),
            tag(parts[1]),
            max_right - FRAC_PI_2,
            tag(parts[2])
        ),
    )
}

fn c10_oracle() -> Outcome {
    let mut rng = rng(10);
    let (mut worst_p, mut worst_e): (f64, f64) = (0.0, 0.0);
    let mut table_exact = true;
    for space in [Space::H1, Space::H2, Space::H3] {
        let alg = Algebra::get(space);
        let rep = MatrixRep::for_space(space);
        for i in 0..alg.size() {
            for j in 0..alg.size() {
                let (a, b) = (Multivector::basis(alg, i), Multivector::basis(alg, j));
                table_exact &= (a * b).coeffs() == rep.product(a.coeffs(), b.coeffs()).as_slice();
            }
        }
        for _ in 0..10_000 {
            let (a, b) = (random_mv(&mut rng, alg, 1.0), random_mv(&mut rng, alg, 1.0));
            let oracle = Multivector::from_coeffs(alg, &rep.product(a.coeffs(), b.coeffs()));
            worst_p = worst_p.max((a * b).max_abs_diff(&oracle));
            let mut bv = random_mv(&mut rng, alg, 2.0).grade(2);
            let norm = bv.coeffs().iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 5.0 {
                bv = bv * (5.0 / norm);
            }
            let series = Multivector::from_coeffs(alg, &rep.exp(bv.coeffs(), 40));
            worst_e = worst_e.max(bv.exp_bivector().unwrap().max_abs_diff(&series));
        }
    }
    outcome(
        worst_p <= 1e-10 && worst_e <= 1e-10 && table_exact,
        format!("3 x 10000 cases, product {worst_p:.1e}, exp {worst_e:.1e}, blade table exact: {table_exact}"),
    )
}

fn c11_repro(started: Instant) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_hypga")).args(["repro", "all"]).output().expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let tags = [Provenance::Reference, Provenance::Derived, Provenance::Trivial].map(Provenance::tag);
    let check_rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  ") && l.split_whitespace().count() > 1)
        .filter(|l| l.ends_with(" PASS") || l.ends_with(" FAIL"))
        .collect();
    let untagged = check_rows.iter().filter(|l| !l.split_whitespace().any(|w| tags.contains(&w))).count();
    let elapsed = started.elapsed();
    outcome(
        out.status.success() && !check_rows.is_empty() && untagged == 0 && elapsed.as_secs_f64() < 60.0,
        format!(
            "exit {:?}, {} checks, {untagged} without provenance, acceptance run {elapsed:.2?}",
            out.status.code(),
            check_rows.len()
        ),
    )
}

fn tag(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let criteria: [Criterion; 10] = [
        ("H1 distance", c1_h1_distance),
        ("hyperparallel lines and common perpendicular", c2_fig2a),
        ("point-line distance and polar", c3_fig3a),
        ("null translation exactness", c4_null_translation),
        ("invariance under motions", c5_invariance),
        ("distance identities", c6_identities),
        ("axis decomposition", c7_axes),
        ("skew-line distance", c8_skew),
        ("triangle areas", c9_triangles),
        ("oracle equivalence", c10_oracle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} criterion {:>2} {name}: {}", tag(o.pass), i + 1, o.detail);
    }
    let o = c11_repro(started);
    failed += usize::from(!o.pass);
    println!("{} criterion 11 repro all: {}", tag(o.pass), o.detail);
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
