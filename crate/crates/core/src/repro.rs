//! Worked examples with known answers, each driven through a scene.
//!
//! Every expected value carries a [`Provenance`]: `Reference` values are the
//! published worked-example numbers, `Derived` values follow from an
//! independent identity, `Trivial` ones from construction.

use std::f64::consts::PI;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::geometry::{self, chart, distance, origin, point, point_h1};
use crate::motion::{sample_trajectory, Spinor};
use crate::multivector::Multivector;
use crate::text::{parse_scene, SceneDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Reference,
    Derived,
    Trivial,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Reference => "reference",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    /// `|computed - expected| <= tolerance`.
    Near,
    /// `computed <= expected`.
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub provenance: Provenance,
}

impl Check {
    pub fn near(name: &str, computed: f64, expected: f64, tolerance: f64, provenance: Provenance) -> Check {
        Check { name: name.into(), computed, expected, tolerance, comparison: Comparison::Near, provenance }
    }

    pub fn at_most(name: &str, computed: f64, bound: f64, provenance: Provenance) -> Check {
        Check { name: name.into(), computed, expected: bound, tolerance: 0.0, comparison: Comparison::AtMost, provenance }
    }

    pub fn passed(&self) -> bool {
        match self.comparison {
            Comparison::Near => (self.computed - self.expected).abs() <= self.tolerance,
            Comparison::AtMost => self.computed <= self.expected,
        }
    }
}

pub struct ReproCase {
    pub id: &'static str,
    pub title: &'static str,
    scene: fn() -> String,
    run: fn(&SceneDocument) -> Result<Vec<Check>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub id: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
    /// Failure that prevented the checks from running.
    pub error: Option<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }
}

impl ReproCase {
    /// The embedded scene text.
    pub fn scene(&self) -> String {
        (self.scene)()
    }

    pub fn run(&self) -> CaseReport {
        let report = |checks, error| CaseReport { id: self.id, title: self.title, checks, error };
        match parse_scene(&self.scene()) {
            Err(e) => report(Vec::new(), Some(e.to_string())),
            Ok(doc) => match (self.run)(&doc) {
                Ok(checks) => report(checks, None),
                Err(e) => report(Vec::new(), Some(format!("{}: {e}", e.kind()))),
            },
        }
    }
}

pub fn cases() -> &'static [ReproCase] {
    CASES
}

pub fn find(id: &str) -> Option<&'static ReproCase> {
    CASES.iter().find(|c| c.id == id)
}

static CASES: &[ReproCase] = &[
    ReproCase { id: "h1-distance", title: "distance between two points of H1", scene: h1_scene, run: h1_run },
    ReproCase { id: "h2-fig2a-gap", title: "hyperparallel lines and their common perpendicular", scene: fig2a_scene, run: fig2a_run },
    ReproCase { id: "h2-fig3a-pointline", title: "point-line distance and polar point", scene: fig3a_scene, run: fig3a_run },
    ReproCase { id: "h2-fig4b-translation", title: "translation generated by an improper point", scene: fig4b_scene, run: fig4b_run },
    ReproCase { id: "h2-fig5a-rotation", title: "rotation about a proper point", scene: fig5a_scene, run: fig5a_run },
    ReproCase { id: "h2-fig5b-nulltrans", title: "null translation anchored at a null point", scene: fig5b_scene, run: fig5b_run },
    ReproCase { id: "h3-fig6-skew", title: "skew lines and the axes of their commutator", scene: fig6_scene, run: fig6_run },
    ReproCase { id: "h3-fig7-screw", title: "rotation and translation about a line of H3", scene: fig7_scene, run: fig7_run },
];

fn get(doc: &SceneDocument, name: &str) -> Multivector {
    *doc.get(name).unwrap_or_else(|| panic!("embedded scene binds {name}"))
}

use Provenance::{Derived, Reference, Trivial};

fn h1_scene() -> String {
    let h1 = Algebra::h1();
    format!("space: H1\n# phi = 1 and theta = -1/2\na = {}\nb = {}\n? distance a b\n", point_h1(h1, 1.0), point_h1(h1, -0.5))
}

fn h1_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (a, b) = (get(doc, "a"), get(doc, "b"));
    Ok(vec![
        Check::near("r", distance(&a, &b)?, 1.5, 1e-12, Reference),
        Check::near("|a v b| = sinh r", a.join(&b)?.to_scalar()?.abs(), 1.5f64.sinh(), 1e-12, Derived),
        Check::near("a . b = cosh r", a.inner(&b)?.to_scalar()?, 1.5f64.cosh(), 1e-12, Derived),
        Check::near("chart x of a = tanh 1", chart(&a)?.coords[0], 1f64.tanh(), 1e-15, Reference),
    ])
}

fn fig2a_scene() -> String {
    "space: H2\na = -3/2 e0 + 3 e1 + 1/2 e2\nb = 1/2 e0 + e1 + 1/2 e2\n? wedge a b\n? line_line_gap a b\n? angle a b\n".into()
}

fn fig2a_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (a, b) = (get(doc, "a"), get(doc, "b"));
    let m = a.wedge(&b)?;
    let gap = geometry::line_line_gap_h2(&a, &b)?;
    let c = gap.perpendicular;
    let cosh_lines = a.inner(&b)?.to_scalar()?.abs() / (a.pseudo_norm() * b.pseudo_norm());
    let feet = distance(&gap.foot_a, &gap.foot_b)?;
    Ok(vec![
        Check::near("a^b e12", m.get("e12"), 1.0, 1e-12, Reference),
        Check::near("a^b e20", m.get("e20"), 1.0, 1e-12, Reference),
        Check::near("a^b e01", m.get("e01"), -3.0, 1e-12, Reference),
        Check::near("c e0", c.get("e0"), -1.0 / 3.0, 1e-12, Reference),
        Check::near("c e1", c.get("e1"), 1.0 / 3.0, 1e-12, Reference),
        Check::near("c e2", c.get("e2"), -1.0, 1e-12, Reference),
        Check::near("cosh r from lines vs feet", cosh_lines, feet.cosh(), 1e-9, Derived),
        Check::near("cosh r", gap.distance.cosh(), 4.0 / 7f64.sqrt(), 1e-12, Derived),
    ])
}

fn fig3a_scene() -> String {
    "space: H2\na = -1/2 e0 + e1 + 1/2 e2\nP = e12 - 1/2 e20 + 1/3 e01\n? distance_point_line a P\n? polar a\n".into()
}

fn fig3a_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (a, p) = (get(doc, "a"), get(doc, "P"));
    let r = geometry::distance_point_line_h2(&a, &p)?;
    let polar = geometry::polar(&a);
    Ok(vec![
        Check::near("sinh r", r.sinh(), (5.0 / 6.0) / (23f64.sqrt() / 6.0), 1e-12, Reference),
        Check::near("|a v P|", a.join(&p)?.to_scalar()?.abs(), 5.0 / 6.0, 1e-12, Reference),
        Check::near("||P||", p.pseudo_norm(), 23f64.sqrt() / 6.0, 1e-12, Reference),
        Check::near("aI e12", polar.get("e12"), 0.5, 0.0, Reference),
        Check::near("aI e20", polar.get("e20"), 1.0, 0.0, Reference),
        Check::near("aI e01", polar.get("e01"), 0.5, 0.0, Reference),
    ])
}

fn fig4b_scene() -> String {
    "space: H2\nT = 1/2 e12 - e20 - 1/2 e01\nP = e12 + 1/3 e20 - 1/2 e01\nlambda = 1\n? classify T\n? translate T lambda P\n"
        .into()
}

/// Largest spread of `f` over the samples.
fn spread(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    hi - lo
}

fn chart_gap(p: &Multivector, q: &Multivector) -> Result<f64> {
    let (a, b) = (chart(p)?, chart(q)?);
    Ok(a.coords.iter().zip(&b.coords).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt())
}

fn fig4b_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (t, p) = (get(doc, "T"), get(doc, "P"));
    let alg = t.algebra();
    let e12 = Multivector::blade(alg, "e12");
    let k = t.commutator(&e12)?;
    let n_plus = ((t + 1.0) * k).grade(2);
    let n_minus = ((t - 1.0) * k).grade(2);
    let axis = t.undual();
    let s = Spinor::translation_h2(&t, 1.0)?;
    let moved_axis = s.apply(&axis)?;
    let wide = sample_trajectory(&t, &p, -20.0, 20.0, 2)?;
    let (first, last) = (&wide.samples[0].object, &wide.samples[1].object);
    // each end approaches one of the two null points
    let ends = (chart_gap(last, &n_plus)?.max(chart_gap(first, &n_minus)?))
        .min(chart_gap(last, &n_minus)?.max(chart_gap(first, &n_plus)?));
    let orbit = sample_trajectory(&t, &p, -5.0, 5.0, 64)?;
    let axis_spread = spread(
        orbit.samples.iter().map(|s| geometry::distance_point_line_h2(&axis, &s.object).unwrap_or(f64::NAN)),
    );
    let null_scale = |n: &Multivector| (*n * *n).scalar_part().abs() / (n.max_abs() * n.max_abs());
    Ok(vec![
        Check::near("T^2", (t * t).to_scalar()?, 1.0, 1e-12, Derived),
        Check::near("N+ null", null_scale(&n_plus), 0.0, 1e-12, Derived),
        Check::near("N- null", null_scale(&n_minus), 0.0, 1e-12, Derived),
        Check::near("axis TI^-1 invariant", moved_axis.wedge(&axis)?.max_abs(), 0.0, 1e-12, Reference),
        Check::near("orbit ends at N+/N- (chart)", ends, 0.0, 1e-3, Derived),
        Check::near("orbit equidistant from axis", axis_spread, 0.0, 1e-9, Reference),
    ])
}

fn fig5a_scene() -> String {
    "space: H2\nR0 = 4 e12 - 2 e20 - e01\nP = e12 + 1/3 e20 - 1/2 e01\nalpha = 1.5707963267948966\n? normalize R0\n? rotate R0 alpha P\n"
        .into()
}

fn fig5a_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (r0, p) = (get(doc, "R0"), get(doc, "P"));
    let r = r0.normalize()?;
    let quarter = Spinor::rotation_h2(&r, get(doc, "alpha").to_scalar()?)?;
    let orbit = sample_trajectory(&r, &p, 0.0, 2.0 * PI, 64)?;
    let max_radius = orbit.charted().map(|(_, c)| c.radius_squared().sqrt()).fold(0.0, f64::max);
    let d0 = distance(&r, &p)?;
    let ring = spread(orbit.samples.iter().map(|s| distance(&r, &s.object).unwrap_or(f64::NAN)));
    let closed = chart_gap(&orbit.samples[0].object, &orbit.samples[63].object)?;
    Ok(vec![
        Check::near("||4e12 - 2e20 - e01||", r0.pseudo_norm(), 11f64.sqrt(), 1e-12, Reference),
        Check::near("R invariant", quarter.apply(&r)?.max_abs_diff(&r), 0.0, 1e-12, Reference),
        Check::near("quarter turn keeps distance", distance(&r, &quarter.apply(&p)?)?, d0, 1e-12, Derived),
        Check::at_most("orbit inside unit disk", max_radius, 1.0 - 1e-6, Derived),
        Check::near("orbit equidistant from R", ring, 0.0, 1e-9, Reference),
        Check::near("alpha = 2 pi closes the orbit", closed, 0.0, 1e-10, Reference),
        Check::near("no dropped samples", orbit.vanishing_count() as f64, 0.0, 0.0, Trivial),
    ])
}

fn null_point_5b() -> Multivector {
    let h2 = Algebra::h2();
    let k = 1.0 / 5f64.sqrt();
    let a = Multivector::from_terms(h2, &[(-k, "e1"), (2.0 * k, "e2")]);
    Multivector::blade(h2, "e12") + Multivector::blade(h2, "e0").wedge(&a).expect("same space")
}

fn fig5b_scene() -> String {
    format!(
        "space: H2\n# N = e12 + e0 ^ a with a = (-e1 + 2 e2)/sqrt(5)\nN = {}\nP = e12 + 1/3 e20 - 1/2 e01\ntheta = 1\n? null_translate N theta P\n",
        null_point_5b()
    )
}

fn fig5b_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (n, p) = (get(doc, "N"), get(doc, "P"));
    let theta = get(doc, "theta").to_scalar()?;
    let s = Spinor::null_translation_h2(&n, theta)?;
    let moved = s.apply(&p)?;
    let expansion = p + p.commutator(&n)? * theta - n * p * n * (0.25 * theta * theta);
    let h2 = Algebra::h2();
    let k = 1.0 / 5f64.sqrt();
    let written = Multivector::from_terms(h2, &[(1.0, "e12"), (-2.0 * k, "e20"), (-k, "e01")]);
    Ok(vec![
        Check::near("N matches e12 - 2/sqrt5 e20 - 1/sqrt5 e01", n.max_abs_diff(&written), 0.0, 1e-15, Derived),
        Check::near("N^2", (n * n).max_abs(), 0.0, 1e-15, Reference),
        Check::near("S P S^-1 vs quadratic expansion", moved.max_abs_diff(&expansion), 0.0, 1e-14, Reference),
        Check::near("anchor N invariant", s.apply(&n)?.max_abs_diff(&n), 0.0, 1e-14, Reference),
        Check::near("S inverse is 1 + theta N / 2", s.inverse().max_abs_diff(&(n * (0.5 * theta) + 1.0)), 0.0, 1e-15, Derived),
    ])
}

fn fig6_scene() -> String {
    "space: H3\nL = -3/2 e10 + e20 - 1/2 e30 - e23 - 5/2 e31 - 2 e12\nK = e10 + 5/3 e20 - 2 e30 - e23 + 3 e31 + 2 e12\n? skew_lines_gap L K\n"
        .into()
}

fn fig6_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (l, k) = (get(doc, "L"), get(doc, "K"));
    let pluecker = |m: &Multivector| m.get("e10") * m.get("e23") + m.get("e20") * m.get("e31") + m.get("e30") * m.get("e12");
    let gap = geometry::skew_lines_gap(&l, &k)?;
    let q1 = geometry::meet_intersecting_lines(&gap.proper_axis, &l)?;
    let p1 = geometry::meet_intersecting_lines(&gap.proper_axis, &k)?;
    let (ln, kn) = (l.normalize()?, k.normalize()?);
    let v = ln.join(&kn)?.to_scalar()?.abs();
    let u = ln.inner(&kn)?.to_scalar()?;
    let on_line = |x: &Multivector, m: &Multivector| -> Result<f64> { Ok(m.normalize()?.join(&x.normalize()?)?.pseudo_norm()) };
    Ok(vec![
        Check::near("Pluecker L", pluecker(&l), 0.0, 1e-12, Reference),
        Check::near("Pluecker K", pluecker(&k), 0.0, 1e-12, Reference),
        Check::near("r vs distance of axis feet", gap.distance, distance(&q1, &p1)?, 1e-8, Derived),
        Check::near("|L v K| = sinh r sin alpha", gap.distance.sinh() * gap.angle.sin(), v, 1e-9, Derived),
        Check::near("L . K = -cosh r cos alpha", -gap.distance.cosh() * gap.angle.cos(), u, 1e-9, Derived),
        Check::near("foot Q1 on L", on_line(&q1, &l)?, 0.0, 1e-9, Derived),
        Check::near("foot P1 on K", on_line(&p1, &k)?, 0.0, 1e-9, Derived),
    ])
}

fn fig7_scene() -> String {
    "space: H3\nP = e123 + e320\nQ = e123 + e130 + 1/3 e210\n? classify P\n? classify Q\n? join P Q\n".into()
}

fn fig7_run(doc: &SceneDocument) -> Result<Vec<Check>> {
    let (p, q) = (get(doc, "P"), get(doc, "Q"));
    let h3 = p.algebra();
    let l = p.join(&q)?.normalize()?;
    let i = Multivector::pseudoscalar(h3);
    let probes = [origin(h3), point(h3, &[0.2, -0.3, 0.1], 1.0), point(h3, &[-0.4, 0.1, 0.3], 1.0)];
    let mut rot_spread: f64 = 0.0;
    let mut trans_spread: f64 = 0.0;
    for x in &probes {
        let rot = sample_trajectory(&l, x, -PI, PI, 33)?;
        rot_spread = rot_spread.max(spread(
            rot.samples.iter().map(|s| geometry::distance_point_line_h3(&l, &s.object).unwrap_or(f64::NAN)),
        ));
        let trans = sample_trajectory(&(i * l), x, -5.0, 5.0, 33)?;
        trans_spread = trans_spread.max(spread(
            trans.samples.iter().map(|s| geometry::distance_point_line_h3(&l, &s.object).unwrap_or(f64::NAN)),
        ));
    }
    let screw = Spinor::screw_h3(&l, 0.7, 1.2)?;
    let rot = Spinor::screw_h3(&l, 0.7, 0.0)?;
    let tr = Spinor::screw_h3(&l, 0.0, 1.2)?;
    let full = Spinor::screw_h3(&l, 2.0 * PI, 0.0)?;
    let full_turn = probes.iter().map(|x| full.apply(x).map(|y| y.max_abs_diff(x))).collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Check::near("L^2 after normalising", (l * l).to_scalar()?, -1.0, 1e-12, Derived),
        Check::near("rotation orbits keep distance to L", rot_spread, 0.0, 1e-9, Reference),
        Check::near("translation orbits keep distance to L", trans_spread, 0.0, 1e-9, Reference),
        Check::near("screw = rotation * translation", rot.compose(&tr)?.value().max_abs_diff(screw.value()), 0.0, 1e-12, Derived),
        Check::near("rotation and translation commute", tr.compose(&rot)?.value().max_abs_diff(screw.value()), 0.0, 1e-12, Reference),
        Check::near("alpha = 2 pi returns points", full_turn.into_iter().fold(0.0, f64::max), 0.0, 1e-10, Trivial),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_passes() {
        for case in cases() {
            let report = case.run();
            assert!(report.passed(), "{}: {:#?}", case.id, report);
        }
    }

    #[test]
    fn ids_are_unique() {
        for (i, a) in cases().iter().enumerate() {
            assert!(cases()[i + 1..].iter().all(|b| b.id != a.id));
            assert!(find(a.id).is_some());
        }
        assert!(find("bogus").is_none());
    }
}
