use std::f64::consts::PI;

use serde::Serialize;

use crate::algebra::{Algebra, Space};
use crate::error::{Error, Result};
use crate::exp::{exp_simple, expect_bivector, is_simple_bivector};
use crate::geometry::{classify, expect_grade, same_space, GeomKind};
use crate::multivector::Multivector;

/// What a spinor does, with its magnitudes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SpinorKind {
    Identity,
    /// Translation by `lambda` along the line polar to an improper point (H2) or along H1.
    Translation { lambda: f64 },
    /// Rotation by `alpha` (kept in `[0, 4 pi)`) about a proper point.
    Rotation { alpha: f64 },
    /// Null translation by `theta`; the scale depends on the generator's weight.
    NullTranslation { theta: f64 },
    /// Rotation by `alpha` about a line combined with translation by `lambda` along it.
    Screw { alpha: f64, lambda: f64 },
    /// Built from an arbitrary generator or by composition.
    General,
}

/// An even element of unit pseudo-norm acting on objects by sandwiching.
///
/// `S` and `-S` describe the same motion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spinor {
    value: Multivector,
    generator: Option<Multivector>,
    kind: SpinorKind,
}

fn found(kind: GeomKind) -> &'static str {
    kind.name()
}

fn require_space(alg: &'static Algebra, space: Space, op: &'static str) -> Result<()> {
    if alg.space() != space {
        return Err(Error::UnsupportedSpace { op, space: alg.space() });
    }
    Ok(())
}

impl Spinor {
    pub fn identity(alg: &'static Algebra) -> Spinor {
        Spinor { value: Multivector::scalar(alg, 1.0), generator: Some(Multivector::zero(alg)), kind: SpinorKind::Identity }
    }

    /// `exp(B)` for an arbitrary bivector `B`.
    pub fn from_generator(b: &Multivector) -> Result<Spinor> {
        let b = expect_bivector(b)?;
        Ok(Spinor { value: b.exp_bivector()?, generator: Some(b), kind: SpinorKind::General })
    }

    /// `exp(-lambda e01 / 2)`, moving `point_h1(phi)` to `point_h1(phi + lambda)`.
    pub fn translation_h1(alg: &'static Algebra, lambda: f64) -> Result<Spinor> {
        require_space(alg, Space::H1, "translation_h1")?;
        let b = Multivector::blade(alg, "e01") * (-0.5 * lambda);
        Ok(Spinor { value: exp_simple(&b), generator: Some(b), kind: SpinorKind::Translation { lambda } })
    }

    /// `exp(-lambda T / 2)` for an improper point `T`: translation along the line `T I^-1`.
    pub fn translation_h2(t: &Multivector, lambda: f64) -> Result<Spinor> {
        require_space(t.algebra(), Space::H2, "translation_h2")?;
        let t = expect_grade(t, 2)?;
        let class = classify(&t)?.kind;
        if class != GeomKind::Improper {
            return Err(Error::WrongGeneratorClass { expected: "Improper", found: found(class) });
        }
        let b = t.normalize()? * (-0.5 * lambda);
        Ok(Spinor { value: exp_simple(&b), generator: Some(b), kind: SpinorKind::Translation { lambda } })
    }

    /// `exp(-alpha R / 2)` for a proper point `R`: rotation about `R`.
    pub fn rotation_h2(r: &Multivector, alpha: f64) -> Result<Spinor> {
        require_space(r.algebra(), Space::H2, "rotation_h2")?;
        let r = expect_grade(r, 2)?;
        let class = classify(&r)?.kind;
        if class != GeomKind::Proper {
            return Err(Error::WrongGeneratorClass { expected: "Proper", found: found(class) });
        }
        let alpha = alpha.rem_euclid(4.0 * PI);
        let b = r.normalize()? * (-0.5 * alpha);
        Ok(Spinor { value: exp_simple(&b), generator: Some(b), kind: SpinorKind::Rotation { alpha } })
    }

    /// `1 - theta N / 2` for a null point `N` such as `e12 + e0 ^ a`.
    ///
    /// The series of the exponential stops after the linear term because
    /// `N^2 = 0`. `N` is used as given.
    pub fn null_translation_h2(n: &Multivector, theta: f64) -> Result<Spinor> {
        require_space(n.algebra(), Space::H2, "null_translation_h2")?;
        Spinor::null_translation(&expect_grade(n, 2)?, theta)
    }

    /// `1 - theta L / 2` for a null line `L` of H3, used as given.
    pub fn null_translation_h3(l: &Multivector, theta: f64) -> Result<Spinor> {
        require_space(l.algebra(), Space::H3, "null_translation_h3")?;
        let l = expect_grade(l, 2)?;
        if !is_simple_bivector(&l) {
            return Err(Error::WrongGeneratorClass { expected: "Null", found: "non-simple" });
        }
        Spinor::null_translation(&l, theta)
    }

    fn null_translation(n: &Multivector, theta: f64) -> Result<Spinor> {
        let class = classify(n)?.kind;
        if class != GeomKind::Null || n.is_zero() {
            return Err(Error::WrongGeneratorClass { expected: "Null", found: found(class) });
        }
        let b = *n * (-0.5 * theta);
        Ok(Spinor { value: b + 1.0, generator: Some(b), kind: SpinorKind::NullTranslation { theta } })
    }

    /// `exp(-(alpha + lambda I) L / 2)` for a proper line `L` of H3.
    ///
    /// Computed as the product of the rotation part `exp(-alpha L / 2)` and
    /// the translation part `exp(-lambda I L / 2)`, which commute.
    pub fn screw_h3(l: &Multivector, alpha: f64, lambda: f64) -> Result<Spinor> {
        require_space(l.algebra(), Space::H3, "screw_h3")?;
        let l = expect_grade(l, 2)?;
        let class = classify(&l)?.kind;
        if class != GeomKind::Proper {
            return Err(Error::WrongGeneratorClass { expected: "Proper", found: found(class) });
        }
        if !is_simple_bivector(&l) {
            return Err(Error::WrongGeneratorClass { expected: "Proper", found: "non-simple" });
        }
        let l = l.normalize()?;
        let i = Multivector::pseudoscalar(l.algebra());
        let rot = l * (-0.5 * alpha);
        let trans = i * l * (-0.5 * lambda);
        Ok(Spinor {
            value: exp_simple(&rot) * exp_simple(&trans),
            generator: Some(rot + trans),
            kind: SpinorKind::Screw { alpha, lambda },
        })
    }

    /// A spinor from an already computed even element; only its action is used.
    pub fn from_value(value: Multivector) -> Result<Spinor> {
        let s = value.norm_squared();
        if s.abs() <= crate::tol::NULL_RELATIVE * value.max_abs() * value.max_abs() {
            return Err(Error::NotInvertible);
        }
        Ok(Spinor { value, generator: None, kind: SpinorKind::General })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    /// The bivector `B` with `value = exp(B)`, when known.
    pub fn generator(&self) -> Option<&Multivector> {
        self.generator.as_ref()
    }

    pub fn kind(&self) -> SpinorKind {
        self.kind
    }

    /// `S~ / <S S~>_0`.
    pub fn inverse(&self) -> Multivector {
        self.value.reverse() / self.value.norm_squared()
    }

    /// The motion `self` after `first`.
    pub fn compose(&self, first: &Spinor) -> Result<Spinor> {
        Ok(Spinor { value: self.value.geometric_product(&first.value)?, generator: None, kind: SpinorKind::General })
    }

    /// `S A S^-1`, keeping only the grades present in `A`.
    pub fn apply(&self, a: &Multivector) -> Result<Multivector> {
        same_space(&self.value, a)?;
        let mask = a.grade_mask();
        Ok((self.value * *a * self.inverse()).grades(mask))
    }
}
