//! Dense multivectors over [`Algebra`] and the product family built on them.

use std::fmt;
use std::ops::{Add, AddAssign, BitAnd, BitOr, BitXor, Div, Mul, Neg, Sub, SubAssign};

use crate::algebra::{Algebra, Backend, Space, MAX_BLADES};
use crate::error::{Error, Result};
use crate::tol;

/// A general element of Cl(d,1), one coefficient per basis blade.
///
/// Values are plain `Copy` data; no operation mutates its operands. The
/// arithmetic operators are shorthands for the checked methods and panic when
/// the operands come from different spaces:
///
/// | operator | method |
/// |----------|--------|
/// | `a * b`  | [`Multivector::geometric_product`] |
/// | `a ^ b`  | [`Multivector::wedge`] |
/// | `a \| b` | [`Multivector::inner`] |
/// | `a & b`  | [`Multivector::join`] |
#[derive(Clone, Copy)]
pub struct Multivector {
    alg: &'static Algebra,
    c: [f64; MAX_BLADES],
}

impl Multivector {
    pub fn zero(alg: &'static Algebra) -> Multivector {
        Multivector { alg, c: [0.0; MAX_BLADES] }
    }

    pub fn scalar(alg: &'static Algebra, s: f64) -> Multivector {
        let mut m = Multivector::zero(alg);
        m.c[0] = s;
        m
    }

    /// Basis blade by index in the algebra's blade order.
    pub fn basis(alg: &'static Algebra, index: usize) -> Multivector {
        assert!(index < alg.size(), "blade index {index} out of range for {}", alg.space());
        let mut m = Multivector::zero(alg);
        m.c[index] = 1.0;
        m
    }

    /// Basis blade by its canonical name (`"e20"`, `"e0123"`, ...).
    ///
    /// Panics on names that are not basis blades of `alg`; use the text
    /// parser for arbitrary generator orders.
    pub fn blade(alg: &'static Algebra, name: &str) -> Multivector {
        let i = alg
            .index_of_name(name)
            .unwrap_or_else(|| panic!("{name} is not a basis blade of {}", alg.space()));
        Multivector::basis(alg, i)
    }

    /// Linear combination of named blades.
    pub fn from_terms(alg: &'static Algebra, terms: &[(f64, &str)]) -> Multivector {
        terms.iter().fold(Multivector::zero(alg), |acc, &(k, name)| acc + Multivector::blade(alg, name) * k)
    }

    /// Coefficients in canonical blade order; the slice length must equal the algebra size.
    pub fn from_coeffs(alg: &'static Algebra, coeffs: &[f64]) -> Multivector {
        assert_eq!(coeffs.len(), alg.size(), "coefficient count does not match {}", alg.space());
        let mut m = Multivector::zero(alg);
        m.c[..coeffs.len()].copy_from_slice(coeffs);
        m
    }

    pub fn pseudoscalar(alg: &'static Algebra) -> Multivector {
        Multivector::basis(alg, alg.pseudoscalar_index())
    }

    pub fn algebra(&self) -> &'static Algebra {
        self.alg
    }

    pub fn space(&self) -> Space {
        self.alg.space()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c[..self.alg.size()]
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs()[index]
    }

    /// Coefficient of a named basis blade.
    pub fn get(&self, name: &str) -> f64 {
        let i = self
            .alg
            .index_of_name(name)
            .unwrap_or_else(|| panic!("{name} is not a basis blade of {}", self.alg.space()));
        self.c[i]
    }

    pub fn with_coeff(mut self, index: usize, value: f64) -> Multivector {
        self.c[index] = value;
        self
    }

    /// Same coefficients viewed in another algebra of the same space.
    pub fn rebind(&self, alg: &'static Algebra) -> Multivector {
        assert_eq!(alg.space(), self.space(), "rebind across spaces");
        Multivector { alg, c: self.c }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&x| x == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs().iter().zip(other.coeffs()).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.space() == other.space() && self.max_abs_diff(other) <= tol
    }

    /// Grade projection `<A>_k`.
    pub fn grade(&self, k: usize) -> Multivector {
        let mut m = Multivector::zero(self.alg);
        for (i, b) in self.alg.blades().iter().enumerate() {
            if b.grade == k {
                m.c[i] = self.c[i];
            }
        }
        m
    }

    /// Bit `k` set when grade `k` has a nonzero coefficient.
    pub fn grade_mask(&self) -> u32 {
        self.alg
            .blades()
            .iter()
            .zip(self.coeffs())
            .filter(|(_, &x)| x != 0.0)
            .fold(0, |m, (b, _)| m | (1 << b.grade))
    }

    /// Projection onto the grades set in `mask`.
    pub fn grades(&self, mask: u32) -> Multivector {
        let mut m = Multivector::zero(self.alg);
        for (i, b) in self.alg.blades().iter().enumerate() {
            if mask & (1 << b.grade) != 0 {
                m.c[i] = self.c[i];
            }
        }
        m
    }

    /// The single grade present, treating coefficients below `rel_tol * max_abs` as zero.
    /// The zero multivector has no grade.
    pub fn homogeneous_grade(&self, rel_tol: f64) -> Option<usize> {
        let cut = rel_tol * self.max_abs();
        let mut found = None;
        for (b, &x) in self.alg.blades().iter().zip(self.coeffs()) {
            if x.abs() > cut && x != 0.0 {
                match found {
                    None => found = Some(b.grade),
                    Some(g) if g == b.grade => {}
                    Some(_) => return None,
                }
            }
        }
        found
    }

    /// `<A>_0`.
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Scalar value, failing if any other coefficient exceeds `1e-12` relative.
    pub fn to_scalar(&self) -> Result<f64> {
        let residual = self.coeffs()[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if residual > tol::SCALAR_RESIDUAL * self.max_abs().max(1.0) {
            return Err(Error::NotScalar { residual });
        }
        Ok(self.c[0])
    }

    fn check(&self, rhs: &Multivector) -> Result<()> {
        if self.space() != rhs.space() {
            return Err(Error::AlgebraMismatch { left: self.space().name(), right: rhs.space().name() });
        }
        Ok(())
    }

    /// Bilinear product restricted to blade pairs whose grades `(r, s)` and
    /// result grade `k` satisfy `keep`.
    fn filtered_product(&self, rhs: &Multivector, keep: impl Fn(usize, usize, usize) -> bool) -> Multivector {
        let alg = self.alg;
        let n = alg.size();
        let mut out = Multivector::zero(alg);
        match &alg.backend {
            Backend::Table => {
                for i in 0..n {
                    let a = self.c[i];
                    if a == 0.0 {
                        continue;
                    }
                    let r = alg.blade(i).grade;
                    for j in 0..n {
                        let b = rhs.c[j];
                        if b == 0.0 {
                            continue;
                        }
                        let (k, s) = alg.product_entry(i, j);
                        if keep(r, alg.blade(j).grade, alg.blade(k).grade) {
                            out.c[k] += s * a * b;
                        }
                    }
                }
            }
            Backend::Oracle(rep) => {
                let top = alg.dim() + 1;
                for r in 0..=top {
                    let ar = self.grade(r);
                    if ar.is_zero() {
                        continue;
                    }
                    for s in 0..=top {
                        let bs = rhs.grade(s);
                        if bs.is_zero() {
                            continue;
                        }
                        let p = Multivector::from_coeffs(alg, &rep.product(ar.coeffs(), bs.coeffs()));
                        for k in 0..=top {
                            if keep(r, s, k) {
                                out += p.grade(k);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn gp(&self, rhs: &Multivector) -> Multivector {
        match &self.alg.backend {
            Backend::Table => self.filtered_product(rhs, |_, _, _| true),
            Backend::Oracle(rep) => Multivector::from_coeffs(self.alg, &rep.product(self.coeffs(), rhs.coeffs())),
        }
    }

    pub fn geometric_product(&self, rhs: &Multivector) -> Result<Multivector> {
        self.check(rhs)?;
        Ok(self.gp(rhs))
    }

    /// Outer product: `<A_r B_s>_{r+s}` summed over grade parts.
    pub fn wedge(&self, rhs: &Multivector) -> Result<Multivector> {
        self.check(rhs)?;
        Ok(self.filtered_product(rhs, |r, s, k| k == r + s))
    }

    /// Inner product: `<A_r B_s>_{|r-s|}` summed over grade parts.
    pub fn inner(&self, rhs: &Multivector) -> Result<Multivector> {
        self.check(rhs)?;
        Ok(self.filtered_product(rhs, |r, s, k| k == r.abs_diff(s)))
    }

    /// Complement `J`, fixed by `e_S ^ J(e_S) = I`.
    pub fn complement(&self) -> Multivector {
        let mut out = Multivector::zero(self.alg);
        for i in 0..self.alg.size() {
            let (k, s) = self.alg.complement_entry(i);
            out.c[k] += s * self.c[i];
        }
        out
    }

    /// Inverse complement `J^-1`.
    pub fn uncomplement(&self) -> Multivector {
        let mut out = Multivector::zero(self.alg);
        for i in 0..self.alg.size() {
            let (k, s) = self.alg.complement_entry(i);
            out.c[i] += s * self.c[k];
        }
        out
    }

    /// Regressive product `J^-1(J(A) ^ J(B))`.
    pub fn join(&self, rhs: &Multivector) -> Result<Multivector> {
        self.check(rhs)?;
        Ok(self.complement().filtered_product(&rhs.complement(), |r, s, k| k == r + s).uncomplement())
    }

    /// `AB - BA` halved.
    pub fn commutator(&self, rhs: &Multivector) -> Result<Multivector> {
        self.check(rhs)?;
        Ok((self.gp(rhs) - rhs.gp(self)) * 0.5)
    }

    pub fn reverse(&self) -> Multivector {
        let mut out = *self;
        for (i, b) in self.alg.blades().iter().enumerate() {
            if (b.grade / 2) % 2 == 1 {
                out.c[i] = -out.c[i];
            }
        }
        out
    }

    /// Grade involution.
    pub fn involute(&self) -> Multivector {
        let mut out = *self;
        for (i, b) in self.alg.blades().iter().enumerate() {
            if b.grade % 2 == 1 {
                out.c[i] = -out.c[i];
            }
        }
        out
    }

    /// Polar map `A I`.
    pub fn dual(&self) -> Multivector {
        self.gp(&Multivector::pseudoscalar(self.alg))
    }

    /// `A I^-1`.
    pub fn undual(&self) -> Multivector {
        let i = Multivector::pseudoscalar(self.alg);
        let i_sq = i.gp(&i).scalar_part();
        self.gp(&i) * i_sq
    }

    /// Signed `<A A~>_0`.
    pub fn norm_squared(&self) -> f64 {
        self.gp(&self.reverse()).scalar_part()
    }

    /// `sqrt(|<A A~>_0|)`.
    pub fn pseudo_norm(&self) -> f64 {
        self.norm_squared().abs().sqrt()
    }

    /// True when `|<A A~>_0|` is negligible against the coefficient scale.
    pub fn is_null(&self) -> bool {
        let scale = self.max_abs();
        scale == 0.0 || self.norm_squared().abs() <= tol::NULL_RELATIVE * scale * scale
    }

    pub fn normalize(&self) -> Result<Multivector> {
        if self.is_null() {
            return Err(Error::NullObject);
        }
        Ok(*self / self.pseudo_norm())
    }

    /// Inverse of a blade or versor: `A~ / <A A~>_0`.
    pub fn inverse(&self) -> Result<Multivector> {
        let rr = self.gp(&self.reverse());
        let s = rr.scalar_part();
        let scale = self.max_abs();
        if scale == 0.0 || s.abs() <= tol::NULL_RELATIVE * scale * scale {
            return Err(Error::NullObject);
        }
        let residual = rr.coeffs()[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if residual > tol::INVERSE_RESIDUAL * s.abs() {
            return Err(Error::NotInvertible);
        }
        Ok(self.reverse() / s)
    }

    /// Sandwich `S A S^-1` for an invertible `S` (here `self`).
    pub fn sandwich(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        let inv = self.inverse()?;
        Ok(self.gp(a).gp(&inv))
    }
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Multivector) -> bool {
        self.space() == other.space() && self.coeffs() == other.coeffs()
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::serialize_canonical(self))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.space(), crate::text::serialize_canonical(self))
    }
}

fn expect_same(a: &Multivector, b: &Multivector, op: &str) {
    if a.space() != b.space() {
        panic!("{op} between {} and {}", a.space(), b.space());
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        expect_same(self, &rhs, "addition");
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= rhs;
        self
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        expect_same(self, &rhs, "subtraction");
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(mut self) -> Multivector {
        for a in self.c.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(mut self, k: f64) -> Multivector {
        for a in self.c.iter_mut() {
            *a *= k;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(mut self, k: f64) -> Multivector {
        for a in self.c.iter_mut() {
            *a /= k;
        }
        self
    }
}

impl Add<f64> for Multivector {
    type Output = Multivector;
    fn add(mut self, k: f64) -> Multivector {
        self.c[0] += k;
        self
    }
}

impl Sub<f64> for Multivector {
    type Output = Multivector;
    fn sub(mut self, k: f64) -> Multivector {
        self.c[0] -= k;
        self
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        expect_same(&self, &rhs, "geometric product");
        self.gp(&rhs)
    }
}

impl BitXor for Multivector {
    type Output = Multivector;
    fn bitxor(self, rhs: Multivector) -> Multivector {
        expect_same(&self, &rhs, "wedge");
        self.wedge(&rhs).expect("same space")
    }
}

impl BitOr for Multivector {
    type Output = Multivector;
    fn bitor(self, rhs: Multivector) -> Multivector {
        expect_same(&self, &rhs, "inner product");
        self.inner(&rhs).expect("same space")
    }
}

impl BitAnd for Multivector {
    type Output = Multivector;
    fn bitand(self, rhs: Multivector) -> Multivector {
        expect_same(&self, &rhs, "join");
        self.join(&rhs).expect("same space")
    }
}
