//! Closed-form bivector exponentials and the axis split of H3 bivectors.

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::tol;

/// `(cosh-like, sinh-like / beta)` for a bivector with square `x`.
///
/// With `x = -beta^2` these are `cos beta` and `sin beta / beta`; with
/// `x = beta^2` they are `cosh beta` and `sinh beta / beta`. Near zero the
/// series `sum x^k/(2k)!` and `sum x^k/(2k+1)!` are used directly.
fn even_odd_parts(x: f64) -> (f64, f64) {
    if x.abs() < 1e-3 {
        let mut c = 0.0;
        let mut s = 0.0;
        let mut pow = 1.0;
        let mut fact_even = 1.0;
        let mut fact_odd = 1.0;
        for k in 0..8 {
            if k > 0 {
                fact_even *= ((2 * k - 1) * (2 * k)) as f64;
                fact_odd *= ((2 * k) * (2 * k + 1)) as f64;
            }
            c += pow / fact_even;
            s += pow / fact_odd;
            pow *= x;
        }
        (c, s)
    } else if x < 0.0 {
        let beta = (-x).sqrt();
        (beta.cos(), beta.sin() / beta)
    } else {
        let beta = x.sqrt();
        (beta.cosh(), beta.sinh() / beta)
    }
}

/// `exp(B)` for a bivector whose square is a scalar.
pub(crate) fn exp_simple(b: &Multivector) -> Multivector {
    let x = b.geometric_product(b).expect("same space").scalar_part();
    let (c, s) = even_odd_parts(x);
    *b * s + c
}

/// Checks that `b` is (numerically) a pure bivector and returns its grade-2 part.
pub(crate) fn expect_bivector(b: &Multivector) -> Result<Multivector> {
    let cut = tol::SCALAR_RESIDUAL * b.max_abs();
    let stray = b
        .algebra()
        .blades()
        .iter()
        .zip(b.coeffs())
        .any(|(blade, x)| blade.grade != 2 && x.abs() > cut);
    if stray {
        return Err(Error::NotABivector);
    }
    Ok(b.grade(2))
}

/// Coefficient `s` in `B ^ B = s I`.
pub fn wedge_self_coefficient(b: &Multivector) -> f64 {
    let w = b.wedge(b).expect("same space");
    w.coeff(b.algebra().pseudoscalar_index())
}

/// True when `B ^ B` is negligible (always the case below three dimensions).
pub fn is_simple_bivector(b: &Multivector) -> bool {
    if b.algebra().dim() < 3 {
        return true;
    }
    let scale = b.max_abs();
    wedge_self_coefficient(b).abs() <= tol::SIMPLE_RELATIVE * scale * scale
}

/// Splits a bivector into commuting simple parts `(B1, B2)` with `B1^2 < 0 < B2^2`.
///
/// Simple (or nearly simple) input comes back unchanged as `(B, 0)`.
pub fn split_bivector(b: &Multivector) -> Result<(Multivector, Multivector)> {
    let b = expect_bivector(b)?;
    let zero = Multivector::zero(b.algebra());
    if is_simple_bivector(&b) {
        return Ok((b, zero));
    }
    let dot = b.inner(&b)?.scalar_part();
    let s = wedge_self_coefficient(&b);
    // roots of t^2 - dot t - s^2/4: the squares of the two axes
    let disc = (dot * dot + s * s).sqrt();
    let (sq1, sq2) = if dot >= 0.0 {
        let sq2 = 0.5 * (dot + disc);
        (-s * s / (4.0 * sq2), sq2)
    } else {
        let sq1 = 0.5 * (dot - disc);
        (sq1, -s * s / (4.0 * sq1))
    };
    let i = Multivector::pseudoscalar(b.algebra());
    let axis = |sq: f64| {
        let k = s / (2.0 * sq);
        (b * (i * (-k) + 1.0)) / (1.0 + k * k)
    };
    Ok((axis(sq1), axis(sq2)))
}

impl Multivector {
    /// `exp(B)` in closed form for a bivector `B`.
    ///
    /// Simple bivectors use the trigonometric, hyperbolic or nilpotent
    /// formula according to the sign of `B^2`; non-simple H3 bivectors are
    /// split into commuting axes whose exponentials are multiplied.
    pub fn exp_bivector(&self) -> Result<Multivector> {
        let b = expect_bivector(self)?;
        if is_simple_bivector(&b) {
            return Ok(exp_simple(&b));
        }
        let (b1, b2) = split_bivector(&b)?;
        Ok(exp_simple(&b1) * exp_simple(&b2))
    }
}
