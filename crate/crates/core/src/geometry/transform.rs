use super::{grade_of, same_space};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

fn mirror_inverse(b: &Multivector) -> Result<Multivector> {
    b.inverse().map_err(|e| match e {
        Error::NullObject => Error::NullMirror,
        other => other,
    })
}

/// Keeps the grade of `a` in the result of a product that should preserve it.
fn like(a: &Multivector, result: Multivector) -> Result<Multivector> {
    Ok(result.grade(grade_of(a)?))
}

/// Projection of `a` on `b`: `(a . b) b^-1`.
pub fn project(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    same_space(a, b)?;
    let inv = mirror_inverse(b)?;
    like(a, a.inner(b)? * inv)
}

/// Rejection of `a` by `b`: `(a ^ b) b^-1`, the projection on the polar of `b`.
pub fn reject(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    same_space(a, b)?;
    let inv = mirror_inverse(b)?;
    like(a, a.wedge(b)? * inv)
}

/// Reflection of `a` in `b`: `(-1)^(grade a * grade b) b a b^-1`.
///
/// A point reflected in itself comes back with the opposite orientation in
/// H1 (both grade 1); in H2 and H3 the sign is `+` for even products.
pub fn reflect(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    same_space(a, b)?;
    let inv = mirror_inverse(b)?;
    let (ga, gb) = (grade_of(a)?, grade_of(b)?);
    let sign = if (ga * gb) % 2 == 1 { -1.0 } else { 1.0 };
    like(a, *b * *a * inv * sign)
}
