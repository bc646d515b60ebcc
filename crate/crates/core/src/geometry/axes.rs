use crate::algebra::Space;
use crate::error::{Error, Result};
use crate::exp::split_bivector;
use crate::multivector::Multivector;

/// Splits an H3 bivector into its proper and improper axes `(L1, L2)`.
///
/// `L1 + L2 = L`, both are simple, they commute, `L1^2 < 0 < L2^2`, and
/// each is a multiple of the polar of the other. Simple input gives `(L, 0)`.
pub fn axes(l: &Multivector) -> Result<(Multivector, Multivector)> {
    if l.space() != Space::H3 {
        return Err(Error::UnsupportedSpace { op: "axes", space: l.space() });
    }
    split_bivector(l)
}
