//! Numerical thresholds shared across the crate.
//!
//! Relative thresholds are scaled by the largest coefficient (squared for
//! quadratic quantities), so decisions do not depend on the weight of a
//! homogeneous object.

/// Off-scalar residual allowed when a product is read back as a real number.
pub const SCALAR_RESIDUAL: f64 = 1e-12;

/// `|A^2| <= NULL_RELATIVE * max|coeff|^2` classifies `A` as null.
pub const NULL_RELATIVE: f64 = 1e-9;

/// Non-scalar part of `A A~` tolerated when inverting a blade or versor.
pub const INVERSE_RESIDUAL: f64 = 1e-9;

/// `|B ^ B| <= SIMPLE_RELATIVE * max|coeff|^2` treats a bivector as simple.
pub const SIMPLE_RELATIVE: f64 = 1e-12;

/// Relative residual accepted by the Pluecker condition.
pub const PLUECKER_RELATIVE: f64 = 1e-9;

/// Relative agreement required between the sinh and cosh routes of a measurement.
pub const MEASURE_CROSS_CHECK: f64 = 1e-9;

/// Incidence and perpendicularity decisions, relative to coefficient scale.
pub const INCIDENCE_RELATIVE: f64 = 1e-9;

/// Absolute chart-weight floor below which a point is treated as at infinity.
pub const WEIGHT_FLOOR: f64 = 1e-12;
