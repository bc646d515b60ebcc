//! Hyperbolic geometry in one, two and three dimensions through the
//! projectivised Clifford algebra Cl(d,1).
//!
//! Hyperplanes are vectors, points are `d`-vectors (`w e12 + x e20 + y e01`
//! in H2, `w e123 + x e320 + y e130 + z e210` in H3) and lines of H3 are
//! bivectors. Metric content lives inside the unit disk/ball of the Klein
//! chart; objects are classified as proper, null or improper by the sign of
//! their square.
//!
//! ```
//! use hypga::{Algebra, geometry};
//!
//! let h1 = Algebra::h1();
//! let a = geometry::point_h1(h1, 1.0);
//! let b = geometry::point_h1(h1, -0.5);
//! let r = geometry::distance(&a, &b).unwrap();
//! assert!((r - 1.5).abs() < 1e-12);
//! ```

pub mod algebra;
pub mod error;
pub mod eval;
pub mod exp;
pub mod geometry;
pub mod motion;
pub mod multivector;
pub mod oracle;
pub mod repro;
pub mod text;
pub mod tol;

pub use algebra::{Algebra, Space};
pub use error::{Error, Result};
pub use geometry::{ChartPoint, GeomClass, GeomKind};
pub use motion::{Spinor, SpinorKind, Trajectory};
pub use multivector::Multivector;
