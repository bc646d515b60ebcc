//! Shared inputs for the benchmarks.

use hypga::geometry::point;
use hypga::{Algebra, Multivector};

/// A deterministic set of generic H3 multivectors.
pub fn h3_multivectors(n: usize) -> Vec<Multivector> {
    let h3 = Algebra::h3();
    (0..n)
        .map(|i| {
            let coeffs: Vec<f64> = (0..16).map(|k| ((i * 16 + k) as f64 * 0.618_034).sin()).collect();
            Multivector::from_coeffs(h3, &coeffs)
        })
        .collect()
}

/// Proper points of H2 scattered inside the unit disk.
pub fn h2_points(n: usize) -> Vec<Multivector> {
    let h2 = Algebra::h2();
    (0..n)
        .map(|i| {
            let a = i as f64 * 2.399_963;
            let r = 0.9 * ((i as f64 + 0.5) / n as f64).sqrt();
            point(h2, &[r * a.cos(), r * a.sin()], 1.0)
        })
        .collect()
}
