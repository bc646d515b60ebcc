use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exp::expect_bivector;
use crate::geometry::{chart, classify, ChartPoint, GeomKind};
use crate::multivector::Multivector;

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub object: Multivector,
    /// Chart position, or `WeightVanishes` for samples at infinity of the chart.
    pub chart: Result<ChartPoint>,
}

/// Orbit of an object under the one-parameter family `exp(-t B / 2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub generator: Multivector,
    pub object: Multivector,
    pub samples: Vec<TrajectorySample>,
}

impl Trajectory {
    /// Samples whose chart position exists, in order.
    pub fn charted(&self) -> impl Iterator<Item = (f64, &ChartPoint)> {
        self.samples.iter().filter_map(|s| s.chart.as_ref().ok().map(|c| (s.t, c)))
    }

    /// Number of samples without a chart position.
    pub fn vanishing_count(&self) -> usize {
        self.samples.iter().filter(|s| s.chart.is_err()).count()
    }
}

/// `n` samples `exp(-t B/2) A exp(t B/2)` at uniform `t` in `[t_min, t_max]`.
///
/// Each sample is computed from `t` directly, in parallel, and returned in
/// order. `A` must be proper.
pub fn sample_trajectory(b: &Multivector, a: &Multivector, t_min: f64, t_max: f64, n: usize) -> Result<Trajectory> {
    if n < 2 {
        return Err(Error::InvalidSampleCount(n));
    }
    crate::geometry::same_space(b, a)?;
    let b = expect_bivector(b)?;
    if classify(a)?.kind != GeomKind::Proper {
        return Err(Error::ImproperInput);
    }
    let mask = a.grade_mask();
    let is_point = a.homogeneous_grade(0.0) == Some(a.algebra().point_grade());
    let samples = (0..n)
        .into_par_iter()
        .map(|i| -> Result<TrajectorySample> {
            let t = if i == n - 1 { t_max } else { t_min + (t_max - t_min) * (i as f64) / ((n - 1) as f64) };
            let s = (b * (-0.5 * t)).exp_bivector()?;
            let s_inv = (b * (0.5 * t)).exp_bivector()?;
            let object = (s * *a * s_inv).grades(mask);
            let chart = if is_point {
                chart(&object)
            } else {
                Err(Error::NonGeometricGrade { grade: object.homogeneous_grade(0.0).unwrap_or(0), space: a.space() })
            };
            Ok(TrajectorySample { t, object, chart })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory { generator: b, object: *a, samples })
}
