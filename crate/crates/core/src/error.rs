use crate::algebra::Space;

/// Errors raised by algebraic and geometric operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different algebras ({left} vs {right})")]
    AlgebraMismatch { left: &'static str, right: &'static str },

    #[error("object is null and cannot be normalized or inverted")]
    NullObject,

    #[error("expected a homogeneous bivector")]
    NotABivector,

    #[error("expected a scalar but the non-scalar residual is {residual:e}")]
    NotScalar { residual: f64 },

    #[error("input mixes several grades")]
    NonHomogeneous,

    #[error("grade {grade} does not represent a geometric object in {space}")]
    NonGeometricGrade { grade: usize, space: Space },

    #[error("operation `{op}` is not available in {space}")]
    UnsupportedSpace { op: &'static str, space: Space },

    #[error("line coordinates violate the Pluecker condition (residual {residual:e})")]
    PlueckerViolation { residual: f64 },

    #[error("distance to or between null or improper objects is undefined")]
    NullOrImproperInput,

    #[error("input must be proper")]
    ImproperInput,

    #[error("input must be null")]
    NotNull,

    #[error("objects do not meet at a proper point; use a distance instead")]
    MeetNotProper,

    #[error("lines are not hyperparallel")]
    NotHyperparallel,

    #[error("lines intersect; the skew-line gap is undefined")]
    LinesIntersect,

    #[error("cannot project on, reject by or reflect in a null object")]
    NullMirror,

    #[error("object is not invertible (not a blade)")]
    NotInvertible,

    #[error("triangle is not right-angled at the first vertex (residual {residual:e})")]
    NotRightAngled { residual: f64 },

    #[error("right-angle vertex must not be null")]
    NullVertexAtP,

    #[error("triangle vertices are collinear")]
    DegenerateTriangle,

    #[error("generator must be {expected} but is {found}")]
    WrongGeneratorClass { expected: &'static str, found: &'static str },

    #[error("chart weight {weight:e} vanishes; point lies at infinity in the chart")]
    WeightVanishes { weight: f64 },

    #[error("trajectory needs at least two samples, got {0}")]
    InvalidSampleCount(usize),

    #[error("internal consistency check `{what}` failed (deviation {deviation:e})")]
    ConsistencyCheck { what: &'static str, deviation: f64 },
}

impl Error {
    /// Stable variant name, used in structured reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AlgebraMismatch { .. } => "AlgebraMismatch",
            Error::NullObject => "NullObject",
            Error::NotABivector => "NotABivector",
            Error::NotScalar { .. } => "NotScalar",
            Error::NonHomogeneous => "NonHomogeneous",
            Error::NonGeometricGrade { .. } => "NonGeometricGrade",
            Error::UnsupportedSpace { .. } => "UnsupportedSpace",
            Error::PlueckerViolation { .. } => "PlueckerViolation",
            Error::NullOrImproperInput => "NullOrImproperInput",
            Error::ImproperInput => "ImproperInput",
            Error::NotNull => "NotNull",
            Error::MeetNotProper => "MeetNotProper",
            Error::NotHyperparallel => "NotHyperparallel",
            Error::LinesIntersect => "LinesIntersect",
            Error::NullMirror => "NullMirror",
            Error::NotInvertible => "NotInvertible",
            Error::NotRightAngled { .. } => "NotRightAngled",
            Error::NullVertexAtP => "NullVertexAtP",
            Error::DegenerateTriangle => "DegenerateTriangle",
            Error::WrongGeneratorClass { .. } => "WrongGeneratorClass",
            Error::WeightVanishes { .. } => "WeightVanishes",
            Error::InvalidSampleCount(_) => "InvalidSampleCount",
            Error::ConsistencyCheck { .. } => "ConsistencyCheck",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
