use thiserror::Error;

/// Failures raised by the geometric and kinematic operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GyroError {
    #[error("invalid space context: {0}")]
    InvalidContext(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("point of norm {norm} is not inside the ball of radius {s}")]
    OutsideBall { norm: f64, s: f64 },

    #[error("Einstein sum undefined: 1 + u.v/s^2 = {0:e}")]
    DenominatorVanishes(f64),

    #[error("points coincide")]
    CoincidentPoints,

    #[error("map is not a gyroisometry (residual {0:e})")]
    NotAGyroisometry(f64),

    #[error("degenerate system: gamma-weighted mass sum is {0:e}")]
    DegenerateSystem(f64),

    #[error("barycentric weights sum to zero")]
    ZeroWeightSum,

    #[error("gamma-weighted sum of gyrobarycentric weights vanishes")]
    ZeroGammaWeightSum,

    #[error("point is not in the flat spanned by the anchors (residual {0:e})")]
    NotInFlat(f64),

    #[error("point is not in the gyroflat spanned by the anchors (residual {0:e})")]
    NotInGyroflat(f64),

    #[error("anchor points are not independent")]
    DependentAnchors,

    #[error("expected {expected} weights, found {found}")]
    WeightCountMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),
}

impl GyroError {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            GyroError::InvalidContext(_) => "invalid_context",
            GyroError::DimensionMismatch { .. } => "dimension_mismatch",
            GyroError::NonFinite => "non_finite",
            GyroError::OutsideBall { .. } => "outside_ball",
            GyroError::DenominatorVanishes(_) => "denominator_vanishes",
            GyroError::CoincidentPoints => "coincident_points",
            GyroError::NotAGyroisometry(_) => "not_a_gyroisometry",
            GyroError::DegenerateSystem(_) => "degenerate_system",
            GyroError::ZeroWeightSum => "zero_weight_sum",
            GyroError::ZeroGammaWeightSum => "zero_gamma_weight_sum",
            GyroError::NotInFlat(_) => "not_in_flat",
            GyroError::NotInGyroflat(_) => "not_in_gyroflat",
            GyroError::DependentAnchors => "dependent_anchors",
            GyroError::WeightCountMismatch { .. } => "weight_count_mismatch",
            GyroError::EmptyInput(_) => "empty_input",
        }
    }
}

pub type Result<T, E = GyroError> = std::result::Result<T, E>;
