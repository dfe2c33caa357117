//! Error type shared by the unit family and the force model.

/// Rejection reasons for model inputs.
///
/// Invalid values are refused at construction instead of being clamped, so a
/// unit mistake surfaces as an error rather than a silently wrong force.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("{quantity} must be finite (got {value})")]
    NonFinite { quantity: &'static str, value: f64 },

    #[error("force must be non-negative (got {0} N)")]
    NegativeForce(f64),

    #[error("torque must be non-negative (got {0} N·m)")]
    NegativeTorque(f64),

    #[error("length must be non-negative (got {0} m)")]
    NegativeLength(f64),

    #[error("mass must be non-negative (got {0} kg)")]
    NegativeMass(f64),

    #[error("rolling resistance coefficient must be non-negative (got {0})")]
    NegativeCoefficient(f64),

    #[error("gear radius must be positive (got {0} m)")]
    NonPositiveRadius(f64),

    #[error("contact offset must be non-negative (got {0} m)")]
    NegativeOffset(f64),

    #[error("contact offset {offset_m} m must be smaller than the gear radius {radius_m} m")]
    OffsetExceedsRadius { offset_m: f64, radius_m: f64 },

    #[error("surface gradient must lie in [0, π/2) rad (got {0} rad)")]
    GradientOutOfRange(f64),

    #[error("pressure angle must lie in [0, π/2) rad (got {0} rad)")]
    PressureAngleOutOfRange(f64),

    #[error("reference diameter must be positive (got {0} m)")]
    NonPositiveDiameter(f64),
}
