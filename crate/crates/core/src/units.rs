//! Unit-carrying scalar types.
//!
//! Every physical value in the toolkit is stored in strict SI units
//! (N, N·m, m, kg, rad). Shop-floor units (mm, degrees) are accepted only
//! through the explicit converters on these types, so a unit conversion
//! happens exactly once, at the boundary. Constructors reject NaN, infinity
//! and (for force, torque, length and mass) negative values.

use crate::error::ModelError;

/// Force in newtons. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Force(f64);

impl Force {
    pub const ZERO: Force = Force(0.0);

    pub fn from_newtons(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "force",
                value,
            });
        }
        if value < 0.0 {
            return Err(ModelError::NegativeForce(value));
        }
        Ok(Force(value))
    }

    /// Construct from a value already known to be finite and non-negative.
    pub(crate) fn raw(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0);
        Force(value)
    }

    pub fn newtons(self) -> f64 {
        self.0
    }
}

/// Torque in newton-meters. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Torque(f64);

impl Torque {
    pub const ZERO: Torque = Torque(0.0);

    pub fn from_newton_meters(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "torque",
                value,
            });
        }
        if value < 0.0 {
            return Err(ModelError::NegativeTorque(value));
        }
        Ok(Torque(value))
    }

    pub fn newton_meters(self) -> f64 {
        self.0
    }
}

/// Length in meters. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length(f64);

impl Length {
    pub const ZERO: Length = Length(0.0);

    pub fn from_meters(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "length",
                value,
            });
        }
        if value < 0.0 {
            return Err(ModelError::NegativeLength(value));
        }
        Ok(Length(value))
    }

    /// Boundary converter for catalog-style millimeter inputs.
    pub fn from_millimeters(value: f64) -> Result<Self, ModelError> {
        Self::from_meters(value / 1000.0)
    }

    pub(crate) fn raw(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0);
        Length(value)
    }

    pub fn meters(self) -> f64 {
        self.0
    }

    pub fn millimeters(self) -> f64 {
        self.0 * 1000.0
    }
}

/// Mass in kilograms. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Mass(f64);

impl Mass {
    pub fn from_kilograms(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "mass",
                value,
            });
        }
        if value < 0.0 {
            return Err(ModelError::NegativeMass(value));
        }
        Ok(Mass(value))
    }

    pub fn kilograms(self) -> f64 {
        self.0
    }
}

/// Angle in radians. Finite; sign and range are validated by the
/// operations that consume the angle.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    pub fn from_radians(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "angle",
                value,
            });
        }
        Ok(Angle(value))
    }

    /// Boundary converter for degree inputs.
    pub fn from_degrees(value: f64) -> Result<Self, ModelError> {
        Self::from_radians(value.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }
}

/// Unitless scalar (coefficients, ratios, factors). Finite; sign constraints
/// are validated by the consuming operation.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Dimensionless(f64);

impl Dimensionless {
    pub fn new(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "dimensionless value",
                value,
            });
        }
        Ok(Dimensionless(value))
    }

    pub(crate) fn raw(value: f64) -> Self {
        debug_assert!(value.is_finite());
        Dimensionless(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            Force::from_newtons(f64::NAN),
            Err(ModelError::NonFinite { .. })
        ));
        assert!(matches!(
            Torque::from_newton_meters(f64::INFINITY),
            Err(ModelError::NonFinite { .. })
        ));
        assert!(matches!(
            Angle::from_radians(f64::NEG_INFINITY),
            Err(ModelError::NonFinite { .. })
        ));
        assert!(matches!(
            Dimensionless::new(f64::NAN),
            Err(ModelError::NonFinite { .. })
        ));
    }

    #[test]
    fn rejects_negative_magnitudes() {
        assert_eq!(
            Force::from_newtons(-1.0),
            Err(ModelError::NegativeForce(-1.0))
        );
        assert_eq!(
            Torque::from_newton_meters(-0.5),
            Err(ModelError::NegativeTorque(-0.5))
        );
        assert_eq!(
            Length::from_meters(-0.002),
            Err(ModelError::NegativeLength(-0.002))
        );
        assert_eq!(
            Mass::from_kilograms(-2.0),
            Err(ModelError::NegativeMass(-2.0))
        );
    }

    #[test]
    fn angle_may_be_negative_at_construction() {
        // Range checks live on the operations, not the type.
        let a = Angle::from_radians(-0.1).unwrap();
        assert_eq!(a.radians(), -0.1);
    }

    #[test]
    fn millimeter_converter() {
        let d = Length::from_millimeters(40.0).unwrap();
        assert!((d.meters() - 0.040).abs() < 1e-15);
        assert!((d.millimeters() - 40.0).abs() < 1e-12);
    }

    #[test]
    fn degree_converter() {
        let a = Angle::from_degrees(90.0).unwrap();
        assert!((a.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((a.degrees() - 90.0).abs() < 1e-12);
    }
}
