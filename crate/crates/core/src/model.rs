//! Closed-form statics for a powered spur gear rolling on fabric.
//!
//! The model covers the equilibrium of a single pulling gear (hub pull force,
//! normal force, rolling resistance), the tangential/radial split of the
//! tooth-contact transmission force, the torque-to-force conversion at the
//! reference diameter, and the drive feasibility verdict against a measured
//! resistance. All operations are pure functions over immutable values.

use crate::error::ModelError;
use crate::units::{Angle, Dimensionless, Force, Length, Mass, Torque};

const STANDARD_GRAVITY_M_PER_S2: f64 = 9.81;

/// Gravitational acceleration used by every weight computation, in m/s².
pub fn gravitational_constant() -> Dimensionless {
    Dimensionless::raw(STANDARD_GRAVITY_M_PER_S2)
}

fn require_quadrant(angle: Angle, err: fn(f64) -> ModelError) -> Result<f64, ModelError> {
    let rad = angle.radians();
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&rad) {
        return Err(err(rad));
    }
    Ok(rad)
}

/// Geometry and mass of a pulling gear.
#[derive(Debug, Clone)]
pub struct GearSpec {
    reference_diameter: Length,
    mass: Mass,
    contact_offset: Length,
    pressure_angle: Angle,
}

impl GearSpec {
    /// Validates: diameter > 0, contact offset within the radius, pressure
    /// angle in [0, π/2).
    pub fn new(
        reference_diameter: Length,
        mass: Mass,
        contact_offset: Length,
        pressure_angle: Angle,
    ) -> Result<Self, ModelError> {
        let d = reference_diameter.meters();
        if d <= 0.0 {
            return Err(ModelError::NonPositiveDiameter(d));
        }
        let radius = d / 2.0;
        if contact_offset.meters() >= radius {
            return Err(ModelError::OffsetExceedsRadius {
                offset_m: contact_offset.meters(),
                radius_m: radius,
            });
        }
        require_quadrant(pressure_angle, ModelError::PressureAngleOutOfRange)?;
        let weight = mass.kilograms() * STANDARD_GRAVITY_M_PER_S2;
        if !weight.is_finite() {
            return Err(ModelError::NonFinite {
                quantity: "gear weight",
                value: weight,
            });
        }
        Ok(GearSpec {
            reference_diameter,
            mass,
            contact_offset,
            pressure_angle,
        })
    }

    pub fn reference_diameter(&self) -> Length {
        self.reference_diameter
    }

    pub fn radius(&self) -> Length {
        Length::raw(self.reference_diameter.meters() / 2.0)
    }

    pub fn mass(&self) -> Mass {
        self.mass
    }

    pub fn contact_offset(&self) -> Length {
        self.contact_offset
    }

    pub fn pressure_angle(&self) -> Angle {
        self.pressure_angle
    }

    /// Rolling resistance coefficient implied by the contact geometry.
    pub fn rolling_coefficient(&self) -> Dimensionless {
        Dimensionless::raw(self.contact_offset.meters() / self.radius().meters())
    }

    /// Gear weight pressing on the fabric.
    pub fn weight(&self) -> Force {
        Force::raw(self.mass.kilograms() * STANDARD_GRAVITY_M_PER_S2)
    }
}

/// Fabric surface the gear rolls on: rolling resistance coefficient,
/// surface gradient and a descriptive label. The coefficient is modeled as
/// a single speed-independent scalar per fabric.
#[derive(Debug, Clone)]
pub struct FabricSurface {
    rolling_coefficient: Dimensionless,
    gradient: Angle,
    label: String,
}

impl FabricSurface {
    pub fn new(
        rolling_coefficient: Dimensionless,
        gradient: Angle,
        label: impl Into<String>,
    ) -> Result<Self, ModelError> {
        if rolling_coefficient.value() < 0.0 {
            return Err(ModelError::NegativeCoefficient(rolling_coefficient.value()));
        }
        require_quadrant(gradient, ModelError::GradientOutOfRange)?;
        Ok(FabricSurface {
            rolling_coefficient,
            gradient,
            label: label.into(),
        })
    }

    pub fn rolling_coefficient(&self) -> Dimensionless {
        self.rolling_coefficient
    }

    pub fn gradient(&self) -> Angle {
        self.gradient
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Lumped opposing force measured by a pulling experiment: fabric rolling
/// resistance plus the driven-gear tangential reaction, as one total.
#[derive(Debug, Clone)]
pub struct MeasuredResistance {
    total: Force,
    provenance: String,
}

impl MeasuredResistance {
    pub fn new(total: Force, provenance: impl Into<String>) -> Self {
        MeasuredResistance {
            total,
            provenance: provenance.into(),
        }
    }

    pub fn total(&self) -> Force {
        self.total
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }
}

/// Transmission force resolved along the gear axes. Spur gears carry no
/// axial component, so `axial` is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceDecomposition {
    pub tangential: Force,
    pub radial: Force,
    pub axial: Force,
}

/// Outcome of the drive feasibility comparison. `margin_newtons` is signed;
/// the verdict uses a strict inequality, so a zero margin is infeasible.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub delivered: Force,
    pub resistance: Force,
    pub margin_newtons: f64,
    pub feasible: bool,
}

/// Rolling resistance coefficient from the contact geometry: the ratio of
/// the contact-patch offset to the gear radius.
pub fn rolling_coefficient_from_geometry(
    contact_offset: Length,
    gear_radius: Length,
) -> Result<Dimensionless, ModelError> {
    let a = contact_offset.meters();
    let r = gear_radius.meters();
    if r <= 0.0 {
        return Err(ModelError::NonPositiveRadius(r));
    }
    if a < 0.0 {
        return Err(ModelError::NegativeOffset(a));
    }
    if a >= r {
        return Err(ModelError::OffsetExceedsRadius {
            offset_m: a,
            radius_m: r,
        });
    }
    Ok(Dimensionless::raw(a / r))
}

/// Vertical equilibrium: the fabric pushes back with the gear's weight.
pub fn normal_force(weight: Force) -> Force {
    weight
}

/// Rolling resistance from contact geometry and normal load:
/// `(a / r_w) · W`.
pub fn rolling_resistance_geometric(
    contact_offset: Length,
    gear_radius: Length,
    weight: Force,
) -> Result<Force, ModelError> {
    let coefficient = rolling_coefficient_from_geometry(contact_offset, gear_radius)?;
    Force::from_newtons(coefficient.value() * weight.newtons())
}

/// Rolling resistance on a flat fabric surface: `f · m · g`.
pub fn rolling_resistance_flat(
    coefficient: Dimensionless,
    mass: Mass,
) -> Result<Force, ModelError> {
    if coefficient.value() < 0.0 {
        return Err(ModelError::NegativeCoefficient(coefficient.value()));
    }
    Force::from_newtons(coefficient.value() * mass.kilograms() * STANDARD_GRAVITY_M_PER_S2)
}

/// Rolling resistance on a graded fabric surface: `f · m · g · cos(α)`.
/// A zero gradient reduces to the flat formula.
pub fn rolling_resistance_graded(
    coefficient: Dimensionless,
    mass: Mass,
    gradient: Angle,
) -> Result<Force, ModelError> {
    if coefficient.value() < 0.0 {
        return Err(ModelError::NegativeCoefficient(coefficient.value()));
    }
    let rad = require_quadrant(gradient, ModelError::GradientOutOfRange)?;
    Force::from_newtons(
        coefficient.value() * mass.kilograms() * STANDARD_GRAVITY_M_PER_S2 * rad.cos(),
    )
}

/// Horizontal equilibrium at the hub: the pull force that keeps the gear
/// rolling equals the rolling resistance opposing it.
pub fn hub_pull_force(rolling_resistance: Force) -> Force {
    rolling_resistance
}

/// Split the tooth-contact transmission force into tangential and radial
/// components at the pressure angle. The axial component is exactly zero.
pub fn decompose_transmission_force(
    transmission: Force,
    pressure_angle: Angle,
) -> Result<ForceDecomposition, ModelError> {
    let rad = require_quadrant(pressure_angle, ModelError::PressureAngleOutOfRange)?;
    Ok(ForceDecomposition {
        tangential: Force::raw(transmission.newtons() * rad.cos()),
        radial: Force::raw(transmission.newtons() * rad.sin()),
        axial: Force::ZERO,
    })
}

/// Tangential force delivered at the reference diameter by a motor torque:
/// `2T / d`. This is the pulling force available at the fabric surface.
pub fn tangential_force_from_torque(
    torque: Torque,
    reference_diameter: Length,
) -> Result<Force, ModelError> {
    let d = reference_diameter.meters();
    if d <= 0.0 {
        return Err(ModelError::NonPositiveDiameter(d));
    }
    Force::from_newtons(2.0 * torque.newton_meters() / d)
}

/// Compare the delivered tangential force against a measured resistance.
/// The drive is feasible only if the delivered force strictly exceeds the
/// resistance; equality leaves zero margin and counts as infeasible.
pub fn check_feasibility(delivered: Force, resistance: &MeasuredResistance) -> FeasibilityReport {
    let margin = delivered.newtons() - resistance.total().newtons();
    FeasibilityReport {
        delivered,
        resistance: resistance.total(),
        margin_newtons: margin,
        feasible: margin > 0.0,
    }
}
