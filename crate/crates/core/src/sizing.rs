//! Motor/gear sizing against a resistance envelope.
//!
//! Sizing inverts the torque-to-force conversion in closed form (the
//! minimum torque for a required force at a given diameter) and evaluates a
//! discrete catalog grid of candidate torques × diameters, reporting the
//! delivered force, signed margin and feasibility of every pair. A separate
//! geometric check verifies that the stitch path clears a hem eyelet.

use crate::error::ModelError;
use crate::model::{check_feasibility, tangential_force_from_torque, MeasuredResistance};
use crate::units::{Force, Length, Torque};

/// Rejection reasons for sizing inputs.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SizingError {
    #[error("candidate list \"{list}\" must not be empty")]
    EmptyCandidates { list: &'static str },

    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A sizing problem: the force the drive must deliver, the candidate
/// diameters and torques to evaluate, and the minimum margin a pair must
/// clear to count as feasible.
#[derive(Debug, Clone)]
pub struct SizingRequest {
    required_force: Force,
    diameters: Vec<Length>,
    torques: Vec<Torque>,
    margin_floor: Force,
}

impl SizingRequest {
    /// Validates: both candidate lists non-empty, every diameter positive.
    pub fn new(
        required_force: Force,
        diameters: Vec<Length>,
        torques: Vec<Torque>,
        margin_floor: Force,
    ) -> Result<Self, SizingError> {
        if diameters.is_empty() {
            return Err(SizingError::EmptyCandidates { list: "diameters" });
        }
        if torques.is_empty() {
            return Err(SizingError::EmptyCandidates { list: "torques" });
        }
        for d in &diameters {
            if d.meters() <= 0.0 {
                return Err(ModelError::NonPositiveDiameter(d.meters()).into());
            }
        }
        Ok(SizingRequest {
            required_force,
            diameters,
            torques,
            margin_floor,
        })
    }

    pub fn required_force(&self) -> Force {
        self.required_force
    }

    pub fn diameters(&self) -> &[Length] {
        &self.diameters
    }

    pub fn torques(&self) -> &[Torque] {
        &self.torques
    }

    pub fn margin_floor(&self) -> Force {
        self.margin_floor
    }
}

/// Verdict for one (diameter, torque) candidate pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SizingRow {
    pub diameter: Length,
    pub torque: Torque,
    pub delivered: Force,
    /// Delivered force minus required force, signed.
    pub margin_newtons: f64,
    /// True when the margin strictly exceeds the request's margin floor.
    pub feasible: bool,
}

/// Grid evaluation output: one row per candidate pair (diameter-major,
/// both axes ascending) plus the closed-form minimum torque per diameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SizingResult {
    pub rows: Vec<SizingRow>,
    /// Per diameter: the torque that delivers exactly the required force
    /// plus the margin floor.
    pub min_torque_per_diameter: Vec<(Length, Torque)>,
}

/// Minimum torque that delivers `required` force at reference diameter
/// `d`: the torque-to-force conversion inverted, `T = (d/2) · F`.
pub fn min_torque_for(d: Length, required: Force) -> Result<Torque, SizingError> {
    if d.meters() <= 0.0 {
        return Err(ModelError::NonPositiveDiameter(d.meters()).into());
    }
    Ok(Torque::from_newton_meters(
        d.meters() / 2.0 * required.newtons(),
    )?)
}

/// Evaluates every (diameter, torque) pair in the request. Rows are ordered
/// by diameter then torque, ascending, regardless of input order, so the
/// output is deterministic and diff-friendly.
pub fn evaluate_grid(request: &SizingRequest) -> Result<SizingResult, SizingError> {
    let mut diameters = request.diameters().to_vec();
    diameters.sort_by(|a, b| a.meters().total_cmp(&b.meters()));
    let mut torques = request.torques().to_vec();
    torques.sort_by(|a, b| a.newton_meters().total_cmp(&b.newton_meters()));

    let resistance = MeasuredResistance::new(request.required_force(), "sizing request");
    let floor = request.margin_floor().newtons();

    let mut rows = Vec::with_capacity(diameters.len() * torques.len());
    let mut min_torque_per_diameter = Vec::with_capacity(diameters.len());
    for &d in &diameters {
        for &t in &torques {
            let delivered = tangential_force_from_torque(t, d)?;
            let verdict = check_feasibility(delivered, &resistance);
            rows.push(SizingRow {
                diameter: d,
                torque: t,
                delivered,
                margin_newtons: verdict.margin_newtons,
                feasible: verdict.margin_newtons > floor,
            });
        }
        let target = Force::from_newtons(request.required_force().newtons() + floor)?;
        min_torque_per_diameter.push((d, min_torque_for(d, target)?));
    }

    Ok(SizingResult {
        rows,
        min_torque_per_diameter,
    })
}

/// Hem-eyelet geometry: the eyelet that must be cleared, the band between
/// the inner stitch line and the hem edge that contains it, and the
/// clearance margin demanded on each side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EyeletLayout {
    pub eyelet_diameter: Length,
    pub stitch_to_edge_band: Length,
    pub placement_margin: Length,
}

/// Outcome of the eyelet clearance check. Slack is signed: negative means
/// the eyelet (plus margins) does not fit in the band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EyeletVerdict {
    pub fits: bool,
    pub slack_meters: f64,
}

impl EyeletVerdict {
    pub fn slack_millimeters(&self) -> f64 {
        self.slack_meters * 1000.0
    }
}

/// Checks that the eyelet plus its per-side placement margins fits inside
/// the stitch-to-edge band: slack = band − (eyelet + 2·margin); a zero
/// slack still fits (the boundary case is acceptable, unlike the strict
/// force inequality).
pub fn eyelet_clearance_check(layout: &EyeletLayout) -> EyeletVerdict {
    let slack = layout.stitch_to_edge_band.meters()
        - (layout.eyelet_diameter.meters() + 2.0 * layout.placement_margin.meters());
    EyeletVerdict {
        fits: slack >= 0.0,
        slack_meters: slack,
    }
}
