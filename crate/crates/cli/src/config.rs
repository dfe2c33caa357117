//! Input file schemas and validation.
//!
//! All on-disk units are shop-floor units (mm, degrees, N, N·m); conversion
//! to the SI domain types happens exactly once, here. Unknown keys are hard
//! errors, and every validation message names the offending field by its
//! JSON path so a typo in an engineering input cannot slip through.

use std::path::{Path, PathBuf};

use hemforce_core::feedsim::{FeedScenario, ResistanceModel};
use hemforce_core::gauge::{GaugeSample, PullGaugeSeries};
use hemforce_core::model::{FabricSurface, GearSpec, MeasuredResistance};
use hemforce_core::{Angle, Dimensionless, Force, Length, Mass, Torque};
use serde::Deserialize;

use crate::{read_file, CliError};

fn parse_json<'a, T: Deserialize<'a>>(path: &Path, text: &'a str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|err| CliError(format!("{}: {err}", path.display())))
}

fn finite(field: &str, value: f64) -> Result<f64, CliError> {
    if !value.is_finite() {
        return Err(CliError(format!("{field}: must be finite (got {value})")));
    }
    Ok(value)
}

fn non_negative(field: &str, value: f64) -> Result<f64, CliError> {
    finite(field, value)?;
    if value < 0.0 {
        return Err(CliError(format!(
            "{field}: must be non-negative (got {value})"
        )));
    }
    Ok(value)
}

fn positive(field: &str, value: f64) -> Result<f64, CliError> {
    finite(field, value)?;
    if value <= 0.0 {
        return Err(CliError(format!("{field}: must be positive (got {value})")));
    }
    Ok(value)
}

fn angle_degrees(field: &str, value: f64) -> Result<Angle, CliError> {
    finite(field, value)?;
    if !(0.0..90.0).contains(&value) {
        return Err(CliError(format!(
            "{field}: must lie in [0, 90) degrees (got {value})"
        )));
    }
    Angle::from_degrees(value).map_err(|err| CliError(format!("{field}: {err}")))
}

// --- project config (analyze) ---

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectConfigFile {
    pub gear: GearConfigFile,
    pub fabric: FabricConfigFile,
    pub motor_torque_nm: f64,
    pub measured_resistance_n: f64,
    #[serde(default = "default_provenance")]
    pub resistance_provenance: String,
    #[serde(default = "default_safety_factor")]
    pub safety_factor: f64,
    #[serde(default = "default_resample_n")]
    pub resample_n: usize,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GearConfigFile {
    pub reference_diameter_mm: f64,
    pub mass_kg: f64,
    pub contact_offset_mm: f64,
    #[serde(default = "default_pressure_angle_deg")]
    pub pressure_angle_deg: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FabricConfigFile {
    pub label: String,
    /// Measured rolling-resistance coefficient for this fabric; when
    /// omitted, the coefficient implied by the gear contact geometry is
    /// used instead.
    #[serde(default)]
    pub rolling_coefficient: Option<f64>,
    #[serde(default)]
    pub gradient_deg: f64,
}

fn default_provenance() -> String {
    "manual".to_string()
}

fn default_safety_factor() -> f64 {
    1.5
}

fn default_resample_n() -> usize {
    20
}

fn default_pressure_angle_deg() -> f64 {
    20.0
}

/// A project config converted to domain values, with the raw file kept for
/// echoing the user's own numbers back in reports.
pub struct LoadedProject {
    pub file: ProjectConfigFile,
    pub gear: GearSpec,
    pub fabric: FabricSurface,
    /// Where the rolling coefficient came from: the fabric entry or the
    /// gear contact geometry.
    pub coefficient_source: &'static str,
    pub motor_torque: Torque,
    pub resistance: MeasuredResistance,
    pub safety_factor: Dimensionless,
}

pub fn load_project(path: &Path) -> Result<LoadedProject, CliError> {
    let text = read_file(path)?;
    let file: ProjectConfigFile = parse_json(path, &text)?;

    let d_mm = positive("gear.reference_diameter_mm", file.gear.reference_diameter_mm)?;
    let mass_kg = non_negative("gear.mass_kg", file.gear.mass_kg)?;
    let offset_mm = non_negative("gear.contact_offset_mm", file.gear.contact_offset_mm)?;
    if offset_mm >= d_mm / 2.0 {
        return Err(CliError(format!(
            "gear.contact_offset_mm: must be smaller than half the reference diameter (got {offset_mm})"
        )));
    }
    let pressure_angle = angle_degrees("gear.pressure_angle_deg", file.gear.pressure_angle_deg)?;
    let gear = GearSpec::new(
        Length::from_millimeters(d_mm).map_err(|err| CliError(format!("gear: {err}")))?,
        Mass::from_kilograms(mass_kg).map_err(|err| CliError(format!("gear: {err}")))?,
        Length::from_millimeters(offset_mm).map_err(|err| CliError(format!("gear: {err}")))?,
        pressure_angle,
    )
    .map_err(|err| CliError(format!("gear: {err}")))?;

    let (coefficient, coefficient_source) = match file.fabric.rolling_coefficient {
        Some(value) => {
            non_negative("fabric.rolling_coefficient", value)?;
            (
                Dimensionless::new(value)
                    .map_err(|err| CliError(format!("fabric.rolling_coefficient: {err}")))?,
                "fabric config",
            )
        }
        None => (gear.rolling_coefficient(), "gear geometry"),
    };
    let gradient = angle_degrees("fabric.gradient_deg", file.fabric.gradient_deg)?;
    let fabric = FabricSurface::new(coefficient, gradient, file.fabric.label.clone())
        .map_err(|err| CliError(format!("fabric: {err}")))?;

    let torque_nm = non_negative("motor_torque_nm", file.motor_torque_nm)?;
    let motor_torque = Torque::from_newton_meters(torque_nm)
        .map_err(|err| CliError(format!("motor_torque_nm: {err}")))?;

    let resistance_n = non_negative("measured_resistance_n", file.measured_resistance_n)?;
    let resistance = MeasuredResistance::new(
        Force::from_newtons(resistance_n)
            .map_err(|err| CliError(format!("measured_resistance_n: {err}")))?,
        file.resistance_provenance.clone(),
    );

    finite("safety_factor", file.safety_factor)?;
    if file.safety_factor < 1.0 {
        return Err(CliError(format!(
            "safety_factor: must be at least 1 (got {})",
            file.safety_factor
        )));
    }
    let safety_factor = Dimensionless::new(file.safety_factor)
        .map_err(|err| CliError(format!("safety_factor: {err}")))?;

    if file.resample_n < 2 {
        return Err(CliError(format!(
            "resample_n: must be at least 2 (got {})",
            file.resample_n
        )));
    }

    Ok(LoadedProject {
        file,
        gear,
        fabric,
        coefficient_source,
        motor_torque,
        resistance,
        safety_factor,
    })
}

// --- sizing request (size) ---

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SizingRequestFile {
    pub required_force_n: f64,
    pub diameters_mm: Vec<f64>,
    pub torques_nm: Vec<f64>,
    #[serde(default)]
    pub margin_floor_n: f64,
}

pub struct LoadedSizing {
    pub file: SizingRequestFile,
    pub request: hemforce_core::sizing::SizingRequest,
}

pub fn load_sizing(path: &Path) -> Result<LoadedSizing, CliError> {
    let text = read_file(path)?;
    let file: SizingRequestFile = parse_json(path, &text)?;

    let required_n = non_negative("required_force_n", file.required_force_n)?;
    if file.diameters_mm.is_empty() {
        return Err(CliError("diameters_mm: must not be empty".to_string()));
    }
    if file.torques_nm.is_empty() {
        return Err(CliError("torques_nm: must not be empty".to_string()));
    }
    let mut diameters = Vec::with_capacity(file.diameters_mm.len());
    for (i, &d_mm) in file.diameters_mm.iter().enumerate() {
        positive(&format!("diameters_mm[{i}]"), d_mm)?;
        diameters.push(
            Length::from_millimeters(d_mm)
                .map_err(|err| CliError(format!("diameters_mm[{i}]: {err}")))?,
        );
    }
    let mut torques = Vec::with_capacity(file.torques_nm.len());
    for (i, &t_nm) in file.torques_nm.iter().enumerate() {
        non_negative(&format!("torques_nm[{i}]"), t_nm)?;
        torques.push(
            Torque::from_newton_meters(t_nm)
                .map_err(|err| CliError(format!("torques_nm[{i}]: {err}")))?,
        );
    }
    let floor_n = non_negative("margin_floor_n", file.margin_floor_n)?;

    let request = hemforce_core::sizing::SizingRequest::new(
        Force::from_newtons(required_n)
            .map_err(|err| CliError(format!("required_force_n: {err}")))?,
        diameters,
        torques,
        Force::from_newtons(floor_n).map_err(|err| CliError(format!("margin_floor_n: {err}")))?,
    )
    .map_err(|err| CliError(format!("sizing request: {err}")))?;

    Ok(LoadedSizing { file, request })
}

// --- feed scenario (simulate) ---

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    delivered_force_n: f64,
    resistance: serde_json::Value,
    cycles: u64,
    nominal_advance_mm: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantResistanceFile {
    force_n: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesResistanceFile {
    fabric_label: String,
    samples: Vec<SeriesSampleFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesSampleFile {
    t_s: f64,
    #[serde(rename = "force_N")]
    force_n: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct NoiseResistanceFile {
    base_n: f64,
    amplitude_n: f64,
    seed: u64,
}

pub struct LoadedScenario {
    pub scenario: FeedScenario,
    /// Echoed inputs for reports.
    pub delivered_force_n: f64,
    pub resistance_kind: &'static str,
    pub cycles: usize,
    pub nominal_advance_mm: f64,
}

/// The resistance entry is a tagged object; the tag is dispatched by hand
/// because serde cannot combine internally tagged enums with
/// `deny_unknown_fields`, and unknown keys must stay hard errors.
fn parse_resistance(value: serde_json::Value) -> Result<(ResistanceModel, &'static str), CliError> {
    let serde_json::Value::Object(mut map) = value else {
        return Err(CliError(
            "resistance: must be an object with a \"type\" field".to_string(),
        ));
    };
    let Some(tag) = map.remove("type") else {
        return Err(CliError(
            "resistance.type: missing (expected \"constant\", \"series\" or \"constant_plus_noise\")"
                .to_string(),
        ));
    };
    let Some(tag) = tag.as_str().map(str::to_owned) else {
        return Err(CliError("resistance.type: must be a string".to_string()));
    };
    let rest = serde_json::Value::Object(map);

    match tag.as_str() {
        "constant" => {
            let body: ConstantResistanceFile = serde_json::from_value(rest)
                .map_err(|err| CliError(format!("resistance: {err}")))?;
            non_negative("resistance.force_n", body.force_n)?;
            let force = Force::from_newtons(body.force_n)
                .map_err(|err| CliError(format!("resistance.force_n: {err}")))?;
            Ok((ResistanceModel::Constant(force), "constant"))
        }
        "series" => {
            let body: SeriesResistanceFile = serde_json::from_value(rest)
                .map_err(|err| CliError(format!("resistance: {err}")))?;
            if body.samples.len() < 2 {
                return Err(CliError(format!(
                    "resistance.samples: need at least 2 samples (got {})",
                    body.samples.len()
                )));
            }
            let mut samples = Vec::with_capacity(body.samples.len());
            for (i, sample) in body.samples.iter().enumerate() {
                finite(&format!("resistance.samples[{i}].t_s"), sample.t_s)?;
                if i > 0 && sample.t_s <= body.samples[i - 1].t_s {
                    return Err(CliError(format!(
                        "resistance.samples[{i}].t_s: must increase over the previous sample"
                    )));
                }
                non_negative(&format!("resistance.samples[{i}].force_N"), sample.force_n)?;
                samples.push(GaugeSample {
                    time_s: sample.t_s,
                    force: Force::from_newtons(sample.force_n).map_err(|err| {
                        CliError(format!("resistance.samples[{i}].force_N: {err}"))
                    })?,
                });
            }
            let series = PullGaugeSeries::new(samples, body.fabric_label)
                .map_err(|err| CliError(format!("resistance.samples: {err}")))?;
            Ok((ResistanceModel::Series(series), "series"))
        }
        "constant_plus_noise" => {
            let body: NoiseResistanceFile = serde_json::from_value(rest)
                .map_err(|err| CliError(format!("resistance: {err}")))?;
            non_negative("resistance.base_n", body.base_n)?;
            non_negative("resistance.amplitude_n", body.amplitude_n)?;
            Ok((
                ResistanceModel::ConstantPlusNoise {
                    base: Force::from_newtons(body.base_n)
                        .map_err(|err| CliError(format!("resistance.base_n: {err}")))?,
                    amplitude: Force::from_newtons(body.amplitude_n)
                        .map_err(|err| CliError(format!("resistance.amplitude_n: {err}")))?,
                    seed: body.seed,
                },
                "constant_plus_noise",
            ))
        }
        other => Err(CliError(format!(
            "resistance.type: must be \"constant\", \"series\" or \"constant_plus_noise\" (got \"{other}\")"
        ))),
    }
}

pub fn load_scenario(path: &Path) -> Result<LoadedScenario, CliError> {
    let text = read_file(path)?;
    let file: ScenarioFile = parse_json(path, &text)?;

    let delivered_n = non_negative("delivered_force_n", file.delivered_force_n)?;
    if file.cycles < 1 {
        return Err(CliError(format!(
            "cycles: must be at least 1 (got {})",
            file.cycles
        )));
    }
    let cycles = usize::try_from(file.cycles)
        .map_err(|_| CliError(format!("cycles: too large (got {})", file.cycles)))?;
    let advance_mm = positive("nominal_advance_mm", file.nominal_advance_mm)?;

    let (resistance, resistance_kind) = parse_resistance(file.resistance)?;
    let scenario = FeedScenario::new(
        Force::from_newtons(delivered_n)
            .map_err(|err| CliError(format!("delivered_force_n: {err}")))?,
        resistance,
        cycles,
        Length::from_millimeters(advance_mm)
            .map_err(|err| CliError(format!("nominal_advance_mm: {err}")))?,
    )
    .map_err(|err| CliError(format!("scenario: {err}")))?;

    Ok(LoadedScenario {
        scenario,
        delivered_force_n: delivered_n,
        resistance_kind,
        cycles,
        nominal_advance_mm: advance_mm,
    })
}
