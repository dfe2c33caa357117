//! Report assembly and rendering.
//!
//! Every command produces one report value that is rendered three ways:
//! aligned plain text for humans, JSON for machines, and CSV for plotting
//! or spreadsheet import. Rendering is fully deterministic — fixed field
//! order, fixed column widths, locale-independent numbers — so outputs are
//! stable enough to diff and to pin in golden tests.

use hemforce_core::feedsim::FeedResult;
use hemforce_core::gauge::SeriesSummary;
use hemforce_core::model::{
    decompose_transmission_force, hub_pull_force, normal_force, rolling_resistance_graded,
    tangential_force_from_torque,
};
use hemforce_core::sizing::SizingResult;
use hemforce_core::{format_decimal, Force};
use serde::Serialize;

use crate::config::{LoadedProject, LoadedScenario, SizingRequestFile};
use crate::CliError;

pub const TOOL: &str = "hemforce";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn header(command: &str, input_label: &str, input_name: &str) -> String {
    format!("{TOOL} v{VERSION} {command}\n{input_label}: {input_name}\n")
}

// --- analyze ---

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: String,
    pub gear: GearEcho,
    pub fabric: FabricEcho,
    pub forces: ForcesBlock,
    pub feasibility: FeasibilityBlock,
    pub buffered_requirement: BufferedRequirement,
}

#[derive(Serialize)]
pub struct GearEcho {
    pub reference_diameter_mm: f64,
    pub mass_kg: f64,
    pub contact_offset_mm: f64,
    pub pressure_angle_deg: f64,
}

#[derive(Serialize)]
pub struct FabricEcho {
    pub label: String,
    pub gradient_deg: f64,
    pub rolling_coefficient: f64,
    pub coefficient_source: &'static str,
}

#[derive(Serialize)]
pub struct ForcesBlock {
    pub normal_n: f64,
    pub rolling_resistance_n: f64,
    pub hub_pull_n: f64,
    pub drive_tangential_n: f64,
    pub drive_radial_n: f64,
    pub drive_axial_n: f64,
    pub transmission_n: f64,
}

#[derive(Serialize)]
pub struct FeasibilityBlock {
    pub delivered_n: f64,
    pub resistance_n: f64,
    pub resistance_provenance: String,
    pub margin_n: f64,
    pub feasible: bool,
}

/// The safety-factored requirement is informational: the verdict above uses
/// the raw resistance, so the buffer is never applied twice.
#[derive(Serialize)]
pub struct BufferedRequirement {
    pub safety_factor: f64,
    pub required_n: f64,
}

/// Runs the full force chain: rolling resistance from the fabric
/// coefficient (or gear geometry), delivered tangential force from the
/// motor torque, decomposition at the pressure angle, and the strict
/// feasibility verdict against the measured resistance.
pub fn build_analyze(
    project: &LoadedProject,
    config_name: &str,
) -> Result<AnalyzeReport, CliError> {
    let chain = |err: hemforce_core::ModelError| CliError(format!("analysis failed: {err}"));

    let coefficient = project.fabric.rolling_coefficient();
    let normal = normal_force(project.gear.weight());
    let rolling =
        rolling_resistance_graded(coefficient, project.gear.mass(), project.fabric.gradient())
            .map_err(chain)?;
    let hub_pull = hub_pull_force(rolling);

    let delivered =
        tangential_force_from_torque(project.motor_torque, project.gear.reference_diameter())
            .map_err(chain)?;
    // The delivered force is the tangential component of the tooth-contact
    // transmission force, so the transmission force is delivered / cos(α₁).
    let alpha = project.gear.pressure_angle();
    let transmission = Force::from_newtons(delivered.newtons() / alpha.radians().cos())
        .map_err(chain)?;
    let decomposition = decompose_transmission_force(transmission, alpha).map_err(chain)?;

    let verdict = hemforce_core::model::check_feasibility(delivered, &project.resistance);
    let required_n = project.resistance.total().newtons() * project.safety_factor.value();

    Ok(AnalyzeReport {
        tool: TOOL,
        version: VERSION,
        command: "analyze",
        config: config_name.to_string(),
        gear: GearEcho {
            reference_diameter_mm: project.file.gear.reference_diameter_mm,
            mass_kg: project.file.gear.mass_kg,
            contact_offset_mm: project.file.gear.contact_offset_mm,
            pressure_angle_deg: project.file.gear.pressure_angle_deg,
        },
        fabric: FabricEcho {
            label: project.fabric.label().to_string(),
            gradient_deg: project.file.fabric.gradient_deg,
            rolling_coefficient: coefficient.value(),
            coefficient_source: project.coefficient_source,
        },
        forces: ForcesBlock {
            normal_n: normal.newtons(),
            rolling_resistance_n: rolling.newtons(),
            hub_pull_n: hub_pull.newtons(),
            drive_tangential_n: delivered.newtons(),
            drive_radial_n: decomposition.radial.newtons(),
            drive_axial_n: decomposition.axial.newtons(),
            transmission_n: transmission.newtons(),
        },
        feasibility: FeasibilityBlock {
            delivered_n: verdict.delivered.newtons(),
            resistance_n: verdict.resistance.newtons(),
            resistance_provenance: project.resistance.provenance().to_string(),
            margin_n: verdict.margin_newtons,
            feasible: verdict.feasible,
        },
        buffered_requirement: BufferedRequirement {
            safety_factor: project.safety_factor.value(),
            required_n,
        },
    })
}

impl AnalyzeReport {
    pub fn to_text(&self) -> String {
        let mut out = header("analyze", "config", &self.config);
        let line = |out: &mut String, label: &str, value: String| {
            out.push_str(&format!("  {label:<20}: {value}\n"));
        };

        out.push_str("\ngear\n");
        line(
            &mut out,
            "reference diameter",
            format!("{} mm", format_decimal(self.gear.reference_diameter_mm)),
        );
        line(&mut out, "mass", format!("{} kg", format_decimal(self.gear.mass_kg)));
        line(
            &mut out,
            "contact offset",
            format!("{} mm", format_decimal(self.gear.contact_offset_mm)),
        );
        line(
            &mut out,
            "pressure angle",
            format!("{} deg", format_decimal(self.gear.pressure_angle_deg)),
        );

        out.push_str("fabric\n");
        line(&mut out, "label", self.fabric.label.clone());
        line(
            &mut out,
            "gradient",
            format!("{} deg", format_decimal(self.fabric.gradient_deg)),
        );
        line(
            &mut out,
            "rolling coefficient",
            format!(
                "{} ({})",
                format_decimal(self.fabric.rolling_coefficient),
                self.fabric.coefficient_source
            ),
        );

        out.push_str("\nforces\n");
        line(
            &mut out,
            "normal force",
            format!("{} N", format_decimal(self.forces.normal_n)),
        );
        line(
            &mut out,
            "rolling resistance",
            format!("{} N", format_decimal(self.forces.rolling_resistance_n)),
        );
        line(
            &mut out,
            "hub pull force",
            format!("{} N", format_decimal(self.forces.hub_pull_n)),
        );
        line(
            &mut out,
            "drive tangential",
            format!("{} N", format_decimal(self.forces.drive_tangential_n)),
        );
        line(
            &mut out,
            "drive radial",
            format!("{} N", format_decimal(self.forces.drive_radial_n)),
        );
        line(
            &mut out,
            "drive axial",
            format!("{} N", format_decimal(self.forces.drive_axial_n)),
        );
        line(
            &mut out,
            "transmission",
            format!("{} N", format_decimal(self.forces.transmission_n)),
        );

        out.push_str("\nfeasibility\n");
        line(
            &mut out,
            "delivered",
            format!("{} N", format_decimal(self.feasibility.delivered_n)),
        );
        line(
            &mut out,
            "resistance",
            format!(
                "{} N ({})",
                format_decimal(self.feasibility.resistance_n),
                self.feasibility.resistance_provenance
            ),
        );
        line(
            &mut out,
            "margin",
            format!("{} N", format_decimal(self.feasibility.margin_n)),
        );
        line(
            &mut out,
            "buffered requirement",
            format!(
                "{} N (safety factor {})",
                format_decimal(self.buffered_requirement.required_n),
                format_decimal(self.buffered_requirement.safety_factor)
            ),
        );
        line(
            &mut out,
            "verdict",
            if self.feasibility.feasible {
                "FEASIBLE".to_string()
            } else {
                "INFEASIBLE".to_string()
            },
        );
        out.pop();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("metric,value");
        let mut row = |metric: &str, value: String| {
            out.push_str(&format!("\n{metric},{value}"));
        };
        row("rolling_coefficient", format_decimal(self.fabric.rolling_coefficient));
        row("normal_N", format_decimal(self.forces.normal_n));
        row("rolling_resistance_N", format_decimal(self.forces.rolling_resistance_n));
        row("hub_pull_N", format_decimal(self.forces.hub_pull_n));
        row("drive_tangential_N", format_decimal(self.forces.drive_tangential_n));
        row("drive_radial_N", format_decimal(self.forces.drive_radial_n));
        row("drive_axial_N", format_decimal(self.forces.drive_axial_n));
        row("transmission_N", format_decimal(self.forces.transmission_n));
        row("delivered_N", format_decimal(self.feasibility.delivered_n));
        row("resistance_N", format_decimal(self.feasibility.resistance_n));
        row("margin_N", format_decimal(self.feasibility.margin_n));
        row(
            "required_with_buffer_N",
            format_decimal(self.buffered_requirement.required_n),
        );
        row("feasible", self.feasibility.feasible.to_string());
        out
    }
}

// --- ingest ---

#[derive(Serialize)]
pub struct IngestReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: String,
    pub fabric_label: String,
    pub recorded_samples: usize,
    pub resampled_samples: usize,
    pub peak_n: f64,
    pub peak_time_s: f64,
    pub mean_n: f64,
    pub final_n: f64,
    pub safety_factor: f64,
    pub required_n: f64,
}

/// Statistics are taken from the resampled series — the equally spaced
/// samples are the dataset of record, mirroring how frames are extracted
/// from a recording.
pub fn build_ingest(
    input_name: &str,
    recorded_samples: usize,
    summary: &SeriesSummary,
    safety_factor: f64,
    required: Force,
) -> IngestReport {
    IngestReport {
        tool: TOOL,
        version: VERSION,
        command: "ingest",
        input: input_name.to_string(),
        fabric_label: summary.fabric_label.clone(),
        recorded_samples,
        resampled_samples: summary.sample_count,
        peak_n: summary.peak_force.newtons(),
        peak_time_s: summary.peak_time_s,
        mean_n: summary.mean_force.newtons(),
        final_n: summary.final_force.newtons(),
        safety_factor,
        required_n: required.newtons(),
    }
}

impl IngestReport {
    pub fn to_text(&self) -> String {
        let mut out = header("ingest", "input", &self.input);
        out.push('\n');
        let line = |out: &mut String, label: &str, value: String| {
            out.push_str(&format!("  {label:<20}: {value}\n"));
        };
        line(&mut out, "fabric label", self.fabric_label.clone());
        line(&mut out, "recorded samples", self.recorded_samples.to_string());
        line(&mut out, "resampled samples", self.resampled_samples.to_string());
        line(
            &mut out,
            "peak force",
            format!(
                "{} N at {} s",
                format_decimal(self.peak_n),
                format_decimal(self.peak_time_s)
            ),
        );
        line(&mut out, "mean force", format!("{} N", format_decimal(self.mean_n)));
        line(&mut out, "final force", format!("{} N", format_decimal(self.final_n)));
        line(&mut out, "safety factor", format_decimal(self.safety_factor));
        line(
            &mut out,
            "required pull force",
            format!("{} N", format_decimal(self.required_n)),
        );
        out.pop();
        out
    }
}

// --- size ---

#[derive(Serialize)]
pub struct SizeReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: String,
    pub required_force_n: f64,
    pub margin_floor_n: f64,
    pub rows: Vec<SizeRowOut>,
    pub min_torque_per_diameter: Vec<MinTorqueOut>,
}

#[derive(Serialize)]
pub struct SizeRowOut {
    pub d_mm: f64,
    pub torque_nm: f64,
    pub force_n: f64,
    pub margin_n: f64,
    pub feasible: bool,
}

#[derive(Serialize)]
pub struct MinTorqueOut {
    pub d_mm: f64,
    pub min_torque_nm: f64,
}

pub fn build_size(input_name: &str, file: &SizingRequestFile, result: &SizingResult) -> SizeReport {
    SizeReport {
        tool: TOOL,
        version: VERSION,
        command: "size",
        input: input_name.to_string(),
        required_force_n: file.required_force_n,
        margin_floor_n: file.margin_floor_n,
        rows: result
            .rows
            .iter()
            .map(|row| SizeRowOut {
                d_mm: row.diameter.millimeters(),
                torque_nm: row.torque.newton_meters(),
                force_n: row.delivered.newtons(),
                margin_n: row.margin_newtons,
                feasible: row.feasible,
            })
            .collect(),
        min_torque_per_diameter: result
            .min_torque_per_diameter
            .iter()
            .map(|(d, t)| MinTorqueOut {
                d_mm: d.millimeters(),
                min_torque_nm: t.newton_meters(),
            })
            .collect(),
    }
}

impl SizeReport {
    pub fn to_text(&self) -> String {
        let mut out = header("size", "input", &self.input);
        out.push('\n');
        out.push_str(&format!(
            "  required force : {} N\n",
            format_decimal(self.required_force_n)
        ));
        out.push_str(&format!(
            "  margin floor   : {} N\n\n",
            format_decimal(self.margin_floor_n)
        ));
        out.push_str(&format!(
            "{:>6}{:>10}{:>12}{:>12}{:>10}\n",
            "d_mm", "T_Nm", "force_N", "margin_N", "feasible"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:>6}{:>10}{:>12}{:>12}{:>10}\n",
                format_decimal(row.d_mm),
                format_decimal(row.torque_nm),
                format_decimal(row.force_n),
                format_decimal(row.margin_n),
                if row.feasible { "yes" } else { "no" }
            ));
        }
        out.push_str("\nminimum torque per diameter\n");
        out.push_str(&format!("{:>6}{:>10}\n", "d_mm", "T_Nm"));
        for entry in &self.min_torque_per_diameter {
            out.push_str(&format!(
                "{:>6}{:>10}\n",
                format_decimal(entry.d_mm),
                format_decimal(entry.min_torque_nm)
            ));
        }
        out.pop();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("d_mm,T_Nm,force_N,margin_N,feasible");
        for row in &self.rows {
            out.push_str(&format!(
                "\n{},{},{},{},{}",
                format_decimal(row.d_mm),
                format_decimal(row.torque_nm),
                format_decimal(row.force_n),
                format_decimal(row.margin_n),
                row.feasible
            ));
        }
        out
    }
}

// --- simulate ---

#[derive(Serialize)]
pub struct SimulateReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: String,
    pub resistance_model: &'static str,
    pub delivered_n: f64,
    pub cycles: usize,
    pub slip_count: usize,
    pub slip_rate: f64,
    pub nominal_advance_mm: f64,
    pub mean_advance_mm: f64,
    pub advance_std_mm: f64,
    pub total_advance_mm: f64,
}

pub fn build_simulate(
    input_name: &str,
    loaded: &LoadedScenario,
    result: &FeedResult,
) -> SimulateReport {
    let advanced = (loaded.cycles - result.slip_count) as f64;
    SimulateReport {
        tool: TOOL,
        version: VERSION,
        command: "simulate",
        input: input_name.to_string(),
        resistance_model: loaded.resistance_kind,
        delivered_n: loaded.delivered_force_n,
        cycles: loaded.cycles,
        slip_count: result.slip_count,
        slip_rate: result.slip_rate.value(),
        nominal_advance_mm: loaded.nominal_advance_mm,
        mean_advance_mm: result.mean_advance.millimeters(),
        advance_std_mm: result.advance_std.millimeters(),
        total_advance_mm: advanced * loaded.nominal_advance_mm,
    }
}

impl SimulateReport {
    pub fn to_text(&self) -> String {
        let mut out = header("simulate", "input", &self.input);
        out.push('\n');
        let line = |out: &mut String, label: &str, value: String| {
            out.push_str(&format!("  {label:<16}: {value}\n"));
        };
        line(&mut out, "resistance model", self.resistance_model.to_string());
        line(
            &mut out,
            "delivered force",
            format!("{} N", format_decimal(self.delivered_n)),
        );
        line(&mut out, "cycles", self.cycles.to_string());
        line(&mut out, "slips", self.slip_count.to_string());
        line(&mut out, "slip rate", format_decimal(self.slip_rate));
        line(
            &mut out,
            "nominal advance",
            format!("{} mm", format_decimal(self.nominal_advance_mm)),
        );
        line(
            &mut out,
            "mean advance",
            format!("{} mm", format_decimal(self.mean_advance_mm)),
        );
        line(
            &mut out,
            "advance stddev",
            format!("{} mm", format_decimal(self.advance_std_mm)),
        );
        line(
            &mut out,
            "total advance",
            format!("{} mm", format_decimal(self.total_advance_mm)),
        );
        out.pop();
        out
    }
}

/// Per-cycle CSV: cycle index (1-based), advance in mm, slip flag.
pub fn feed_cycles_csv(result: &FeedResult) -> String {
    let mut out = String::from("cycle,advance_mm,slipped");
    for (index, advance) in result.advances.iter().enumerate() {
        let slipped = advance.meters() == 0.0;
        out.push_str(&format!(
            "\n{},{},{}",
            index + 1,
            format_decimal(advance.millimeters()),
            slipped
        ));
    }
    out
}
