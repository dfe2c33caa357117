//! Catalog of the bundled example datasets.
//!
//! Every bundled input under `data/` is listed here with a provenance note
//! and a check that re-derives its key figures through the owning module.
//! The catalog is validated by the test suite, so a drifting dataset or a
//! broken reader fails loudly on a clean checkout.

use std::path::{Path, PathBuf};

use hemforce_core::feedsim::simulate_feed;
use hemforce_core::gauge::{parse_series, resample_equally_spaced, summarize};
use hemforce_core::sizing::evaluate_grid;

use crate::{config, report};

/// Directory holding the bundled example inputs, resolved relative to this
/// crate so tests work from any working directory.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub file: &'static str,
    /// States whether the data is constructed or measured, and which
    /// figures it is built around.
    pub provenance: &'static str,
    pub check: fn(&Path) -> Result<(), String>,
}

fn close(actual: f64, expected: f64, tol: f64, what: &str) -> Result<(), String> {
    if (actual - expected).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, got {actual}"))
    }
}

fn check_paper_case(path: &Path) -> Result<(), String> {
    let project = config::load_project(path).map_err(|e| e.to_string())?;
    let report = report::build_analyze(&project, "paper_case.json").map_err(|e| e.to_string())?;
    close(
        report.forces.drive_tangential_n,
        110.0,
        110.0 * 1e-9,
        "delivered tangential force",
    )?;
    close(report.feasibility.margin_n, 97.53, 1e-9, "feasibility margin")?;
    if !report.feasibility.feasible {
        return Err("expected a feasible verdict".to_string());
    }
    Ok(())
}

fn check_pull_run_peak(path: &Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read file: {e}"))?;
    let series = parse_series(&text, "check").map_err(|e| e.to_string())?;
    let summary = summarize(&series);
    if summary.sample_count != 20 {
        return Err(format!("expected 20 samples, got {}", summary.sample_count));
    }
    if summary.peak_force.newtons() != 13.16 {
        return Err(format!(
            "expected peak exactly 13.16 N, got {}",
            summary.peak_force.newtons()
        ));
    }
    close(summary.final_force.newtons(), 12.9, 1e-12, "final force")?;

    // The dataset sits exactly on its own 20-point equal-time grid, so
    // resampling must be a bit-exact no-op (canonical fixed point).
    let resampled = resample_equally_spaced(&series, 20).map_err(|e| e.to_string())?;
    if resampled.to_canonical_csv() != text {
        return Err("20-point resample is not a fixed point of the dataset".to_string());
    }
    Ok(())
}

fn check_sizing_grid(path: &Path) -> Result<(), String> {
    let loaded = config::load_sizing(path).map_err(|e| e.to_string())?;
    let result = evaluate_grid(&loaded.request).map_err(|e| e.to_string())?;
    if result.rows.len() != 9 {
        return Err(format!("expected 9 grid rows, got {}", result.rows.len()));
    }
    let anchor = result
        .rows
        .iter()
        .find(|row| {
            (row.diameter.millimeters() - 40.0).abs() < 1e-9
                && (row.torque.newton_meters() - 2.2).abs() < 1e-12
        })
        .ok_or("missing the (40 mm, 2.2 N·m) row")?;
    if !anchor.feasible {
        return Err("(40 mm, 2.2 N·m) row should be feasible".to_string());
    }
    close(anchor.margin_newtons, 97.53, 1e-9, "anchor row margin")?;
    let weakest = &result.rows[0];
    if weakest.feasible {
        return Err("(30 mm, 0.1 N·m) row should be infeasible".to_string());
    }
    Ok(())
}

fn check_feed_alternating(path: &Path) -> Result<(), String> {
    let loaded = config::load_scenario(path).map_err(|e| e.to_string())?;
    let result = simulate_feed(&loaded.scenario).map_err(|e| e.to_string())?;
    if loaded.cycles != 10 || result.slip_count != 5 {
        return Err(format!(
            "expected 5 slips over 10 cycles, got {} over {}",
            result.slip_count, loaded.cycles
        ));
    }
    if result.slip_rate.value() != 0.5 {
        return Err(format!("expected slip rate 0.5, got {}", result.slip_rate.value()));
    }
    Ok(())
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "drive operating point",
            file: "paper_case.json",
            provenance: "constructed config around the documented operating point \
                         (2.2 N·m motor, 40 mm gear, 12.47 N measured resistance)",
            check: check_paper_case,
        },
        CatalogEntry {
            name: "pull-gauge recording",
            file: "pull_run_peak.csv",
            provenance: "constructed, landmark-matched: starts at 0 N, reads 12 N at 8 s, \
                         peaks at 13.16 N — not digitized from an instrument",
            check: check_pull_run_peak,
        },
        CatalogEntry {
            name: "catalog sizing grid",
            file: "sizing_grid.json",
            provenance: "constructed 3×3 grid bracketing the documented (40 mm, 2.2 N·m) pair",
            check: check_sizing_grid,
        },
        CatalogEntry {
            name: "alternating feed scenario",
            file: "feed_alternating.json",
            provenance: "constructed scenario: 12 N drive against an 11 N / 13 N alternating \
                         series, slipping every other cycle",
            check: check_feed_alternating,
        },
    ]
}

/// Runs every entry's check against the bundled file; collects one message
/// per failing entry instead of stopping at the first.
pub fn validate_catalog() -> Result<(), Vec<String>> {
    let dir = data_dir();
    let mut failures = Vec::new();
    for entry in catalog() {
        let path = dir.join(entry.file);
        if !path.exists() {
            failures.push(format!("{}: missing file {}", entry.name, path.display()));
            continue;
        }
        if let Err(message) = (entry.check)(&path) {
            failures.push(format!("{}: {message}", entry.name));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}
