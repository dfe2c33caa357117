//! Command-line orchestration for the force-analysis toolkit.
//!
//! Four subcommands cover the workflow end to end: `analyze` runs the
//! static force chain from a project config, `ingest` processes a
//! pull-gauge recording, `size` evaluates a catalog grid of gear/motor
//! candidates, and `simulate` runs the stitch-cycle slip simulation.
//!
//! Exit codes: 0 for success (including an all-infeasible sizing grid),
//! 2 for any input error, 3 when `analyze` reaches an infeasible verdict.

pub mod catalog;
pub mod config;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hemforce_core::feedsim::simulate_feed;
use hemforce_core::gauge;
use hemforce_core::sizing::evaluate_grid;
use hemforce_core::Dimensionless;
use serde::Serialize;

/// An input problem, reported on stderr; the process exits with code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

#[derive(Parser)]
#[command(
    name = "hemforce",
    version,
    about = "Force analysis and sizing for a fabric-pulling spur gear"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the force chain from a project config and judge drive feasibility
    Analyze {
        /// Project configuration (JSON)
        #[arg(long)]
        config: PathBuf,
        /// Directory for report artifacts (default: $HEMFORCE_OUT_DIR or ".")
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Stdout rendering
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Resample and summarize a pull-gauge CSV recording
    Ingest {
        /// Recording in `t_s,force_N` CSV form
        #[arg(long)]
        input: PathBuf,
        /// Number of equally spaced samples to resample onto
        #[arg(long, default_value_t = 20)]
        resample_n: usize,
        /// Multiplier on the recorded peak for the required pull force
        #[arg(long, default_value_t = 1.5)]
        safety_factor: f64,
        /// Fabric description attached to the series
        #[arg(long, default_value = "unlabeled")]
        fabric_label: String,
        /// Directory for report artifacts (default: $HEMFORCE_OUT_DIR or ".")
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Stdout rendering
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Evaluate a grid of candidate gear diameters and motor torques
    Size {
        /// Sizing request (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Directory for report artifacts (default: $HEMFORCE_OUT_DIR or ".")
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Stdout rendering
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Simulate stitch-cycle feed slip from a scenario file
    Simulate {
        /// Feed scenario (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Directory for report artifacts (default: $HEMFORCE_OUT_DIR or ".")
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Stdout rendering
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Executes a parsed invocation and maps errors to the exit-code contract.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze {
            config,
            out_dir,
            format,
        } => cmd_analyze(&config, out_dir, format),
        Command::Ingest {
            input,
            resample_n,
            safety_factor,
            fabric_label,
            out_dir,
            format,
        } => cmd_ingest(&input, resample_n, safety_factor, &fabric_label, out_dir, format),
        Command::Size {
            input,
            out_dir,
            format,
        } => cmd_size(&input, out_dir, format),
        Command::Simulate {
            input,
            out_dir,
            format,
        } => cmd_simulate(&input, out_dir, format),
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|err| CliError(format!("cannot read {}: {err}", path.display())))
}

/// File name used in reports, keeping output independent of where the
/// input happens to live.
fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|name| name.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string())
}

/// Output directory precedence: `--out-dir` flag, then the config's
/// `out_dir` (analyze only), then `$HEMFORCE_OUT_DIR`, then the working
/// directory.
fn resolve_out_dir(flag: Option<PathBuf>, from_config: Option<PathBuf>) -> PathBuf {
    flag.or(from_config)
        .or_else(|| std::env::var_os("HEMFORCE_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn write_artifact(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|err| CliError(format!("cannot create {}: {err}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|err| CliError(format!("cannot write {}: {err}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}

fn cmd_analyze(
    config_path: &Path,
    out_dir: Option<PathBuf>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    let project = config::load_project(config_path)?;
    let report = report::build_analyze(&project, &display_name(config_path))?;

    let dir = resolve_out_dir(out_dir, project.file.out_dir.clone());
    let json = to_pretty_json(&report);
    write_artifact(&dir, "analyze_report.json", &format!("{json}\n"))?;
    write_artifact(&dir, "analyze_report.txt", &format!("{}\n", report.to_text()))?;

    match format {
        OutputFormat::Text => println!("{}", report.to_text()),
        OutputFormat::Json => println!("{json}"),
        OutputFormat::Csv => println!("{}", report.to_csv()),
    }
    Ok(if report.feasibility.feasible { 0 } else { 3 })
}

fn cmd_ingest(
    input: &Path,
    resample_n: usize,
    safety_factor: f64,
    fabric_label: &str,
    out_dir: Option<PathBuf>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    if resample_n < 2 {
        return Err(CliError(format!(
            "--resample-n: must be at least 2 (got {resample_n})"
        )));
    }
    if !safety_factor.is_finite() || safety_factor < 1.0 {
        return Err(CliError(format!(
            "--safety-factor: must be at least 1 (got {safety_factor})"
        )));
    }

    let text = read_file(input)?;
    let series = gauge::parse_series(&text, fabric_label)
        .map_err(|err| CliError(format!("{}: {err}", input.display())))?
        .with_source(display_name(input));
    let recorded = series.samples().len();
    let resampled = gauge::resample_equally_spaced(&series, resample_n)
        .map_err(|err| CliError(format!("{}: {err}", input.display())))?;
    let summary = gauge::summarize(&resampled);
    let required = gauge::required_pull_force(
        &summary,
        Dimensionless::new(safety_factor)
            .map_err(|err| CliError(format!("--safety-factor: {err}")))?,
    )
    .map_err(|err| CliError(format!("--safety-factor: {err}")))?;

    let report = report::build_ingest(
        &display_name(input),
        recorded,
        &summary,
        safety_factor,
        required,
    );

    let dir = resolve_out_dir(out_dir, None);
    let stem = file_stem(input);
    let csv = resampled.to_canonical_csv();
    let json = to_pretty_json(&report);
    write_artifact(&dir, &format!("{stem}_resampled.csv"), &csv)?;
    write_artifact(&dir, &format!("{stem}_summary.json"), &format!("{json}\n"))?;

    match format {
        OutputFormat::Text => println!("{}", report.to_text()),
        OutputFormat::Json => println!("{json}"),
        OutputFormat::Csv => println!("{csv}"),
    }
    Ok(0)
}

fn cmd_size(input: &Path, out_dir: Option<PathBuf>, format: OutputFormat) -> Result<i32, CliError> {
    let loaded = config::load_sizing(input)?;
    let result = evaluate_grid(&loaded.request)
        .map_err(|err| CliError(format!("{}: {err}", input.display())))?;
    let report = report::build_size(&display_name(input), &loaded.file, &result);

    let dir = resolve_out_dir(out_dir, None);
    let json = to_pretty_json(&report);
    write_artifact(&dir, "sizing_result.csv", &report.to_csv())?;
    write_artifact(&dir, "sizing_result.json", &format!("{json}\n"))?;

    match format {
        OutputFormat::Text => println!("{}", report.to_text()),
        OutputFormat::Json => println!("{json}"),
        OutputFormat::Csv => println!("{}", report.to_csv()),
    }
    Ok(0)
}

fn cmd_simulate(
    input: &Path,
    out_dir: Option<PathBuf>,
    format: OutputFormat,
) -> Result<i32, CliError> {
    let loaded = config::load_scenario(input)?;
    let result = simulate_feed(&loaded.scenario)
        .map_err(|err| CliError(format!("{}: {err}", input.display())))?;
    let report = report::build_simulate(&display_name(input), &loaded, &result);
    let cycles_csv = report::feed_cycles_csv(&result);

    let dir = resolve_out_dir(out_dir, None);
    let json = to_pretty_json(&report);
    write_artifact(&dir, "feed_cycles.csv", &cycles_csv)?;
    write_artifact(&dir, "feed_summary.json", &format!("{json}\n"))?;

    match format {
        OutputFormat::Text => println!("{}", report.to_text()),
        OutputFormat::Json => println!("{json}"),
        OutputFormat::Csv => println!("{cycles_csv}"),
    }
    Ok(0)
}
