//! Pull-gauge recording ingestion.
//!
//! A pulling experiment produces a force-time recording from a hand-held
//! gauge. This module parses those recordings from CSV, resamples them onto
//! an equally spaced time grid, extracts peak/mean/final statistics, and
//! derives the required pulling force (peak times a safety factor). The peak
//! — not the mean — is what the drive must overcome, so the peak is what
//! feeds the feasibility check.

use crate::error::ModelError;
use crate::model::MeasuredResistance;
use crate::units::{Dimensionless, Force};

/// Column header every recording must start with.
pub const CSV_HEADER: &str = "t_s,force_N";

const DEFAULT_SOURCE: &str = "unspecified";

/// Rejection reasons for gauge recordings. Line numbers are 1-based and
/// count the header as line 1, matching what an editor shows for the file.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GaugeError {
    #[error("input is empty")]
    EmptyInput,

    #[error("line {line}: {reason}")]
    MalformedRow { line: usize, reason: String },

    #[error("line {line}: time must increase over the previous sample")]
    NonMonotoneTime { line: usize },

    #[error("line {line}: force must be non-negative")]
    NegativeForce { line: usize },

    #[error("a recording needs at least 2 samples (got {0})")]
    TooFewSamples(usize),

    #[error("resample count must be at least 2 (got {0})")]
    BadSampleCount(usize),

    #[error("safety factor must be at least 1 (got {0})")]
    SafetyFactorBelowOne(f64),

    #[error(transparent)]
    Model(#[from] ModelError),
}

/// One gauge reading: stopwatch-relative time and the measured pull force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeSample {
    pub time_s: f64,
    pub force: Force,
}

/// A validated force-time recording: at least two samples, times strictly
/// increasing, forces finite and non-negative (enforced by [`Force`]).
#[derive(Debug, Clone, PartialEq)]
pub struct PullGaugeSeries {
    samples: Vec<GaugeSample>,
    fabric_label: String,
    source: String,
}

impl PullGaugeSeries {
    /// Validates sample count, finite times and strict time monotonicity.
    /// Errors carry the line number the sample would occupy in CSV form.
    pub fn new(
        samples: Vec<GaugeSample>,
        fabric_label: impl Into<String>,
    ) -> Result<Self, GaugeError> {
        if samples.len() < 2 {
            return Err(GaugeError::TooFewSamples(samples.len()));
        }
        for (idx, sample) in samples.iter().enumerate() {
            let line = idx + 2;
            if !sample.time_s.is_finite() {
                return Err(GaugeError::MalformedRow {
                    line,
                    reason: format!("time must be finite (got {})", sample.time_s),
                });
            }
            if idx > 0 && sample.time_s <= samples[idx - 1].time_s {
                return Err(GaugeError::NonMonotoneTime { line });
            }
        }
        Ok(PullGaugeSeries {
            samples,
            fabric_label: fabric_label.into(),
            source: DEFAULT_SOURCE.to_string(),
        })
    }

    /// Tags where the recording came from (file name, experiment id, …);
    /// the tag travels into summaries and resistance provenance.
    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    pub fn samples(&self) -> &[GaugeSample] {
        &self.samples
    }

    pub fn fabric_label(&self) -> &str {
        &self.fabric_label
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Serializes back to the CSV interchange format: LF line endings, no
    /// trailing newline, numbers with up to six decimals.
    pub fn to_canonical_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        for sample in &self.samples {
            out.push('\n');
            out.push_str(&format_decimal(sample.time_s));
            out.push(',');
            out.push_str(&format_decimal(sample.force.newtons()));
        }
        out
    }
}

/// Formats a number with up to six decimals, trailing zeros trimmed,
/// locale-independent. Shared by every CSV/report writer so serialized
/// output is canonical.
pub fn format_decimal(value: f64) -> String {
    let mut s = format!("{value:.6}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Parses a recording in the CSV interchange format: header exactly
/// `t_s,force_N`, then one `<time>,<force>` row per sample. LF and CRLF are
/// both accepted; blank lines are tolerated only at the end of the file.
pub fn parse_series(csv_text: &str, fabric_label: &str) -> Result<PullGaugeSeries, GaugeError> {
    if csv_text.trim().is_empty() {
        return Err(GaugeError::EmptyInput);
    }

    let mut samples: Vec<GaugeSample> = Vec::new();
    let mut blank_seen_at: Option<usize> = None;
    for (idx, raw_line) in csv_text.lines().enumerate() {
        let line = idx + 1;
        let text = raw_line.trim_end_matches('\r');

        if line == 1 {
            if text != CSV_HEADER {
                return Err(GaugeError::MalformedRow {
                    line,
                    reason: format!("expected header \"{CSV_HEADER}\", got \"{text}\""),
                });
            }
            continue;
        }

        if text.trim().is_empty() {
            blank_seen_at.get_or_insert(line);
            continue;
        }
        if let Some(blank_line) = blank_seen_at {
            return Err(GaugeError::MalformedRow {
                line: blank_line,
                reason: "blank line in the middle of the data".to_string(),
            });
        }

        let mut fields = text.split(',');
        let (time_text, force_text) = match (fields.next(), fields.next(), fields.next()) {
            (Some(t), Some(f), None) => (t, f),
            _ => {
                return Err(GaugeError::MalformedRow {
                    line,
                    reason: format!(
                        "expected 2 comma-separated fields, got {}",
                        text.split(',').count()
                    ),
                })
            }
        };

        let time_s: f64 = time_text.trim().parse().map_err(|_| GaugeError::MalformedRow {
            line,
            reason: format!("cannot parse time \"{time_text}\" as a number"),
        })?;
        if !time_s.is_finite() {
            return Err(GaugeError::MalformedRow {
                line,
                reason: format!("time must be finite (got {time_s})"),
            });
        }

        let force_n: f64 = force_text.trim().parse().map_err(|_| GaugeError::MalformedRow {
            line,
            reason: format!("cannot parse force \"{force_text}\" as a number"),
        })?;
        if !force_n.is_finite() {
            return Err(GaugeError::MalformedRow {
                line,
                reason: format!("force must be finite (got {force_n})"),
            });
        }
        if force_n < 0.0 {
            return Err(GaugeError::NegativeForce { line });
        }

        if let Some(previous) = samples.last() {
            if time_s <= previous.time_s {
                return Err(GaugeError::NonMonotoneTime { line });
            }
        }

        samples.push(GaugeSample {
            time_s,
            force: Force::from_newtons(force_n)?,
        });
    }

    if samples.len() < 2 {
        return Err(GaugeError::TooFewSamples(samples.len()));
    }
    Ok(PullGaugeSeries {
        samples,
        fabric_label: fabric_label.to_string(),
        source: DEFAULT_SOURCE.to_string(),
    })
}

/// Resamples a recording onto `n` equally spaced times spanning the same
/// interval. The first and last samples are copied bit-exactly; interior
/// forces come from linear interpolation between the neighboring samples,
/// clamped to the segment's force range so interpolation can never exceed
/// the recorded peak.
pub fn resample_equally_spaced(
    series: &PullGaugeSeries,
    n: usize,
) -> Result<PullGaugeSeries, GaugeError> {
    if n < 2 {
        return Err(GaugeError::BadSampleCount(n));
    }
    let samples = series.samples();
    let first = samples[0];
    let last = samples[samples.len() - 1];
    let span = last.time_s - first.time_s;

    let mut resampled = Vec::with_capacity(n);
    resampled.push(first);
    for k in 1..n - 1 {
        let t = first.time_s + (k as f64) * span / ((n - 1) as f64);
        // First sample with time > t bounds the segment from above.
        let hi_idx = samples
            .partition_point(|s| s.time_s <= t)
            .clamp(1, samples.len() - 1);
        let lo = samples[hi_idx - 1];
        let hi = samples[hi_idx];
        let u = (t - lo.time_s) / (hi.time_s - lo.time_s);
        let raw = lo.force.newtons() + u * (hi.force.newtons() - lo.force.newtons());
        let clamped = raw
            .max(lo.force.newtons().min(hi.force.newtons()))
            .min(lo.force.newtons().max(hi.force.newtons()));
        resampled.push(GaugeSample {
            time_s: t,
            force: Force::raw(clamped),
        });
    }
    resampled.push(last);

    Ok(PullGaugeSeries {
        samples: resampled,
        fabric_label: series.fabric_label.clone(),
        source: series.source.clone(),
    })
}

/// Statistics extracted from one recording.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSummary {
    /// Largest recorded force; ties resolve to the earliest time.
    pub peak_force: Force,
    pub peak_time_s: f64,
    /// Time-weighted average via the trapezoidal rule (informational; the
    /// feasibility chain uses the peak).
    pub mean_force: Force,
    pub final_force: Force,
    pub sample_count: usize,
    pub fabric_label: String,
    pub source: String,
}

/// Extracts peak (earliest tie wins), trapezoidal time-weighted mean and
/// final force from a recording.
pub fn summarize(series: &PullGaugeSeries) -> SeriesSummary {
    let samples = series.samples();

    let mut peak = samples[0];
    for sample in &samples[1..] {
        if sample.force.newtons() > peak.force.newtons() {
            peak = *sample;
        }
    }

    let mut area = 0.0;
    for pair in samples.windows(2) {
        let dt = pair[1].time_s - pair[0].time_s;
        area += 0.5 * (pair[0].force.newtons() + pair[1].force.newtons()) * dt;
    }
    let span = samples[samples.len() - 1].time_s - samples[0].time_s;
    let mean = area / span;

    SeriesSummary {
        peak_force: peak.force,
        peak_time_s: peak.time_s,
        mean_force: Force::raw(mean),
        final_force: samples[samples.len() - 1].force,
        sample_count: samples.len(),
        fabric_label: series.fabric_label.clone(),
        source: series.source.clone(),
    }
}

/// Required pulling force: the recorded peak scaled by a safety factor of
/// at least 1, so the drive keeps a buffer above the worst measured
/// resistance.
pub fn required_pull_force(
    summary: &SeriesSummary,
    safety_factor: Dimensionless,
) -> Result<Force, GaugeError> {
    if safety_factor.value() < 1.0 {
        return Err(GaugeError::SafetyFactorBelowOne(safety_factor.value()));
    }
    Ok(Force::from_newtons(
        summary.peak_force.newtons() * safety_factor.value(),
    )?)
}

/// Lifts a recording's peak into the lumped resistance consumed by the
/// feasibility check, tagged with the recording's source.
pub fn to_measured_resistance(summary: &SeriesSummary) -> MeasuredResistance {
    MeasuredResistance::new(summary.peak_force, summary.source.clone())
}
