//! Unit-safe force analysis and sizing for the fabric-pulling spur gear of
//! an automated hem-sewing machine.
//!
//! The crate covers the full chain from gear geometry to a go/no-go drive
//! verdict:
//!
//! - [`units`] — quantity newtypes (N, N·m, m, kg, rad) with boundary
//!   converters for shop-floor millimeters and degrees;
//! - [`model`] — closed-form statics: rolling resistance, force
//!   decomposition at the pressure angle, torque-to-force conversion and the
//!   strict feasibility comparison;
//! - [`gauge`] — pull-gauge CSV ingestion, equally spaced resampling and
//!   peak/mean summaries;
//! - [`sizing`] — catalog grid evaluation, closed-form minimum torque and
//!   the eyelet clearance check;
//! - [`feedsim`] — deterministic stitch-cycle slip simulation.
//!
//! All computation is pure over immutable values; everything here is safe
//! to share across threads.

pub mod error;
pub mod feedsim;
pub mod gauge;
pub mod model;
pub mod sizing;
pub mod units;

pub use error::ModelError;
pub use gauge::format_decimal;
pub use units::{Angle, Dimensionless, Force, Length, Mass, Torque};
