//! Property-based checks of the model's algebraic identities and the
//! pipeline's structural guarantees, over randomized inputs.

use hemforce_core::feedsim::{simulate_feed, FeedScenario, ResistanceModel};
use hemforce_core::gauge::{
    parse_series, resample_equally_spaced, summarize, GaugeSample, PullGaugeSeries,
};
use hemforce_core::model::{
    check_feasibility, decompose_transmission_force, rolling_resistance_flat,
    rolling_resistance_geometric, rolling_resistance_graded, tangential_force_from_torque,
    MeasuredResistance,
};
use hemforce_core::sizing::{
    evaluate_grid, eyelet_clearance_check, min_torque_for, EyeletLayout, SizingRequest,
};
use hemforce_core::{format_decimal, Angle, Dimensionless, Force, Length, Mass, Torque};
use proptest::prelude::*;

const REL_TOL: f64 = 1e-12;

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

fn force(v: f64) -> Force {
    Force::from_newtons(v).unwrap()
}

fn meters(v: f64) -> Length {
    Length::from_meters(v).unwrap()
}

fn newton_meters(v: f64) -> Torque {
    Torque::from_newton_meters(v).unwrap()
}

/// Strictly increasing gauge samples from per-step increments.
fn series_from_steps(t0: f64, steps: &[(f64, f64)]) -> PullGaugeSeries {
    let mut t = t0;
    let samples = steps
        .iter()
        .map(|&(dt, f)| {
            t += dt;
            GaugeSample {
                time_s: t,
                force: force(f),
            }
        })
        .collect();
    PullGaugeSeries::new(samples, "generated").unwrap()
}

proptest! {
    // --- closed-form statics ---

    #[test]
    fn resistance_paths_agree(
        r in 1e-4..1.0f64,
        offset_ratio in 0.0..0.999f64,
        m in 0.0..100.0f64,
    ) {
        let a = offset_ratio * r;
        let weight = force(m * 9.81);
        let geometric = rolling_resistance_geometric(meters(a), meters(r), weight).unwrap();
        let coefficient = Dimensionless::new(a / r).unwrap();
        let flat = rolling_resistance_flat(coefficient, Mass::from_kilograms(m).unwrap()).unwrap();
        prop_assert!(rel_close(geometric.newtons(), flat.newtons()));
    }

    #[test]
    fn zero_gradient_reduces_to_flat(f in 0.0..1.0f64, m in 0.0..100.0f64) {
        let f = Dimensionless::new(f).unwrap();
        let m = Mass::from_kilograms(m).unwrap();
        let flat = rolling_resistance_flat(f, m).unwrap();
        let graded = rolling_resistance_graded(f, m, Angle::ZERO).unwrap();
        prop_assert_eq!(flat.newtons(), graded.newtons());
    }

    #[test]
    fn flat_resistance_is_monotone(
        f in 1e-6..1.0f64,
        m in 1e-6..100.0f64,
        bump in 1e-6..1.0f64,
    ) {
        let base = rolling_resistance_flat(
            Dimensionless::new(f).unwrap(),
            Mass::from_kilograms(m).unwrap(),
        )
        .unwrap();
        let more_f = rolling_resistance_flat(
            Dimensionless::new(f + bump).unwrap(),
            Mass::from_kilograms(m).unwrap(),
        )
        .unwrap();
        let more_m = rolling_resistance_flat(
            Dimensionless::new(f).unwrap(),
            Mass::from_kilograms(m + bump).unwrap(),
        )
        .unwrap();
        prop_assert!(more_f.newtons() > base.newtons());
        prop_assert!(more_m.newtons() > base.newtons());
    }

    #[test]
    fn graded_resistance_decreases_with_gradient(
        f in 1e-3..1.0f64,
        m in 1e-3..100.0f64,
        alpha in 1e-6..(std::f64::consts::FRAC_PI_2 - 1e-6),
        bump in 1e-6..0.5f64,
    ) {
        let steeper = (alpha + bump).min(std::f64::consts::FRAC_PI_2 - 1e-9);
        prop_assume!(steeper > alpha);
        let f = Dimensionless::new(f).unwrap();
        let m = Mass::from_kilograms(m).unwrap();
        let shallow =
            rolling_resistance_graded(f, m, Angle::from_radians(alpha).unwrap()).unwrap();
        let steep =
            rolling_resistance_graded(f, m, Angle::from_radians(steeper).unwrap()).unwrap();
        prop_assert!(steep.newtons() < shallow.newtons());
    }

    #[test]
    fn decomposition_is_pythagorean(
        f_n in 0.0..1000.0f64,
        alpha in 0.0..(std::f64::consts::FRAC_PI_2 - 1e-9),
    ) {
        let d = decompose_transmission_force(force(f_n), Angle::from_radians(alpha).unwrap())
            .unwrap();
        let squares = d.tangential.newtons().powi(2) + d.radial.newtons().powi(2);
        prop_assert!(rel_close(squares, f_n * f_n));
        prop_assert_eq!(d.axial.newtons(), 0.0);
    }

    #[test]
    fn decomposition_trades_tangential_for_radial(
        f_n in 1.0..1000.0f64,
        alpha in 1e-6..(std::f64::consts::FRAC_PI_2 - 1e-6),
        bump in 1e-6..0.5f64,
    ) {
        let steeper = (alpha + bump).min(std::f64::consts::FRAC_PI_2 - 1e-9);
        prop_assume!(steeper > alpha);
        let low = decompose_transmission_force(force(f_n), Angle::from_radians(alpha).unwrap())
            .unwrap();
        let high = decompose_transmission_force(force(f_n), Angle::from_radians(steeper).unwrap())
            .unwrap();
        prop_assert!(high.tangential.newtons() < low.tangential.newtons());
        prop_assert!(high.radial.newtons() > low.radial.newtons());
    }

    #[test]
    fn torque_conversion_is_linear(
        t in 1e-3..10.0f64,
        d in 1e-3..0.5f64,
        k in 0.01..100.0f64,
    ) {
        let base = tangential_force_from_torque(newton_meters(t), meters(d)).unwrap();
        let scaled = tangential_force_from_torque(newton_meters(k * t), meters(d)).unwrap();
        prop_assert!(rel_close(scaled.newtons(), k * base.newtons()));

        let halved = tangential_force_from_torque(newton_meters(t), meters(d / 2.0)).unwrap();
        prop_assert!(rel_close(halved.newtons(), 2.0 * base.newtons()));
    }

    #[test]
    fn feasibility_ignores_boundary_unit_choice(
        d_mm in 1.0..500.0f64,
        t in 1e-3..10.0f64,
        resistance_n in 0.0..200.0f64,
    ) {
        let via_mm = Length::from_millimeters(d_mm).unwrap();
        let via_m = meters(d_mm / 1000.0);
        let resistance = MeasuredResistance::new(force(resistance_n), "generated");
        let report_mm = check_feasibility(
            tangential_force_from_torque(newton_meters(t), via_mm).unwrap(),
            &resistance,
        );
        let report_m = check_feasibility(
            tangential_force_from_torque(newton_meters(t), via_m).unwrap(),
            &resistance,
        );
        prop_assert_eq!(report_mm.feasible, report_m.feasible);
        prop_assert_eq!(report_mm.margin_newtons, report_m.margin_newtons);
    }

    // --- gauge ingestion ---

    #[test]
    fn resample_is_idempotent_on_equal_spacing(
        n in 2usize..40,
        t0 in 0.0..10.0f64,
        dt in 1e-3..5.0f64,
        seed_forces in proptest::collection::vec(0.0..20.0f64, 40),
    ) {
        let samples: Vec<GaugeSample> = (0..n)
            .map(|k| GaugeSample {
                time_s: t0 + k as f64 * dt,
                force: force(seed_forces[k]),
            })
            .collect();
        let series = PullGaugeSeries::new(samples, "generated").unwrap();
        let resampled = resample_equally_spaced(&series, n).unwrap();
        for (a, b) in resampled.samples().iter().zip(series.samples()) {
            prop_assert!(rel_close(a.time_s, b.time_s));
            prop_assert!(rel_close(a.force.newtons(), b.force.newtons()));
        }
    }

    #[test]
    fn resampled_peak_never_exceeds_original(
        steps in proptest::collection::vec((1e-3..5.0f64, 0.0..30.0f64), 2..50),
        n in 2usize..100,
    ) {
        let series = series_from_steps(0.0, &steps);
        let original_peak = summarize(&series).peak_force.newtons();
        let resampled = resample_equally_spaced(&series, n).unwrap();
        for sample in resampled.samples() {
            prop_assert!(sample.force.newtons() <= original_peak);
        }
    }

    #[test]
    fn summary_peak_matches_brute_force_scan(
        steps in proptest::collection::vec((1e-3..5.0f64, 0.0..30.0f64), 2..50),
    ) {
        let series = series_from_steps(0.0, &steps);
        let summary = summarize(&series);
        let scan_max = series
            .samples()
            .iter()
            .map(|s| s.force.newtons())
            .fold(f64::NEG_INFINITY, f64::max);
        prop_assert_eq!(summary.peak_force.newtons(), scan_max);
        let earliest = series
            .samples()
            .iter()
            .find(|s| s.force.newtons() == scan_max)
            .unwrap();
        prop_assert_eq!(summary.peak_time_s, earliest.time_s);
        prop_assert_eq!(summary.sample_count, series.samples().len());
    }

    #[test]
    fn csv_round_trip_is_exact(
        rows in proptest::collection::vec((1u32..5_000, 0u32..30_000_000), 2..40),
    ) {
        // Times/forces on a fixed decimal grid, as a gauge export would be.
        let mut t_int: u64 = 0;
        let mut text = String::from("t_s,force_N");
        for &(dt_ms, force_micro_n) in &rows {
            t_int += u64::from(dt_ms);
            text.push('\n');
            text.push_str(&format_decimal(t_int as f64 / 1000.0));
            text.push(',');
            text.push_str(&format_decimal(f64::from(force_micro_n) / 1e6));
        }
        let first = parse_series(&text, "generated").unwrap();
        let serialized = first.to_canonical_csv();
        let second = parse_series(&serialized, "generated").unwrap();
        prop_assert_eq!(first.samples(), second.samples());
        prop_assert_eq!(serialized, second.to_canonical_csv());
    }

    // --- sizing ---

    #[test]
    fn torque_force_round_trip(d in 1e-3..0.5f64, f in 0.0..500.0f64) {
        let torque = min_torque_for(meters(d), force(f)).unwrap();
        let back = tangential_force_from_torque(torque, meters(d)).unwrap();
        prop_assert!(rel_close(back.newtons(), f));
    }

    #[test]
    fn min_torque_is_linear(
        d in 1e-3..0.5f64,
        f in 1e-3..500.0f64,
        k in 0.01..50.0f64,
    ) {
        let base = min_torque_for(meters(d), force(f)).unwrap();
        let scaled_force = min_torque_for(meters(d), force(k * f)).unwrap();
        prop_assert!(rel_close(scaled_force.newton_meters(), k * base.newton_meters()));
        let scaled_diameter = min_torque_for(meters(k * d), force(f)).unwrap();
        prop_assert!(rel_close(scaled_diameter.newton_meters(), k * base.newton_meters()));
    }

    #[test]
    fn grid_agrees_with_per_pair_oracle(
        diameters in proptest::collection::vec(1e-3..0.5f64, 1..5),
        torques in proptest::collection::vec(0.0..10.0f64, 1..5),
        required in 0.0..100.0f64,
        floor in 0.0..5.0f64,
    ) {
        let request = SizingRequest::new(
            force(required),
            diameters.iter().map(|&d| meters(d)).collect(),
            torques.iter().map(|&t| newton_meters(t)).collect(),
            force(floor),
        )
        .unwrap();
        let result = evaluate_grid(&request).unwrap();
        prop_assert_eq!(result.rows.len(), diameters.len() * torques.len());
        prop_assert_eq!(result.min_torque_per_diameter.len(), diameters.len());

        let resistance = MeasuredResistance::new(force(required), "oracle");
        for row in &result.rows {
            let delivered = tangential_force_from_torque(row.torque, row.diameter).unwrap();
            prop_assert_eq!(row.delivered.newtons(), delivered.newtons());
            let verdict = check_feasibility(delivered, &resistance);
            prop_assert_eq!(row.margin_newtons, verdict.margin_newtons);
            prop_assert_eq!(row.feasible, verdict.margin_newtons > floor);
        }
        for &(d, t) in &result.min_torque_per_diameter {
            let direct = min_torque_for(d, force(required + floor)).unwrap();
            prop_assert_eq!(t.newton_meters(), direct.newton_meters());
        }
    }

    #[test]
    fn eyelet_slack_moves_the_right_way(
        eyelet in 0.0..0.05f64,
        band in 0.0..0.1f64,
        margin in 0.0..0.01f64,
        delta in 1e-6..0.01f64,
    ) {
        let base = eyelet_clearance_check(&EyeletLayout {
            eyelet_diameter: meters(eyelet),
            stitch_to_edge_band: meters(band),
            placement_margin: meters(margin),
        });
        let wider_band = eyelet_clearance_check(&EyeletLayout {
            eyelet_diameter: meters(eyelet),
            stitch_to_edge_band: meters(band + delta),
            placement_margin: meters(margin),
        });
        let bigger_eyelet = eyelet_clearance_check(&EyeletLayout {
            eyelet_diameter: meters(eyelet + delta),
            stitch_to_edge_band: meters(band),
            placement_margin: meters(margin),
        });
        let bigger_margin = eyelet_clearance_check(&EyeletLayout {
            eyelet_diameter: meters(eyelet),
            stitch_to_edge_band: meters(band),
            placement_margin: meters(margin + delta),
        });
        prop_assert!(wider_band.slack_meters > base.slack_meters);
        prop_assert!(bigger_eyelet.slack_meters < base.slack_meters);
        prop_assert!(bigger_margin.slack_meters < base.slack_meters);
    }

    // --- feed simulation ---

    #[test]
    fn simulation_is_deterministic(
        seed in proptest::num::u64::ANY,
        base in 0.0..30.0f64,
        amplitude in 0.0..10.0f64,
        delivered in 0.0..30.0f64,
        cycles in 1usize..200,
    ) {
        let scenario = FeedScenario::new(
            force(delivered),
            ResistanceModel::ConstantPlusNoise {
                base: force(base),
                amplitude: force(amplitude),
                seed,
            },
            cycles,
            Length::from_millimeters(2.5).unwrap(),
        )
        .unwrap();
        let first = simulate_feed(&scenario).unwrap();
        let second = simulate_feed(&scenario).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn advances_are_all_or_nothing(
        seed in proptest::num::u64::ANY,
        base in 0.0..30.0f64,
        amplitude in 0.0..10.0f64,
        delivered in 0.0..30.0f64,
        cycles in 1usize..200,
        advance_mm in 0.1..10.0f64,
    ) {
        let nominal = Length::from_millimeters(advance_mm).unwrap();
        let scenario = FeedScenario::new(
            force(delivered),
            ResistanceModel::ConstantPlusNoise {
                base: force(base),
                amplitude: force(amplitude),
                seed,
            },
            cycles,
            nominal,
        )
        .unwrap();
        let result = simulate_feed(&scenario).unwrap();
        prop_assert_eq!(result.advances.len(), cycles);
        let mut zeros = 0usize;
        for advance in &result.advances {
            if advance.meters() == 0.0 {
                zeros += 1;
            } else {
                prop_assert_eq!(advance.meters().to_bits(), nominal.meters().to_bits());
            }
        }
        prop_assert_eq!(zeros, result.slip_count);
        prop_assert!(result.slip_count <= cycles);
    }

    #[test]
    fn slips_do_not_increase_with_drive_force(
        steps in proptest::collection::vec((1e-3..5.0f64, 0.0..30.0f64), 2..20),
        low in 0.0..30.0f64,
        extra in 0.0..30.0f64,
        cycles in 1usize..100,
    ) {
        let series = series_from_steps(0.0, &steps);
        let advance = Length::from_millimeters(2.5).unwrap();
        let weak = FeedScenario::new(
            force(low),
            ResistanceModel::Series(series.clone()),
            cycles,
            advance,
        )
        .unwrap();
        let strong = FeedScenario::new(
            force(low + extra),
            ResistanceModel::Series(series),
            cycles,
            advance,
        )
        .unwrap();
        let weak_slips = simulate_feed(&weak).unwrap().slip_count;
        let strong_slips = simulate_feed(&strong).unwrap().slip_count;
        prop_assert!(strong_slips <= weak_slips);
    }

    #[test]
    fn equal_forces_always_slip(level in 0.0..200.0f64, cycles in 1usize..100) {
        let scenario = FeedScenario::new(
            force(level),
            ResistanceModel::Constant(force(level)),
            cycles,
            Length::from_millimeters(2.5).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(simulate_feed(&scenario).unwrap().slip_count, cycles);

        let report = check_feasibility(force(level), &MeasuredResistance::new(force(level), "x"));
        prop_assert!(!report.feasible);
    }

    #[test]
    fn zero_amplitude_noise_matches_constant(
        seed in proptest::num::u64::ANY,
        base in 0.0..30.0f64,
        delivered in 0.0..30.0f64,
        cycles in 1usize..100,
    ) {
        let advance = Length::from_millimeters(2.5).unwrap();
        let noisy = FeedScenario::new(
            force(delivered),
            ResistanceModel::ConstantPlusNoise {
                base: force(base),
                amplitude: Force::ZERO,
                seed,
            },
            cycles,
            advance,
        )
        .unwrap();
        let plain = FeedScenario::new(
            force(delivered),
            ResistanceModel::Constant(force(base)),
            cycles,
            advance,
        )
        .unwrap();
        prop_assert_eq!(
            simulate_feed(&noisy).unwrap(),
            simulate_feed(&plain).unwrap()
        );
    }
}
