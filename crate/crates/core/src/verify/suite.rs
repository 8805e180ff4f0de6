use std::f64::consts::TAU;

use num_complex::Complex64;

use super::conformality::{
    conformality_check, corner_exponent, expected_corner_exponent, DEFAULT_CONFORMALITY_SAMPLES,
    DEFAULT_EPSILON,
};
use super::integral::{integral_equation_residual, jump_relation};
use super::report::{CheckOutcome, Tolerances, VerificationReport};
use super::residuals::{darcy_check, dynamical_residual, estimate_a, ode_residual_ring};
use crate::error::Result;
use crate::maps::{laurent_coefficients, map_value, FamilyKind, MapFamily, TimeState};

fn reflection_residual(family: &MapFamily) -> Result<f64> {
    let mut worst = 0.0_f64;
    for j in 0..32 {
        let w = Complex64::from_polar(1.3, (j as f64 + 0.5) * TAU / 32.0);
        let f = map_value(family, w)?;
        let refl = map_value(family, w.conj())?.conj();
        let odd = -map_value(family, -w)?;
        worst = worst.max((f - refl).norm()).max((f - odd).norm());
    }
    Ok(worst)
}

/// Runs every applicable check for one family at one time.
pub fn run_suite(family: &MapFamily, state: TimeState, tol: &Tolerances) -> VerificationReport {
    let mut r = VerificationReport::new(family.label());

    r.record("ode", tol.ode, ode_residual_ring(family, 1.5, 64).map(|v| CheckOutcome::new(v, tol.ode)));

    r.record(
        "a_spread",
        tol.a_spread,
        estimate_a(family).map(|a| {
            CheckOutcome::new(a.spread, tol.a_spread)
                .with("A", a.value)
                .with("method", serde_json::to_value(a.method).unwrap_or_default())
        }),
    );

    r.record(
        "dynamical",
        tol.dynamical,
        dynamical_residual(family, state, 128).map(|v| {
            CheckOutcome::new(v, tol.dynamical)
                .with("T", state.time())
                .with("A", state.normalization())
        }),
    );

    r.record(
        "darcy",
        tol.darcy,
        darcy_check(family, state, 256).map(|d| {
            let mut o = CheckOutcome::new(d.max_relative_mismatch, tol.darcy)
                .with("min_normal_velocity", d.min_normal_velocity);
            if d.min_normal_velocity <= 0.0 {
                o.pass = false;
            }
            o
        }),
    );

    r.record(
        "conformality",
        0.0,
        conformality_check(family, DEFAULT_EPSILON, DEFAULT_CONFORMALITY_SAMPLES).map(|c| {
            CheckOutcome::new(c.winding.unsigned_abs() as f64, 0.0)
                .with("winding", c.winding)
                .with("epsilon", c.epsilon)
                .with("boundary_turns", c.boundary_turns)
                .with("turns_consistent", c.turns_consistent)
                .with("adjusted", c.adjusted)
        }),
    );

    for &corner in family.corners() {
        let name = format!("corner[{corner:?}]");
        let outcome = expected_corner_exponent(family, corner).and_then(|expected| {
            let fit = corner_exponent(family, corner)?;
            Ok(CheckOutcome::new((fit.exponent - expected).abs() / expected, tol.corner_relative)
                .with("exponent", fit.exponent)
                .with("expected", expected))
        });
        r.record(&name, tol.corner_relative, outcome);
    }

    r.record(
        "reflection",
        tol.reflection,
        reflection_residual(family).map(|v| CheckOutcome::new(v, tol.reflection)),
    );

    r.record(
        "capacity",
        tol.capacity_imag,
        laurent_coefficients(family, 8).map(|l| {
            let mut o = CheckOutcome::new(l.max_imag, tol.capacity_imag)
                .with("u1", l.capacity())
                .with("c1", l.c[1]);
            if !(l.capacity() > 0.0) {
                o.pass = false;
            }
            o
        }),
    );

    if family.kind() == FamilyKind::OnePetal {
        let pts = [
            Complex64::new(2.0, 0.0),
            Complex64::new(1.5, 0.0),
            Complex64::new(-3.0, 0.0),
            Complex64::new(1.2, 0.7),
            Complex64::new(0.3, 0.4),
        ];
        r.record(
            "integral_equation",
            tol.integral,
            integral_equation_residual(family.alpha(), &pts).map(|v| CheckOutcome::new(v, tol.integral)),
        );
        r.record(
            "jump",
            tol.jump,
            jump_relation(family, &[-0.9, -0.5, -0.1, 0.2, 0.6, 0.95]).map(|v| CheckOutcome::new(v, tol.jump)),
        );
    }
    r
}
