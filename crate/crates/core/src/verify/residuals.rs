use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{
    map_derivatives, potential_v, reflected_sheet, stencil_derivatives, FamilyKind, MapFamily,
    TimeState,
};

/// Relative residual of `w²f″ − 2w f′/(w²−1) + V f = 0` at `w`.
pub fn ode_residual(family: &MapFamily, w: Complex64) -> Result<f64> {
    if w.norm() < 1.01 {
        return Err(Error::invalid("w", "ODE residual needs |w| ≥ 1.01"));
    }
    let d = map_derivatives(family, w)?;
    let v = potential_v(family, w)?;
    let vf = v * d.value;
    let lhs = w * w * d.second - 2.0 * w * d.first / (w * w - 1.0) + vf;
    Ok(lhs.norm() / (1.0 + vf.norm()))
}

/// Maximum ODE residual over `n` points of the ring `|w| = radius`.
pub fn ode_residual_ring(family: &MapFamily, radius: f64, n: usize) -> Result<f64> {
    let mut worst = 0.0_f64;
    for j in 0..n {
        let w = Complex64::from_polar(radius, (j as f64 + 0.5) * TAU / n as f64);
        worst = worst.max(ode_residual(family, w)?);
    }
    Ok(worst)
}

/// How the normalization constant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AMethod {
    /// Wronskian of `f(w)` and `f(1/w)` off the circle.
    Wronskian,
    /// Wronskian restricted to the unit circle, where `f(1/w) = conj f(w)`.
    Circle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AEstimate {
    pub value: f64,
    /// `(max − min)/mean` over the sample points.
    pub spread: f64,
    pub samples: Vec<f64>,
    pub method: AMethod,
}

/// Relative spread above which the estimate is rejected.
pub const A_SPREAD_LIMIT: f64 = 1e-6;

/// `W(w) = w f′(w) f(1/w) − w [d/dw f(1/w)] f(w)` for `Im w > 0`.
pub fn wronskian(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    let d = map_derivatives(family, w)?;
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    // 1/w is singular at the corner pre-images ±1, ±i (conjugated) and at ∞.
    let dist = [one, -one, i, -i]
        .iter()
        .map(|c| (w - c).norm())
        .fold(f64::INFINITY, f64::min);
    let dir = i * w / w.norm();
    let g = stencil_derivatives(|z| reflected_sheet(family, z), w, dir, 0.02 * dist)?;
    Ok(w * d.first * g.value - w * g.first * d.value)
}

fn wronskian_points() -> Vec<Complex64> {
    let mut pts = Vec::new();
    for rho in [1.05, 1.15, 1.25] {
        for theta in [0.4, 0.7, 1.0, 1.3] {
            pts.push(Complex64::from_polar(rho, theta));
        }
    }
    pts
}

fn circle_points() -> Vec<Complex64> {
    [0.3, 0.55, 0.8, 1.05, 1.3, 1.9, 2.3, 2.7]
        .iter()
        .map(|&phi| Complex64::from_polar(1.0, phi))
        .collect()
}

/// `2 Re[w f′(w) conj f(w)] / |w − 1/w|` on `|w| = 1`.
fn circle_a(family: &MapFamily, w: Complex64) -> Result<f64> {
    let d = map_derivatives(family, w)?;
    let wc = 2.0 * (w * d.first * d.value.conj()).re;
    Ok(wc / (w - 1.0 / w).norm())
}

fn summarize(samples: Vec<f64>, method: AMethod) -> Result<AEstimate> {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let (lo, hi) = samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    let spread = (hi - lo) / mean.abs();
    if !(spread <= A_SPREAD_LIMIT) {
        return Err(Error::InconsistentA { spread });
    }
    Ok(AEstimate { value: mean, spread, samples, method })
}

/// Normalization constant `A` from the Wronskian identity `|W| = A|w − 1/w|`.
///
/// Near `β = π/4` the off-circle continuation is unavailable and the
/// on-circle form is used.
pub fn estimate_a(family: &MapFamily) -> Result<AEstimate> {
    let inner_ok = match family.kind() {
        FamilyKind::OnePetal => true,
        FamilyKind::TwoPetal => (family.delta() - 0.5).abs() >= 1e-3,
    };
    if inner_ok {
        let mut samples = Vec::new();
        for w in wronskian_points() {
            let wr = wronskian(family, w)?;
            samples.push(wr.norm() / (w - 1.0 / w).norm());
        }
        summarize(samples, AMethod::Wronskian)
    } else {
        estimate_a_on_circle(family)
    }
}

/// `A` from the on-circle Wronskian alone.
pub fn estimate_a_on_circle(family: &MapFamily) -> Result<AEstimate> {
    let samples = circle_points()
        .into_iter()
        .map(|w| circle_a(family, w))
        .collect::<Result<Vec<_>>>()?;
    summarize(samples, AMethod::Circle)
}

fn circle_samples(family: &MapFamily, n: usize) -> Result<Vec<Complex64>> {
    let m = match family.kind() {
        FamilyKind::OnePetal => 2,
        FamilyKind::TwoPetal => 4,
    };
    if n == 0 || n % m != 0 {
        return Err(Error::invalid("n", format!("sample count must be a positive multiple of {m}")));
    }
    Ok((0..n)
        .map(|j| Complex64::from_polar(1.0, (j as f64 + 0.5) * TAU / n as f64))
        .collect())
}

/// `max |(r/A)·2Re[w f′ conj f] − r|w − 1/w||` over `n` points of the unit
/// circle, with `∂_T f = f/A` and `f(1/w) = conj f(w)` on the circle.
pub fn dynamical_residual(family: &MapFamily, state: TimeState, n: usize) -> Result<f64> {
    let r = state.radius();
    let a = state.normalization();
    let mut worst = 0.0_f64;
    for w in circle_samples(family, n)? {
        let d = map_derivatives(family, w)?;
        let lhs = (r / a) * 2.0 * (w * d.first * d.value.conj()).re;
        let rhs = r * (w - 1.0 / w).norm();
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Kinematic versus Darcy normal velocity on the boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DarcyComparison {
    pub max_relative_mismatch: f64,
    pub min_normal_velocity: f64,
    pub samples: usize,
}

/// Kinematic `V_n = Re(conj f · w f′)/(A|f′|)` and Darcy `V_n = |w − 1/w|/(2|f′|)`.
pub fn normal_velocities(family: &MapFamily, state: TimeState, w: Complex64) -> Result<(f64, f64)> {
    let d = map_derivatives(family, w)?;
    let fp = d.first.norm();
    let kinematic = (d.value.conj() * w * d.first).re / (state.normalization() * fp);
    let darcy = (w - 1.0 / w).norm() / (2.0 * fp);
    Ok((kinematic, darcy))
}

pub fn darcy_check(family: &MapFamily, state: TimeState, n: usize) -> Result<DarcyComparison> {
    let mut worst = 0.0_f64;
    let mut vmin = f64::INFINITY;
    for w in circle_samples(family, n)? {
        let (k, d) = normal_velocities(family, state, w)?;
        worst = worst.max((k - d).abs() / d.abs());
        vmin = vmin.min(k.min(d));
    }
    Ok(DarcyComparison { max_relative_mismatch: worst, min_normal_velocity: vmin, samples: n })
}
