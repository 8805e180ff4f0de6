use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{map_derivative, map_value, Corner, FamilyKind, MapFamily};
use crate::numerics::{fit_power_law, PowerLawFit};

/// Default ring offset `ε` for the argument-principle check. The zeros of
/// `f′` in the non-conformal region sit very close to the unit circle.
pub const DEFAULT_EPSILON: f64 = 1e-3;
pub const DEFAULT_CONFORMALITY_SAMPLES: usize = 1024;
const MAX_BISECTIONS: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conformality {
    /// `(1/2π)∮ d arg f′` on `|w| = e^ε`.
    pub winding: i64,
    /// Zeros of `f′` outside the ring, `−winding`.
    pub zeros: i64,
    pub ok: bool,
    pub epsilon: f64,
    /// Total turning of the image curve's tangent, in turns.
    pub boundary_turns: i64,
    /// Whether `boundary_turns = 1 + winding`.
    pub turns_consistent: bool,
    /// Whether `ε` had to be changed after an unstable first attempt.
    pub adjusted: bool,
}

/// Accumulated change of `arg g(φ)` over `[0, 2π]`, refining any step whose
/// phase jump exceeds `π/4`.
fn track_phase<G>(g: G, n: usize) -> Result<f64>
where
    G: Fn(f64) -> Result<Complex64>,
{
    let phis: Vec<f64> = (0..=n).map(|j| j as f64 * TAU / n as f64).collect();
    let mut vals = Vec::with_capacity(n + 1);
    for &phi in &phis {
        let v = g(phi)?;
        if !(v.norm() > 0.0) || !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::Unstable(format!("tracked function vanishes at φ = {phi}")));
        }
        vals.push(v);
    }
    let mut total = 0.0;
    for j in 0..n {
        total += refine(&g, phis[j], vals[j], phis[j + 1], vals[j + 1], 0)?;
    }
    Ok(total)
}

fn refine<G>(g: &G, a: f64, ga: Complex64, b: f64, gb: Complex64, depth: usize) -> Result<f64>
where
    G: Fn(f64) -> Result<Complex64>,
{
    let d = (gb / ga).arg();
    if d.abs() <= FRAC_PI_4 {
        return Ok(d);
    }
    if depth >= MAX_BISECTIONS {
        return Err(Error::Unstable(format!("phase jump not resolved near φ = {a}")));
    }
    let m = 0.5 * (a + b);
    let gm = g(m)?;
    if !(gm.norm() > 0.0) {
        return Err(Error::Unstable(format!("tracked function vanishes at φ = {m}")));
    }
    Ok(refine(g, a, ga, m, gm, depth + 1)? + refine(g, m, gm, b, gb, depth + 1)?)
}

fn attempt(family: &MapFamily, epsilon: f64, n: usize) -> Result<Conformality> {
    let rho = epsilon.exp();
    let on_ring = |phi: f64| Complex64::from_polar(rho, phi);
    let phase = track_phase(|phi| map_derivative(family, on_ring(phi)), n)?;
    let winding = (phase / TAU).round() as i64;
    // Tangent of the image curve from a centred chord of f alone.
    let delta = 1e-3 * epsilon;
    let tangent = |phi: f64| -> Result<Complex64> {
        Ok(map_value(family, on_ring(phi + delta))? - map_value(family, on_ring(phi - delta))?)
    };
    let turns = (track_phase(tangent, n)? / TAU).round() as i64;
    Ok(Conformality {
        winding,
        zeros: -winding,
        ok: winding == 0,
        epsilon,
        boundary_turns: turns,
        turns_consistent: turns == 1 + winding,
        adjusted: false,
    })
}

/// Argument-principle count of the zeros of `f′` outside `|w| = e^ε`.
///
/// If the tracked functions vanish on the ring, `ε` is enlarged by half
/// once and the check repeated.
pub fn conformality_check(family: &MapFamily, epsilon: f64, n: usize) -> Result<Conformality> {
    if !(1e-4..=0.1).contains(&epsilon) {
        return Err(Error::invalid("epsilon", format!("{epsilon} is not in [1e-4, 0.1]")));
    }
    if n < 16 {
        return Err(Error::invalid("n", "need at least 16 samples"));
    }
    match attempt(family, epsilon, n) {
        Err(Error::Unstable(_)) => {
            let mut c = attempt(family, (1.5 * epsilon).min(0.1), n)?;
            c.adjusted = true;
            Ok(c)
        }
        other => other,
    }
}

/// Largest distance of a first-quadrant boundary point from the nearer of the
/// two rays that enclose the first-quadrant boundary arc, for `r = 1`.
///
/// Vanishes when the petals collapse onto segments.
pub fn petal_width(family: &MapFamily, n: usize) -> Result<f64> {
    let mut pts = Vec::with_capacity(n);
    for j in 0..n {
        let phi = (j as f64 + 0.5) * FRAC_PI_2 / n as f64;
        pts.push(map_value(family, Complex64::from_polar(1.0, phi))?);
    }
    let (lo, hi) = pts
        .iter()
        .map(|z| z.arg())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), t| (a.min(t), b.max(t)));
    let width = pts
        .iter()
        .map(|z| {
            let (r, t) = (z.norm(), z.arg());
            let d_lo = r * (t - lo).clamp(0.0, FRAC_PI_2).sin();
            let d_hi = r * (hi - t).clamp(0.0, FRAC_PI_2).sin();
            d_lo.min(d_hi)
        })
        .fold(0.0, f64::max);
    Ok(width)
}

/// Degeneracy threshold on [`petal_width`] (times `r`).
pub const DEGENERACY_THRESHOLD: f64 = 1e-3;
const CORNER_FIT_RESIDUAL: f64 = 0.05;

/// The exponent expected at a corner: `2α/π` at `±1`, `2β/π` at `±i`.
pub fn expected_corner_exponent(family: &MapFamily, corner: Corner) -> Result<f64> {
    match (family.kind(), corner) {
        (_, Corner::PlusOne | Corner::MinusOne) => Ok(2.0 * family.alpha() / PI),
        (FamilyKind::TwoPetal, _) => Ok(family.delta()),
        (FamilyKind::OnePetal, _) => Err(Error::invalid("corner", "±i is not a corner of the one-petal map")),
    }
}

/// Log–log fit of `|f(e^{iφ})|` against the arc distance to `corner`.
pub fn corner_exponent(family: &MapFamily, corner: Corner) -> Result<PowerLawFit> {
    expected_corner_exponent(family, corner)?;
    let m = 25;
    let (lo, hi) = (1e-6_f64.ln(), 1e-3_f64.ln());
    let mut samples = Vec::with_capacity(m);
    for k in 0..m {
        let d = (lo + (hi - lo) * k as f64 / (m - 1) as f64).exp();
        let w = Complex64::from_polar(1.0, corner.phi() + d);
        samples.push((d, map_value(family, w)?.norm()));
    }
    let fit = fit_power_law(&samples)?;
    if fit.residual_norm > CORNER_FIT_RESIDUAL {
        return Err(Error::PoorFit { residual: fit.residual_norm, threshold: CORNER_FIT_RESIDUAL });
    }
    Ok(fit)
}
