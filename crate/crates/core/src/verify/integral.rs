use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::maps::{one_petal_continued, one_petal_map, MapFamily};
use crate::numerics::{singular_endpoint_quadrature, DEFAULT_SINGULAR_NODES};
use crate::special::principal_ln;

/// `g(w) − 1` for `g = f/√(w²−1)`, written so that it is exactly zero at `γ = 0`.
fn g_minus_one(gamma: f64, w: Complex64) -> Complex64 {
    let u = 1.0 / w;
    let l = principal_ln(1.0 - u) - principal_ln(1.0 + u);
    let em1 = |z: Complex64| -> Complex64 {
        // expm1 for complex argument: e^z − 1 = expm1(x)·cos y − 2 sin²(y/2) + i e^x sin y
        let (x, y) = (z.re, z.im);
        let s = (0.5 * y).sin();
        Complex64::new(x.exp_m1() * y.cos() - 2.0 * s * s, x.exp() * y.sin())
    };
    0.5 * ((1.0 + u) * em1(gamma * l) + (1.0 - u) * em1(-gamma * l))
}

/// `g(1/x)` for `x ∈ (0, 1)`.
fn g_inverse_real(gamma: f64, x: f64, one_minus_x: f64) -> f64 {
    let (lo, hi) = (one_minus_x, 1.0 + x);
    0.5 * (lo.powf(gamma) * hi.powf(1.0 - gamma) + hi.powf(gamma) * lo.powf(1.0 - gamma))
}

/// `max |g(w) − 1 + (2cos2α/π)∫₀¹ g(1/x) dx/(x² − w²)|` over the test points.
///
/// `cos 2α` is evaluated as `−sin πγ`.
pub fn integral_equation_residual(alpha: f64, points: &[Complex64]) -> Result<f64> {
    let family = MapFamily::one_petal(alpha)?;
    let gamma = family.gamma();
    let cos2a = -(PI * gamma).sin();
    let mut worst = 0.0_f64;
    for &w in points {
        if w.im == 0.0 && w.re.abs() <= 1.0 {
            return Err(Error::invalid("w", "test points must lie off the cut [-1, 1]"));
        }
        let integral = singular_endpoint_quadrature(
            |p| {
                let g = g_inverse_real(gamma, p.x, p.to_b);
                Complex64::new(g, 0.0) / (p.x * p.x - w * w)
            },
            (0.0, 1.0),
            (0.0, gamma),
            DEFAULT_SINGULAR_NODES,
        )?;
        let r = g_minus_one(gamma, w) + 2.0 * cos2a / PI * integral;
        worst = worst.max(r.norm());
    }
    Ok(worst)
}

/// `max |f(x+i0) + f(x−i0) − 2cos2α·f(1/x)| / (1 + |f(1/x)|)` over `x ∈ (−1, 1)`.
pub fn jump_relation(family: &MapFamily, xs: &[f64]) -> Result<f64> {
    let cos2a = (2.0 * family.alpha()).cos();
    let mut worst = 0.0_f64;
    for &x in xs {
        if !(x.abs() < 1.0) || x == 0.0 {
            return Err(Error::invalid("x", "need 0 < |x| < 1"));
        }
        let up = one_petal_continued(family, Complex64::new(x, 0.0))?;
        let dn = one_petal_continued(family, Complex64::new(x, -0.0))?;
        let outer = one_petal_map(family, Complex64::new(1.0 / x, 0.0))?;
        worst = worst.max((up + dn - 2.0 * cos2a * outer).norm() / (1.0 + outer.norm()));
    }
    Ok(worst)
}
