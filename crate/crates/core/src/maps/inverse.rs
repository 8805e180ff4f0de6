use std::f64::consts::PI;

use num_complex::Complex64;

use super::derivative::map_derivative;
use super::family::{FamilyKind, MapFamily, TimeState};
use super::{eval_extended as eval, map_value};
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 100;
const RESIDUAL_TOL: f64 = 1e-10;
const OFF_SHEET: f64 = 1e-9;


/// Damped Newton iteration for `r·f(w) = z`.
fn newton(family: &MapFamily, r: f64, z: Complex64, guess: Complex64) -> Result<Complex64> {
    let tol = RESIDUAL_TOL * (1.0 + z.norm());
    let clamp = |w: Complex64| -> Complex64 {
        if family.kind() == FamilyKind::TwoPetal && w.norm() < 1.0 {
            w / w.norm()
        } else {
            w
        }
    };
    let mut w = clamp(guess);
    let mut res = r * eval(family, w)? - z;
    for _ in 0..MAX_ITERATIONS {
        if res.norm() < tol {
            return Ok(w);
        }
        let d = r * map_derivative(family, w)?;
        if d.norm() == 0.0 {
            break;
        }
        let step = res / d;
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let cand = clamp(w - lambda * step);
            if let Ok(v) = eval(family, cand) {
                let cres = r * v - z;
                if cres.norm() < res.norm() {
                    w = cand;
                    res = cres;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    if res.norm() < tol {
        Ok(w)
    } else {
        Err(Error::InversionFailed { z, iterations: MAX_ITERATIONS })
    }
}

/// Best starting point on a coarse polar grid outside the unit circle.
fn grid_guess(family: &MapFamily, r: f64, z: Complex64) -> Complex64 {
    let mut best = (f64::INFINITY, z / r);
    for rho in [1.02, 1.1, 1.3, 1.6, 2.0, 3.0, 5.0, 10.0] {
        for j in 0..64 {
            let w = Complex64::from_polar(rho, (j as f64 + 0.5) * 2.0 * PI / 64.0);
            if let Ok(v) = map_value(family, w) {
                let e = (r * v - z).norm();
                if e < best.0 {
                    best = (e, w);
                }
            }
        }
    }
    best.1
}

fn finish(w: Complex64) -> Result<Complex64> {
    if w.norm() < 1.0 - OFF_SHEET {
        Err(Error::OffSheet { w })
    } else {
        Ok(w)
    }
}

/// Solves `r·f(w) = z` for `w` on the exterior sheet.
pub fn invert_scaled(
    family: &MapFamily,
    state: TimeState,
    z: Complex64,
    guess: Option<Complex64>,
) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::invalid("z", "must be finite"));
    }
    let r = state.radius();
    let first = guess.unwrap_or(z / r);
    match newton(family, r, z, first) {
        Ok(w) => finish(w),
        Err(e) => {
            let g = grid_guess(family, r, z);
            newton(family, r, z, g).map_err(|_| e).and_then(finish)
        }
    }
}

/// Solves `f(w) = z`.
pub fn invert_map(family: &MapFamily, z: Complex64, guess: Option<Complex64>) -> Result<Complex64> {
    invert_scaled(family, TimeState::new(1.0, 1.0)?, z, guess)
}

/// `φ(z) = Im[r(w + 1/w)]` with `w = w(z)`.
pub fn pressure(family: &MapFamily, state: TimeState, z: Complex64) -> Result<f64> {
    let w = invert_scaled(family, state, z, None)?;
    Ok((state.radius() * (w + 1.0 / w)).im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn round_trips() {
        let fams = [
            MapFamily::lemniscate(),
            MapFamily::one_petal(PI / 8.0).unwrap(),
            MapFamily::two_petal(PI / 8.0, PI / 16.0).unwrap(),
            MapFamily::two_petal(3.0 * PI / 8.0, PI / 16.0).unwrap(),
        ];
        for f in &fams {
            for w in [c(2.0, 0.0), c(1.2, 0.9), c(-1.5, -0.4), c(0.1, 1.3)] {
                let z = map_value(f, w).unwrap();
                let back = invert_map(f, z, None).unwrap();
                assert!((back - w).norm() < 1e-9, "{} w={w} back={back}", f.label());
            }
        }
    }

    #[test]
    fn lemniscate_inverse_closed_form() {
        let f = MapFamily::lemniscate();
        let w = invert_map(&f, c(0.0, 2.0), None).unwrap();
        assert!((w - c(0.0, 3f64.sqrt())).norm() < 1e-10);
        let z = c(1e4, 0.0);
        let w = invert_map(&f, z, None).unwrap();
        assert!((w - z).norm() < 1e-3 * z.norm());
    }

    #[test]
    fn pressure_values() {
        let f = MapFamily::lemniscate();
        let s = TimeState::unit(1.0).unwrap();
        let v = pressure(&f, s, c(0.0, 2.0)).unwrap();
        assert!((v - 2.0 / 3f64.sqrt()).abs() < 1e-9);
        // Im p(iy) = y − u₁/y + O(y⁻³) with u₁ = 3/2.
        let y = 50.0;
        let v = pressure(&f, s, c(0.0, y)).unwrap();
        assert!((v - (y - 1.5 / y)).abs() < 1e-4, "{v}");
        let v = pressure(&f, s, c(0.0, 1000.0)).unwrap();
        assert!((v - 1000.0).abs() < 1e-2);
        let zb = map_value(&f, Complex64::from_polar(1.0, 1.0)).unwrap() * 1.0;
        let v = pressure(&f, s, zb).unwrap();
        assert!(v.abs() < 1e-6, "{v}");
    }

    #[test]
    fn interior_point_is_off_sheet() {
        let f = MapFamily::lemniscate();
        let r = invert_map(&f, c(0.0, 0.8), None);
        assert!(matches!(r, Err(Error::OffSheet { .. }) | Err(Error::InversionFailed { .. })), "{r:?}");
    }
}
