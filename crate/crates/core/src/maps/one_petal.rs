use num_complex::Complex64;

use super::family::{FamilyKind, MapFamily};
use crate::error::{Error, Result};
use crate::special::branch_power;

/// Tolerance below which `|w|` is still treated as on the unit circle.
pub(crate) const CIRCLE_SLACK: f64 = 1e-12;
/// Points this close to a corner pre-image are rejected.
pub(crate) const CORNER_GUARD: f64 = 1e-15;

/// `f(w) = (w/2)[(1−u)^{γ+½}(1+u)^{3/2−γ} + (1+u)^{γ+½}(1−u)^{3/2−γ}]`, `u = 1/w`.
///
/// Principal branches make this analytic on `ℂ \ [−1, 1]`.
fn formula(gamma: f64, w: Complex64) -> Result<Complex64> {
    let u = 1.0 / w;
    let lo = 1.0 - u;
    let hi = 1.0 + u;
    let e1 = gamma + 0.5;
    let e2 = 1.5 - gamma;
    let first = branch_power(lo, e1)? * branch_power(hi, e2)?;
    let second = branch_power(hi, e1)? * branch_power(lo, e2)?;
    Ok(0.5 * w * (first + second))
}

fn check_one(family: &MapFamily) -> Result<()> {
    if family.kind() != FamilyKind::OnePetal {
        return Err(Error::WrongFamily { expected: "one-petal" });
    }
    Ok(())
}

fn check_point(w: Complex64) -> Result<()> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::invalid("w", "must be finite"));
    }
    if (w - 1.0).norm() <= CORNER_GUARD || (w + 1.0).norm() <= CORNER_GUARD {
        return Err(Error::CornerPreimage { w });
    }
    Ok(())
}

/// The one-petal map on `|w| ≥ 1`.
pub fn one_petal_map(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    check_one(family)?;
    check_point(w)?;
    if w.norm() < 1.0 - CIRCLE_SLACK {
        return Err(Error::InsideUnitDisk { w });
    }
    formula(family.gamma(), w)
}

/// Analytic continuation of the one-petal map to `ℂ \ [−1, 1]`.
///
/// On the cut itself the value is the limit from the side given by the sign
/// of `Im w` (including signed zero).
pub fn one_petal_continued(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    check_one(family)?;
    check_point(w)?;
    if w.re.abs() <= 1.0 && w.im == 0.0 {
        if w.re == 0.0 {
            return Err(Error::invalid("w", "w = 0 is a pole"));
        }
        return Ok(cut_limit(family.gamma(), w.re, w.im.is_sign_negative()));
    }
    formula(family.gamma(), w)
}

/// Boundary value on `(−1, 1)` from above (`below = false`) or below.
fn cut_limit(gamma: f64, x: f64, below: bool) -> Complex64 {
    // At w = x + i0 the reciprocal u = 1/w has Im u = −0, so 1 − u sits on the
    // upper side of its cut and 1 + u on the lower side; below, the reverse.
    let u = 1.0 / x;
    let (lo_side, hi_side) = if below { (-1.0, 1.0) } else { (1.0, -1.0) };
    let pow = |base: f64, side: f64, e: f64| -> Complex64 {
        if base >= 0.0 {
            Complex64::new(base.powf(e), 0.0)
        } else {
            Complex64::from_polar((-base).powf(e), side * std::f64::consts::PI * e)
        }
    };
    let lo = 1.0 - u;
    let hi = 1.0 + u;
    let e1 = gamma + 0.5;
    let e2 = 1.5 - gamma;
    let first = pow(lo, lo_side, e1) * pow(hi, hi_side, e2);
    let second = pow(hi, hi_side, e1) * pow(lo, lo_side, e2);
    0.5 * x * (first + second)
}
