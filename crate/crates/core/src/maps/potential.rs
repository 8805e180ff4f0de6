use std::f64::consts::PI;

use num_complex::Complex64;

use super::family::{FamilyKind, MapFamily};
use crate::error::{Error, Result};

const POLE_GUARD: f64 = 1e-15;

/// The coefficient `V(w)` of `w²f″ − 2w f′/(w²−1) + V f = 0`.
pub fn potential_v(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::invalid("w", "must be finite"));
    }
    let w2 = w * w;
    let minus = w2 - 1.0;
    if minus.norm() <= POLE_GUARD {
        return Err(Error::PotentialPole { w });
    }
    let ap = family.alpha() / PI;
    let mut v = 16.0 * ap * (1.0 - ap) * w2 / (minus * minus);
    if family.kind() == FamilyKind::TwoPetal {
        let plus = w2 + 1.0;
        if plus.norm() <= POLE_GUARD {
            return Err(Error::PotentialPole { w });
        }
        let delta = family.delta();
        v -= 4.0 * delta * (1.0 - delta) * w2 / (plus * plus);
    }
    Ok(v)
}
