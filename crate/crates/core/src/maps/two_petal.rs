use std::f64::consts::PI;

use num_complex::Complex64;

use super::family::{FamilyKind, MapFamily, Side, TwoPetalData};
use super::one_petal::{one_petal_continued, CIRCLE_SLACK, CORNER_GUARD};
use crate::error::{Error, Result};
use crate::special::{branch_power, gauss_2f1, gauss_2f1_edge};

const BRANCH_GUARD: f64 = 1e-14;

fn data(family: &MapFamily) -> Result<&TwoPetalData> {
    match family.kind() {
        FamilyKind::TwoPetal => Ok(family.two_petal_data().expect("two-petal data present")),
        FamilyKind::OnePetal => Err(Error::WrongFamily { expected: "two-petal" }),
    }
}

/// `z(p)` for `Re p ≥ 0`, `Im p ≥ 0` (a zero imaginary part means `+i0`).
fn z_first_quadrant(family: &MapFamily, d: &TwoPetalData, p: Complex64) -> Result<Complex64> {
    let ap = family.alpha() / PI;
    let delta = family.delta();
    let r = p.norm();
    if (r - 2.0).abs() <= 2.0 * BRANCH_GUARD {
        return Err(Error::BranchPoint { p });
    }
    if r == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if r > 2.0 {
        let t = 4.0 / (p * p);
        let h = gauss_2f1(d.outer, t)?;
        return Ok(p * branch_power(1.0 - t, ap)? * h);
    }
    if d.inner_ok {
        let s = p * p / 4.0;
        let half = p / 2.0;
        let f1 = gauss_2f1(d.inner1, s)?;
        let f2 = gauss_2f1(d.inner2, s)?;
        let a = d.k1 * branch_power(half, delta)? * f1;
        let b = d.k2 * branch_power(half, 1.0 - delta)? * f2;
        return Ok(2.0 * branch_power(1.0 - s, ap)? * (a + b));
    }
    // Near β = π/4: continue the outer representation past |t| = 1.
    let t = if p.im == 0.0 {
        Complex64::new(4.0 / (p.re * p.re), -0.0)
    } else {
        4.0 / (p * p)
    };
    let h = gauss_2f1_edge(d.outer, t)?;
    Ok(p * branch_power(1.0 - t, ap)? * h)
}

/// `z(p)` in the upper half plane, extended by `z(−p̄) = −z̄(p)`.
fn z_upper(family: &MapFamily, d: &TwoPetalData, p: Complex64) -> Result<Complex64> {
    let p = if p.im > 0.0 { p } else { Complex64::new(p.re, 0.0) };
    if p.re < 0.0 {
        let q = Complex64::new(-p.re, p.im);
        Ok(-z_first_quadrant(family, d, q)?.conj())
    } else {
        z_first_quadrant(family, d, p)
    }
}

/// The two-petal map in the variable `p = w + 1/w`.
///
/// The hypergeometric representation in `4/p²` is used for `|p| > 2` and the
/// two-term Γ-coefficient representation in `p²/4` for `|p| < 2`. For real
/// `p`, `side` selects the boundary value; otherwise it is ignored and the
/// lower half plane is reached by reflection.
pub fn z_of_p(family: &MapFamily, p: Complex64, side: Side) -> Result<Complex64> {
    let d = data(family)?;
    if !(p.re.is_finite() && p.im.is_finite()) {
        return Err(Error::invalid("p", "must be finite"));
    }
    let upper = p.im > 0.0 || (p.im == 0.0 && side == Side::Upper);
    if upper {
        z_upper(family, d, p)
    } else {
        Ok(z_upper(family, d, p.conj())?.conj())
    }
}

pub(crate) fn check_two_petal_point(w: Complex64) -> Result<()> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::invalid("w", "must be finite"));
    }
    let i = Complex64::i();
    for c in [Complex64::new(1.0, 0.0), -Complex64::new(1.0, 0.0), i, -i] {
        if (w - c).norm() <= CORNER_GUARD {
            return Err(Error::CornerPreimage { w });
        }
    }
    Ok(())
}

/// The two-petal map on `|w| ≥ 1`.
pub fn two_petal_map(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    let d = data(family)?;
    check_two_petal_point(w)?;
    if w.norm() < 1.0 - CIRCLE_SLACK {
        return Err(Error::InsideUnitDisk { w });
    }
    if w.im < 0.0 {
        return Ok(z_upper(family, d, (w + 1.0 / w).conj())?.conj());
    }
    z_upper(family, d, w + 1.0 / w)
}

/// `f(1/w)` for `Im w > 0`, continued from the exterior across the arc of the
/// unit circle nearest to `1/w`.
///
/// One-petal: the principal formula. Two-petal: requires `Re w > 0`,
/// `|w + 1/w| < 2`, and `β` away from `π/4`.
pub(crate) fn reflected_sheet(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    if !(w.im > 0.0) {
        return Err(Error::invalid("w", "need Im w > 0"));
    }
    let v = 1.0 / w;
    match family.kind() {
        FamilyKind::OnePetal => one_petal_continued(family, v),
        FamilyKind::TwoPetal => {
            let d = data(family)?;
            let p = w + v;
            if !(w.re > 0.0) || p.norm() >= 2.0 - 1e-9 || !d.inner_ok {
                return Err(Error::Degenerate(
                    "reflected sheet needs Re w > 0, |w + 1/w| < 2 and β away from π/4".into(),
                ));
            }
            let ap = family.alpha() / PI;
            let delta = family.delta();
            let s = p * p / 4.0;
            let half = p / 2.0;
            let f1 = gauss_2f1(d.inner1, s)?;
            let f2 = gauss_2f1(d.inner2, s)?;
            let a = d.k1.conj() * branch_power(half, delta)? * f1;
            let b = d.k2.conj() * branch_power(half, 1.0 - delta)? * f2;
            Ok(2.0 * branch_power(1.0 - s, ap)? * (a + b))
        }
    }
}
