use num_complex::Complex64;

use super::family::{FamilyKind, MapFamily};
use super::eval_extended;
use crate::error::{Error, Result};

/// Stencil step as a fraction of the distance to the nearest singularity.
const STEP_FRACTION: f64 = 0.02;
/// Below this distance the stencil cannot be placed.
const MIN_DISTANCE: f64 = 1e-9;

/// `f`, `f′` and `f″` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapDerivatives {
    pub value: Complex64,
    pub first: Complex64,
    pub second: Complex64,
}

/// Distance from `w` to the singular set of the continued map.
pub(crate) fn singular_distance(family: &MapFamily, w: Complex64) -> f64 {
    match family.kind() {
        FamilyKind::OnePetal => {
            let x = w.re.clamp(-1.0, 1.0);
            (w - Complex64::new(x, 0.0)).norm()
        }
        FamilyKind::TwoPetal => {
            let i = Complex64::i();
            let one = Complex64::new(1.0, 0.0);
            [one, -one, i, -i]
                .iter()
                .map(|c| (w - c).norm())
                .fold(w.norm(), f64::min)
        }
    }
}

/// Derivatives from a stencil along the tangent `i·w/|w|`, which keeps all
/// nodes at modulus `≥ |w|`.
///
/// Fourth-order central differences at steps `h` and `h/2` combined by one
/// Richardson step; `h` is 2% of the distance to the nearest singularity.
pub fn map_derivatives(family: &MapFamily, w: Complex64) -> Result<MapDerivatives> {
    let d = singular_distance(family, w);
    if !(d > MIN_DISTANCE) {
        return Err(Error::CornerPreimage { w });
    }
    let dir = Complex64::i() * w / w.norm();
    stencil_derivatives(|z| eval_extended(family, z), w, dir, STEP_FRACTION * d)
}

/// Stencil derivatives of `g` at `w` along the unit direction `dir`.
pub(crate) fn stencil_derivatives<G>(
    g: G,
    w: Complex64,
    dir: Complex64,
    h: f64,
) -> Result<MapDerivatives>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    let at = |s: f64| g(w + dir * s);
    let f0 = at(0.0)?;
    let (fh1, fm1) = (at(h)?, at(-h)?);
    let (fh2, fm2) = (at(2.0 * h)?, at(-2.0 * h)?);
    let (fq1, fqm1) = (at(0.5 * h)?, at(-0.5 * h)?);

    let first = |step: f64, p1: Complex64, m1: Complex64, p2: Complex64, m2: Complex64| {
        (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * step)
    };
    let second = |step: f64, p1: Complex64, m1: Complex64, p2: Complex64, m2: Complex64| {
        (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12.0 * step * step)
    };
    let d1 = (16.0 * first(0.5 * h, fq1, fqm1, fh1, fm1) - first(h, fh1, fm1, fh2, fm2)) / 15.0;
    let d2 = (16.0 * second(0.5 * h, fq1, fqm1, fh1, fm1) - second(h, fh1, fm1, fh2, fm2)) / 15.0;
    Ok(MapDerivatives {
        value: f0,
        first: d1 / dir,
        second: d2 / (dir * dir),
    })
}

/// `f′(w)`.
pub fn map_derivative(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    Ok(map_derivatives(family, w)?.first)
}
