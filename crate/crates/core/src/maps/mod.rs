//! Self-similar map families, derivatives, inverses, traces and Laurent data.

mod derivative;
mod family;
mod inverse;
mod laurent;
mod one_petal;
mod potential;
mod trace;
mod two_petal;

pub use derivative::{map_derivative, map_derivatives, MapDerivatives};
pub use family::{Corner, FamilyKind, MapFamily, Side, TimeState};
pub use inverse::{invert_map, invert_scaled, pressure};
pub use laurent::{laurent_coefficients, LaurentCoefficients};
pub use one_petal::{one_petal_continued, one_petal_map};
pub use potential::potential_v;
pub use trace::{boundary_trace, scaled_map, BoundaryTrace};
pub use two_petal::{two_petal_map, z_of_p};

pub(crate) use derivative::stencil_derivatives;
pub(crate) use two_petal::reflected_sheet;

use num_complex::Complex64;

use crate::error::Result;

/// `f(w)` for either family on `|w| ≥ 1`.
pub fn map_value(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    match family.kind() {
        FamilyKind::OnePetal => one_petal_map(family, w),
        FamilyKind::TwoPetal => two_petal_map(family, w),
    }
}

/// `f(w)`, continuing the one-petal map into the disk off `[−1, 1]`.
pub(crate) fn eval_extended(family: &MapFamily, w: Complex64) -> Result<Complex64> {
    match family.kind() {
        FamilyKind::OnePetal if w.norm() < 1.0 => one_petal_continued(family, w),
        _ => map_value(family, w),
    }
}
