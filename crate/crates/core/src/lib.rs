//! Exact self-similar solutions of zero-surface-tension Laplacian growth in
//! the upper half plane.
//!
//! The crate is split into four layers:
//!
//! * [`numerics`]: contour and endpoint-singular quadrature, winding numbers,
//!   polyline geometry and power-law fitting.
//! * [`special`]: the Gauss hypergeometric function, log-gamma and
//!   principal-branch powers.
//! * [`maps`]: the one-petal and two-petal conformal maps from the exterior of
//!   the unit disk, their derivatives, inverses, traces and Laurent data.
//! * [`verify`]: residual checks of the governing equations, conformality
//!   diagnostics, M-function quadratures, harmonic moments and sweeps.
//!
//! Frequently used types are re-exported at the crate root.

pub mod error;
pub mod maps;
pub mod numerics;
pub mod special;
pub mod verify;

pub use num_complex::Complex64;

pub use crate::error::{Error, Result};
pub use crate::maps::{
    BoundaryTrace, Corner, FamilyKind, LaurentCoefficients, MapFamily, Side, TimeState,
};
pub use crate::numerics::{Contour, ContourKind, PowerLawFit};
pub use crate::special::Hyp2F1Params;
pub use crate::verify::{
    CheckOutcome, Conformality, MFunctionSample, SweepEntry, SweepResult, Tolerances,
    VerificationReport,
};
