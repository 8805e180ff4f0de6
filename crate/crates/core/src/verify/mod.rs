//! Residual checks, conformality diagnostics, M-function quadrature,
//! harmonic moments and parameter sweeps.

mod conformality;
mod integral;
mod mfunction;
mod report;
mod residuals;
mod suite;
mod sweep;

pub use conformality::{
    conformality_check, corner_exponent, expected_corner_exponent, petal_width, Conformality,
    DEFAULT_CONFORMALITY_SAMPLES, DEFAULT_EPSILON, DEGENERACY_THRESHOLD,
};
pub use integral::{integral_equation_residual, jump_relation};
pub use mfunction::{
    harmonic_moment, harmonic_moment_area, harmonic_moments, m_plus_cauchy, m_plus_expected,
    m_plus_sample, HarmonicMoment, MFunctionSample, M_PLUS_CLEARANCE,
};
pub use report::{CheckOutcome, Tolerances, VerificationReport};
pub use residuals::{
    darcy_check, dynamical_residual, estimate_a, estimate_a_on_circle, normal_velocities,
    ode_residual, ode_residual_ring, wronskian, AEstimate, AMethod, DarcyComparison,
    A_SPREAD_LIMIT,
};
pub use suite::run_suite;
pub use sweep::{sweep, SweepEntry, SweepOptions, SweepResult};
