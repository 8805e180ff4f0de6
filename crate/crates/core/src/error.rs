use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("non-finite integrand value at node {index} (z = {point})")]
    NonFiniteIntegrand { index: usize, point: Complex64 },

    #[error("endpoint exponent {exponent} <= -1: integrand is not integrable")]
    NonIntegrable { exponent: f64 },

    #[error("point {point} lies within {distance:e} of the polyline; winding number is ambiguous")]
    AmbiguousWinding { point: Complex64, distance: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("hypergeometric argument t = {t} is outside the admissible set")]
    OutsideDomain { t: Complex64 },

    #[error("series did not converge after {iterations} terms")]
    NonConvergence { iterations: usize },

    #[error("gamma function pole at {x}")]
    GammaPole { x: Complex64 },

    #[error("zero base raised to non-positive exponent {exponent}")]
    ZeroPower { exponent: f64 },

    #[error("w = {w} is (too close to) a corner pre-image")]
    CornerPreimage { w: Complex64 },

    #[error("w = {w} lies inside the unit disk")]
    InsideUnitDisk { w: Complex64 },

    #[error("w = {w} is a pole of the potential V")]
    PotentialPole { w: Complex64 },

    #[error("p = {p} is a branch point (|p| = 2)")]
    BranchPoint { p: Complex64 },

    #[error("Newton inversion for z = {z} did not converge in {iterations} iterations")]
    InversionFailed { z: Complex64, iterations: usize },

    #[error("inversion converged to w = {w} with |w| <= 1 (off the physical sheet)")]
    OffSheet { w: Complex64 },

    #[error("Laurent coefficient {index} has imaginary part {imag:e}; reflection symmetry violated")]
    SymmetryViolation { index: i64, imag: f64 },

    #[error("normalization constant varies across sample points (relative spread {spread:e})")]
    InconsistentA { spread: f64 },

    #[error("argument tracking is unstable: {0}")]
    Unstable(String),

    #[error("harmonic moments are ill-defined for a degenerate domain with x- = x+ = 0")]
    MomentsIllDefined,

    #[error("point {z} is closer than {min_distance:e} to the boundary")]
    TooCloseToBoundary { z: Complex64, min_distance: f64 },

    #[error("point {z} is not inside the domain")]
    NotInside { z: Complex64 },

    #[error("operation requires a {expected} family")]
    WrongFamily { expected: &'static str },

    #[error("power-law fit residual {residual:e} exceeds {threshold:e}")]
    PoorFit { residual: f64, threshold: f64 },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
