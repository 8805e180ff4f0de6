use std::f64::consts::TAU;

use num_complex::Complex64;

use super::family::{FamilyKind, MapFamily, TimeState};
use super::map_value;
use crate::error::{Error, Result};
use crate::numerics::polyline_area;

/// Ordered samples `(φ, z)` of a closed boundary curve.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrace {
    family: Option<MapFamily>,
    state: Option<TimeState>,
    samples: Vec<(f64, Complex64)>,
    counter_clockwise: bool,
}

impl BoundaryTrace {
    /// A trace of an arbitrary closed curve; parameters are spread uniformly.
    pub fn from_points(points: Vec<Complex64>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::Degenerate("a trace needs at least 3 points".into()));
        }
        if points.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::invalid("points", "must be finite"));
        }
        let samples = points
            .into_iter()
            .enumerate()
            .map(|(j, z)| ((j as f64 + 0.5) * TAU / n as f64, z))
            .collect();
        Self::assemble(None, None, samples)
    }

    fn assemble(
        family: Option<MapFamily>,
        state: Option<TimeState>,
        samples: Vec<(f64, Complex64)>,
    ) -> Result<Self> {
        let pts: Vec<Complex64> = samples.iter().map(|s| s.1).collect();
        let counter_clockwise = polyline_area(&pts)? > 0.0;
        Ok(Self { family, state, samples, counter_clockwise })
    }

    pub fn family(&self) -> Option<&MapFamily> {
        self.family.as_ref()
    }

    pub fn state(&self) -> Option<TimeState> {
        self.state
    }

    pub fn samples(&self) -> &[(f64, Complex64)] {
        &self.samples
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.samples.iter().map(|s| s.1).collect()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// True when the enclosed signed area is positive.
    pub fn is_counter_clockwise(&self) -> bool {
        self.counter_clockwise
    }
}

/// `(T/A)·f(w)`.
pub fn scaled_map(family: &MapFamily, state: TimeState, w: Complex64) -> Result<Complex64> {
    Ok(state.radius() * map_value(family, w)?)
}

/// Samples `z = r·f(e^{iφ})` at `φ_j = (j + ½)·2π/n`.
///
/// The lower half is the mirror image of the upper half, so reflection
/// symmetry holds exactly. `n` must be even (one-petal) or a multiple of 4
/// (two-petal) so that no node falls on a corner pre-image.
pub fn boundary_trace(family: &MapFamily, state: TimeState, n: usize) -> Result<BoundaryTrace> {
    if n < 16 {
        return Err(Error::invalid("n", format!("need at least 16 samples, got {n}")));
    }
    let modulus = match family.kind() {
        FamilyKind::OnePetal => 2,
        FamilyKind::TwoPetal => 4,
    };
    if n % modulus != 0 {
        return Err(Error::invalid(
            "n",
            format!("must be a multiple of {modulus} for {} traces", family.kind().name()),
        ));
    }
    let r = state.radius();
    let half = n / 2;
    let mut samples = vec![(0.0, Complex64::new(0.0, 0.0)); n];
    for j in 0..half {
        let phi = (j as f64 + 0.5) * TAU / n as f64;
        let z = r * map_value(family, Complex64::from_polar(1.0, phi))?;
        samples[j] = (phi, z);
        samples[n - 1 - j] = (TAU - phi, z.conj());
    }
    BoundaryTrace::assemble(Some(*family), Some(state), samples)
}
