use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{gamma_real, recip_gamma, Hyp2F1Params};

/// Half-width of the band around `β = π/4` where the two-term continuation
/// has cancelling Γ poles and the ODE-continued form is used instead.
pub(crate) const QUARTER_BAND: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    OnePetal,
    TwoPetal,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::OnePetal => "one-petal",
            FamilyKind::TwoPetal => "two-petal",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-petal" | "one" | "1" => Ok(FamilyKind::OnePetal),
            "two-petal" | "two" | "2" => Ok(FamilyKind::TwoPetal),
            _ => Err(Error::invalid("family", format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct TwoPetalData {
    /// Parameters of the outer representation in `t = 4/p²`.
    pub outer: Hyp2F1Params,
    /// Parameters of the two inner terms in `s = p²/4`.
    pub inner1: Hyp2F1Params,
    pub inner2: Hyp2F1Params,
    pub k1: Complex64,
    pub k2: Complex64,
    /// False near `β = π/4`, where the inner representation is singular.
    pub inner_ok: bool,
}

/// A one- or two-petal self-similar family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FamilySpec", into = "FamilySpec")]
pub struct MapFamily {
    kind: FamilyKind,
    alpha: f64,
    beta: f64,
    two: Option<TwoPetalData>,
}

#[derive(Serialize, Deserialize)]
struct FamilySpec {
    kind: FamilyKind,
    alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
}

impl TryFrom<FamilySpec> for MapFamily {
    type Error = Error;

    fn try_from(s: FamilySpec) -> Result<Self> {
        match (s.kind, s.beta) {
            (FamilyKind::OnePetal, _) => MapFamily::one_petal(s.alpha),
            (FamilyKind::TwoPetal, Some(b)) => MapFamily::two_petal(s.alpha, b),
            (FamilyKind::TwoPetal, None) => Err(Error::invalid("beta", "required for two-petal")),
        }
    }
}

impl From<MapFamily> for FamilySpec {
    fn from(f: MapFamily) -> Self {
        FamilySpec { kind: f.kind, alpha: f.alpha, beta: f.beta() }
    }
}

fn check_angle(name: &'static str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0 && v < FRAC_PI_2) {
        return Err(Error::invalid(name, format!("{v} is not in (0, π/2)")));
    }
    Ok(())
}

impl MapFamily {
    pub fn one_petal(alpha: f64) -> Result<Self> {
        check_angle("alpha", alpha)?;
        Ok(Self { kind: FamilyKind::OnePetal, alpha, beta: 0.0, two: None })
    }

    pub fn two_petal(alpha: f64, beta: f64) -> Result<Self> {
        check_angle("alpha", alpha)?;
        check_angle("beta", beta)?;
        let ap = alpha / PI;
        let bp = beta / PI;
        let delta = 2.0 * bp;
        let outer = Hyp2F1Params::new(ap + bp - 0.5, ap - bp, 0.5)?;
        let inner1 = Hyp2F1Params::new(ap + bp - 0.5, ap + bp, delta + 0.5)?;
        let inner2 = Hyp2F1Params::new(ap - bp + 0.5, ap - bp, 1.5 - delta)?;
        let inner_ok = (delta - 0.5).abs() >= QUARTER_BAND;
        let (k1, k2) = if inner_ok {
            let sqrt_pi = PI.sqrt();
            let g1 = sqrt_pi * gamma_real(0.5 - delta)? * recip_gamma(ap - bp) * recip_gamma(1.0 - ap - bp);
            let g2 = sqrt_pi * gamma_real(delta - 0.5)? * recip_gamma(ap + bp - 0.5) * recip_gamma(0.5 - ap + bp);
            (
                Complex64::i() * Complex64::from_polar(g1, -beta),
                Complex64::from_polar(g2, beta),
            )
        } else {
            (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
        };
        let two = TwoPetalData { outer, inner1, inner2, k1, k2, inner_ok };
        Ok(Self { kind: FamilyKind::TwoPetal, alpha, beta, two: Some(two) })
    }

    /// The `α = π/4` one-petal family, whose boundary is the Bernoulli lemniscate.
    pub fn lemniscate() -> Self {
        Self::one_petal(PI / 4.0).expect("π/4 is admissible")
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Half the angle between the petals (two-petal only).
    pub fn beta(&self) -> Option<f64> {
        match self.kind {
            FamilyKind::OnePetal => None,
            FamilyKind::TwoPetal => Some(self.beta),
        }
    }

    /// `γ = 2α/π − 1/2`.
    pub fn gamma(&self) -> f64 {
        2.0 * self.alpha / PI - 0.5
    }

    /// `δ = 2β/π` (zero for one-petal).
    pub fn delta(&self) -> f64 {
        2.0 * self.beta / PI
    }

    /// Pre-images of the corner points on the unit circle.
    pub fn corners(&self) -> &'static [Corner] {
        match self.kind {
            FamilyKind::OnePetal => &[Corner::PlusOne, Corner::MinusOne],
            FamilyKind::TwoPetal => {
                &[Corner::PlusOne, Corner::PlusI, Corner::MinusOne, Corner::MinusI]
            }
        }
    }

    pub(crate) fn two_petal_data(&self) -> Option<&TwoPetalData> {
        self.two.as_ref()
    }

    pub fn label(&self) -> String {
        match self.kind {
            FamilyKind::OnePetal => format!("one-petal(alpha={})", self.alpha),
            FamilyKind::TwoPetal => {
                format!("two-petal(alpha={}, beta={})", self.alpha, self.beta)
            }
        }
    }
}

/// Time and normalization; the conformal radius is `r = T/A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeState {
    t: f64,
    a: f64,
}

impl TimeState {
    pub fn new(t: f64, a: f64) -> Result<Self> {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::invalid("T", format!("time must be positive, got {t}")));
        }
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::invalid("A", format!("normalization must be positive, got {a}")));
        }
        Ok(Self { t, a })
    }

    /// The state with `T = A`, i.e. `r = 1`.
    pub fn unit(a: f64) -> Result<Self> {
        Self::new(a, a)
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn normalization(&self) -> f64 {
        self.a
    }

    pub fn radius(&self) -> f64 {
        self.t / self.a
    }

    pub fn with_time(&self, t: f64) -> Result<Self> {
        Self::new(t, self.a)
    }
}

/// Corner pre-images on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Corner {
    pub fn point(self) -> Complex64 {
        match self {
            Corner::PlusOne => Complex64::new(1.0, 0.0),
            Corner::PlusI => Complex64::new(0.0, 1.0),
            Corner::MinusOne => Complex64::new(-1.0, 0.0),
            Corner::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    /// Polar angle of the pre-image.
    pub fn phi(self) -> f64 {
        match self {
            Corner::PlusOne => 0.0,
            Corner::PlusI => FRAC_PI_2,
            Corner::MinusOne => PI,
            Corner::MinusI => 3.0 * FRAC_PI_2,
        }
    }
}

impl std::str::FromStr for Corner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+1" | "1" => Ok(Corner::PlusOne),
            "-1" => Ok(Corner::MinusOne),
            "+i" | "i" => Ok(Corner::PlusI),
            "-i" => Ok(Corner::MinusI),
            _ => Err(Error::invalid("corner", format!("expected one of +1, -1, +i, -i; got `{s}`"))),
        }
    }
}

/// Which side of the real axis a real argument is approached from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Upper,
    Lower,
}
