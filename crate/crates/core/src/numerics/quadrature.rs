use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default Gauss–Legendre order used by [`singular_endpoint_quadrature`] callers.
pub const DEFAULT_SINGULAR_NODES: usize = 160;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourKind {
    /// Periodic parameterization over one period; nodes are equispaced
    /// and the rule is the trapezoidal rule.
    ClosedPeriodic { period: f64 },
    /// Open interval; nodes and weights come from Gauss–Legendre.
    OpenInterval,
}

/// A discretized integration path.
///
/// The quadrature approximates `∫ g(z) dz` by `Σ weight_j · g(point_j) · tangent_j`,
/// where `tangent_j = dz/dt` at the node parameter `t_j`.
#[derive(Debug, Clone)]
pub struct Contour {
    kind: ContourKind,
    params: Vec<f64>,
    points: Vec<Complex64>,
    tangents: Vec<Complex64>,
    weights: Vec<f64>,
}

impl Contour {
    pub fn new(
        kind: ContourKind,
        params: Vec<f64>,
        points: Vec<Complex64>,
        tangents: Vec<Complex64>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        let n = params.len();
        if n == 0 {
            return Err(Error::Degenerate("contour has no nodes".into()));
        }
        if points.len() != n || tangents.len() != n || weights.len() != n {
            return Err(Error::invalid("contour", "node arrays differ in length"));
        }
        if params.windows(2).any(|p| p[1] <= p[0]) {
            return Err(Error::invalid("contour", "node parameters must be strictly increasing"));
        }
        if weights.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::invalid("contour", "weights must be positive"));
        }
        if let ContourKind::ClosedPeriodic { period } = kind {
            if !(period > 0.0) || params[n - 1] - params[0] >= period {
                return Err(Error::invalid(
                    "contour",
                    "closed contour nodes must lie within one period",
                ));
            }
        }
        Ok(Self {
            kind,
            params,
            points,
            tangents,
            weights,
        })
    }

    /// Counter-clockwise circle with `n` nodes offset by half a step from
    /// the angle 0, so that `θ = 0, π/2, π, 3π/2` are never nodes when `n`
    /// is divisible by 4.
    pub fn circle(center: Complex64, radius: f64, n: usize) -> Result<Self> {
        if n == 0 || !(radius > 0.0) {
            return Err(Error::invalid("circle", "need n > 0 and radius > 0"));
        }
        let step = 2.0 * PI / n as f64;
        let params: Vec<f64> = (0..n).map(|j| (j as f64 + 0.5) * step).collect();
        let points = params
            .iter()
            .map(|&t| center + Complex64::from_polar(radius, t))
            .collect();
        let tangents = params
            .iter()
            .map(|&t| Complex64::i() * Complex64::from_polar(radius, t))
            .collect();
        Self::new(
            ContourKind::ClosedPeriodic { period: 2.0 * PI },
            params,
            points,
            tangents,
            vec![step; n],
        )
    }

    /// Straight segment from `a` to `b` with an `n`-point Gauss–Legendre rule.
    pub fn segment(a: Complex64, b: Complex64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("segment", "need n > 0"));
        }
        let (nodes, weights) = gauss_legendre(n);
        let half = 0.5 * (b - a);
        let params: Vec<f64> = nodes.iter().map(|&x| 0.5 * (x + 1.0)).collect();
        let points = params.iter().map(|&s| a + (b - a) * s).collect();
        Self::new(
            ContourKind::OpenInterval,
            params,
            points,
            vec![half; n],
            weights,
        )
    }

    /// Closed polyline through `points` (the closing segment is implicit).
    ///
    /// The rule is the trapezoidal rule along the chords, written in node form
    /// with `tangent_j = (z_{j+1} - z_{j-1}) / 2`.
    pub fn closed_polyline(points: &[Complex64]) -> Result<Self> {
        let mut pts = points.to_vec();
        if pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        let n = pts.len();
        if n < 3 {
            return Err(Error::Degenerate("closed polyline needs at least 3 points".into()));
        }
        let tangents = (0..n)
            .map(|j| 0.5 * (pts[(j + 1) % n] - pts[(j + n - 1) % n]))
            .collect();
        Self::new(
            ContourKind::ClosedPeriodic { period: n as f64 },
            (0..n).map(|j| j as f64).collect(),
            pts,
            tangents,
            vec![1.0; n],
        )
    }

    pub fn kind(&self) -> ContourKind {
        self.kind
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn tangents(&self) -> &[Complex64] {
        &self.tangents
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }
}

/// Approximates `∮ integrand(z) dz` along `contour`.
pub fn contour_quadrature<F>(mut integrand: F, contour: &Contour) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Complex64,
{
    let mut sum = Complex64::new(0.0, 0.0);
    for (index, ((&z, &dz), &w)) in contour
        .points
        .iter()
        .zip(&contour.tangents)
        .zip(&contour.weights)
        .enumerate()
    {
        let g = integrand(z);
        if !(g.re.is_finite() && g.im.is_finite()) {
            return Err(Error::NonFiniteIntegrand { index, point: z });
        }
        sum += g * dz * w;
    }
    Ok(sum)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A quadrature node on `[a, b]` together with its distances to both
/// endpoints, computed without cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPoint {
    pub x: f64,
    pub from_a: f64,
    pub to_b: f64,
}

/// Integrates a function with algebraic endpoint behaviour
/// `(x - a)^{μ_a}` and `(b - x)^{μ_b}` over `[a, b]`.
///
/// The sigmoidal map `x = a + (b - a) s^p / (s^p + (1 - s)^q)` with
/// `p = 2/(1 + μ_a)`, `q = 2/(1 + μ_b)` (each at least 1) removes the
/// leading singularity; the transformed integrand is handled by an
/// `n`-point Gauss–Legendre rule.
pub fn singular_endpoint_quadrature<F>(
    mut integrand: F,
    interval: (f64, f64),
    exponents: (f64, f64),
    n: usize,
) -> Result<Complex64>
where
    F: FnMut(IntervalPoint) -> Complex64,
{
    let (a, b) = interval;
    for mu in [exponents.0, exponents.1] {
        if !(mu > -1.0) {
            return Err(Error::NonIntegrable { exponent: mu });
        }
    }
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::invalid("interval", "need finite a < b"));
    }
    if n == 0 {
        return Err(Error::invalid("n", "need at least one node"));
    }
    let p = (2.0 / (1.0 + exponents.0)).max(1.0);
    let q = (2.0 / (1.0 + exponents.1)).max(1.0);
    let len = b - a;
    let (nodes, weights) = gauss_legendre(n);
    let mut sum = Complex64::new(0.0, 0.0);
    for (index, (&t, &w)) in nodes.iter().zip(&weights).enumerate() {
        let s = 0.5 * (t + 1.0);
        let sp = s.powf(p);
        let sq = (1.0 - s).powf(q);
        let den = sp + sq;
        let from_a = len * sp / den;
        let to_b = len * sq / den;
        let jac = len * (p * s.powf(p - 1.0) * sq + q * sp * (1.0 - s).powf(q - 1.0))
            / (den * den);
        if jac == 0.0 {
            continue;
        }
        let point = IntervalPoint {
            x: if from_a <= to_b { a + from_a } else { b - to_b },
            from_a,
            to_b,
        };
        let g = integrand(point);
        if !(g.re.is_finite() && g.im.is_finite()) {
            return Err(Error::NonFiniteIntegrand {
                index,
                point: Complex64::new(point.x, 0.0),
            });
        }
        sum += g * (0.5 * w * jac);
    }
    Ok(sum)
}
