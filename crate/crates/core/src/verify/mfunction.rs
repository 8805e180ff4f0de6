use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{BoundaryTrace, FamilyKind, MapFamily, Side};
use crate::numerics::{
    distance_to_polyline, gauss_legendre, real_axis_crossings, winding_number,
};

/// Minimum distance from the boundary, as a fraction of the trace diameter.
pub const M_PLUS_CLEARANCE: f64 = 0.02;

/// One evaluation of `M₊(z, T)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MFunctionSample {
    pub re: f64,
    pub im: f64,
    pub m_plus_re: f64,
    pub m_plus_im: f64,
    pub side: Side,
}

impl MFunctionSample {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn m_plus(&self) -> Complex64 {
        Complex64::new(self.m_plus_re, self.m_plus_im)
    }
}

fn diameter(points: &[Complex64]) -> f64 {
    let (mut x0, mut x1, mut y0, mut y1) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in points {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    (x1 - x0).hypot(y1 - y0)
}

/// Trapezoidal closed-polyline tangents `(z_{j+1} − z_{j−1})/2`.
fn tangents(points: &[Complex64]) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
    let n = points.len();
    (0..n).map(move |j| {
        let next = points[(j + 1) % n];
        let prev = points[(j + n - 1) % n];
        (points[j], 0.5 * (next - prev))
    })
}

/// `M₊(z) = (1/πi)∮ |Im z′| dz′/(z′ − z)` by the trapezoidal rule on the trace.
pub fn m_plus_cauchy(trace: &BoundaryTrace, z: Complex64) -> Result<Complex64> {
    let pts = trace.points();
    let dist = distance_to_polyline(&pts, z);
    let min_distance = M_PLUS_CLEARANCE * diameter(&pts);
    if dist < min_distance {
        return Err(Error::TooCloseToBoundary { z, min_distance });
    }
    if winding_number(&pts, z)? == 0 {
        return Err(Error::NotInside { z });
    }
    let sum: Complex64 = tangents(&pts)
        .map(|(zj, dz)| zj.im.abs() * dz / (zj - z))
        .sum();
    Ok(sum / (PI * Complex64::i()))
}

/// The one-petal closed form `M₊ = ∓2i sin²α·z + T` (upper/lower half plane).
pub fn m_plus_expected(family: &MapFamily, time: f64, z: Complex64) -> Result<(Complex64, Side)> {
    if family.kind() != FamilyKind::OnePetal {
        return Err(Error::WrongFamily { expected: "one-petal" });
    }
    let s2 = family.alpha().sin().powi(2);
    let side = if z.im >= 0.0 { Side::Upper } else { Side::Lower };
    let sign = if side == Side::Upper { -1.0 } else { 1.0 };
    Ok((sign * 2.0 * Complex64::i() * s2 * z + time, side))
}

/// Evaluates `M₊` and packages it with the side of `z`.
pub fn m_plus_sample(trace: &BoundaryTrace, z: Complex64) -> Result<MFunctionSample> {
    let m = m_plus_cauchy(trace, z)?;
    Ok(MFunctionSample {
        re: z.re,
        im: z.im,
        m_plus_re: m.re,
        m_plus_im: m.im,
        side: if z.im >= 0.0 { Side::Upper } else { Side::Lower },
    })
}

/// Contour and area forms of a harmonic moment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicMoment {
    pub k: u32,
    pub contour: f64,
    pub area: f64,
}

/// Rejects petal traces (their corners sit at the origin) and traces whose
/// real-axis crossings do not bracket the origin.
fn check_general_position(trace: &BoundaryTrace, points: &[Complex64]) -> Result<()> {
    if trace.family().is_some() {
        return Err(Error::MomentsIllDefined);
    }
    let scale = diameter(points);
    let delta = 1e-6 * scale;
    let xs = real_axis_crossings(points);
    let has_left = xs.iter().any(|&x| x < -delta);
    let has_right = xs.iter().any(|&x| x > delta);
    let touches = xs.iter().any(|&x| x.abs() <= delta)
        || points.iter().any(|z| z.norm() <= delta);
    if !has_left || !has_right || touches {
        return Err(Error::MomentsIllDefined);
    }
    Ok(())
}

/// `T_k = (1/πik)∮ |Im z| z^{−k} dz` on the trace.
pub fn harmonic_moment(trace: &BoundaryTrace, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::invalid("k", "moments start at k = 2"));
    }
    let pts = trace.points();
    check_general_position(trace, &pts)?;
    let sum: Complex64 = tangents(&pts)
        .map(|(zj, dz)| zj.im.abs() * zj.powi(-(k as i32)) * dz)
        .sum();
    let v = sum / (PI * Complex64::i() * k as f64);
    Ok(v.re)
}

/// Radius at which the ray `arg z = θ` leaves the trace (star-shaped traces).
fn boundary_radius(points: &[Complex64], theta: f64) -> Result<f64> {
    let dir = Complex64::from_polar(1.0, theta);
    let n = points.len();
    let mut hits = Vec::new();
    for j in 0..n {
        let (a, b) = (points[j], points[(j + 1) % n]);
        // Solve a + s(b − a) = ρ·dir with s ∈ [0, 1), ρ > 0.
        let e = b - a;
        let den = e.re * dir.im - e.im * dir.re;
        if den == 0.0 {
            continue;
        }
        let s = (a.im * dir.re - a.re * dir.im) / den;
        if !(0.0..1.0).contains(&s) {
            continue;
        }
        let p = a + s * e;
        let rho = (p * dir.conj()).re;
        if rho > 0.0 {
            hits.push(rho);
        }
    }
    match hits.len() {
        1 => Ok(hits[0]),
        0 => Err(Error::Degenerate(format!("ray at θ = {theta} misses the trace"))),
        _ => {
            let (lo, hi) = hits
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &r| (a.min(r), b.max(r)));
            if hi - lo <= 1e-9 * hi {
                Ok(hi)
            } else {
                Err(Error::Degenerate("trace is not star-shaped about the origin".into()))
            }
        }
    }
}

/// `T_k = (2/πk)∬ Im(z^{−k}) d²z` over the exterior of the domain in the
/// upper half plane, for traces that are star-shaped about the origin.
///
/// The part outside the unit circle is integrated in closed form; the part
/// between the boundary radius `ρ_b(θ)` and 1 by composite Gauss–Legendre in θ
/// with the radial integral done exactly.
pub fn harmonic_moment_area(trace: &BoundaryTrace, k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::invalid("k", "moments start at k = 2"));
    }
    let pts = trace.points();
    check_general_position(trace, &pts)?;
    let kf = k as f64;
    let outer = if k == 2 { 0.0 } else { -(1.0 - (kf * PI).cos()) / (kf * (kf - 2.0)) };
    let panels = 128;
    let (nodes, weights) = gauss_legendre(8);
    let mut inner = 0.0;
    for p in 0..panels {
        let (a, b) = (PI * p as f64 / panels as f64, PI * (p + 1) as f64 / panels as f64);
        for (&x, &wt) in nodes.iter().zip(&weights) {
            let theta = 0.5 * (a + b) + 0.5 * (b - a) * x;
            let rb = boundary_radius(&pts, theta)?;
            // ∫_{ρ_b}^{1} ρ^{1−k} dρ
            let radial = if k == 2 { -rb.ln() } else { (1.0 - rb.powf(2.0 - kf)) / (2.0 - kf) };
            inner += 0.5 * (b - a) * wt * (-(kf * theta).sin()) * radial;
        }
    }
    Ok(2.0 / (PI * kf) * (outer + inner))
}

/// Both forms of `T_k`.
pub fn harmonic_moments(trace: &BoundaryTrace, k: u32) -> Result<HarmonicMoment> {
    Ok(HarmonicMoment {
        k,
        contour: harmonic_moment(trace, k)?,
        area: harmonic_moment_area(trace, k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{boundary_trace, TimeState};

    fn circle(n: usize) -> BoundaryTrace {
        BoundaryTrace::from_points(
            (0..n)
                .map(|j| Complex64::from_polar(1.0, (j as f64 + 0.5) * 2.0 * PI / n as f64))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn half_disk_moments() {
        let t = circle(4096);
        let t3 = harmonic_moment(&t, 3).unwrap();
        assert!((t3 + 4.0 / (9.0 * PI)).abs() < 1e-6, "{t3}");
        for k in [2, 4, 6] {
            assert!(harmonic_moment(&t, k).unwrap().abs() < 1e-10);
        }
        for k in 2..=6 {
            let m = harmonic_moments(&t, k).unwrap();
            assert!((m.contour - m.area).abs() < 1e-4, "{m:?}");
        }
    }

    #[test]
    fn ellipse_forms_agree() {
        // x²/a² + y² = 1 with a = 1.4: contour and area forms are independent.
        let n = 8192;
        let pts: Vec<Complex64> = (0..n)
            .map(|j| {
                let t = (j as f64 + 0.5) * 2.0 * PI / n as f64;
                Complex64::new(1.4 * t.cos(), 0.8 * t.sin())
            })
            .collect();
        let tr = BoundaryTrace::from_points(pts).unwrap();
        for k in 2..=6 {
            let m = harmonic_moments(&tr, k).unwrap();
            assert!((m.contour - m.area).abs() < 1e-4, "{m:?}");
        }
    }

    #[test]
    fn petal_trace_is_rejected() {
        let t = boundary_trace(&MapFamily::lemniscate(), TimeState::unit(1.0).unwrap(), 256).unwrap();
        assert!(matches!(harmonic_moment(&t, 4), Err(Error::MomentsIllDefined)));
    }

    #[test]
    fn lemniscate_m_plus() {
        let f = MapFamily::lemniscate();
        let t = boundary_trace(&f, TimeState::unit(1.0).unwrap(), 1 << 16).unwrap();
        let z = Complex64::new(0.0, 0.8);
        let m = m_plus_cauchy(&t, z).unwrap();
        assert!((m - Complex64::new(1.8, 0.0)).norm() < 1e-3, "{m}");
        let (e, side) = m_plus_expected(&f, 1.0, z.conj()).unwrap();
        assert_eq!(side, Side::Lower);
        let m = m_plus_cauchy(&t, z.conj()).unwrap();
        assert!((m - e).norm() < 1e-3, "{m} vs {e}");
        assert!(matches!(m_plus_cauchy(&t, Complex64::new(3.0, 0.0)), Err(Error::NotInside { .. })));
        assert!(matches!(
            m_plus_cauchy(&t, Complex64::new(0.0, 1e-3)),
            Err(Error::TooCloseToBoundary { .. })
        ));
    }
}
