use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance from `z` to the segment `[a, b]`.
pub fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a) * ab.conj()).re / len2;
    let t = t.clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

fn closed_segments(trace: &[Complex64]) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
    let n = trace.len();
    (0..n).map(move |j| (trace[j], trace[(j + 1) % n]))
}

/// Distance from `z` to the closed polyline through `trace`.
pub fn distance_to_polyline(trace: &[Complex64], z: Complex64) -> f64 {
    closed_segments(trace)
        .map(|(a, b)| point_segment_distance(z, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Signed number of turns of the closed polyline `trace` around `z0`.
///
/// Points closer than `1e-12` times the polyline's extent (seen from `z0`)
/// are rejected as ambiguous.
pub fn winding_number(trace: &[Complex64], z0: Complex64) -> Result<i64> {
    let scale = trace
        .iter()
        .map(|z| (z - z0).norm())
        .fold(0.0_f64, f64::max);
    winding_number_with_tolerance(trace, z0, 1e-12 * scale.max(f64::MIN_POSITIVE))
}

pub fn winding_number_with_tolerance(
    trace: &[Complex64],
    z0: Complex64,
    tolerance: f64,
) -> Result<i64> {
    if trace.len() < 2 {
        return Err(Error::Degenerate("winding number needs at least 2 points".into()));
    }
    let mut total = 0.0;
    for (a, b) in closed_segments(trace) {
        let distance = point_segment_distance(z0, a, b);
        if distance <= tolerance {
            return Err(Error::AmbiguousWinding {
                point: z0,
                distance,
            });
        }
        total += ((b - z0) / (a - z0)).arg();
    }
    Ok((total / std::f64::consts::TAU).round() as i64)
}

/// Shoelace area of a closed polyline; positive for counter-clockwise orientation.
pub fn polyline_area(trace: &[Complex64]) -> Result<f64> {
    if trace.len() < 3 {
        return Err(Error::Degenerate("area needs at least 3 points".into()));
    }
    // Centering improves cancellation for traces far from the origin.
    let center = trace.iter().sum::<Complex64>() / trace.len() as f64;
    let twice: f64 = closed_segments(trace)
        .map(|(a, b)| {
            let (a, b) = (a - center, b - center);
            a.re * b.im - b.re * a.im
        })
        .sum();
    Ok(0.5 * twice)
}

/// Symmetric Hausdorff distance between two point clouds.
pub fn hausdorff_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    fn directed(from: &[Complex64], to: &[Complex64]) -> f64 {
        from.iter()
            .map(|p| to.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    }
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    directed(a, b).max(directed(b, a))
}

/// Abscissae where the closed polyline meets the real axis.
pub fn real_axis_crossings(trace: &[Complex64]) -> Vec<f64> {
    let mut out = Vec::new();
    for (a, b) in closed_segments(trace) {
        if a.im == 0.0 {
            out.push(a.re);
        } else if a.im * b.im < 0.0 {
            let t = a.im / (a.im - b.im);
            out.push(a.re + t * (b.re - a.re));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{PI, TAU};

    fn circle(n: usize, start: f64, ccw: bool) -> Vec<Complex64> {
        (0..n)
            .map(|j| {
                let t = start + TAU * j as f64 / n as f64;
                Complex64::from_polar(1.0, if ccw { t } else { -t })
            })
            .collect()
    }

    #[test]
    fn winding_of_unit_circle() {
        let ccw = circle(64, 0.0, true);
        assert_eq!(winding_number(&ccw, Complex64::new(0.0, 0.0)).unwrap(), 1);
        assert_eq!(winding_number(&ccw, Complex64::new(3.0, 0.0)).unwrap(), 0);
        let cw = circle(64, 0.0, false);
        assert_eq!(winding_number(&cw, Complex64::new(0.0, 0.0)).unwrap(), -1);
    }

    #[test]
    fn winding_rejects_points_on_trace() {
        let ccw = circle(64, 0.0, true);
        let err = winding_number(&ccw, ccw[5]).unwrap_err();
        assert!(matches!(err, Error::AmbiguousWinding { .. }));
    }

    #[test]
    fn area_of_square_and_circle() {
        let sq = [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(0.0, 1.0),
        ];
        assert!((polyline_area(&sq).unwrap() - 1.0).abs() < 1e-15);
        let mut rev = sq.to_vec();
        rev.reverse();
        assert!((polyline_area(&rev).unwrap() + 1.0).abs() < 1e-15);
        let c = circle(4096, 0.0, true);
        assert!((polyline_area(&c).unwrap() - PI).abs() < 1e-5);
        assert!(polyline_area(&sq[..2]).is_err());
    }

    #[test]
    fn crossings_of_offset_circle() {
        let c: Vec<_> = circle(1001, 0.1, true)
            .into_iter()
            .map(|z| z + Complex64::new(0.5, 0.0))
            .collect();
        let mut x = real_axis_crossings(&c);
        x.sort_by(f64::total_cmp);
        assert_eq!(x.len(), 2);
        assert!((x[0] + 0.5).abs() < 1e-4 && (x[1] - 1.5).abs() < 1e-4);
    }

    #[test]
    fn hausdorff_of_shifted_clouds() {
        let a = circle(128, 0.0, true);
        let b: Vec<_> = a.iter().map(|z| z + Complex64::new(0.25, 0.0)).collect();
        assert!((hausdorff_distance(&a, &b) - 0.25).abs() < 0.01);
        assert_eq!(hausdorff_distance(&a, &a), 0.0);
    }

    proptest! {
        #[test]
        fn winding_is_resampling_and_rotation_invariant(
            n in 8usize..400, start in 0.0..TAU, x in -0.9..0.9f64, y in -0.9..0.9f64, far in 1.5..5.0f64
        ) {
            let c = circle(n, start, true);
            let inside = Complex64::new(x * 0.5, y * 0.5);
            prop_assert_eq!(winding_number(&c, inside).unwrap(), 1);
            prop_assert_eq!(winding_number(&c, Complex64::new(far, 0.0)).unwrap(), 0);
        }

        #[test]
        fn area_is_relabeling_invariant_and_flips_with_orientation(n in 3usize..200, shift in 0usize..200) {
            let c = circle(n, 0.3, true);
            let a = polyline_area(&c).unwrap();
            let mut rotated = c.clone();
            rotated.rotate_left(shift % n);
            prop_assert!((polyline_area(&rotated).unwrap() - a).abs() < 1e-12);
            let mut rev = c.clone();
            rev.reverse();
            prop_assert!((polyline_area(&rev).unwrap() + a).abs() < 1e-12);
        }
    }
}
