use crate::error::{Error, Result};

/// Least-squares fit of `log(magnitude) = exponent · log(distance) + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub intercept: f64,
    /// Euclidean norm of the log-space residuals.
    pub residual_norm: f64,
}

pub fn fit_power_law(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    if samples.len() < 3 {
        return Err(Error::Degenerate(format!(
            "power-law fit needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    if samples.iter().any(|&(d, m)| !(d > 0.0 && m > 0.0 && d.is_finite() && m.is_finite())) {
        return Err(Error::invalid("samples", "distances and magnitudes must be positive"));
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(d, m)| (d.ln(), m.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx <= 1e-24 * n {
        return Err(Error::Degenerate("all sample distances are equal".into()));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual_norm = pts
        .iter()
        .map(|p| (p.1 - intercept - exponent * p.0).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(PowerLawFit {
        exponent,
        intercept,
        residual_norm,
    })
}
