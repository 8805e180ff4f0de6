use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(x: Complex64) -> bool {
    x.im == 0.0 && x.re <= 0.0 && x.re == x.re.round()
}

fn ln_gamma_lanczos(x: Complex64) -> Complex64 {
    let z = x - 1.0;
    let mut acc = Complex64::new(LANCZOS_P[0], 0.0);
    for (k, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln sin(πx)`, reducing the real part first so that integers stay exact.
fn ln_sin_pi(x: Complex64) -> Complex64 {
    let shift = 2.0 * (x.re / 2.0).round();
    let y = Complex64::new(x.re - shift, x.im);
    if y.im.abs() > 20.0 {
        // sin(πy) ≈ ±(i/2) e^{∓iπy} for large ±Im y.
        let s = if y.im > 0.0 { 1.0 } else { -1.0 };
        let i = Complex64::i();
        return -s * i * PI * y + Complex64::new(-std::f64::consts::LN_2, s * PI / 2.0);
    }
    (PI * y).sin().ln()
}

fn wrap_arg(v: f64) -> f64 {
    let tau = 2.0 * PI;
    let mut w = v - tau * (v / tau).round();
    if w <= -PI {
        w += tau;
    }
    w
}

/// Principal logarithm of `Γ(x)` (imaginary part in `(-π, π]`).
///
/// Lanczos approximation for `Re x ≥ 1/2`, one reflection step otherwise.
pub fn log_gamma(x: Complex64) -> Result<Complex64> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::invalid("x", "must be finite"));
    }
    if is_pole(x) {
        return Err(Error::GammaPole { x });
    }
    let raw = if x.re >= 0.5 {
        ln_gamma_lanczos(x)
    } else {
        PI.ln() - ln_sin_pi(x) - ln_gamma_lanczos(1.0 - x)
    };
    Ok(Complex64::new(raw.re, wrap_arg(raw.im)))
}

/// Signed real `Γ(x)`.
pub fn gamma_real(x: f64) -> Result<f64> {
    let lg = log_gamma(Complex64::new(x, 0.0))?;
    let sign = if lg.im.abs() > 1.0 { -1.0 } else { 1.0 };
    Ok(sign * lg.re.exp())
}

/// `1/Γ(x)`, zero at the poles of `Γ`.
pub fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.round() {
        return 0.0;
    }
    match gamma_real(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}
