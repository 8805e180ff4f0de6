use num_complex::Complex64;

use super::power::branch_power;
use crate::error::{Error, Result};

const SERIES_RADIUS: f64 = 0.7;
const MAX_TERMS: usize = 10_000;
const TERM_TOL: f64 = 1e-16;
const MAX_STEPS: usize = 10_000;
const TAYLOR_TERMS: usize = 400;
const STEP_RATIO: f64 = 0.5;

/// Real parameters `(a, b; c)` of the Gauss function.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = Self { a, b, c };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::invalid("params", "a, b, c must be finite"));
        }
        if self.c <= 0.0 && self.c == self.c.round() {
            return Err(Error::invalid("c", "must not be a non-positive integer"));
        }
        Ok(())
    }

    /// Order `a ≤ b` so that results are exactly symmetric in `(a, b)`.
    fn canonical(&self) -> Self {
        if self.a.total_cmp(&self.b).is_gt() {
            Self { a: self.b, b: self.a, c: self.c }
        } else {
            *self
        }
    }

    fn terminating(&self) -> bool {
        let npi = |x: f64| x <= 0.0 && x == x.round();
        npi(self.a) || npi(self.b)
    }
}

/// `₂F₁(a, b; c; t)` on the closed unit disk minus `t = 1`.
///
/// Power series for `|t| ≤ 0.7`, the Pfaff transformation where
/// `|t/(t−1)| ≤ 0.7`, and Taylor stepping along the hypergeometric ODE
/// elsewhere. Polynomial cases are summed for any `t`.
pub fn gauss_2f1(params: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    params.validate()?;
    check_finite(t)?;
    let p = params.canonical();
    if p.terminating() {
        return series(p, t);
    }
    if t.norm() > 1.0 || t == Complex64::new(1.0, 0.0) {
        return Err(Error::OutsideDomain { t });
    }
    dispatch(p, t)
}

/// Principal-branch `₂F₁` on `ℂ \ [1, ∞)`, continued along the ODE.
pub fn gauss_2f1_continued(params: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    params.validate()?;
    check_finite(t)?;
    let p = params.canonical();
    if p.terminating() {
        return series(p, t);
    }
    if t.im == 0.0 && t.re >= 1.0 {
        return Err(Error::OutsideDomain { t });
    }
    dispatch(p, t)
}

/// Like [`gauss_2f1_continued`], but real `t > 1` is accepted as the boundary
/// value from the half plane given by the sign of `Im t` (signed zero).
pub(crate) fn gauss_2f1_edge(params: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    params.validate()?;
    check_finite(t)?;
    let p = params.canonical();
    if p.terminating() {
        return series(p, t);
    }
    if t == Complex64::new(1.0, 0.0) {
        return Err(Error::OutsideDomain { t });
    }
    dispatch(p, t)
}

fn check_finite(t: Complex64) -> Result<()> {
    if t.re.is_finite() && t.im.is_finite() {
        Ok(())
    } else {
        Err(Error::OutsideDomain { t })
    }
}

fn dispatch(p: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    if t.norm() <= SERIES_RADIUS {
        return series(p, t);
    }
    let s = t / (t - 1.0);
    if s.norm() <= SERIES_RADIUS {
        // Pfaff: (1−t)^{−a} ₂F₁(a, c−b; c; t/(t−1)).
        let q = Hyp2F1Params { a: p.a, b: p.c - p.b, c: p.c };
        return Ok(branch_power(1.0 - t, -p.a)? * series(q, s)?);
    }
    continue_ode(p, t)
}

fn series(p: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let k = k as f64;
        term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * t;
        sum += term;
        if term.re == 0.0 && term.im == 0.0 {
            return Ok(sum);
        }
        if term.norm() <= TERM_TOL * sum.norm() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence { iterations: MAX_TERMS })
}

fn series_derivative(p: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    let q = Hyp2F1Params { a: p.a + 1.0, b: p.b + 1.0, c: p.c + 1.0 };
    Ok(p.a * p.b / p.c * series(q, t)?)
}

fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let s = (((z - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + s * d)).norm()
}

/// Integrate the hypergeometric ODE from `0.5·t/|t|` to `t`, detouring
/// around the singular point `1` when the straight path passes near it.
fn continue_ode(p: Hyp2F1Params, t: Complex64) -> Result<Complex64> {
    let start = 0.5 * t / t.norm();
    let mut y = series(p, start)?;
    let mut dy = series_derivative(p, start)?;
    let one = Complex64::new(1.0, 0.0);
    let mut legs = Vec::with_capacity(2);
    let near = point_segment_distance(one, start, t);
    if near < 0.25 && near < 0.5 * (t - one).norm() {
        let side = if t.im.is_sign_negative() { -1.0 } else { 1.0 };
        legs.push(Complex64::new(1.0, 0.5 * side));
    }
    legs.push(t);
    let mut z = start;
    let mut steps = 0;
    for target in legs {
        while z != target {
            steps += 1;
            if steps > MAX_STEPS {
                return Err(Error::NonConvergence { iterations: MAX_STEPS });
            }
            let rho = z.norm().min((one - z).norm());
            let hmax = STEP_RATIO * rho;
            let d = target - z;
            let (h, next) = if d.norm() <= hmax {
                (d, target)
            } else {
                let h = d / d.norm() * hmax;
                (h, z + h)
            };
            let (ny, ndy) = taylor_step(p, z, y, dy, h)?;
            y = ny;
            dy = ndy;
            z = next;
        }
    }
    Ok(y)
}

/// Advance `(F, F′)` from `zc` to `zc + h` with the local Taylor series.
/// Coefficients are carried scaled by `h^k`.
fn taylor_step(
    p: Hyp2F1Params,
    zc: Complex64,
    y0: Complex64,
    dy0: Complex64,
    h: Complex64,
) -> Result<(Complex64, Complex64)> {
    let p0 = zc * (1.0 - zc);
    let p1 = 1.0 - 2.0 * zc;
    let q0 = p.c - (p.a + p.b + 1.0) * zc;
    let h2 = h * h;
    let mut prev = y0; // Y_k
    let mut cur = dy0 * h; // Y_{k+1}
    let mut val = prev + cur;
    let mut dsum = cur; // Σ k Y_k
    let mut small = 0;
    for k in 0..TAYLOR_TERMS {
        let kf = k as f64;
        let next = ((kf + p.a) * (kf + p.b) * prev * h2
            - (kf + 1.0) * (p1 * kf + q0) * cur * h)
            / (p0 * (kf + 1.0) * (kf + 2.0));
        val += next;
        dsum += (kf + 2.0) * next;
        let scale = val.norm().max(dsum.norm()).max(f64::MIN_POSITIVE);
        if next.norm() <= 1e-17 * scale && cur.norm() <= 1e-17 * scale * 4.0 {
            small += 1;
            if small >= 2 {
                return Ok((val, dsum / h));
            }
        } else {
            small = 0;
        }
        prev = cur;
        cur = next;
    }
    Err(Error::NonConvergence { iterations: TAYLOR_TERMS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn f(a: f64, b: f64, cc: f64, t: Complex64) -> Complex64 {
        gauss_2f1(Hyp2F1Params::new(a, b, cc).unwrap(), t).unwrap()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn origin_is_one() {
        assert_eq!(f(0.3, -1.7, 2.5, c(0.0, 0.0)), c(1.0, 0.0));
    }

    #[test]
    fn elementary_closed_form() {
        // ₂F₁(γ, γ+½; ½; z²) = ½[(1+z)^{−2γ} + (1−z)^{−2γ}]
        let v = f(0.25, 0.75, 0.5, c(0.25, 0.0));
        let expect = 0.5 * (1.5f64.powf(-0.5) + 0.5f64.powf(-0.5));
        assert!((v.re - expect).abs() < 1e-14 && v.im == 0.0);
        assert!((expect - 1.115_355_1).abs() < 1e-7);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g: f64 = rng.random_range(-0.49..0.49);
            let r: f64 = 0.9 * rng.random::<f64>().sqrt();
            let th: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            let z = Complex64::from_polar(r, th);
            let lhs = f(g, g - 0.5, 0.5, z * z);
            let rhs = 0.5
                * (branch_power(1.0 + z, 1.0 - 2.0 * g).unwrap()
                    + branch_power(1.0 - z, 1.0 - 2.0 * g).unwrap());
            assert!(rel(lhs, rhs) < 1e-12, "g={g} z={z} {lhs} {rhs}");
        }
    }

    #[test]
    fn exact_symmetry() {
        for t in [c(0.3, 0.1), c(-0.9, 0.2), c(0.95, 0.2), c(0.5, 0.85)] {
            let x = f(0.31, -0.72, 1.4, t);
            let y = f(-0.72, 0.31, 1.4, t);
            assert_eq!(x, y);
        }
    }

    #[test]
    fn reference_values() {
        let cases = [
            ((0.3, 0.7, 1.2), c(0.95, 0.2), c(1.283_498_964_469_131_4, 0.219_324_405_943_370_5)),
            (
                (0.3, 0.7, 1.2),
                Complex64::from_polar(0.99, std::f64::consts::FRAC_PI_3),
                c(1.000_494_370_669_650_2, 0.183_874_671_602_567_2),
            ),
            ((-0.2, 0.45, 0.5), c(-0.8, 0.0), c(1.113_124_728_038_851, 0.0)),
            ((0.5, 0.5, 1.0), c(0.99, 0.0), c(2.352_715_816_779_742_3, 0.0)),
        ];
        for ((a, b, cc), t, expect) in cases {
            let v = f(a, b, cc, t);
            assert!(rel(v, expect) < 1e-12, "{a},{b},{cc} at {t}: {v} vs {expect}");
        }
    }

    #[test]
    fn logarithm_case_everywhere_off_the_cut() {
        // ₂F₁(1, 1; 2; t) = −ln(1−t)/t
        let p = Hyp2F1Params::new(1.0, 1.0, 2.0).unwrap();
        let pts = [c(0.9, 0.0), c(-5.0, 0.0), c(3.0, 2.0), c(0.0, 10.0), c(1.5, -0.01), c(0.2, 0.98)];
        for t in pts {
            let v = gauss_2f1_continued(p, t).unwrap();
            let expect = -(1.0 - t).ln() / t;
            assert!(rel(v, expect) < 1e-12, "t={t}: {v} vs {expect}");
        }
        assert!((gauss_2f1(p, c(0.9, 0.0)).unwrap().re - 2.558_427_881_104_495).abs() < 1e-13);
    }

    #[test]
    fn binomial_case_continued() {
        // ₂F₁(a, b; b; t) = (1−t)^{−a}
        let p = Hyp2F1Params::new(0.37, 1.3, 1.3).unwrap();
        for t in [c(-3.0, 0.5), c(4.0, 1.0), c(2.0, -3.0), c(0.99, 0.05)] {
            let v = gauss_2f1_continued(p, t).unwrap();
            let expect = branch_power(1.0 - t, -0.37).unwrap();
            assert!(rel(v, expect) < 1e-12, "t={t}");
        }
    }

    #[test]
    fn edge_values_on_the_cut() {
        // −ln(1−t)/t on t = x ∓ i0, x > 1: ln(1−t) = ln(x−1) ± iπ.
        let p = Hyp2F1Params::new(1.0, 1.0, 2.0).unwrap();
        for x in [1.2, 2.0, 7.5] {
            let below = gauss_2f1_edge(p, c(x, -0.0)).unwrap();
            let above = gauss_2f1_edge(p, c(x, 0.0)).unwrap();
            let l = (x - 1.0f64).ln();
            let expect_below = -c(l, std::f64::consts::PI) / x;
            let expect_above = -c(l, -std::f64::consts::PI) / x;
            assert!(rel(below, expect_below) < 1e-12, "x={x}: {below}");
            assert!(rel(above, expect_above) < 1e-12, "x={x}: {above}");
        }
    }

    #[test]
    fn polynomial_case_any_argument() {
        // ₂F₁(−2, b; c; t) = 1 − 2bt/c + b(b+1)t²/(c(c+1))
        let (b, cc) = (0.4, 1.7);
        let t = c(3.0, -2.0);
        let v = f(-2.0, b, cc, t);
        let expect = 1.0 - 2.0 * b * t / cc + b * (b + 1.0) * t * t / (cc * (cc + 1.0));
        assert!(rel(v, expect) < 1e-14);
        assert_eq!(f(0.0, b, cc, t), c(1.0, 0.0));
    }

    #[test]
    fn domain_errors() {
        let p = Hyp2F1Params::new(0.3, 0.4, 1.1).unwrap();
        assert!(matches!(gauss_2f1(p, c(1.0, 0.0)), Err(Error::OutsideDomain { .. })));
        assert!(matches!(gauss_2f1(p, c(0.0, 1.01)), Err(Error::OutsideDomain { .. })));
        assert!(matches!(gauss_2f1_continued(p, c(2.0, 0.0)), Err(Error::OutsideDomain { .. })));
        assert!(gauss_2f1(p, c(0.0, 1.0)).is_ok());
        assert!(Hyp2F1Params::new(0.3, 0.4, -2.0).is_err());
        assert!(Hyp2F1Params::new(0.3, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn contiguous_relation() {
        // c(c−1)(t−1)F(c−1) + c[c−1−(2c−a−b−1)t]F(c) + (c−a)(c−b)t F(c+1) = 0
        let (a, b, cc) = (0.3, -0.45, 1.6);
        for t in [c(0.8, 0.5), c(-0.95, 0.1), c(0.99, -0.1)] {
            let fm = f(a, b, cc - 1.0, t);
            let f0 = f(a, b, cc, t);
            let fp = f(a, b, cc + 1.0, t);
            let lhs = cc * (cc - 1.0) * (t - 1.0) * fm
                + cc * (cc - 1.0 - (2.0 * cc - a - b - 1.0) * t) * f0
                + (cc - a) * (cc - b) * t * fp;
            assert!(lhs.norm() < 1e-12 * f0.norm() * 10.0, "t={t}: {lhs}");
        }
    }
}
