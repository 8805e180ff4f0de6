use std::f64::consts::TAU;

use num_complex::Complex64;

use super::family::MapFamily;
use super::map_value;
use crate::error::{Error, Result};

const IMAG_TOL: f64 = 1e-8;

/// Laurent data of `f(w) = r·w + c₀ + c₁/w + … + c_K/w^K` together with the
/// expansions `p(z) = z + u₁/z + …` and `z(p) = p + a₁/p + …` of the map to
/// the `p = r(w + 1/w) + u₀` plane.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LaurentCoefficients {
    pub r: f64,
    /// `c₀ … c_K`.
    pub c: Vec<f64>,
    /// `u₀ … u_K`; `u₀ = c₀` is the additive constant of `p`.
    pub u: Vec<f64>,
    /// `a₀ … a_K` of the inverse series; `a₀ = 0` and `a₁ = −u₁`.
    pub a: Vec<f64>,
    /// Largest imaginary part discarded from the raw coefficients.
    pub max_imag: f64,
}

impl LaurentCoefficients {
    /// The capacity `u₁`.
    pub fn capacity(&self) -> f64 {
        self.u[1]
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }
}

fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut out = vec![0.0; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0.0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn recip(a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut out = vec![0.0; n];
    out[0] = 1.0 / a[0];
    for k in 1..n {
        let s: f64 = (1..=k).map(|j| a[j] * out[k - j]).sum();
        out[k] = -s / a[0];
    }
    out
}

/// Solves `X = lead − Σ_k coef[k]·t^{k+1}·X^{−k}` (`k ≥ 0`) for a power
/// series `X(t)` truncated to `len` terms.
fn revert(lead: f64, coef: &[f64], len: usize) -> Vec<f64> {
    let mut x = vec![0.0; len];
    x[0] = lead;
    for _ in 0..len {
        let inv = recip(&x);
        let mut next = vec![0.0; len];
        next[0] = lead;
        let mut pow = vec![0.0; len];
        pow[0] = 1.0;
        for (k, &ck) in coef.iter().enumerate() {
            if k > 0 {
                pow = mul(&pow, &inv);
            }
            for j in 0..len {
                if j + k + 1 < len {
                    next[j + k + 1] -= ck * pow[j];
                }
            }
        }
        x = next;
    }
    x
}

/// Laurent coefficients of `f` from a DFT on `|w| = ρ`.
pub fn laurent_coefficients(family: &MapFamily, order: usize) -> Result<LaurentCoefficients> {
    if order < 1 {
        return Err(Error::invalid("K", "order must be at least 1"));
    }
    // Keep ρ^K bounded so that round-off in the DFT stays small.
    let rho = if order <= 16 { 2.0 } else { 2f64.powf(16.0 / order as f64) };
    let n = 256.max(4 * order);
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        let w = Complex64::from_polar(rho, (j as f64 + 0.5) * TAU / n as f64);
        values.push((w, map_value(family, w)?));
    }
    let coefficient = |m: i32| -> Complex64 {
        values.iter().map(|&(w, f)| f * w.powi(-m)).sum::<Complex64>() / n as f64
    };
    let lead = coefficient(1);
    let mut max_imag = lead.im.abs();
    if max_imag > IMAG_TOL {
        return Err(Error::SymmetryViolation { index: 1, imag: lead.im });
    }
    let mut c = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let ck = coefficient(-(k as i32));
        if ck.im.abs() > IMAG_TOL {
            return Err(Error::SymmetryViolation { index: -(k as i64), imag: ck.im });
        }
        max_imag = max_imag.max(ck.im.abs());
        c.push(ck.re);
    }
    let r = lead.re;
    let len = order + 2;

    // w = z·S(1/z) from z = r w + c₀ + Σ c_k w^{−k}.
    let mut wc = vec![0.0; order + 1];
    for k in 0..=order {
        wc[k] = c[k] / r;
    }
    let s = revert(1.0 / r, &wc, len);
    // p − u₀ = z·[r S + r t² S^{−1}] with t = 1/z.
    let inv = recip(&s);
    let mut p = vec![0.0; len];
    for j in 0..len {
        p[j] = r * s[j];
        if j >= 2 {
            p[j] += r * inv[j - 2];
        }
    }
    let mut u = vec![0.0; order + 1];
    u[0] = c[0];
    u[1..].copy_from_slice(&p[2..order + 2]);
    // z = p·Z(1/p) from p = z + Σ_{k≥1} u_k z^{−k}.
    let mut pc = vec![0.0; order + 1];
    pc[1..].copy_from_slice(&u[1..]);
    let zs = revert(1.0, &pc, len);
    let mut a = vec![0.0; order + 1];
    a[1..].copy_from_slice(&zs[2..order + 2]);
    Ok(LaurentCoefficients { r, c, u, a, max_imag })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::potential_v;
    use std::f64::consts::PI;

    #[test]
    fn lemniscate_coefficients() {
        let l = laurent_coefficients(&MapFamily::lemniscate(), 8).unwrap();
        assert!((l.r - 1.0).abs() < 1e-10);
        assert!(l.c[0].abs() < 1e-10);
        assert!((l.c[1] + 0.5).abs() < 1e-10);
        // w√(1−w⁻²) = w − ½w⁻¹ − ⅛w⁻³ − …
        assert!((l.c[3] + 0.125).abs() < 1e-10);
        assert!(l.c[2].abs() < 1e-10);
        assert!((l.capacity() - 1.5).abs() < 1e-10);
        assert!((l.a[1] + 1.5).abs() < 1e-10);
    }

    #[test]
    fn lemniscate_capacity_series() {
        // p = √(z²+1) + (z²+1)^{−1/2} = z + (3/2)/z − (5/8)/z³ + …
        let l = laurent_coefficients(&MapFamily::lemniscate(), 6).unwrap();
        assert!((l.u[3] + 0.625).abs() < 1e-9, "{:?}", l.u);
    }

    #[test]
    fn potential_tail_matches_first_coefficient() {
        let fams = [
            MapFamily::one_petal(PI / 8.0).unwrap(),
            MapFamily::one_petal(3.0 * PI / 8.0).unwrap(),
            MapFamily::two_petal(PI / 8.0, PI / 16.0).unwrap(),
            MapFamily::two_petal(PI / 4.0, PI / 8.0).unwrap(),
        ];
        for f in &fams {
            let l = laurent_coefficients(f, 4).unwrap();
            let w = Complex64::new(1e5, 0.0);
            let tail = (w * w * potential_v(f, w).unwrap()).re;
            assert!((tail - 2.0 * (1.0 - l.c[1])).abs() < 1e-8, "{}: {tail} {}", f.label(), l.c[1]);
            assert!(l.capacity() > 0.0);
            assert!((l.r - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn series_helpers() {
        let a = [1.0, 2.0, 3.0, 0.0];
        let inv = recip(&a);
        let prod = mul(&a, &inv);
        assert!((prod[0] - 1.0).abs() < 1e-15 && prod[1..].iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn rejects_zero_order() {
        assert!(laurent_coefficients(&MapFamily::lemniscate(), 0).is_err());
    }
}
