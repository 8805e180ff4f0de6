use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Principal argument in `(-π, π]`; the negative real axis maps to `+π`
/// regardless of the sign of a zero imaginary part.
pub fn principal_arg(z: Complex64) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        PI
    } else {
        z.im.atan2(z.re)
    }
}

pub fn principal_ln(z: Complex64) -> Complex64 {
    Complex64::new(z.norm().ln(), principal_arg(z))
}

/// `exp(exponent · Log base)` with the principal logarithm.
pub fn branch_power(base: Complex64, exponent: f64) -> Result<Complex64> {
    if base.re == 0.0 && base.im == 0.0 {
        return if exponent > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::ZeroPower { exponent })
        };
    }
    if exponent == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if exponent == 1.0 {
        return Ok(base);
    }
    if base.im == 0.0 && base.re > 0.0 {
        return Ok(Complex64::new(base.re.powf(exponent), 0.0));
    }
    let ln = principal_ln(base);
    Ok(Complex64::from_polar((exponent * ln.re).exp(), exponent * ln.im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn positive_real_branch() {
        let v = branch_power(Complex64::new(0.5, 0.0), 0.3).unwrap();
        assert!((v.re - 0.5f64.powf(0.3)).abs() < 1e-16 && v.im == 0.0);
        assert!((v.re - 0.8122523963562356).abs() < 1e-15);
        // 1 - w^{-1} at w = -2
        let v = branch_power(Complex64::new(1.5, 0.0), -0.7).unwrap();
        assert!(v.re > 0.0 && v.im == 0.0);
    }

    #[test]
    fn matches_direct_principal_log() {
        let w = Complex64::new(0.0, 2.0);
        let base = 1.0 - 1.0 / w;
        let v = branch_power(base, 0.3).unwrap();
        let direct = (0.3 * Complex64::new(1.0, 0.5).ln()).exp();
        assert!((v - direct).norm() < 1e-15);
    }

    #[test]
    fn negative_axis_uses_upper_side() {
        let v = branch_power(Complex64::new(-4.0, -0.0), 0.5).unwrap();
        assert!((v - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert_eq!(principal_arg(Complex64::new(-1.0, -0.0)), PI);
    }

    #[test]
    fn zero_base() {
        assert_eq!(branch_power(Complex64::new(0.0, 0.0), 0.5).unwrap(), Complex64::new(0.0, 0.0));
        assert!(branch_power(Complex64::new(0.0, 0.0), 0.0).is_err());
        assert!(branch_power(Complex64::new(0.0, 0.0), -1.5).is_err());
    }

    proptest! {
        #[test]
        fn exponents_add_off_the_cut(re in 0.05..3.0f64, im in -3.0..3.0f64, mu in -2.0..2.0f64, nu in -2.0..2.0f64) {
            let z = Complex64::new(re, im);
            let lhs = branch_power(z, mu).unwrap() * branch_power(z, nu).unwrap();
            let rhs = branch_power(z, mu + nu).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-13 * (1.0 + rhs.norm()));
        }
    }
}
