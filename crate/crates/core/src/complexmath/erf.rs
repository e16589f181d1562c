use super::{finite_or, Cx, SpecialFnError};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
const SQRT_PI: f64 = 1.772_453_850_905_516;
const MAX_ABS: f64 = 1e4;

/// Which expansion covers `z`.
enum Regime {
    /// Maclaurin series for erf.
    Series,
    /// Laplace continued fraction for erfc on the right half-plane.
    Fraction,
}

fn regime(z: Cx) -> Regime {
    let r = z.norm();
    if r <= 2.0 || (z.re.abs() < 1.5 && r < 30.0) {
        Regime::Series
    } else {
        Regime::Fraction
    }
}

fn check_domain(z: Cx) -> Result<(), SpecialFnError> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > MAX_ABS {
        return Err(SpecialFnError::Domain(z));
    }
    Ok(())
}

/// `Σ (−1)ᵏ z^{2k+1} / (k!(2k+1))`, scaled by 2/√π.
fn erf_series(z: Cx) -> Cx {
    let z2 = z * z;
    let mut term = z; // (−1)^k z^{2k+1}/k!
    let mut sum = z;
    for k in 1..4000 {
        term *= -z2 / k as f64;
        let add = term / (2 * k + 1) as f64;
        sum += add;
        if add.norm() <= 1e-17 * sum.norm() {
            break;
        }
    }
    sum * FRAC_2_SQRT_PI
}

/// `√π e^{z²} erfc(z)` for `Re z > 0` via the continued fraction
/// `1/(z + (1/2)/(z + 1/(z + (3/2)/(z + …))))`, evaluated by modified Lentz.
fn erfcx_fraction(z: Cx) -> Cx {
    const TINY: f64 = 1e-300;
    let mut f = z;
    let mut c = f;
    let mut d = Cx::new(0.0, 0.0);
    for k in 1..5000 {
        let ak = 0.5 * k as f64;
        d = z + d * ak;
        if d.norm() < TINY {
            d = Cx::new(TINY, 0.0);
        }
        d = d.inv();
        c = z + ak / c;
        if c.norm() < TINY {
            c = Cx::new(TINY, 0.0);
        }
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    f.inv()
}

/// Error function erf(z) for |z| ≤ 1e4.
pub fn cerf(z: Cx) -> Result<Cx, SpecialFnError> {
    check_domain(z)?;
    match regime(z) {
        Regime::Series => Ok(erf_series(z)),
        Regime::Fraction => {
            let (w, sign) = if z.re >= 0.0 { (z, 1.0) } else { (-z, -1.0) };
            let e = (-w * w).exp();
            let tail = finite_or(e * erfcx_fraction(w) / SQRT_PI, SpecialFnError::Overflow(z))?;
            Ok((Cx::new(1.0, 0.0) - tail) * sign)
        }
    }
}

/// Complementary error function, accurate for large `Re z`.
pub fn cerfc(z: Cx) -> Result<Cx, SpecialFnError> {
    check_domain(z)?;
    match regime(z) {
        Regime::Series => Ok(Cx::new(1.0, 0.0) - erf_series(z)),
        Regime::Fraction => {
            let (w, flip) = if z.re >= 0.0 { (z, false) } else { (-z, true) };
            let e = (-w * w).exp();
            let t = finite_or(e * erfcx_fraction(w) / SQRT_PI, SpecialFnError::Overflow(z))?;
            Ok(if flip { Cx::new(2.0, 0.0) - t } else { t })
        }
    }
}

/// Scaled complement `e^{z²} erfc(z)`; stays finite where erfc underflows.
pub fn cerfcx(z: Cx) -> Result<Cx, SpecialFnError> {
    check_domain(z)?;
    match regime(z) {
        Regime::Series => finite_or(
            (z * z).exp() * (Cx::new(1.0, 0.0) - erf_series(z)),
            SpecialFnError::Overflow(z),
        ),
        Regime::Fraction if z.re >= 0.0 => Ok(erfcx_fraction(z) / SQRT_PI),
        Regime::Fraction => {
            let w = -z;
            finite_or(
                (z * z).exp() * 2.0 - erfcx_fraction(w) / SQRT_PI,
                SpecialFnError::Overflow(z),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Cx, b: Cx, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn erf_zero_is_zero() {
        assert_eq!(cerf(Cx::new(0.0, 0.0)).unwrap(), Cx::new(0.0, 0.0));
    }

    #[test]
    fn erf_one() {
        let v = cerf(Cx::new(1.0, 0.0)).unwrap();
        assert!(close(v, Cx::new(0.842_700_792_949_714_9, 0.0), 1e-15));
    }

    #[test]
    fn erf_i_is_imaginary() {
        let v = cerf(Cx::new(0.0, 1.0)).unwrap();
        assert!(v.re.abs() < 1e-16);
        assert!((v.im - 1.650_425_758_797_543).abs() < 1e-14);
    }

    #[test]
    fn too_large_is_domain_error() {
        assert!(matches!(cerf(Cx::new(2e4, 0.0)), Err(SpecialFnError::Domain(_))));
    }

    #[test]
    fn overflow_is_flagged() {
        assert!(matches!(cerfc(Cx::new(3.0, 40.0)), Err(SpecialFnError::Overflow(_))));
    }

    #[test]
    fn erfc_deep_tail_is_not_cancelled() {
        // erfc(10) = 2.088487583762545e-45
        let v = cerfc(Cx::new(10.0, 0.0)).unwrap();
        assert!(close(v, Cx::new(2.088_487_583_762_545e-45, 0.0), 1e-13));
    }
}
