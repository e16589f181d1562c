use super::{finite_or, Cx, SpecialFnError};
use std::f64::consts::PI;

const G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
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
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn is_pole(z: Cx) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// ln Γ(z) for Re z ≥ 0.5 by the Lanczos series.
fn lanczos_ln(z: Cx) -> Cx {
    let z = z - 1.0;
    let mut a = Cx::new(LANCZOS[0], 0.0);
    for (k, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + a.ln()
}

/// A logarithm of Γ(z). Satisfies `exp(clgamma(z)) = Γ(z)`; the imaginary
/// part is not unwrapped onto the principal log-gamma branch.
pub fn clgamma(z: Cx) -> Result<Cx, SpecialFnError> {
    if is_pole(z) {
        return Err(SpecialFnError::Pole(z));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        let v = PI.ln() - s.ln() - lanczos_ln(Cx::new(1.0, 0.0) - z);
        return finite_or(v, SpecialFnError::Overflow(z));
    }
    finite_or(lanczos_ln(z), SpecialFnError::Overflow(z))
}

/// Gamma function with reflection for `Re z < 0.5`.
pub fn cgamma(z: Cx) -> Result<Cx, SpecialFnError> {
    if is_pole(z) {
        return Err(SpecialFnError::Pole(z));
    }
    if z.re < 0.5 {
        let s = (z * PI).sin();
        let g = lanczos_ln(Cx::new(1.0, 0.0) - z).exp();
        return finite_or(PI / (s * g), SpecialFnError::Overflow(z));
    }
    finite_or(lanczos_ln(z).exp(), SpecialFnError::Overflow(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: f64) -> Cx {
        cgamma(Cx::new(re, 0.0)).unwrap()
    }

    #[test]
    fn half_is_sqrt_pi() {
        assert!((g(0.5).re - PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn factorials() {
        assert!((g(1.0).re - 1.0).abs() < 1e-14);
        assert!((g(5.0).re - 24.0).abs() < 1e-12);
    }

    #[test]
    fn poles_are_errors() {
        for k in 0..4 {
            assert!(matches!(cgamma(Cx::new(-(k as f64), 0.0)), Err(SpecialFnError::Pole(_))));
        }
    }

    #[test]
    fn log_gamma_exponentiates_to_gamma() {
        for &z in &[Cx::new(0.3, 2.0), Cx::new(-2.7, 0.4), Cx::new(11.0, -9.0)] {
            let a = clgamma(z).unwrap().exp();
            let b = cgamma(z).unwrap();
            assert!((a - b).norm() < 1e-12 * b.norm(), "{z}");
        }
    }

    #[test]
    fn negative_half_integer() {
        // Γ(−1/2) = −2√π
        assert!((g(-0.5).re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }
}
