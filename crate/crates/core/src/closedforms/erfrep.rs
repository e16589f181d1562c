//! The four integral representations of `erf z`, each carrying free
//! parameters that must drop out of the value.

use super::ClosedFormError;
use crate::complexmath::{sqrt_principal, Cx};
use crate::lhs::{d_kernel, sinc_gaussian};
use crate::quadrature::{integrate_contour, QuadResult, Tolerance};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErfRep {
    /// `(2/π)∫₀^∞ sin(2vzx√(x²+1))/(x√(x²+1)) e^{−(v²−z²)x²} dx`
    GaussianSinc,
    /// `(1/√(2π))∫₀^{2vz} …` with `A = v² − z²`
    GaussianFinite,
    /// `(√(2a)/π) e^{(2av²−z²)/2} ∫₀^∞ … sin(√(2/a)vzx) …`
    ExponentialSine,
    /// `√(2/π) a e^{(2av²−z²)/2} ∫₀^{√(2/a)vz} …`
    ExponentialFinite,
}

impl ErfRep {
    pub fn from_id(id: &str) -> Option<ErfRep> {
        Some(match id {
            "C.R1" => ErfRep::GaussianSinc,
            "C.R2" => ErfRep::GaussianFinite,
            "D.R1" => ErfRep::ExponentialSine,
            "D.R2" => ErfRep::ExponentialFinite,
            _ => return None,
        })
    }

    pub fn needs_a(self) -> bool {
        matches!(self, ErfRep::ExponentialSine | ErfRep::ExponentialFinite)
    }
}

/// Evaluates the representation numerically; the value should equal
/// `erf z` whatever the admissible `v` (and `a`).
pub fn erf_via_representation(rep: ErfRep, v: Cx, z: Cx, a: Option<Cx>, tol: Tolerance) -> Result<QuadResult, ClosedFormError> {
    let zero = Cx::new(0.0, 0.0);
    let a = match (rep.needs_a(), a) {
        (true, Some(a)) => a,
        (true, None) => return Err(ClosedFormError::Domain("this representation needs `a`".into())),
        (false, _) => zero,
    };
    let out = match rep {
        ErfRep::GaussianSinc => {
            let (big_a, b) = (v * v - z * z, 2.0 * v * z);
            sinc_gaussian(big_a, b, Cx::new(1.0, 0.0), tol.scaled(PI / 2.0)).scale(Cx::new(2.0 / PI, 0.0))
        }
        ErfRep::GaussianFinite => {
            let big_a = v * v - z * z;
            let k = 1.0 / (2.0 * PI).sqrt();
            let f = move |u: Cx| {
                let s = sqrt_principal(big_a * big_a + u * u);
                sqrt_principal(s + big_a) / s * (0.5 * big_a - 0.5 * s).exp()
            };
            integrate_contour(f, zero, 2.0 * v * z, tol.scaled(1.0 / k)).scale(Cx::new(k, 0.0))
        }
        ErfRep::ExponentialSine => {
            let big_b = 2.0 * a * v * v - z * z;
            let c = sqrt_principal(2.0 / a) * v * z;
            let k = sqrt_principal(2.0 * a) / PI * (big_b / 2.0).exp();
            d_kernel(a, big_b / (2.0 * a), c, tol.scaled(1.0 / k.norm())).scale(k)
        }
        ErfRep::ExponentialFinite => {
            let big_b = 2.0 * a * v * v - z * z;
            let k = (2.0 / PI).sqrt() * a * (big_b / 2.0).exp();
            let f = move |u: Cx| {
                let q = sqrt_principal(big_b * big_b + 4.0 * a * a * u * u);
                sqrt_principal(big_b + q) / q * (-0.5 * q).exp()
            };
            let end = sqrt_principal(2.0 / a) * v * z;
            integrate_contour(f, zero, end, tol.scaled(1.0 / k.norm())).scale(k)
        }
    };
    Ok(out)
}
