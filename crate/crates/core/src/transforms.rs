//! The named integral transforms as quadrature-backed operators, and
//! numerical Laplace inversion on a Talbot contour.

use crate::complexmath::{pyth_root, Cx};
use crate::quadrature::{integrate_semiinf, Envelope, Integrand, QuadResult, Tolerance};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformKind {
    /// `∫ e^{−sx} f(x) dx`
    Laplace,
    /// `√(2/π) ∫ f(x) cos(sx) dx`
    FourierCos,
    /// `√(2/π) ∫ f(x) sin(sx) dx`
    FourierSin,
    /// `∫ x^{s−1} f(x) dx`
    Mellin,
    /// `∫ f(x)/(x+s)^p dx`
    StieltjesP(Cx),
    /// `∫ f(x)/√(x²+s²) dx`
    Glasser,
    /// `∫ x f(x)/(x²+s²) dx`
    Widder,
}

impl TransformKind {
    /// Parses `laplace`, `fourier-cos`, `fourier-sin`, `mellin`, `glasser`,
    /// `widder` and `stieltjes:<p>`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().to_ascii_lowercase();
        Some(match s.as_str() {
            "laplace" => TransformKind::Laplace,
            "fourier-cos" | "fouriercos" => TransformKind::FourierCos,
            "fourier-sin" | "fouriersin" => TransformKind::FourierSin,
            "mellin" => TransformKind::Mellin,
            "glasser" => TransformKind::Glasser,
            "widder" => TransformKind::Widder,
            _ => {
                let p = s.strip_prefix("stieltjes:")?.parse::<f64>().ok()?;
                TransformKind::StieltjesP(Cx::new(p, 0.0))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum TransformError {
    #[error("transform point {0} outside the half-plane Re s > 0")]
    PointDomain(Cx),
    #[error("Stieltjes order must have Re p > 0, got {0}")]
    OrderDomain(Cx),
    #[error("inverse Laplace levels disagree: {fine} vs {coarse}")]
    NoConvergence { fine: Cx, coarse: Cx },
    #[error("inverse Laplace needs t > 0, got {0}")]
    TimeDomain(f64),
}

/// Applies `kind` to `f` at `point`.
pub fn apply(kind: TransformKind, f: &Integrand<'_>, point: Cx, tol: impl Into<Tolerance>) -> Result<QuadResult, TransformError> {
    let tol = tol.into();
    let s = point;
    let env = f.envelope();
    let scale = f.decay_scale();
    let needs_half_plane = !matches!(kind, TransformKind::FourierCos | TransformKind::FourierSin | TransformKind::Mellin);
    if needs_half_plane && s.re <= 0.0 {
        return Err(TransformError::PointDomain(s));
    }
    let r = match kind {
        TransformKind::Laplace => {
            let g = Integrand::new(move |x| (-s * x).exp() * f.eval(x));
            let rate = s.re + match env {
                Some(Envelope::Exponential { rate }) => rate,
                _ => 0.0,
            };
            let l = scale.unwrap_or(1.0).min(1.0 / s.re);
            let g = g.with_decay_scale(l).with_envelope(Envelope::Exponential { rate });
            integrate_semiinf(&g, tol)
        }
        TransformKind::FourierCos | TransformKind::FourierSin => {
            let cos = kind == TransformKind::FourierCos;
            let g = Integrand::new(move |x| {
                let k = if cos { (s * x).cos() } else { (s * x).sin() };
                k * f.eval(x)
            });
            let mut g = with_hints(g, scale, env);
            if s.im == 0.0 && s.re > 0.0 {
                let w = s.re;
                let off = if cos { PI / 2.0 } else { 0.0 };
                g = g.with_phase(move |x| w * x + off);
            }
            integrate_semiinf(&g, tol).scale(Cx::new((2.0 / PI).sqrt(), 0.0))
        }
        TransformKind::Mellin => mellin(f, s, tol),
        TransformKind::StieltjesP(p) => {
            if p.re <= 0.0 {
                return Err(TransformError::OrderDomain(p));
            }
            let g = with_hints(Integrand::new(move |x| f.eval(x) / (s + x).powc(p)), scale, env);
            integrate_semiinf(&g, tol)
        }
        TransformKind::Glasser => {
            let g = with_hints(Integrand::new(move |x| f.eval(x) / pyth_root(x, s)), scale, env);
            integrate_semiinf(&g, tol)
        }
        TransformKind::Widder => {
            let g = with_hints(Integrand::new(move |x| f.eval(x) * x / (s * s + x * x)), scale, env);
            integrate_semiinf(&g, tol)
        }
    };
    Ok(r)
}

fn with_hints(g: Integrand<'_>, scale: Option<f64>, env: Option<Envelope>) -> Integrand<'_> {
    let g = match scale {
        Some(l) => g.with_decay_scale(l),
        None => g,
    };
    g.with_envelope(env.unwrap_or(Envelope::Algebraic))
}

/// Mellin transform through `x = e^{±t}`: both endpoint behaviours
/// `x^{σ}` become exponentials in `t`, whatever the power.
fn mellin(f: &Integrand<'_>, s: Cx, tol: Tolerance) -> QuadResult {
    let inner = move |t: f64| {
        if t > 700.0 {
            return Cx::new(0.0, 0.0);
        }
        (-s * t).exp() * f.eval((-t).exp())
    };
    let head = Integrand::new(inner).with_decay_scale(4.0);
    let below = integrate_semiinf(&head, tol.scaled(0.5));
    let above = if f.has_phase() {
        // Oscillatory on [1, ∞): stay in x and let the lobes carry it.
        let g = Integrand::new(move |y: f64| Cx::new(1.0 + y, 0.0).powc(s - 1.0) * f.eval(1.0 + y))
            .with_envelope(f.envelope().unwrap_or(Envelope::Algebraic));
        let g = match f.decay_scale() {
            Some(l) => g.with_decay_scale(l),
            None => g,
        };
        let g = g.with_phase(move |y| f.phase_at(1.0 + y) - f.phase_at(1.0));
        integrate_semiinf(&g, tol.scaled(0.5))
    } else {
        let g = Integrand::new(move |t: f64| {
            if t > 700.0 {
                return Cx::new(0.0, 0.0);
            }
            (s * t).exp() * f.eval(t.exp())
        })
        .with_decay_scale(4.0);
        integrate_semiinf(&g, tol.scaled(0.5))
    };
    below.combine(&above, tol)
}

/// Optimised Talbot contour parameters (σ, μ, α, ν).
const TALBOT: (f64, f64, f64, f64) = (-0.6122, 0.5017, 0.6407, 0.2645);
/// Default node count; the error estimate compares against half as many.
pub const TALBOT_NODES: usize = 48;

fn talbot(big_f: &dyn Fn(Cx) -> Cx, t: f64, n: usize) -> Cx {
    let (sigma, mu, alpha, nu) = TALBOT;
    let nf = n as f64;
    let mut acc = Cx::new(0.0, 0.0);
    for k in 0..n {
        let theta = -PI + (k as f64 + 0.5) * 2.0 * PI / nf;
        let (sn, cs) = (alpha * theta).sin_cos();
        let cot = cs / sn;
        let z = Cx::new(sigma + mu * theta * cot, nu * theta) * (nf / t);
        let dz = Cx::new(mu * cot - mu * alpha * theta / (sn * sn), nu) * (nf / t);
        acc += (z * t).exp() * big_f(z) * dz;
    }
    acc / Cx::new(0.0, nf)
}

/// Result of [`inverse_laplace`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inversion {
    pub value: Cx,
    pub err: f64,
}

/// `ℒ⁻¹{F}(t)` on the optimised Talbot contour with [`TALBOT_NODES`] nodes,
/// checked against the half-size rule.
pub fn inverse_laplace(big_f: impl Fn(Cx) -> Cx, t: f64, tol: f64) -> Result<Inversion, TransformError> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(TransformError::TimeDomain(t));
    }
    let fine = talbot(&big_f, t, TALBOT_NODES);
    let coarse = talbot(&big_f, t, TALBOT_NODES / 2);
    let err = (fine - coarse).norm();
    if !(err <= tol * fine.norm().max(1.0)) {
        return Err(TransformError::NoConvergence { fine, coarse });
    }
    Ok(Inversion { value: fine, err })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramp() {
        for &t in &[0.5, 1.0, 3.0] {
            let v = inverse_laplace(|s| (s * s).inv(), t, 1e-10).unwrap();
            assert!((v.value.re - t).abs() < 1e-11, "{t}: {v:?}");
        }
    }

    #[test]
    fn parses_kinds() {
        assert_eq!(TransformKind::parse("stieltjes:2"), Some(TransformKind::StieltjesP(Cx::new(2.0, 0.0))));
        assert_eq!(TransformKind::parse("Widder"), Some(TransformKind::Widder));
        assert_eq!(TransformKind::parse("hankel"), None);
    }
}
