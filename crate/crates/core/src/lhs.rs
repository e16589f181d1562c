//! Routing of integral sides to the quadrature engine that suits their
//! shape: lobe partition when the oscillation is real, the mapped direct
//! route otherwise, and a shifted horizontal line when the value is
//! exponentially smaller than the integrand.

use crate::complexmath::{sqrt_principal, Cx};
use crate::quadrature::{integrate_contour, integrate_line, integrate_semiinf, Envelope, Integrand, QuadResult, Tolerance};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

impl Trig {
    pub fn apply(self, z: Cx) -> Cx {
        match self {
            Trig::Cos => z.cos(),
            Trig::Sin => z.sin(),
        }
    }

    /// Offset turning `trig(θ)` into `sin(θ + offset)`.
    pub fn offset(self) -> f64 {
        match self {
            Trig::Cos => PI / 2.0,
            Trig::Sin => 0.0,
        }
    }
}

pub fn is_real(z: Cx) -> bool {
    z.im == 0.0
}

/// `x√(x² + c²)` with the principal root.
pub fn xq(x: f64, c: Cx) -> Cx {
    x * sqrt_principal(x * x + c * c)
}

/// `∫₀^∞ f` where `f` oscillates like `sin(b·x√(x²+c²) + offset)` under
/// `e^{−ax²}`. Lobes follow the phase of `Re b`; a complex `b` widens the
/// envelope to `e^{−(Re a − |Im b|)x²}`. Complex `c` takes the direct route.
pub fn gaussian_oscillatory(
    f: impl Fn(f64) -> Cx + Send + Sync,
    a: Cx,
    b: Cx,
    c: Cx,
    offset: f64,
    tol: Tolerance,
) -> QuadResult {
    let scale = 1.0 / a.re.max(1e-6).sqrt();
    let g = Integrand::new(f).with_decay_scale(scale);
    let rate = a.re - b.im.abs();
    if is_real(c) && b.re > 0.0 && rate > 0.0 {
        let (b, c2) = (b.re, c.re * c.re);
        let g = g
            .with_phase(move |x| b * x * (x * x + c2).sqrt() + offset)
            .with_envelope(Envelope::Gaussian { rate });
        integrate_semiinf(&g, tol)
    } else {
        integrate_semiinf(&g, tol)
    }
}

/// `∫₀^∞ f` where `f` oscillates like `sin(ω x + offset)` under the given
/// envelope. Complex `ω` takes the direct route.
pub fn linear_oscillatory(
    f: impl Fn(f64) -> Cx + Send + Sync,
    omega: Cx,
    offset: f64,
    envelope: Envelope,
    scale: f64,
    tol: Tolerance,
) -> QuadResult {
    let g = Integrand::new(f).with_decay_scale(scale).with_envelope(envelope);
    if is_real(omega) && omega.re > 0.0 {
        let w = omega.re;
        integrate_semiinf(&g.with_phase(move |x| w * x + offset), tol)
    } else {
        integrate_semiinf(&g, tol)
    }
}

/// `∫₀^∞ A(x)·trig(ωx) dx` for `A` analytic in the strip `0 ≤ Im z ≤ shift`,
/// even for `Cos` and odd for `Sin`, written as a two-sided integral of
/// `A(z)e^{iωz}` taken along `Im z = shift`.
pub fn shifted_fourier(
    amp: impl Fn(Cx) -> Cx + Send + Sync,
    omega: Cx,
    trig: Trig,
    shift: f64,
    scale: f64,
    envelope: Envelope,
    tol: Tolerance,
) -> QuadResult {
    let factor = match trig {
        Trig::Cos => Cx::new(0.5, 0.0),
        Trig::Sin => Cx::new(0.0, -0.5),
    };
    integrate_line(amp, omega, shift, scale, envelope, tol.scaled(2.0)).scale(factor)
}

/// Line height for `∫ A(z) e^{iωz}` when `A` carries `e^{−b√(z²+a²)}`: the
/// saddle of the exponent sits at `i·a·ω/√(b²+ω²)`.
pub fn saddle_shift(a: Cx, b: Cx, omega: Cx) -> f64 {
    let r = sqrt_principal(b * b + omega * omega).norm();
    let ideal = if r > 0.0 { a.re * omega.norm() / r } else { 0.0 };
    ideal.min(0.9 * a.re).max(0.0)
}

/// Line height when `e^{iωz}` meets a pole or branch point at height `h`:
/// close enough that `e^{−ωy}` reaches the value's scale, but no closer
/// than `h/2`.
pub fn pole_shift(h: f64, omega: f64, order: f64) -> f64 {
    (h - (order / omega).min(0.5 * h)).max(0.0)
}

/// `√(x² + a²)`, `√(√(x²+a²) + a)` and `√(√(x²+a²) − a)` for complex `z`,
/// the last written as `z/√(√(z²+a²) + a)` so that it stays analytic (odd)
/// off the real axis.
#[derive(Debug, Clone, Copy)]
pub struct Roots {
    pub s: Cx,
    pub p: Cx,
    pub m: Cx,
}

impl Roots {
    pub fn at(z: Cx, a: Cx) -> Roots {
        let s = sqrt_principal(z * z + a * a);
        let p = sqrt_principal(s + a);
        Roots { s, p, m: z / p }
    }
}

/// `trig(θ)·e^{L}` as a sum of single exponentials, so that a growing
/// `trig` meeting a vanishing envelope far out gives 0 instead of NaN.
pub fn damped(trig: Trig, theta: Cx, log_env: Cx) -> Cx {
    if !(log_env.re > -1500.0) {
        return Cx::new(0.0, 0.0);
    }
        let i = Cx::new(0.0, 1.0);
    let (p, m) = (exp_or_zero(i * theta + log_env), exp_or_zero(-i * theta + log_env));
    match trig {
        Trig::Cos => (p + m) * 0.5,
        Trig::Sin => (p - m) / (2.0 * i),
    }
}

/// `e^w`, exactly 0 once the real part is past underflow.
pub fn exp_or_zero(w: Cx) -> Cx {
    if !(w.re > -745.0) {
        Cx::new(0.0, 0.0)
    } else {
        w.exp()
    }
}

/// `sin(w)/w · e^{L}`, finite at `w = 0` and safe far out like [`damped`].
pub fn sinc_damped(w: Cx, log_env: Cx) -> Cx {
    if w.norm() < 1e-4 {
        sinc(w) * log_env.exp()
    } else {
        damped(Trig::Sin, w, log_env) / w
    }
}

/// `sin(w)/w`, finite at `w = 0`.
pub fn sinc(w: Cx) -> Cx {
    if w.norm() < 1e-4 {
        let w2 = w * w;
        1.0 - w2 / 6.0 * (1.0 - w2 / 20.0)
    } else {
        w.sin() / w
    }
}

/// `∫₀^∞ sin(bx√(x²+c²))/(x√(x²+c²)) e^{−ax²} dx`
pub fn sinc_gaussian(a: Cx, b: Cx, c: Cx, tol: Tolerance) -> QuadResult {
    gaussian_oscillatory(move |x| b * sinc_damped(b * xq(x, c), -a * x * x), a, b, c, 0.0, tol)
}

/// `∫₀^b √(√(a²+u²)+a)/√(a²+u²) · e^{(a−√(a²+u²))/2} du` along the segment.
pub fn c_finite(a: Cx, b: Cx, tol: Tolerance) -> QuadResult {
    integrate_contour(
        move |u| {
            let s = sqrt_principal(a * a + u * u);
            sqrt_principal(s + a) / s * ((a - s) / 2.0).exp()
        },
        Cx::new(0.0, 0.0),
        b,
        tol,
    )
}

/// `∫₀^∞ √(√(x²+a²)+a)/(x√(x²+a²)) · sin(cx) e^{−b√(x²+a²)} dx`
pub fn d_kernel(a: Cx, b: Cx, c: Cx, tol: Tolerance) -> QuadResult {
    let f = move |x: f64| {
        let r = Roots::at(Cx::new(x, 0.0), a);
        r.p / r.s * c * sinc_damped(c * x, -b * r.s)
    };
    let rate = b.re - c.im.abs();
    linear_oscillatory(f, c, 0.0, Envelope::Exponential { rate }, 1.0 / rate.max(1e-6), tol)
}

/// `∫₀^c √(b+√(b²+u²))/√(b²+u²) · e^{−a√(b²+u²)} du` along the segment.
pub fn d_finite(a: Cx, b: Cx, c: Cx, tol: Tolerance) -> QuadResult {
    integrate_contour(
        move |u| {
            let s = sqrt_principal(b * b + u * u);
            sqrt_principal(b + s) / s * (-a * s).exp()
        },
        Cx::new(0.0, 0.0),
        c,
        tol,
    )
}
