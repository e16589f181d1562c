//! Closed-form sides of the identities.
//!
//! Families A–F have their theorem formulas here plus the printed
//! derivative corollaries ([`printed`]); derivative statements of any order
//! go through [`rhs_derivative_family`]. Family G closed forms close the
//! module, followed by the lookup table [`closed_form`] used by the
//! registry.

mod derivative;
mod erfrep;
pub mod printed;

pub use derivative::{
    base_value, corollary_sign, cut_distance, derivative_radius, printed_relation, raw_derivative, rhs_derivative_family, Base,
};
pub use erfrep::{erf_via_representation, ErfRep};

use crate::complexmath::{cerf, cerfcx, cgamma, czeta, sqrt_principal, Cx, SpecialFnError};
use crate::nderiv::{nth_derivative, DerivError, DerivRequest};
use crate::params::{Param, ParamAssignment, ParamError, ParamsExt};
use crate::quadrature::{integrate_semiinf, Integrand, QuadFailure, Tolerance};
use crate::transforms::{inverse_laplace, TransformError};
use std::f64::consts::PI;
use thiserror::Error;

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;
/// `√(π/2)`
pub(crate) const SQRT_HALF_PI: f64 = 1.253_314_137_315_500_3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClosedFormError {
    #[error(transparent)]
    Special(#[from] SpecialFnError),
    #[error(transparent)]
    Derivative(#[from] DerivError),
    #[error(transparent)]
    Inversion(#[from] TransformError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("quadrature inside the closed form failed: {0}")]
    Quadrature(QuadFailure),
    #[error("{0}")]
    Domain(String),
}

/// Agreement demanded between the two Talbot node counts.
const TALBOT_TOL: f64 = 1e-10;

/// Every registry id with a closed form, in catalog order.
pub const IDS: [&str; 59] = [
    "A.T1", "A.C1", "A.C2", "A.C3n", "A.C4", "A.C5", "A.C6n",
    "B.T2", "B.P", "B.C1", "B.C2", "B.C3", "B.C4", "B.C5", "B.C6",
    "C.T3", "C.Cc", "C.R1", "C.Fin", "C.R2",
    "D.T4", "D.R1", "D.Fin", "D.R2",
    "E.T5", "E.C1", "E.C2", "E.C3n", "E.C4", "E.C5", "E.C6n",
    "F.T6", "F.P", "F.C1", "F.C2", "F.C3", "F.C4", "F.C5", "F.C6",
    "G.GlasserRe", "G.SqrtA", "G.InvSqrtA", "G.LogExp", "G.Zeta", "G.InvLap1", "G.ErfSqrt", "G.ErfInvSqrt",
    "G.WidderIm", "G.Stieltjes_n", "G.LnLn", "G.LnLnAtan", "G.InvLap2", "G.CosDeriv", "G.ParsevalGoldstein",
    "G.Erfc", "G.MellinSine", "G.CosecMellin", "G.GammaIntegral", "G.EulerReflection",
];

fn re(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

/// `√(r − a)` with `r = √(a² + b²)`, written as `√(b²/(r + a))` so that
/// small `b` does not cancel.
pub(crate) fn sqrt_r_minus(r: Cx, a: Cx, b: Cx) -> Cx {
    sqrt_principal(b * b / (r + a))
}

// ---------------------------------------------------------------- family A

/// `√(√(a²+b²)+a)/(2√(a²+b²)) · e^{(a−√(a²+b²))/2} · √(π/2)`
pub fn rhs_thm_a(a: Cx, b: Cx) -> Cx {
    let r = sqrt_principal(a * a + b * b);
    sqrt_principal(r + a) / (2.0 * r) * ((a - r) / 2.0).exp() * SQRT_HALF_PI
}

/// The bracketed function of the `c`-generalised A corollaries, with the
/// `½√(π/2)` prefactor included.
pub fn base_a(a: Cx, b: Cx, c: Cx) -> Cx {
    let c2 = c * c;
    let c4 = c2 * c2;
    let r = sqrt_principal(a * a * c4 + b * b * c4);
    0.5 * SQRT_HALF_PI * c * sqrt_principal(r + a * c2) / r * ((a * c2 - r) / 2.0).exp()
}

// ---------------------------------------------------------------- family B

/// `√(b+√(b²+c²))/√(b²+c²) · e^{−a√(b²+c²)} · √(π/2)`
pub fn rhs_thm_b(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    sqrt_principal(b + r) / r * (-a * r).exp() * SQRT_HALF_PI
}

/// Pythagorean specialisation `a = α, b = α² − β², c = 2αβ` of Theorem B.
pub fn rhs_pythagorean_b(alpha: Cx, beta: Cx) -> Cx {
    let h = alpha * alpha + beta * beta;
    alpha / h * (-alpha * h).exp() * SQRT_PI
}

// ---------------------------------------------------------------- family C

/// `π/(2c) · erf(√((√(a²c⁴+b²c⁴) − ac²)/2))`; `c = 1` is Theorem C itself.
pub fn rhs_thm_c(a: Cx, b: Cx, c: Cx) -> Result<Cx, ClosedFormError> {
    let c2 = c * c;
    let c4 = c2 * c2;
    let r = sqrt_principal(a * a * c4 + b * b * c4);
    let inner = b * b * c4 / (r + a * c2) / 2.0;
    Ok(PI / (2.0 * c) * cerf(sqrt_principal(inner))?)
}

/// `√(2π) · erf(√((√(a²+b²) − a)/2))`, the finite-limit form.
pub fn rhs_fin_c(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    let r = sqrt_principal(a * a + b * b);
    let inner = sqrt_r_minus(r, a, b) / 2.0_f64.sqrt();
    Ok((2.0 * PI).sqrt() * cerf(inner)?)
}

// ---------------------------------------------------------------- family D

/// `π/√(2a) · e^{−ab} · erf(√(a(√(b²+c²) − b)))`
pub fn rhs_thm_d(a: Cx, b: Cx, c: Cx) -> Result<Cx, ClosedFormError> {
    let r = sqrt_principal(b * b + c * c);
    let arg = sqrt_principal(a * c * c / (r + b));
    Ok(PI / sqrt_principal(2.0 * a) * (-a * b).exp() * cerf(arg)?)
}

/// `√(π/a) · e^{−ab} · erf(√(a(√(b²+c²) − b)))`, the finite-limit form.
pub fn rhs_fin_d(a: Cx, b: Cx, c: Cx) -> Result<Cx, ClosedFormError> {
    let r = sqrt_principal(b * b + c * c);
    let arg = sqrt_principal(a * c * c / (r + b));
    Ok(sqrt_principal(PI / a) * (-a * b).exp() * cerf(arg)?)
}

// ---------------------------------------------------------------- family E

/// `√(√(a²+b²) − a)/√(a²+b²) · e^{(a−√(a²+b²))/2} · √(π/2)`
pub fn rhs_thm_e(a: Cx, b: Cx) -> Cx {
    let r = sqrt_principal(a * a + b * b);
    sqrt_r_minus(r, a, b) / r * ((a - r) / 2.0).exp() * SQRT_HALF_PI
}

/// The bracketed function of the `c`-generalised E corollaries, with the
/// `√(π/2)` prefactor included.
pub fn base_e(a: Cx, b: Cx, c: Cx) -> Cx {
    let c2 = c * c;
    let r = sqrt_principal(a * a * c2 + b * b * c2);
    let num = sqrt_principal(b * b * c2 / (r + a * c));
    SQRT_HALF_PI * sqrt_principal(c) * num / r * ((a * c - r) / 2.0).exp()
}

// ---------------------------------------------------------------- family F

/// `√(√(b²+c²) − b)/√(b²+c²) · e^{−a√(b²+c²)} · √(π/2)`
pub fn rhs_thm_f(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    sqrt_r_minus(r, b, c) / r * (-a * r).exp() * SQRT_HALF_PI
}

/// Pythagorean specialisation of Theorem F.
pub fn rhs_pythagorean_f(alpha: Cx, beta: Cx) -> Cx {
    let h = alpha * alpha + beta * beta;
    beta / h * (-alpha * h).exp() * SQRT_PI
}

// ---------------------------------------------------------------- family G

/// Glasser form with `g(x) = 1/(x+a)`: `πg(λ)/(2λ)`.
pub fn rhs_glasser_re(a: Cx, lambda: Cx) -> Cx {
    PI / (2.0 * lambda * (lambda + a))
}

/// `(π/b)·√((a+b)/2)`
pub fn rhs_sqrt_a(a: Cx, b: Cx) -> Cx {
    PI / b * sqrt_principal((a + b) / 2.0)
}

/// `π/(b√(2(a+b)))`
pub fn rhs_inv_sqrt_a(a: Cx, b: Cx) -> Cx {
    PI / (b * sqrt_principal(2.0 * (a + b)))
}

/// `π/(2b) · e^{−ab} · ln b`
pub fn rhs_log_exp(a: Cx, b: Cx) -> Cx {
    PI / (2.0 * b) * (-a * b).exp() * b.ln()
}

/// `πe^{−a}/(2aζ(a+b))`
pub fn rhs_zeta(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    Ok(PI * (-a).exp() / (2.0 * a * czeta(a + b)?))
}

/// `(π/2)·ℒ⁻¹{g(s)/s}(b)` with `g(s) = 1/(s+a)`, inverted numerically.
pub fn rhs_inv_lap_1(a: Cx, b: f64) -> Result<Cx, ClosedFormError> {
    let inv = inverse_laplace(|s| 1.0 / (s * (s + a)), b, TALBOT_TOL)?;
    Ok(PI / 2.0 * inv.value)
}

/// `√(π/(2b))e^{−ab} + √(a/2)·π·erf(√(ab))`
pub fn rhs_erf_sqrt(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    let t = sqrt_principal(PI / (2.0 * b)) * (-a * b).exp();
    Ok(t + sqrt_principal(a / 2.0) * PI * cerf(sqrt_principal(a * b))?)
}

/// `π/√(2a) · erf(√(ab))`
pub fn rhs_erf_inv_sqrt(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    Ok(PI / sqrt_principal(2.0 * a) * cerf(sqrt_principal(a * b))?)
}

/// Widder form with `g(x) = 1/(x+a)`: `−πg(λ)/2`.
pub fn rhs_widder_im(a: Cx, lambda: Cx) -> Cx {
    -PI / (2.0 * (lambda + a))
}

/// Stieltjes form with `g(x) = 1/√(x+a)`:
/// `(−1)^{n+1}π/(2n!)·g⁽ⁿ⁾(λ)`, where `g⁽ⁿ⁾(λ) = Γ(½)/Γ(½−n)·(λ+a)^{−½−n}`.
pub fn rhs_stieltjes(a: Cx, lambda: Cx, n: usize) -> Result<Cx, ClosedFormError> {
    let nf = n as f64;
    let dn = cgamma(re(0.5))? / cgamma(re(0.5 - nf))? * (lambda + a).powc(re(-0.5 - nf));
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    Ok(sign * PI / (2.0 * factorial(n)) * dn)
}

/// Distance from `u` to the cut `(−∞, 1]` of `ln ln u`.
fn lnln_distance(u: Cx) -> f64 {
    if u.re <= 1.0 {
        (u - re(u.re.min(1.0))).norm().min((u - re(1.0)).norm())
    } else {
        (u - re(1.0)).norm().min(if u.im != 0.0 { u.im.abs() } else { f64::INFINITY })
    }
}

/// `(−1)^{n+1}·π/n! · ∂ⁿ/∂λⁿ ln ln(λ + a)` (the `ln(¼ln²+arctan²)` form,
/// which is twice the `½ln` kernel).
pub fn rhs_lnln(a: Cx, lambda: Cx, n: usize) -> Result<Cx, ClosedFormError> {
    let radius = 0.5 * lnln_distance(lambda + a);
    let d = nth_derivative(|l| (l + a).ln().ln(), DerivRequest { center: lambda, order: n, radius })?;
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    Ok(sign * PI / factorial(n) * d.value)
}

/// Arctangent form: half of [`rhs_lnln`].
pub fn rhs_lnln_atan(a: Cx, lambda: Cx, n: usize) -> Result<Cx, ClosedFormError> {
    Ok(rhs_lnln(a, lambda, n)? / 2.0)
}

/// `−(π/2)·ℒ⁻¹{s g(s)}(b)` with `g(s) = 1/(s+a)²`, inverted numerically
/// after the shift `s → s − a`, which moves the double pole to the origin
/// and pulls the factor `e^{−ab}` out of the inversion.
pub fn rhs_inv_lap_2(a: Cx, b: f64) -> Result<Cx, ClosedFormError> {
    let inv = inverse_laplace(|s| (s - a) / (s * s), b, TALBOT_TOL)?;
    Ok(-PI / 2.0 * (-a * b).exp() * inv.value)
}

/// `−(2ab+1)/(4b^{3/2}) · e^{−ab} · √(2π)`
pub fn rhs_cos_deriv(a: Cx, b: Cx) -> Cx {
    -(2.0 * a * b + 1.0) / (4.0 * b * sqrt_principal(b)) * (-a * b).exp() * (2.0 * PI).sqrt()
}

/// `2√(π/a) · e^{ab} · erfc(√(ab))`, through the scaled `erfcx`.
pub fn rhs_erfc(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    Ok(2.0 * sqrt_principal(PI / a) * cerfcx(sqrt_principal(a * b))?)
}

/// `−(1/Γ(μ))·√(π/2)·ℳ{1/(x+b)}(μ)` with `ℳ{1/(x+b)}(μ) = b^{μ−1}π/sin(πμ)`.
pub fn rhs_mellin_sine(b: Cx, mu: Cx) -> Result<Cx, ClosedFormError> {
    let m = b.powc(mu - 1.0) * PI / (PI * mu).sin();
    Ok(-SQRT_HALF_PI / cgamma(mu)? * m)
}

/// `cosec(πμ/2)/Γ(μ) · √(π/2) · ∫x^{μ−1}ℱ_s{−t/(t²+b²)}(x)dx`, the inner
/// integral being `−√(π/2)Γ(μ)b^{−μ}`.
pub fn rhs_cosec_mellin(b: Cx, mu: Cx) -> Result<Cx, ClosedFormError> {
    let g = cgamma(mu)?;
    let inner = -SQRT_HALF_PI * g * b.powc(-mu);
    Ok(1.0 / (PI * mu / 2.0).sin() / g * SQRT_HALF_PI * inner)
}

/// `−2^{1/2−2μ} a^{−1/2−μ} Γ(2μ) / (μΓ(μ)²) · cosec(πμ/2) · π`
pub fn rhs_gamma_integral(a: Cx, mu: Cx) -> Result<Cx, ClosedFormError> {
    let num = re(2.0).powc(0.5 - 2.0 * mu) * a.powc(-0.5 - mu) * cgamma(2.0 * mu)?;
    let g = cgamma(mu)?;
    Ok(-num / (mu * g * g) / (PI * mu / 2.0).sin() * PI)
}

/// `π/sin(πz)`
pub fn rhs_euler_reflection(z: Cx) -> Cx {
    PI / (PI * z).sin()
}

/// `−√(π/2) ∫₀^∞ e^{−ax}/√(x+b) dx`, the Parseval–Goldstein right side
/// evaluated by quadrature so that it stays independent of the erfc form.
pub fn rhs_parseval_goldstein(a: Cx, b: Cx) -> Result<Cx, ClosedFormError> {
    let f = Integrand::new(move |x| (-a * x).exp() / sqrt_principal(x + b)).with_decay_scale(1.0 / a.re.max(1e-6));
    let r = integrate_semiinf(&f, Tolerance::new(1e-15, 1e-13));
    if !r.converged {
        return Err(ClosedFormError::Quadrature(r.failure.unwrap_or(QuadFailure::Budget)));
    }
    Ok(-SQRT_HALF_PI * r.value)
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

// ------------------------------------------------------------ lookup table

type EvalFn = fn(&ParamAssignment) -> Result<Cx, ClosedFormError>;
type HintFn = fn(&ParamAssignment) -> f64;

/// A closed form bound to a registry id.
#[derive(Clone, Copy)]
pub struct ClosedForm {
    pub id: &'static str,
    pub eval: EvalFn,
    /// Safe Cauchy radius for entries evaluated by differentiation.
    pub singularity_hint: Option<HintFn>,
}

fn p(ps: &ParamAssignment, k: Param) -> Result<Cx, ClosedFormError> {
    Ok(ps.cx(k)?)
}

fn real_arg(z: Cx, what: &str) -> Result<f64, ClosedFormError> {
    if z.im != 0.0 || z.re <= 0.0 {
        return Err(ClosedFormError::Domain(format!("{what} must be real and positive, got {z}")));
    }
    Ok(z.re)
}

macro_rules! abc {
    ($ps:expr) => {
        (p($ps, Param::A)?, p($ps, Param::B)?, p($ps, Param::C)?)
    };
}

macro_rules! ab {
    ($ps:expr) => {
        (p($ps, Param::A)?, p($ps, Param::B)?)
    };
}

fn deriv_entry(base: Base, wrt: Param, n: usize, ps: &ParamAssignment) -> Result<Cx, ClosedFormError> {
    rhs_derivative_family(base, wrt, n, ps)
}

fn hint_for(base: Base, wrt: Param) -> impl Fn(&ParamAssignment) -> f64 {
    move |ps| derivative_radius(base, wrt, ps.order().unwrap_or(1), ps).unwrap_or(f64::NAN)
}

/// The closed form registered under `id`, if any.
pub fn closed_form(id: &str) -> Option<ClosedForm> {
    let (eval, hint): (EvalFn, Option<HintFn>) = match id {
        "A.T1" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_thm_a(a, b)) }, None),
        "A.C1" => (|ps| { let (a, b) = ab!(ps); Ok(printed::a_c1(a, b)) }, None),
        "A.C2" => (|ps| { let (a, b) = ab!(ps); Ok(printed::a_c2(a, b)) }, None),
        "A.C3n" => (|ps| deriv_entry(Base::A, Param::A, ps.order()?, ps), Some(|ps| hint_for(Base::A, Param::A)(ps))),
        "A.C4" => (|ps| { let (a, b) = ab!(ps); Ok(printed::a_c4(a, b)) }, None),
        "A.C5" => (|ps| { let (a, b) = ab!(ps); Ok(printed::a_c5(a, b)) }, None),
        "A.C6n" => (|ps| deriv_entry(Base::A, Param::B, ps.order()?, ps), Some(|ps| hint_for(Base::A, Param::B)(ps))),
        "B.T2" => (|ps| { let (a, b, c) = abc!(ps); Ok(rhs_thm_b(a, b, c)) }, None),
        "B.P" => (|ps| Ok(rhs_pythagorean_b(p(ps, Param::Alpha)?, p(ps, Param::Beta)?)), None),
        "B.C1" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c1(a, b, c)) }, None),
        "B.C2" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c2(a, b, c)) }, None),
        "B.C3" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c3(a, b, c)) }, None),
        "B.C4" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c4(a, b, c)) }, None),
        "B.C5" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c5(a, b, c)) }, None),
        "B.C6" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::b_c6(a, b, c)) }, None),
        "C.T3" => (|ps| { let (a, b) = ab!(ps); rhs_thm_c(a, b, re(1.0)) }, None),
        "C.Cc" => (|ps| { let (a, b, c) = abc!(ps); rhs_thm_c(a, b, c) }, None),
        "C.R1" | "C.R2" | "D.R1" | "D.R2" => (|ps| Ok(cerf(p(ps, Param::Z)?)?), None),
        "C.Fin" => (|ps| { let (a, b) = ab!(ps); rhs_fin_c(a, b) }, None),
        "D.T4" => (|ps| { let (a, b, c) = abc!(ps); rhs_thm_d(a, b, c) }, None),
        "D.Fin" => (|ps| { let (a, b, c) = abc!(ps); rhs_fin_d(a, b, c) }, None),
        "E.T5" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_thm_e(a, b)) }, None),
        "E.C1" => (|ps| { let (a, b) = ab!(ps); Ok(printed::e_c1(a, b)) }, None),
        "E.C2" => (|ps| { let (a, b) = ab!(ps); Ok(printed::e_c2(a, b)) }, None),
        "E.C3n" => (|ps| deriv_entry(Base::E, Param::B, ps.order()?, ps), Some(|ps| hint_for(Base::E, Param::B)(ps))),
        "E.C4" => (|ps| { let (a, b) = ab!(ps); Ok(printed::e_c4(a, b)) }, None),
        "E.C5" => (|ps| { let (a, b) = ab!(ps); Ok(printed::e_c5(a, b)) }, None),
        "E.C6n" => (|ps| deriv_entry(Base::E, Param::A, ps.order()?, ps), Some(|ps| hint_for(Base::E, Param::A)(ps))),
        "F.T6" => (|ps| { let (a, b, c) = abc!(ps); Ok(rhs_thm_f(a, b, c)) }, None),
        "F.P" => (|ps| Ok(rhs_pythagorean_f(p(ps, Param::Alpha)?, p(ps, Param::Beta)?)), None),
        "F.C1" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c1(a, b, c)) }, None),
        "F.C2" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c2(a, b, c)) }, None),
        "F.C3" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c3(a, b, c)) }, None),
        "F.C4" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c4(a, b, c)) }, None),
        "F.C5" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c5(a, b, c)) }, None),
        "F.C6" => (|ps| { let (a, b, c) = abc!(ps); Ok(printed::f_c6(a, b, c)) }, None),
        "G.GlasserRe" => (|ps| Ok(rhs_glasser_re(p(ps, Param::A)?, p(ps, Param::Lambda)?)), None),
        "G.SqrtA" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_sqrt_a(a, b)) }, None),
        "G.InvSqrtA" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_inv_sqrt_a(a, b)) }, None),
        "G.LogExp" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_log_exp(a, b)) }, None),
        "G.Zeta" => (|ps| { let (a, b) = ab!(ps); rhs_zeta(a, b) }, None),
        "G.InvLap1" => (|ps| { let (a, b) = ab!(ps); rhs_inv_lap_1(a, real_arg(b, "b")?) }, None),
        "G.ErfSqrt" => (|ps| { let (a, b) = ab!(ps); rhs_erf_sqrt(a, b) }, None),
        "G.ErfInvSqrt" => (|ps| { let (a, b) = ab!(ps); rhs_erf_inv_sqrt(a, b) }, None),
        "G.WidderIm" => (|ps| Ok(rhs_widder_im(p(ps, Param::A)?, p(ps, Param::Lambda)?)), None),
        "G.Stieltjes_n" => (|ps| rhs_stieltjes(p(ps, Param::A)?, p(ps, Param::Lambda)?, ps.order()?), None),
        "G.LnLn" => (
            |ps| rhs_lnln(p(ps, Param::A)?, p(ps, Param::Lambda)?, ps.order()?),
            Some(|ps| 0.5 * lnln_distance(ps[&Param::A] + ps[&Param::Lambda])),
        ),
        "G.LnLnAtan" => (
            |ps| rhs_lnln_atan(p(ps, Param::A)?, p(ps, Param::Lambda)?, ps.order()?),
            Some(|ps| 0.5 * lnln_distance(ps[&Param::A] + ps[&Param::Lambda])),
        ),
        "G.InvLap2" => (|ps| { let (a, b) = ab!(ps); rhs_inv_lap_2(a, real_arg(b, "b")?) }, None),
        "G.CosDeriv" => (|ps| { let (a, b) = ab!(ps); Ok(rhs_cos_deriv(a, b)) }, None),
        "G.ParsevalGoldstein" => (|ps| { let (a, b) = ab!(ps); rhs_parseval_goldstein(a, b) }, None),
        "G.Erfc" => (|ps| { let (a, b) = ab!(ps); rhs_erfc(a, b) }, None),
        "G.MellinSine" => (|ps| rhs_mellin_sine(p(ps, Param::B)?, p(ps, Param::Mu)?), None),
        "G.CosecMellin" => (|ps| rhs_cosec_mellin(p(ps, Param::B)?, p(ps, Param::Mu)?), None),
        "G.GammaIntegral" => (|ps| rhs_gamma_integral(p(ps, Param::A)?, p(ps, Param::Mu)?), None),
        "G.EulerReflection" => (|ps| Ok(rhs_euler_reflection(p(ps, Param::Z)?)), None),
        _ => return None,
    };
    let id = IDS.iter().copied().find(|&k| k == id)?;
    Some(ClosedForm { id, eval, singularity_hint: hint })
}
