//! nth-order corollaries as signed Cauchy derivatives of the base closed
//! forms.

use super::{base_a, base_e, rhs_thm_b, rhs_thm_f, ClosedFormError};
use crate::complexmath::{sqrt_principal, Cx};
use crate::nderiv::{nth_derivative, DerivRequest};
use crate::params::{Param, ParamAssignment, ParamsExt};
use serde::Serialize;

/// Base families that carry derivative corollaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Base {
    A,
    B,
    E,
    F,
}

impl Base {
    pub fn parse(s: &str) -> Option<Base> {
        Some(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Base::A,
            "B" => Base::B,
            "E" => Base::E,
            "F" => Base::F,
            _ => return None,
        })
    }

    fn vars(self) -> &'static [Param] {
        match self {
            Base::A | Base::E => &[Param::A, Param::B],
            Base::B | Base::F => &[Param::A, Param::B, Param::C],
        }
    }
}

fn one() -> Cx {
    Cx::new(1.0, 0.0)
}

fn eval_base(base: Base, a: Cx, b: Cx, c: Cx) -> Cx {
    match base {
        Base::A => base_a(a, b, c),
        Base::E => base_e(a, b, c),
        Base::B => rhs_thm_b(a, b, c),
        Base::F => rhs_thm_f(a, b, c),
    }
}

fn abc(base: Base, ps: &ParamAssignment) -> Result<(Cx, Cx, Cx), ClosedFormError> {
    let c = match base {
        Base::A | Base::E => ps.get(&Param::C).copied().unwrap_or_else(one),
        Base::B | Base::F => ps.cx(Param::C)?,
    };
    Ok((ps.cx(Param::A)?, ps.cx(Param::B)?, c))
}

/// The base closed form at `ps`; `c` defaults to 1 for A and E.
pub fn base_value(base: Base, ps: &ParamAssignment) -> Result<Cx, ClosedFormError> {
    let (a, b, c) = abc(base, ps)?;
    Ok(eval_base(base, a, b, c))
}

/// Sign (or scale) that turns `∂ⁿ/∂wrtⁿ` of the base into the integral
/// whose amplitude carries the matching power. For A/E in `b` the
/// `+nπ/2` phase shift sits in the integrand, so the factor is 1.
pub fn corollary_sign(base: Base, wrt: Param, n: usize) -> f64 {
    let alt = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    match (base, wrt) {
        (Base::A | Base::E, Param::A) => alt(n),
        (Base::A | Base::E, Param::B) => 1.0,
        (Base::B | Base::F, Param::B) => alt(n),
        (Base::B, Param::C) => alt(n.div_ceil(2)),
        (Base::F, Param::C) => alt(n / 2),
        (Base::B | Base::F, Param::A) => (-2.0f64).powi(n as i32),
        _ => f64::NAN,
    }
}

/// Distance from `center` to the cut `{w : w² = −m − κt, t ≥ 0}`, which
/// is where `√(w² + m)`-type roots leave the principal sheet.
pub fn cut_distance(center: Cx, m: Cx, kappa: Cx) -> f64 {
    const SAMPLES: usize = 4000;
    let span = 1e4 * (1.0 + m.norm() + center.norm_sqr()) / kappa.norm().max(1e-300);
    let mut best = f64::INFINITY;
    for k in 0..SAMPLES {
        // t = 0 first, then geometric out to `span`.
        let t = if k == 0 { 0.0 } else { span * 1e-12f64.powf(1.0 - k as f64 / (SAMPLES - 1) as f64) };
        let w = sqrt_principal(-m - kappa * t);
        best = best.min((center - w).norm()).min((center + w).norm());
    }
    best
}

/// Safe Cauchy radius for `∂ⁿ/∂wrtⁿ` of the base at `ps`: half the
/// distance to the nearest branch cut or to the edge of the half-plane
/// `Re(wrt) > 0`, capped.
pub fn derivative_radius(base: Base, wrt: Param, n: usize, ps: &ParamAssignment) -> Result<f64, ClosedFormError> {
    let (a, b, c) = abc(base, ps)?;
    let center = match wrt {
        Param::A => a,
        Param::B => b,
        Param::C => c,
        other => return Err(ClosedFormError::Domain(format!("no derivative in `{other}` for family {base:?}"))),
    };
    let (cut, half_plane, rmax) = match (base, wrt) {
        (Base::A, Param::A) => (cut_distance(a, b * b, one() / c.powi(4)), center.re, 4.0),
        (Base::A, Param::B) => (cut_distance(b, a * a, one() / c.powi(4)), f64::INFINITY, 4.0),
        (Base::E, Param::A) => (cut_distance(a, b * b, one() / (c * c)), center.re, 4.0),
        (Base::E, Param::B) => (cut_distance(b, a * a, one() / (c * c)), center.re, 4.0),
        (Base::B | Base::F, Param::A) => {
            let r = sqrt_principal(b * b + c * c).norm();
            (f64::INFINITY, f64::INFINITY, n.max(1) as f64 / r)
        }
        // e^{−a√(b²+c²)} swings by e^{±|a|r} around the circle; r ≈ n/|a|
        // keeps that swing at e^n.
        (Base::B | Base::F, Param::B) => (cut_distance(b, c * c, one()), center.re, (n.max(1) as f64 / a.norm()).min(4.0)),
        (Base::B | Base::F, Param::C) => (cut_distance(c, b * b, one()), center.re, (n.max(1) as f64 / a.norm()).min(4.0)),
        _ => return Err(ClosedFormError::Domain(format!("no derivative in `{wrt}` for family {base:?}"))),
    };
    Ok((0.5 * cut.min(half_plane)).min(rmax))
}

/// Plain `∂ⁿ/∂wrtⁿ` of the base closed form.
pub fn raw_derivative(base: Base, wrt: Param, n: usize, ps: &ParamAssignment) -> Result<Cx, ClosedFormError> {
    if !base.vars().contains(&wrt) {
        return Err(ClosedFormError::Domain(format!("family {base:?} has no parameter `{wrt}`")));
    }
    let (a, b, c) = abc(base, ps)?;
    let radius = derivative_radius(base, wrt, n, ps)?;
    let (center, f): (Cx, Box<dyn Fn(Cx) -> Cx>) = match wrt {
        Param::A => (a, Box::new(move |t| eval_base(base, t, b, c))),
        Param::B => (b, Box::new(move |t| eval_base(base, a, t, c))),
        _ => (c, Box::new(move |t| eval_base(base, a, b, t))),
    };
    Ok(nth_derivative(f, DerivRequest { center, order: n, radius })?.value)
}

/// `sign · ∂ⁿ/∂wrtⁿ base`, with the sign from [`corollary_sign`].
pub fn rhs_derivative_family(base: Base, wrt: Param, n: usize, ps: &ParamAssignment) -> Result<Cx, ClosedFormError> {
    Ok(corollary_sign(base, wrt, n) * raw_derivative(base, wrt, n, ps)?)
}

/// For each explicitly printed corollary: the base, the variable, the
/// order and the factor `k` with `printed = k · ∂ⁿ base`.
pub fn printed_relation(id: &str) -> Option<(Base, Param, usize, f64)> {
    use Param::{A, B, C};
    Some(match id {
        "A.C1" => (Base::A, A, 1, -1.0),
        "A.C2" => (Base::A, A, 2, 1.0),
        "A.C4" => (Base::A, B, 1, -1.0),
        "A.C5" => (Base::A, B, 2, -1.0),
        "E.C1" => (Base::E, B, 1, 1.0),
        "E.C2" => (Base::E, B, 2, -1.0),
        "E.C4" => (Base::E, A, 1, -1.0),
        "E.C5" => (Base::E, A, 2, 1.0),
        "B.C1" => (Base::B, B, 1, -1.0),
        "B.C2" => (Base::B, B, 2, 1.0),
        "B.C3" => (Base::B, C, 1, -1.0),
        "B.C4" => (Base::B, C, 2, -1.0),
        "B.C5" => (Base::B, A, 1, -2.0),
        "B.C6" => (Base::B, A, 2, 4.0),
        "F.C1" => (Base::F, B, 1, -1.0),
        "F.C2" => (Base::F, B, 2, 1.0),
        "F.C3" => (Base::F, C, 1, 1.0),
        "F.C4" => (Base::F, C, 2, -1.0),
        "F.C5" => (Base::F, A, 1, -2.0),
        "F.C6" => (Base::F, A, 2, 4.0),
        _ => return None,
    })
}
