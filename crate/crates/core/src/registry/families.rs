//! Records for families A–F: the Gaussian and exponential phase integrals,
//! their derivative corollaries and the erf representations.

use super::{rhs_for, DomainFn, Example, IdentitySpec, Kind, LhsFn, RegistryError, Source};
use crate::closedforms::{erf_via_representation, ErfRep};
use crate::complexmath::{sqrt_principal, Cx};
use crate::lhs::{c_finite, damped, exp_or_zero, d_finite, d_kernel, gaussian_oscillatory, saddle_shift, shifted_fourier, sinc_gaussian, xq, Roots, Trig};
use crate::params::{real_params, Param, ParamAssignment, ParamsExt};
use crate::quadrature::Envelope;
use crate::registry::sample::Draw;
use std::f64::consts::{E, FRAC_PI_2, PI};

use Param::{Alpha, Beta, A, B, C, N, V, Z};

const SP: f64 = 1.772_453_850_905_516_f64;
const ERF1: f64 = 0.842_700_792_949_714_9;

fn one() -> Cx {
    Cx::new(1.0, 0.0)
}

fn ex(p: &[(Param, f64)], expr: &'static str, value: f64) -> Example {
    Example::new(real_params(p), expr, value, Source::Exact)
}

fn reference(p: &[(Param, f64)], expr: &'static str, value: f64) -> Example {
    Example::new(real_params(p), expr, value, Source::Reference)
}

fn oracle(p: &[(Param, f64)], expr: &'static str, value: f64) -> Example {
    Example::new(real_params(p), expr, value, Source::Oracle)
}

// ------------------------------------------------------------- domains

fn need(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn re_pos(p: &ParamAssignment, k: Param) -> Result<(), String> {
    need(p[&k].re > 0.0, &format!("Re {k} > 0 required"))
}

fn order_at_most(p: &ParamAssignment, max: usize) -> Result<(), String> {
    match p.order() {
        Ok(n) if n <= max => Ok(()),
        Ok(n) => Err(format!("n = {n} exceeds {max}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Shared by A, C and E: `Re a > 0`, `Re b ≥ 0`, and the oscillation may
/// not outgrow the Gaussian: `|Im b| ≤ Re a / 2`.
fn gaussian_domain(p: &ParamAssignment) -> Result<(), String> {
    re_pos(p, A)?;
    need(p[&B].re >= 0.0, "Re b ≥ 0 required")?;
    need(p[&B].im.abs() <= 0.5 * p[&A].re, "|Im b| ≤ Re a/2 required for a convergent integrand")?;
    if let Some(c) = p.get(&C) {
        need(c.re > 0.0 && c.im == 0.0, "c must be real and positive")?;
    }
    if p.contains_key(&N) {
        order_at_most(p, 6)?;
    }
    Ok(())
}

/// B, D and F: `Re a, Re b > 0`, `Re c ≥ 0`, and the Fourier factor may
/// not outgrow the exponential: `|Im c| ≤ Re b / 2`. The value
/// `e^{−a√(b²+c²)}` must stay representable.
fn exponential_domain(p: &ParamAssignment) -> Result<(), String> {
    re_pos(p, A)?;
    re_pos(p, B)?;
    let (a, b, c) = (p[&A], p[&B], p[&C]);
    need(c.re >= 0.0, "Re c ≥ 0 required")?;
    need(c.im.abs() <= 0.5 * b.re, "|Im c| ≤ Re b/2 required for a convergent integrand")?;
    let r = sqrt_principal(b * b + c * c);
    need((a * r).re < 600.0, "Re(a√(b²+c²)) ≥ 600: value underflows")
}

fn pythagorean_domain(p: &ParamAssignment) -> Result<(), String> {
    re_pos(p, Alpha)?;
    let (al, be) = (p[&Alpha], p[&Beta]);
    need((al * al).re > (be * be).re, "Re(α²) > Re(β²) required")?;
    let q = bf_from_pythagorean(p);
    exponential_domain(&q)
}

fn bf_from_pythagorean(p: &ParamAssignment) -> ParamAssignment {
    let (al, be) = (p[&Alpha], p[&Beta]);
    [(A, al), (B, al * al - be * be), (C, 2.0 * al * be)].into_iter().collect()
}

/// C.R1/C.R2: the substituted `(a, b) = (v² − z², 2vz)` must land inside
/// Theorem C's domain on the principal branch, so that
/// `√((√(a²+b²) − a)/2)` really is `z`.
fn erf_gaussian_domain(p: &ParamAssignment) -> Result<(), String> {
    let (v, z) = (p[&V], p[&Z]);
    need(v.re > 0.0 && z.re > 0.0, "Re v > 0 and Re z > 0 required")?;
    let (a, b) = (v * v - z * z, 2.0 * v * z);
    need(a.re > 0.0, "Re(v²) > Re(z²) required")?;
    need(b.im.abs() <= 0.5 * a.re, "|Im 2vz| ≤ Re(v² − z²)/2 required")?;
    let r = sqrt_principal(a * a + b * b);
    need((r - (v * v + z * z)).norm() <= 1e-9 * r.norm(), "√((v²−z²)² + 4v²z²) leaves the principal branch")
}

/// D.R1/D.R2: `b = v² − z²/(2a)`, `c = √(2/a)vz` inside Theorem D's domain
/// with `√(a(√(b²+c²) − b)) = z` on the principal branch.
fn erf_exponential_domain(p: &ParamAssignment) -> Result<(), String> {
    let (a, v, z) = (p[&A], p[&V], p[&Z]);
    need(a.re > 0.0 && v.re > 0.0 && z.re > 0.0, "Re a, Re v, Re z > 0 required")?;
    let b = v * v - z * z / (2.0 * a);
    let c = sqrt_principal(2.0 / a) * v * z;
    need(b.re > 0.0, "Re(2av²) > Re(z²) required")?;
    need(c.im.abs() <= 0.5 * b.re && c.re > 0.0, "the sine factor outgrows the exponential")?;
    let r = sqrt_principal(b * b + c * c);
    need((r - (v * v + z * z / (2.0 * a))).norm() <= 1e-9 * r.norm(), "branch mismatch for √(b² + c²)")?;
    need((a * b).re < 600.0, "e^{ab} overflows the prefactor")
}

// ------------------------------------------------------------ left sides

type AmpA = fn(f64, Cx, usize) -> Cx;

/// `∫ amp(x)·trig(bx√(x²+c²) + nπ/2·[shifted]) e^{−ax²} dx`
fn family_a(amp: AmpA, trig: Trig, shifted: bool) -> LhsFn {
    Box::new(move |p, tol| {
        let (a, b) = (p.cx(A)?, p.cx(B)?);
        let c = p.get(&C).copied().unwrap_or_else(one);
        let n = if p.contains_key(&N) { p.order()? } else { 0 };
        let shift = if shifted { n as f64 * FRAC_PI_2 } else { 0.0 };
        let f = move |x: f64| amp(x, c, n) * damped(trig, b * xq(x, c) + shift, -a * x * x);
        Ok(gaussian_oscillatory(f, a, b, c, trig.offset() + shift, tol))
    })
}

/// `∫ amp(x)·trig(b√(x(x+c)) + …) e^{−ax} dx` after `x = u²`; `amp` here
/// already includes the Jacobian `2u` and takes `u`.
fn family_e(amp: AmpA, trig: Trig, shifted: bool) -> LhsFn {
    Box::new(move |p, tol| {
        let (a, b) = (p.cx(A)?, p.cx(B)?);
        let c = p.get(&C).copied().unwrap_or_else(one);
        let n = if p.contains_key(&N) { p.order()? } else { 0 };
        let shift = if shifted { n as f64 * FRAC_PI_2 } else { 0.0 };
        let f = move |u: f64| {
            let x = u * u;
            amp(u, c, n) * damped(trig, b * u * sqrt_principal(x + c) + shift, -a * x)
        };
        Ok(gaussian_oscillatory(f, a, b, sqrt_principal(c), trig.offset() + shift, tol))
    })
}

type AmpBF = fn(Cx, Roots, Cx, Cx) -> Cx;

fn bf_integral(amp: AmpBF, trig: Trig, a: Cx, b: Cx, c: Cx, tol: crate::quadrature::Tolerance) -> crate::quadrature::QuadResult {
    let y = saddle_shift(a, b, c);
    let rate = b.re - c.im.abs();
    let f = move |z: Cx| {
        let r = Roots::at(z, a);
        amp(z, r, a, b) * exp_or_zero(-b * r.s)
    };
    shifted_fourier(f, c, trig, y, 1.0 / rate, Envelope::Exponential { rate }, tol)
}

/// `∫ amp(x)·e^{−b√(x²+a²)}·trig(cx) dx` on the saddle-point line.
fn family_bf(amp: AmpBF, trig: Trig) -> LhsFn {
    Box::new(move |p, tol| Ok(bf_integral(amp, trig, p.cx(A)?, p.cx(B)?, p.cx(C)?, tol)))
}

fn pythagorean(amp: AmpBF, trig: Trig) -> LhsFn {
    Box::new(move |p, tol| {
        let q = bf_from_pythagorean(p);
        Ok(bf_integral(amp, trig, q[&A], q[&B], q[&C], tol))
    })
}

fn erf_rep(rep: ErfRep) -> LhsFn {
    Box::new(move |p, tol| {
        let a = if rep.needs_a() { Some(p.cx(A)?) } else { None };
        erf_via_representation(rep, p.cx(V)?, p.cx(Z)?, a, tol).map_err(RegistryError::from)
    })
}

fn b_c5(_: Cx, r: Roots, a: Cx, b: Cx) -> Cx {
    r.p * ((2.0 * a * b - 1.0) * r.s + 2.0 * a) / r.s.powi(3)
}

fn b_c6(z: Cx, r: Roots, a: Cx, b: Cx) -> Cx {
    let (a2, z2) = (a * a, z * z);
    let poly = 9.0 * a2 - 4.0 * a2 * a * b + 4.0 * a2 * a2 * b * b - 3.0 * z2 - 4.0 * a * b * z2 + 4.0 * a2 * b * b * z2
        + (8.0 * a2 * b - 6.0 * a - 4.0 * b * z2) * r.s;
    r.p / r.s.powi(5) * poly
}

fn f_c5(_: Cx, r: Roots, a: Cx, b: Cx) -> Cx {
    r.m * ((2.0 * a * b + 1.0) * r.s + 2.0 * a) / r.s.powi(3)
}

fn f_c6(z: Cx, r: Roots, a: Cx, b: Cx) -> Cx {
    let (a2, z2) = (a * a, z * z);
    let poly = 9.0 * a2 + 4.0 * a2 * a * b + 4.0 * a2 * a2 * b * b - 3.0 * z2 + 4.0 * a * b * z2 + 4.0 * a2 * b * b * z2
        + (8.0 * a2 * b + 6.0 * a - 4.0 * b * z2) * r.s;
    r.m / r.s.powi(5) * poly
}

// --------------------------------------------------------------- records

#[allow(clippy::too_many_arguments)]
fn spec(
    id: &'static str,
    kind: Kind,
    anchor: &'static str,
    domain_text: &'static str,
    params: &[Param],
    lhs: LhsFn,
    domain: DomainFn,
    draws: Vec<(Param, Draw)>,
    examples: Vec<Example>,
    notes: &'static str,
) -> IdentitySpec {
    let monotone = matches!(kind, Kind::FiniteIntegral) || id == "C.R2" || id == "D.R2";
    IdentitySpec {
        id,
        family: id.chars().next().unwrap_or('?'),
        kind,
        anchor,
        domain_text,
        params: params.to_vec(),
        examples,
        notes,
        monotone,
        rhs: rhs_for(id),
        lhs,
        domain,
        draws,
    }
}

fn gd() -> DomainFn {
    Box::new(gaussian_domain)
}

fn xd() -> DomainFn {
    Box::new(exponential_domain)
}

fn ab_draws() -> Vec<(Param, Draw)> {
    vec![(A, Draw::complex(0.25)), (B, Draw::complex(0.1))]
}

fn abcn_draws() -> Vec<(Param, Draw)> {
    vec![(A, Draw::range(0.5, 8.0)), (B, Draw::range(0.3, 8.0)), (C, Draw::range(0.5, 2.0)), (N, Draw::Order { lo: 0, hi: 4 })]
}

fn abc_draws() -> Vec<(Param, Draw)> {
    vec![(A, Draw::complex(0.2)), (B, Draw::complex(0.2)), (C, Draw::complex(0.1))]
}

pub(super) fn specs() -> Vec<IdentitySpec> {
    let e = E;
    let e5 = E.powi(5);
    let p34 = [(A, 3.0), (B, 4.0)];
    let p134 = [(A, 1.0), (B, 3.0), (C, 4.0)];
    const A_DOM: &str = "Re a > 0, b ∈ ℂ";
    const AC_DOM: &str = "Re a, Re c > 0, b ∈ ℂ, n ≥ 0";
    const B_DOM: &str = "Re a, Re b > 0";
    const F_DOM: &str = "Re a, Re b > 0, Re c ≥ 0";
    const E_DOM: &str = "Re a > 0, Re b ≥ 0";
    const EC_DOM: &str = "Re a, Re c > 0, Re b ≥ 0, n ≥ 0";
    let mut v = Vec::new();

    // ---- family A
    v.push(spec(
        "A.T1",
        Kind::Theorem,
        r"e^{\frac{a - \sqrt{a^2 + b^2}}{2}}",
        "Re a ≥ 0",
        &[A, B],
        family_a(|_, _, _| one(), Trig::Cos, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "√π/(5e)", SP / (5.0 * e))],
        "Re a = 0 is only conditionally convergent; sampled with Re a > 0.",
    ));
    v.push(spec(
        "A.C1",
        Kind::Derivative,
        r"x^2 \cos\left(bx \sqrt{x^2 + 1}\right) e^{-ax^2}",
        A_DOM,
        &[A, B],
        family_a(|x, _, _| Cx::new(x * x, 0.0), Trig::Cos, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−9√π/(250e)", -9.0 * SP / (250.0 * e))],
        "Equals −∂/∂a of Theorem A.",
    ));
    v.push(spec(
        "A.C2",
        Kind::Derivative,
        r"x^4  \cos\left(bx \sqrt{x^2 + 1}\right) e^{-ax^2}",
        A_DOM,
        &[A, B],
        family_a(|x, _, _| Cx::new(x.powi(4), 0.0), Trig::Cos, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−137√π/(12500e)", -137.0 * SP / (12500.0 * e))],
        "Equals ∂²/∂a² of Theorem A.",
    ));
    v.push(spec(
        "A.C3n",
        Kind::Derivative,
        r"x^{2n} \cos\left(bx \sqrt{x^2 + c^2}\right) e^{-ax^2}",
        AC_DOM,
        &[A, B, C, N],
        family_a(|x, _, n| Cx::new(x.powi(2 * n as i32), 0.0), Trig::Cos, false),
        gd(),
        abcn_draws(),
        vec![
            ex(&[(A, 3.0), (B, 4.0), (C, 1.0), (N, 1.0)], "−9√π/(250e)", -9.0 * SP / (250.0 * e)),
            ex(&[(A, 3.0), (B, 4.0), (C, 1.0), (N, 2.0)], "−137√π/(12500e)", -137.0 * SP / (12500.0 * e)),
        ],
        "Right side by Cauchy differentiation in a; c is kept real.",
    ));
    v.push(spec(
        "A.C4",
        Kind::Derivative,
        r"x \sqrt{x^2 + 1} \sin\left(bx \sqrt{x^2 + 1}\right) e^{-ax^2}",
        A_DOM,
        &[A, B],
        family_a(|x, _, _| Cx::new(x * (x * x + 1.0).sqrt(), 0.0), Trig::Sin, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "51√π/(500e)", 51.0 * SP / (500.0 * e))],
        "Equals −∂/∂b of Theorem A.",
    ));
    v.push(spec(
        "A.C5",
        Kind::Derivative,
        r"x^2 (x^2 + 1) \cos\left(bx \sqrt{x^2 + 1}\right) e^{-ax^2}",
        A_DOM,
        &[A, B],
        family_a(|x, _, _| Cx::new(x * x * (x * x + 1.0), 0.0), Trig::Cos, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−587√π/(12500e)", -587.0 * SP / (12500.0 * e))],
        "Equals −∂²/∂b² of Theorem A.",
    ));
    v.push(spec(
        "A.C6n",
        Kind::Derivative,
        r"x^n (x^2 + c^2)^{\frac{n}{2}} \cos\left(bx \sqrt{x^2 + c^2} + \frac{n\pi}{2}\right)",
        AC_DOM,
        &[A, B, C, N],
        family_a(|x, c, n| (x * sqrt_principal(x * x + c * c)).powi(n as i32), Trig::Cos, true),
        gd(),
        abcn_draws(),
        vec![reference(&[(A, 3.0), (B, 4.0), (C, 1.0), (N, 1.0)], "−51√π/(500e)", -51.0 * SP / (500.0 * e))],
        "The nπ/2 phase lives in the integrand; at n = 1 this is −A.C4.",
    ));

    // ---- family B
    v.push(spec(
        "B.T2",
        Kind::Theorem,
        r"e^{-a\sqrt{b^2 + c^2}}",
        B_DOM,
        &[A, B, C],
        family_bf(|_, r, _, _| r.p / r.s, Trig::Cos),
        xd(),
        abc_draws(),
        vec![
            ex(&[(A, 2.0), (B, 3.0), (C, 4.0)], "2√π/(5e¹⁰)", 2.0 * SP / (5.0 * E.powi(10))),
            ex(&[(A, 3.0), (B, 5.0), (C, 12.0)], "3√π/(13e³⁹)", 3.0 * SP / (13.0 * E.powi(39))),
        ],
        "Integrated on a horizontal line through the saddle of e^{icz − b√(z²+a²)}.",
    ));
    v.push(spec(
        "B.P",
        Kind::Pythagorean,
        r"\cos(2\alpha \beta x) e^{-(\alpha^2 - \beta^2)\sqrt{x^2 + \alpha^2}}",
        "Re α > 0, Re(α²) > Re(β²)",
        &[Alpha, Beta],
        pythagorean(|_, r, _, _| r.p / r.s, Trig::Cos),
        Box::new(pythagorean_domain),
        vec![(Alpha, Draw::range(0.5, 3.0)), (Beta, Draw::range(0.3, 3.0))],
        vec![
            ex(&[(Alpha, 2.0), (Beta, 1.0)], "2√π/(5e¹⁰)", 2.0 * SP / (5.0 * E.powi(10))),
            ex(&[(Alpha, 3.0), (Beta, 2.0)], "3√π/(13e³⁹)", 3.0 * SP / (13.0 * E.powi(39))),
        ],
        "Theorem B at (α, α² − β², 2αβ).",
    ));
    let b_rows: [(&'static str, &'static str, AmpBF, Trig, &'static str, f64, &'static str); 6] = [
        ("B.C1", r"\sqrt{\sqrt{x^2 + a^2} + a} \cos(c x) e^{-b\sqrt{x^2 + a^2}}", |_, r, _, _| r.p, Trig::Cos, "31√π/(125e⁵)", 31.0 * SP / (125.0 * e5), "Equals −∂/∂b of Theorem B."),
        ("B.C2", r"\sqrt{\sqrt{x^2 + a^2} + a} \sqrt{x^2 + a^2}  \cos(c x)", |_, r, _, _| r.p * r.s, Trig::Cos, "583√π/(6250e⁵)", 583.0 * SP / (6250.0 * e5), "Equals ∂²/∂b² of Theorem B."),
        ("B.C3", r"\frac{x\sqrt{\sqrt{x^2 + a^2} + a}}{\sqrt{x^2 + a^2}}  \sin(c x)", |z, r, _, _| z * r.p / r.s, Trig::Sin, "91√π/(250e⁵)", 91.0 * SP / (250.0 * e5), "Equals −∂/∂c of Theorem B."),
        (
            "B.C4",
            r"\frac{x^2\sqrt{\sqrt{x^2 + a^2} - a}}{\sqrt{x^2 + a^2}}  \cos(c x)",
            |z, r, _, _| z * z * r.p / r.s,
            Trig::Cos,
            "−1917√π/(6250e⁵)",
            -1917.0 * SP / (6250.0 * e5),
            "Printed integrand has √(√(x²+a²) − a); the printed value needs + a (−∂²/∂c² of Theorem B).",
        ),
        ("B.C5", r"\left((2ab-1) \sqrt{x^2+a^2} + 2a\right) \cos(cx)", b_c5, Trig::Cos, "4√π/e⁵", 4.0 * SP / e5, "Equals −2∂/∂a of Theorem B."),
        ("B.C6", r"9 a^2 - 4 a^3 b + 4 a^4 b^2 - 3 x^2", b_c6, Trig::Cos, "40√π/e⁵", 40.0 * SP / e5, "Equals 4∂²/∂a² of Theorem B."),
    ];
    for (id, anchor, amp, trig, expr, value, notes) in b_rows {
        v.push(spec(id, Kind::Derivative, anchor, B_DOM, &[A, B, C], family_bf(amp, trig), xd(), abc_draws(), vec![ex(&p134, expr, value)], notes));
    }

    // ---- family C
    v.push(spec(
        "C.T3",
        Kind::Theorem,
        r"\frac{\pi}{2}\mathrm{erf}\left(\sqrt{\frac{\sqrt{a^2 + b^2} - a}{2}}\right)",
        "Re a, Re b ≥ 0",
        &[A, B],
        Box::new(|p, tol| Ok(sinc_gaussian(p.cx(A)?, p.cx(B)?, one(), tol))),
        gd(),
        ab_draws(),
        vec![reference(&p34, "(π/2)·erf 1", PI / 2.0 * ERF1)],
        "a = b = 0 is excluded.",
    ));
    v.push(spec(
        "C.Cc",
        Kind::Corollary,
        r"\frac{\pi}{2c}\mathrm{erf}\left(\sqrt{\frac{\sqrt{a^2 c^4 + b^2 c^4} - ac^2}{2}}\right)",
        "Re a, Re b ≥ 0, Re c > 0",
        &[A, B, C],
        Box::new(|p, tol| Ok(sinc_gaussian(p.cx(A)?, p.cx(B)?, p.cx(C)?, tol))),
        gd(),
        vec![(A, Draw::complex(0.25)), (B, Draw::complex(0.1)), (C, Draw::range(0.5, 2.0))],
        vec![
            reference(&[(A, 3.0), (B, 4.0), (C, 1.0)], "(π/2)·erf 1", PI / 2.0 * ERF1),
            oracle(&[(A, 1.0), (B, 1.0), (C, 2.0)], "quadrature", 0.629_866_870_502_649_1),
        ],
        "At c = 1 shares its evaluation path with C.T3.",
    ));
    v.push(spec(
        "C.R1",
        Kind::ErfRepresentation,
        r"\mathrm{erf}{z} = \frac{2}{\pi}\int_0^\infty \frac{\sin\left(2vz x \sqrt{x^2 + 1}\right)}{x\sqrt{x^2 + 1}}",
        "Re v > 0, Re(v²) > Re(z²)",
        &[V, Z],
        erf_rep(ErfRep::GaussianSinc),
        Box::new(erf_gaussian_domain),
        vec![(V, Draw::LogUniform { lo: 0.8, hi: 3.0, im: 0.15 }), (Z, Draw::LogUniform { lo: 0.2, hi: 2.0, im: 0.3 })],
        vec![reference(&[(V, 2.0), (Z, 1.0)], "erf 1", ERF1)],
        "Theorem C at a = v² − z², b = 2vz.",
    ));
    v.push(spec(
        "C.Fin",
        Kind::FiniteIntegral,
        r"\int_0^b \frac{\sqrt{\sqrt{a^2 + u^2} + a}}{\sqrt{a^2 + u^2}}e^{\frac{a - \sqrt{a^2 + u^2}}{2}}",
        "Re a > 0, Re b ≥ 0",
        &[A, B],
        Box::new(|p, tol| Ok(c_finite(p.cx(A)?, p.cx(B)?, tol))),
        Box::new(|p| {
            re_pos(p, A)?;
            need(p[&B].re >= 0.0, "Re b ≥ 0 required")
        }),
        vec![(A, Draw::complex(0.3)), (B, Draw::complex(0.3))],
        vec![reference(&p34, "√(2π)·erf 1", (2.0 * PI).sqrt() * ERF1)],
        "Straight segment from 0 to b.",
    ));
    v.push(spec(
        "C.R2",
        Kind::ErfRepresentation,
        r"\mathrm{erf}{z} = \frac{1}{\sqrt{2\pi}} \int_0^{2vz}",
        "Re v > 0, Re(v²) > Re(z²)",
        &[V, Z],
        erf_rep(ErfRep::GaussianFinite),
        Box::new(erf_gaussian_domain),
        vec![(V, Draw::LogUniform { lo: 0.8, hi: 3.0, im: 0.15 }), (Z, Draw::LogUniform { lo: 0.2, hi: 2.0, im: 0.3 })],
        vec![reference(&[(V, 2.0), (Z, 1.0)], "erf 1", ERF1)],
        "Printed exponent ½(v²−z²) − √(…) lacks a ½ on the root; implemented as in C.Fin.",
    ));

    // ---- family D
    v.push(spec(
        "D.T4",
        Kind::Theorem,
        r"e^{-ab}\mathrm{erf}\left(\sqrt{a\left(\sqrt{b^2 + c^2} - b\right)}\right)",
        "Re a, Re b, Re c > 0",
        &[A, B, C],
        Box::new(|p, tol| Ok(d_kernel(p.cx(A)?, p.cx(B)?, p.cx(C)?, tol))),
        Box::new(|p| {
            exponential_domain(p)?;
            re_pos(p, C)
        }),
        abc_draws(),
        vec![reference(&p134, "(π/√2)e^{−3}·erf √2", 0.105_566_771_957_085_15)],
        "No x^{−1/2} endpoint behaviour: the amplitude tends to c√(2a)/a at 0.",
    ));
    v.push(spec(
        "D.R1",
        Kind::ErfRepresentation,
        r"\mathrm{erf}{z} =  \frac{\sqrt{2a}}{\pi} e^{\frac{2av^2 - z^2}{2}}",
        "Re a, Re v > 0, Re(2av²) > Re(z²)",
        &[A, V, Z],
        erf_rep(ErfRep::ExponentialSine),
        Box::new(erf_exponential_domain),
        vec![(A, Draw::LogUniform { lo: 0.3, hi: 3.0, im: 0.2 }), (V, Draw::LogUniform { lo: 0.8, hi: 3.0, im: 0.15 }), (Z, Draw::LogUniform { lo: 0.2, hi: 2.0, im: 0.3 })],
        vec![reference(&[(A, 1.0), (V, 2.0), (Z, 1.0)], "erf 1", ERF1)],
        "Theorem D at b = v² − z²/(2a), c = √(2/a)vz.",
    ));
    v.push(spec(
        "D.Fin",
        Kind::FiniteIntegral,
        r"\int_0^c \frac{\sqrt{b + \sqrt{b^2 + u^2}}}{\sqrt{b^2 + u^2}} e^{-a\sqrt{b^2 + u^2}}",
        "Re a, Re b, Re c > 0",
        &[A, B, C],
        Box::new(|p, tol| Ok(d_finite(p.cx(A)?, p.cx(B)?, p.cx(C)?, tol))),
        Box::new(|p| {
            re_pos(p, A)?;
            re_pos(p, B)?;
            re_pos(p, C)?;
            need((p[&A] * p[&B]).re < 600.0, "Re(ab) ≥ 600: value underflows")
        }),
        vec![(A, Draw::complex(0.3)), (B, Draw::complex(0.3)), (C, Draw::complex(0.3))],
        vec![reference(&p134, "√π e^{−3}·erf √2", 0.084_230_097_478_355_12)],
        "Straight segment from 0 to c.",
    ));
    v.push(spec(
        "D.R2",
        Kind::ErfRepresentation,
        r"\mathrm{erf}{z} = \sqrt{\frac{2}{\pi}} ae^{\frac{2av^2 - z^2}{2}}\int_0^{\sqrt{\frac{2}{a}}vz}",
        "Re a, Re v > 0, Re(2av²) > Re(z²)",
        &[A, V, Z],
        erf_rep(ErfRep::ExponentialFinite),
        Box::new(erf_exponential_domain),
        vec![(A, Draw::LogUniform { lo: 0.3, hi: 3.0, im: 0.2 }), (V, Draw::LogUniform { lo: 0.8, hi: 3.0, im: 0.15 }), (Z, Draw::LogUniform { lo: 0.2, hi: 2.0, im: 0.3 })],
        vec![reference(&[(A, 1.0), (V, 2.0), (Z, 1.0)], "erf 1", ERF1)],
        "D.Fin at b = v² − z²/(2a), c = √(2/a)vz.",
    ));

    // ---- family E (x = u² throughout; amplitudes include 2u)
    v.push(spec(
        "E.T5",
        Kind::Theorem,
        r"\frac{\sin\left(b\sqrt{x(x+1)}\right)}{\sqrt{x+1}} e^{-ax}",
        E_DOM,
        &[A, B],
        family_e(|u, _, _| Cx::new(2.0 * u / (u * u + 1.0).sqrt(), 0.0), Trig::Sin, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "√π/(5e)", SP / (5.0 * e))],
        "Integrated in u = √x, which removes the square-root cusp at 0.",
    ));
    v.push(spec(
        "E.C1",
        Kind::Derivative,
        r"\sqrt{x} \cos\left(b\sqrt{x(x+1)}\right) e^{-ax}",
        E_DOM,
        &[A, B],
        family_e(|u, _, _| Cx::new(2.0 * u * u, 0.0), Trig::Cos, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−9√π/(125e)", -9.0 * SP / (125.0 * e))],
        "Equals ∂/∂b of Theorem E.",
    ));
    v.push(spec(
        "E.C2",
        Kind::Derivative,
        r"x \sqrt{x+1} \sin\left(b\sqrt{x(x+1)}\right) e^{-ax}",
        E_DOM,
        &[A, B],
        family_e(|u, _, _| Cx::new(2.0 * u.powi(3) * (u * u + 1.0).sqrt(), 0.0), Trig::Sin, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−107√π/(12500e)", -107.0 * SP / (12500.0 * e))],
        "Equals −∂²/∂b² of Theorem E.",
    ));
    v.push(spec(
        "E.C3n",
        Kind::Derivative,
        r"x^{\frac{n}{2}} (x + c)^{\frac{n - 1}{2}} \sin\left(b\sqrt{x(x+c)} + \frac{n\pi}{2}\right)",
        EC_DOM,
        &[A, B, C, N],
        family_e(|u, c, n| 2.0 * u.powi(n as i32 + 1) * sqrt_principal(u * u + c).powi(n as i32 - 1), Trig::Sin, true),
        gd(),
        abcn_draws(),
        vec![reference(&[(A, 3.0), (B, 4.0), (C, 1.0), (N, 1.0)], "−9√π/(125e)", -9.0 * SP / (125.0 * e))],
        "The nπ/2 phase lives in the integrand; at n = 1, c = 1 this is E.C1.",
    ));
    v.push(spec(
        "E.C4",
        Kind::Derivative,
        r"\frac{x\sin\left(b\sqrt{x(x+1)}\right)}{\sqrt{x+1}} e^{-ax}",
        "Re a, Re b > 0",
        &[A, B],
        family_e(|u, _, _| Cx::new(2.0 * u.powi(3) / (u * u + 1.0).sqrt(), 0.0), Trig::Sin, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "√π/(250e)", SP / (250.0 * e))],
        "Equals −∂/∂a of Theorem E.",
    ));
    v.push(spec(
        "E.C5",
        Kind::Derivative,
        r"\frac{x^2\sin\left(b\sqrt{x(x+1)}\right)}{\sqrt{x+1}} e^{-ax}",
        E_DOM,
        &[A, B],
        family_e(|u, _, _| Cx::new(2.0 * u.powi(5) / (u * u + 1.0).sqrt(), 0.0), Trig::Sin, false),
        gd(),
        ab_draws(),
        vec![ex(&p34, "−157√π/(12500e)", -157.0 * SP / (12500.0 * e))],
        "Equals ∂²/∂a² of Theorem E.",
    ));
    v.push(spec(
        "E.C6n",
        Kind::Derivative,
        r"\frac{x^n\sin\left(b\sqrt{x(x+c)}\right)}{\sqrt{x+c}} e^{-ax}",
        EC_DOM,
        &[A, B, C, N],
        family_e(|u, c, n| 2.0 * u.powi(2 * n as i32 + 1) / sqrt_principal(u * u + c), Trig::Sin, false),
        gd(),
        abcn_draws(),
        vec![reference(&[(A, 3.0), (B, 4.0), (C, 1.0), (N, 1.0)], "√π/(250e)", SP / (250.0 * e))],
        "Right side by Cauchy differentiation in a; at n = 1, c = 1 this is E.C4.",
    ));

    // ---- family F
    v.push(spec(
        "F.T6",
        Kind::Theorem,
        r"\frac{\sqrt{\sqrt{b^2 + c^2} - b}}{\sqrt{b^2 + c^2}} e^{-a\sqrt{b^2 + c^2}}",
        F_DOM,
        &[A, B, C],
        family_bf(|_, r, _, _| r.m / r.s, Trig::Sin),
        xd(),
        abc_draws(),
        vec![ex(&[(A, 2.0), (B, 3.0), (C, 4.0)], "√π/(5e¹⁰)", SP / (5.0 * E.powi(10)))],
        "√(√(x²+a²) − a) is evaluated as x/√(√(x²+a²) + a), analytic off the axis.",
    ));
    v.push(spec(
        "F.P",
        Kind::Pythagorean,
        r"\sin(2\alpha \beta x) e^{-(\alpha^2 - \beta^2)\sqrt{x^2 + \alpha^2}}",
        "Re α > 0, Re(α²) > Re(β²)",
        &[Alpha, Beta],
        pythagorean(|_, r, _, _| r.m / r.s, Trig::Sin),
        Box::new(pythagorean_domain),
        vec![(Alpha, Draw::range(0.5, 3.0)), (Beta, Draw::range(0.3, 3.0))],
        vec![ex(&[(Alpha, 2.0), (Beta, 1.0)], "√π/(5e¹⁰)", SP / (5.0 * E.powi(10)))],
        "Theorem F at (α, α² − β², 2αβ).",
    ));
    let f_rows: [(&'static str, &'static str, AmpBF, Trig, &'static str, f64, &'static str); 6] = [
        ("F.C1", r"\sqrt{\sqrt{x^2 + a^2} - a}\,  \sin(c x) e^{-b\sqrt{x^2 + a^2}}", |_, r, _, _| r.m, Trig::Sin, "41√π/(250e⁵)", 41.0 * SP / (250.0 * e5), "Equals −∂/∂b of Theorem F."),
        ("F.C2", r"\sqrt{\sqrt{x^2 + a^2} - a} \sqrt{x^2 + a^2}  \sin(c x)", |_, r, _, _| r.m * r.s, Trig::Sin, "1363√π/(12500e⁵)", 1363.0 * SP / (12500.0 * e5), "Equals ∂²/∂b² of Theorem F."),
        ("F.C3", r"\frac{x\sqrt{\sqrt{x^2 + a^2} - a}}{\sqrt{x^2 + a^2}}  \cos(c x)", |z, r, _, _| z * r.m / r.s, Trig::Cos, "−19√π/(125e⁵)", -19.0 * SP / (125.0 * e5), "Equals ∂/∂c of Theorem F."),
        ("F.C4", r"\frac{x^2\sqrt{\sqrt{x^2 + a^2} - a}}{\sqrt{x^2 + a^2}}  \sin(c x)", |z, r, _, _| z * z * r.m / r.s, Trig::Sin, "−1137√π/(12500e⁵)", -1137.0 * SP / (12500.0 * e5), "Equals −∂²/∂c² of Theorem F."),
        ("F.C5", r"\left((2ab + 1) \sqrt{x^2+a^2} + 2a\right) \sin(cx)", f_c5, Trig::Sin, "2√π/e⁵", 2.0 * SP / e5, "Equals −2∂/∂a of Theorem F."),
        ("F.C6", r"9 a^2 + 4 a^3 b + 4 a^4 b^2 - 3 x^2", f_c6, Trig::Sin, "20√π/e⁵", 20.0 * SP / e5, "Equals 4∂²/∂a² of Theorem F."),
    ];
    for (id, anchor, amp, trig, expr, value, notes) in f_rows {
        v.push(spec(id, Kind::Derivative, anchor, F_DOM, &[A, B, C], family_bf(amp, trig), xd(), abc_draws(), vec![ex(&p134, expr, value)], notes));
    }
    v
}
