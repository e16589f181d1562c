//! Family G: the Glasser, Widder, Stieltjes, inverse-Laplace and Mellin
//! identities with their corollaries.

use super::{rhs_for, DomainFn, Example, IdentitySpec, Kind, LhsFn, Source};
use crate::complexmath::{cerfcx, czeta, Cx};
use crate::lhs::{linear_oscillatory, pole_shift, shifted_fourier, Roots, Trig};
use crate::params::{real_params, Param, ParamAssignment, ParamsExt};
use crate::quadrature::{integrate_fn, integrate_line, integrate_semiinf, Envelope, Integrand, QuadResult, Tolerance};
use crate::registry::sample::Draw;
use crate::transforms::{apply, TransformKind};
use std::f64::consts::{E, FRAC_1_SQRT_2, PI};

use Param::{Lambda, Mu, A, B, N, Z};

const SQRT_HALF_PI: f64 = 1.253_314_137_315_500_3;
const LNLN4: f64 = 0.044_835_790_398_136_475;

fn nan() -> Cx {
    Cx::new(f64::NAN, f64::NAN)
}

fn i() -> Cx {
    Cx::new(0.0, 1.0)
}

fn real_of(p: &ParamAssignment, k: Param) -> Result<f64, super::RegistryError> {
    Ok(p.cx(k)?.re)
}

// ------------------------------------------------------------- domains

/// Every listed parameter real and positive, with optional extra bounds.
fn positive_reals(p: &ParamAssignment, keys: &[Param]) -> Result<(), String> {
    for k in keys {
        let v = p[k];
        if v.im != 0.0 {
            return Err(format!("{k} must be real here"));
        }
        if v.re <= 0.0 {
            return Err(format!("{k} > 0 required"));
        }
    }
    Ok(())
}

fn order_in(p: &ParamAssignment, lo: usize, hi: usize) -> Result<(), String> {
    match p.order() {
        Ok(n) if (lo..=hi).contains(&n) => Ok(()),
        Ok(n) => Err(format!("n = {n} outside {lo}..={hi}")),
        Err(e) => Err(e.to_string()),
    }
}

fn reals(keys: &'static [Param]) -> DomainFn {
    Box::new(move |p| positive_reals(p, keys))
}

/// Where the Gamma-integral closed form or its continuation has a pole
/// (or a removable zero) the record is not sampled.
const GAMMA_POLES: [f64; 3] = [-0.5, -1.0, -1.5];

fn gamma_integral_domain(p: &ParamAssignment) -> Result<(), String> {
    let (a, mu) = (p[&A], p[&Mu]);
    if a.re <= 0.0 {
        return Err("Re a > 0 required".into());
    }
    if !(mu.re > -2.0 && mu.re < 0.0) {
        return Err("Re μ in (−2, 0) required".into());
    }
    let rational = |x: f64| (x * 64.0).fract() == 0.0;
    if !rational(mu.re) || !rational(mu.im) {
        return Err("μ must have rational parts with denominator dividing 64".into());
    }
    if GAMMA_POLES.iter().any(|&q| (mu - q).norm() < 0.2) {
        return Err("μ too close to −½, −1 or −3/2".into());
    }
    Ok(())
}

// ------------------------------------------------------------ left sides

fn mapped(f: impl Fn(f64) -> Cx + Send + Sync, scale: f64, tol: Tolerance) -> QuadResult {
    integrate_semiinf(&Integrand::new(f).with_decay_scale(scale), tol)
}

fn p_over_s(x: f64, a: f64) -> (f64, f64) {
    let s = x.hypot(a);
    ((s + a).sqrt(), s)
}

fn glasser_re() -> LhsFn {
    Box::new(|p, tol| {
        let (a, l) = (real_of(p, A)?, p.cx(Lambda)?);
        let f = Integrand::real(move |x| a / ((x * x + a * a) * (x * x + l.re * l.re).sqrt())).with_decay_scale(a.max(l.re));
        Ok(apply(TransformKind::Glasser, &f, l, tol)?)
    })
}

fn widder_im() -> LhsFn {
    Box::new(|p, tol| {
        let (a, l) = (real_of(p, A)?, p.cx(Lambda)?);
        let f = Integrand::real(move |x| -x / (x * x + a * a)).with_decay_scale(a.max(l.re));
        Ok(apply(TransformKind::Widder, &f, l, tol)?)
    })
}

fn sqrt_a(inverse: bool) -> LhsFn {
    Box::new(move |p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let f = move |x: f64| {
            let (pp, s) = p_over_s(x, a);
            let v = pp / (x * x + b * b);
            Cx::new(if inverse { v / s } else { v }, 0.0)
        };
        Ok(mapped(f, a.max(b), tol))
    })
}

/// Twice the integral is the full line of `ln(−iu)e^{iau}/(u² + b²)`,
/// lifted toward the pole at `ib`.
fn log_exp() -> LhsFn {
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let amp = move |u: Cx| (-i() * u).ln() / (u * u + b * b);
        let y = pole_shift(b, a, 1.0);
        Ok(integrate_line(amp, Cx::new(a, 0.0), y, 1.0 / a, Envelope::Algebraic, tol.scaled(2.0)).scale(Cx::new(0.5, 0.0)))
    })
}

/// `Re(e^{−ix}/ζ(b + ix))/(x² + a²)` on `[0, X]`, then the two conjugate
/// halves rotated onto vertical rays where `e^{∓ix}` decays.
fn zeta() -> LhsFn {
    const X: f64 = 10.0;
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let g = move |w: Cx| czeta(b + w).map_or_else(|_| nan(), |z| (-w).exp() / z);
        let h = move |z: Cx| 1.0 / (z * z + a * a);
        let t3 = tol.scaled(1.0 / 3.0);
        let head = integrate_fn(move |x| 0.5 * (g(i() * x) + g(-i() * x)) * h(Cx::new(x, 0.0)), 0.0, X, t3);
        let down = move |t: f64| g(Cx::new(t, X)) * h(Cx::new(X, -t));
        let up = move |t: f64| g(Cx::new(t, -X)) * h(Cx::new(X, t));
        let env = Envelope::Exponential { rate: 1.0 };
        let lo = integrate_semiinf(&Integrand::new(down).with_decay_scale(1.0).with_envelope(env), t3);
        let hi = integrate_semiinf(&Integrand::new(up).with_decay_scale(1.0).with_envelope(env), t3);
        let tails = lo.combine_scaled(Cx::new(0.0, -0.5), &hi, Cx::new(0.0, 0.5), t3);
        Ok(head.combine(&tails, tol))
    })
}

/// `∫ amp(x)·sin(bx)/x`, with the removable point at 0 filled in.
fn sine_over_x(amp: fn(f64, f64) -> f64) -> LhsFn {
    Box::new(move |p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let f = move |x: f64| {
            let s = if x == 0.0 { b } else { (b * x).sin() / x };
            Cx::new(amp(x, a) * s, 0.0)
        };
        Ok(linear_oscillatory(f, Cx::new(b, 0.0), 0.0, Envelope::Algebraic, a.max(1.0 / b), tol))
    })
}

fn stieltjes() -> LhsFn {
    Box::new(|p, tol| {
        let (a, l, n) = (real_of(p, A)?, real_of(p, Lambda)?, p.order()?);
        let rot = i().powi(n as i32);
        let f = move |x: f64| {
            let (pp, s) = p_over_s(x, a);
            let k = rot / Cx::new(x, l).powi(n as i32 + 1);
            Cx::new(k.im * pp * FRAC_1_SQRT_2 / s, 0.0)
        };
        Ok(mapped(f, a.max(l), tol))
    })
}

fn lnln(atan_form: bool) -> LhsFn {
    Box::new(move |p, tol| {
        let (a, l, n) = (real_of(p, A)?, real_of(p, Lambda)?, p.order()?);
        let rot = i().powi(n as i32);
        let f = move |x: f64| {
            let k = rot / Cx::new(x, l).powi(n as i32 + 1);
            let ln2 = (x * x + a * a).ln();
            let at = (x / a).atan();
            let v = if atan_form { k.re * (2.0 * at / ln2).atan() } else { k.im * (0.25 * ln2 * ln2 + at * at).ln() };
            Cx::new(v, 0.0)
        };
        Ok(mapped(f, a.max(l), tol))
    })
}

fn inv_lap_2() -> LhsFn {
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let amp = move |z: Cx| -2.0 * a * z * z / (a * a + z * z).powi(2);
        let y = a - (2.0 / b).min(0.5 * a);
        Ok(shifted_fourier(amp, Cx::new(b, 0.0), Trig::Cos, y, 1.0 / b, Envelope::Algebraic, tol))
    })
}

fn cos_deriv() -> LhsFn {
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let ac = Cx::new(a, 0.0);
        let amp = move |z: Cx| {
            let r = Roots::at(z, ac);
            z * z / (r.p * r.s)
        };
        let y = a - (1.0 / b).min(0.5 * a);
        Ok(shifted_fourier(amp, Cx::new(b, 0.0), Trig::Cos, y, 1.0 / b, Envelope::Algebraic, tol))
    })
}

/// `∫ ℒ{e^{−at}√(t+b)}(x)·ℱ_s{−t/(t²+b²)}(x) dx`, the Laplace transform
/// computed by a nested quadrature at every outer node.
fn parseval_goldstein() -> LhsFn {
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let inner_tol = Tolerance::new(1e-300, (0.01 * tol.rel).max(1e-15));
        let f = move |x: f64| {
            let s = x + a;
            let g = Integrand::real(move |t| (-s * t).exp() * (t + b).sqrt()).with_decay_scale(1.0 / s);
            integrate_semiinf(&g, inner_tol).value * (-SQRT_HALF_PI * (-b * x).exp())
        };
        Ok(mapped(f, 1.0 / b, tol))
    })
}

fn erfc() -> LhsFn {
    Box::new(|p, tol| {
        let (a, b) = (real_of(p, A)?, real_of(p, B)?);
        let f = move |x: f64| {
            let y = (b * (a + x)).sqrt();
            let e = (-b * x).exp();
            let w = cerfcx(Cx::new(y, 0.0)).map_or(f64::NAN, |v| v.re);
            Cx::new((2.0 * y * e + PI.sqrt() * e * w) / (x + a).powf(1.5), 0.0)
        };
        Ok(mapped(f, a.min(1.0 / b), tol))
    })
}

fn mellin_of(f: fn(f64, Cx) -> f64, par: Param, point: fn(&ParamAssignment) -> Cx, scale: fn(Cx) -> f64) -> LhsFn {
    Box::new(move |p, tol| {
        let k = p.cx(par)?;
        let g = Integrand::real(move |x| f(x, k)).with_decay_scale(scale(k));
        Ok(apply(TransformKind::Mellin, &g, point(p), tol)?)
    })
}

// Coefficients of √(√(1+ε²)+ε) = Σ c_k ε^k; then √x·P/S = Σ φ_k (a/x)^k
// with φ_k = 2(k+1)c_{k+1}.
const GI_TERMS: usize = 50;
const GI_HEAD: usize = 6;

fn gi_coefficients() -> [f64; GI_TERMS] {
    let mut c = [0.0; GI_TERMS + 1];
    c[0] = 1.0;
    c[1] = 0.5;
    for k in 0..GI_TERMS - 1 {
        let kf = k as f64;
        c[k + 2] = (0.25 - kf * kf) * c[k] / ((kf + 1.0) * (kf + 2.0));
    }
    let mut phi = [0.0; GI_TERMS];
    for (k, v) in phi.iter_mut().enumerate() {
        *v = 2.0 * (k as f64 + 1.0) * c[k + 1];
    }
    phi
}

/// `∫₀^∞ P/S · x^{−μ−1} dx`, continued past `Re μ = −½` by subtracting the
/// first terms of the large-`x` expansion of `P/S` and integrating them
/// in closed form.
fn gamma_integral() -> LhsFn {
    Box::new(|p, tol| {
        let (a, mu) = (p.cx(A)?, p.cx(Mu)?);
        let phi = gi_coefficients();
        let x0 = (4.0 * a.norm()).max(1.0);
        let t3 = tol.scaled(1.0 / 3.0);
        let near = move |t: f64| {
            let x = x0 * (-t).exp();
            let r = Roots::at(Cx::new(x, 0.0), a);
            (mu * t).exp() * r.p / r.s
        };
        let q = -mu - 0.5;
        let far = move |t: f64| {
            let e = a / (x0 * t.exp());
            let mut pw = e.powi(GI_HEAD as i32);
            let mut sum = Cx::new(0.0, 0.0);
            for &f in &phi[GI_HEAD..] {
                sum += f * pw;
                pw *= e;
            }
            (q * t).exp() * sum
        };
        // Each piece is integrated unscaled, so its absolute target shrinks
        // by the factor applied afterwards.
        let (s_lo, s_hi) = (Cx::new(x0, 0.0).powc(-mu), Cx::new(x0, 0.0).powc(q));
        let within = |s: Cx| Tolerance { abs: t3.abs / s.norm().max(1e-300), rel: t3.rel };
        let lo = mapped(near, 1.0 / (-mu.re).max(0.05), within(s_lo)).scale(s_lo);
        let hi = mapped(far, 0.25, within(s_hi)).scale(s_hi);
        let head: Cx = (0..GI_HEAD).map(|k| phi[k] * a.powi(k as i32) * Cx::new(x0, 0.0).powc(q - k as f64) / (mu + 0.5 + k as f64)).sum();
        let sum = lo.combine(&hi, tol).shift(head);
        if !(lo.converged && hi.converged) {
            return Ok(sum);
        }
        Ok(QuadResult::finish(sum.value, sum.err_abs, sum.n_evals, tol))
    })
}

// --------------------------------------------------------------- records

struct G {
    id: &'static str,
    kind: Kind,
    anchor: &'static str,
    domain_text: &'static str,
    params: &'static [Param],
    monotone: bool,
    notes: &'static str,
}

fn build(g: G, lhs: LhsFn, domain: DomainFn, draws: Vec<(Param, Draw)>, examples: Vec<Example>) -> IdentitySpec {
    IdentitySpec {
        id: g.id,
        family: 'G',
        kind: g.kind,
        anchor: g.anchor,
        domain_text: g.domain_text,
        params: g.params.to_vec(),
        examples,
        notes: g.notes,
        monotone: g.monotone,
        rhs: rhs_for(g.id),
        lhs,
        domain,
        draws,
    }
}

fn ex(p: &[(Param, f64)], expr: &'static str, value: f64, source: Source) -> Example {
    Example::new(real_params(p), expr, value, source)
}

fn d(lo: f64, hi: f64) -> Draw {
    Draw::range(lo, hi)
}

pub(super) fn specs() -> Vec<IdentitySpec> {
    use Source::{Exact, Oracle, Reference};
    let e3 = E.powi(3);
    let ab_real = || vec![(A, d(0.3, 6.0)), (B, d(0.3, 6.0))];
    let mut v = Vec::new();

    v.push(build(
        G { id: "G.GlasserRe", kind: Kind::Transform, anchor: r"\frac{\pi g(\lambda)}{2\lambda}", domain_text: "Re λ > 0", params: &[A, Lambda], monotone: true,
            notes: "Theorem on 𝒢 with g(x) = 1/(x + a), so Re g(ix) = a/(x² + a²)." },
        glasser_re(),
        reals(&[A, Lambda]),
        vec![(A, Draw::real()), (Lambda, Draw::real())],
        vec![ex(&[(A, 1.0), (Lambda, 2.0)], "π/12", PI / 12.0, Reference)],
    ));
    v.push(build(
        G { id: "G.SqrtA", kind: Kind::Corollary, anchor: r"\frac{\pi}{b} \sqrt{\frac{a+b}{2}}", domain_text: "Re a ≥ 0, Re b > 0", params: &[A, B], monotone: true,
            notes: "Integrand decays like x^{−3/2}; the tail is mapped to a finite interval." },
        sqrt_a(false),
        reals(&[A, B]),
        vec![(A, Draw::real()), (B, Draw::real())],
        vec![ex(&[(A, 1.3), (B, 0.7)], "(π/0.7)√1", 4.487_989_505_128_276, Oracle)],
    ));
    v.push(build(
        G { id: "G.InvSqrtA", kind: Kind::Corollary, anchor: r"\frac{\pi}{b\sqrt{2(a+b)}}", domain_text: "Re a ≥ 0, Re b > 0", params: &[A, B], monotone: true,
            notes: "g(x) = 1/√(x + a)." },
        sqrt_a(true),
        reals(&[A, B]),
        vec![(A, Draw::real()), (B, Draw::real())],
        vec![ex(&[(A, 1.3), (B, 0.7)], "π/(0.7·√4)", 2.243_994_752_564_138_2, Oracle)],
    ));
    v.push(build(
        G { id: "G.LogExp", kind: Kind::Corollary, anchor: r"\frac{\pi}{2b} e^{-ab} \ln{b}", domain_text: "Re a ≥ 0, Re b > 0", params: &[A, B], monotone: false,
            notes: "The printed g(x) = ln x·e^{−bx} must read ln x·e^{−ax} for the stated right side." },
        log_exp(),
        reals(&[A, B]),
        vec![(A, d(0.3, 5.0)), (B, d(0.3, 5.0))],
        vec![ex(&[(A, 1.0), (B, 2.0)], "(π/4)e^{−2} ln 2", 0.073_676_057_575_836_52, Reference)],
    ));
    v.push(build(
        G { id: "G.Zeta", kind: Kind::Corollary, anchor: r"\frac{\pie^{-a}}{2a\zeta(a + b)}", domain_text: "Re a > 0, Re b ≥ 1", params: &[A, B], monotone: false,
            notes: "Re b = 1 exactly is excluded from sampling. Past x = 10 the two conjugate halves run along vertical rays." },
        zeta(),
        Box::new(|p| {
            positive_reals(p, &[A, B])?;
            if p[&B].re <= 1.05 {
                return Err("b > 1 required away from the pole of ζ".into());
            }
            Ok(())
        }),
        vec![(A, d(0.3, 6.0)), (B, d(1.1, 6.0))],
        vec![ex(&[(A, 1.0), (B, 2.0)], "πe^{−1}/(2ζ(3))", 0.480_729_051_492_115, Reference)],
    ));
    v.push(build(
        G { id: "G.InvLap1", kind: Kind::Corollary, anchor: r"\frac{\pi}{2}\mathcal{L}^{-1}\left\{\frac{g(s)}{s}\right\}(b)", domain_text: "Re b > 0", params: &[A, B], monotone: false,
            notes: "g(s) = 1/(s + a); the right side is a numerical Talbot inversion." },
        sine_over_x(|x, a| a / (x * x + a * a)),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "(π/2)(1 − e^{−2})", 1.358_212_161_001_078_5, Reference)],
    ));
    v.push(build(
        G { id: "G.ErfSqrt", kind: Kind::Corollary, anchor: r"\sqrt{\frac{\pi}{2b}} e^{-ab} + \sqrt{\frac{a}{2}} \pi \mathrm{erf}\left(\sqrt{ab}\right)", domain_text: "Re a, Re b > 0", params: &[A, B], monotone: false,
            notes: "Integrand decays only like x^{−1/2}; lobe sums are extrapolated." },
        sine_over_x(|x, a| (x.hypot(a) + a).sqrt()),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "√(π/4)e^{−2} + (π/√2)erf √2", 2.240_303_067_973_827_6, Reference)],
    ));
    v.push(build(
        G { id: "G.ErfInvSqrt", kind: Kind::Corollary, anchor: r"\frac{\pi}{\sqrt{2a}} \mathrm{erf}\left(\sqrt{ab}\right)", domain_text: "Re a > 0, Re b ≥ 0", params: &[A, B], monotone: false,
            notes: "Bounded at the origin, so no substitution is needed there." },
        sine_over_x(|x, a| {
            let s = x.hypot(a);
            (s + a).sqrt() / s
        }),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "(π/√2)erf √2", 2.120_365_296_005_766, Reference)],
    ));
    v.push(build(
        G { id: "G.WidderIm", kind: Kind::Transform, anchor: r"-\frac{\pi g(\lambda)}{2}", domain_text: "Re λ > 0", params: &[A, Lambda], monotone: true,
            notes: "Theorem on 𝒫 with g(x) = 1/(x + a), so Im g(ix) = −x/(x² + a²)." },
        widder_im(),
        reals(&[A, Lambda]),
        vec![(A, Draw::real()), (Lambda, Draw::real())],
        vec![ex(&[(A, 1.0), (Lambda, 2.0)], "−π/6", -PI / 6.0, Reference)],
    ));
    v.push(build(
        G { id: "G.Stieltjes_n", kind: Kind::Transform, anchor: r"\frac{(-1)^{n+1} \pi}{2n!} g^{(n)}(\lambda)", domain_text: "Re λ > 0", params: &[A, Lambda, N], monotone: true,
            notes: "g(x) = 1/√(x + a), Re g(ix) = P/(√2·S). Only the + branch holds for every n." },
        stieltjes(),
        Box::new(|p| {
            positive_reals(p, &[A, Lambda])?;
            order_in(p, 0, 5)
        }),
        vec![(A, Draw::real()), (Lambda, Draw::real()), (N, Draw::Order { lo: 0, hi: 4 })],
        vec![ex(&[(A, 1.0), (Lambda, 2.0), (N, 2.0)], "−(3π/16)·3^{−5/2}", -0.037_787_486_754_879_539, Reference)],
    ));
    v.push(build(
        G { id: "G.LnLn", kind: Kind::Corollary, anchor: r"\frac{\partial^n}{\partial \lambda^n}\ln\ln(\lambda + a)", domain_text: "Re a, Re λ > 0", params: &[A, Lambda, N], monotone: true,
            notes: "Integrand uses ln(¼ln² + arctan²), twice the ½ln kernel. Sampled with a > 1 so that ln(x² + a²) stays positive." },
        lnln(false),
        Box::new(|p| {
            positive_reals(p, &[A, Lambda])?;
            if p[&A].re <= 1.0 {
                return Err("a > 1 required".into());
            }
            order_in(p, 0, 5)
        }),
        vec![(A, d(1.1, 5.0)), (Lambda, d(0.3, 5.0)), (N, Draw::Order { lo: 0, hi: 4 })],
        vec![
            ex(&[(A, 2.0), (Lambda, 1.0), (N, 4.0)], "(6ln³3 + 11ln²3 + 12ln3 + 6)π/(1944ln⁴3)", LNLN4, Exact),
            ex(&[(A, E - 1.0), (Lambda, 1.0), (N, 3.0)], "7π/(6e³)", 7.0 * PI / (6.0 * e3), Exact).printed(-1.0),
        ],
    ));
    v.push(build(
        G { id: "G.LnLnAtan", kind: Kind::Corollary, anchor: r"\arctan\left(\frac{2}{\ln\left(x^2 + a^2\right)} \arctan\frac{x}{a}\right)", domain_text: "Re a, Re λ > 0", params: &[A, Lambda, N], monotone: true,
            notes: "Converges only for n ≥ 1. The printed n = 3 example carries an extra factor ¼." },
        lnln(true),
        Box::new(|p| {
            positive_reals(p, &[A, Lambda])?;
            if p[&A].re <= 1.0 {
                return Err("a > 1 required".into());
            }
            order_in(p, 1, 5)
        }),
        vec![(A, d(1.1, 5.0)), (Lambda, d(0.3, 5.0)), (N, Draw::Order { lo: 1, hi: 4 })],
        vec![
            ex(&[(A, 2.0), (Lambda, 1.0), (N, 4.0)], "(6ln³3 + 11ln²3 + 12ln3 + 6)π/(3888ln⁴3)", LNLN4 / 2.0, Exact),
            ex(&[(A, E - 1.0), (Lambda, 1.0), (N, 3.0)], "7π/(48e³)", 7.0 * PI / (12.0 * e3), Exact).printed(0.25),
        ],
    ));
    v.push(build(
        G { id: "G.InvLap2", kind: Kind::Corollary, anchor: r"-\frac{\pi}{2}\mathcal{L}^{-1}\{sg(s)\}(b)", domain_text: "Re b > 0", params: &[A, B], monotone: false,
            notes: "g(s) = 1/(s + a)²; integrated on a line lifted toward the double pole at ia." },
        inv_lap_2(),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "(π/2)e^{−2}", 0.212_584_165_793_818_16, Reference)],
    ));
    v.push(build(
        G { id: "G.CosDeriv", kind: Kind::Corollary, anchor: r"-\frac{(2 a b+1)}{4 b^{\frac{3}{2}}} e^{-ab}\sqrt{2\pi}", domain_text: "Re a, Re b > 0", params: &[A, B], monotone: false,
            notes: "Amplitude grows like √x; summed by extrapolation on a lifted line." },
        cos_deriv(),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "−(5/(8√2))e^{−2}√(2π)", -0.149_922_214_960_076_8, Reference)],
    ));
    v.push(build(
        G { id: "G.ParsevalGoldstein", kind: Kind::Transform, anchor: r"-\sqrt{\frac{\pi}{2}} \int_0^\infty f(x) g(x) \, \mathrm{d}x", domain_text: "integrals absolutely convergent", params: &[A, B], monotone: true,
            notes: "f = e^{−at}√(t + b), g = 1/(t + b). Both sides are quadratures; the left one nested." },
        parseval_goldstein(),
        reals(&[A, B]),
        vec![(A, d(0.3, 5.0)), (B, d(0.3, 5.0))],
        vec![
            ex(&[(A, 1.0), (B, 1.0)], "−√(π/2)∫e^{−x}/√(x+1)", -0.949_851_887_569_686_6, Oracle),
            ex(&[(A, 2.0), (B, 0.5)], "−√(π/2)∫e^{−2x}/√(x+½)", -0.671_646_710_823_367_6, Oracle),
        ],
    ));
    v.push(build(
        G { id: "G.Erfc", kind: Kind::Corollary, anchor: r"2\sqrt{\frac{\pi}{a}} e^{ab} \mathrm{erfc}\left(\sqrt{ab}\right)", domain_text: "Re a > 0, Re b ≥ 0", params: &[A, B], monotone: true,
            notes: "e^{ab}erfc(√(b(a+x))) is evaluated as e^{−bx}·erfcx(√(b(a+x)))." },
        erfc(),
        reals(&[A, B]),
        ab_real(),
        vec![ex(&[(A, 1.0), (B, 2.0)], "2√π e²erfc √2", 1.191_812_157_651_73, Reference)],
    ));
    v.push(build(
        G { id: "G.MellinSine", kind: Kind::Transform, anchor: r"-\frac{1}{\Gamma(\mu)} \sqrt{\frac{\pi}{2}} \mathcal{M}\{g(x)\}(\mu)", domain_text: "Re μ > 0", params: &[B, Mu], monotone: true,
            notes: "g(x) = 1/(x + b), so ℱ_s{Im g(it)} = −√(π/2)e^{−bx}. Converges for 0 < Re μ < 1." },
        mellin_of(|x, b| -SQRT_HALF_PI * (-b.re * x).exp(), B, |p| 1.0 - p[&Mu], |b| 1.0 / b.re),
        Box::new(|p| {
            positive_reals(p, &[B])?;
            let m = p[&Mu];
            if !(m.re > 0.05 && m.re < 0.95) {
                return Err("0 < Re μ < 1 required".into());
            }
            Ok(())
        }),
        vec![(B, Draw::real()), (Mu, Draw::LogUniform { lo: 0.1, hi: 0.9, im: 0.5 })],
        vec![ex(&[(B, 2.0), (Mu, 0.3)], "−√(π/2)·2^{−0.7}π/(Γ(0.3)sin 0.3π)", -1.001_456_632_644_669_8, Reference)],
    ));
    v.push(build(
        G { id: "G.CosecMellin", kind: Kind::Transform, anchor: r"\frac{\cosec\left(\frac{\pi \mu}{2}\right)}{\Gamma(\mu)} \sqrt{\frac{\pi}{2}}", domain_text: "Re μ > 0", params: &[B, Mu], monotone: true,
            notes: "g(x) = 1/(x + b), Im g(ix) = −x/(x² + b²). Converges for 0 < Re μ < 2." },
        mellin_of(|x, b| -x / (x * x + b.re * b.re), B, |p| 1.0 - p[&Mu], |b| b.re),
        Box::new(|p| {
            positive_reals(p, &[B])?;
            let m = p[&Mu];
            if !(m.re > 0.05 && m.re < 1.9) {
                return Err("0 < Re μ < 2 required".into());
            }
            Ok(())
        }),
        vec![(B, Draw::real()), (Mu, Draw::LogUniform { lo: 0.1, hi: 1.8, im: 0.3 })],
        vec![ex(&[(B, 2.0), (Mu, 0.7)], "−(π/2)cosec(0.35π)·2^{−0.7}", -1.085_220_517_323_289_1, Reference)],
    ));
    v.push(build(
        G { id: "G.GammaIntegral", kind: Kind::Corollary, anchor: r"2^{\frac{1}{2}-2\mu} a^{-\frac{1}{2}-\mu} \Gamma(2\mu)", domain_text: "Re a > 0, Re μ ∈ ℚ⁻ ∖ {−½}, Im μ ∈ ℚ", params: &[A, Mu], monotone: true,
            notes: "Printed denominator uΓ(μ)² read as μΓ(μ)². For Re μ ≤ −½ the integral diverges and both sides are analytic continuations." },
        gamma_integral(),
        Box::new(gamma_integral_domain),
        vec![(A, Draw::complex(0.3)), (Mu, Draw::Rational { lo: -2.0, hi: 0.0, den: 8, im: 0.25 })],
        vec![
            ex(&[(A, 1.0), (Mu, -0.25)], "2^{1}Γ(−½)π/(¼Γ(−¼)²sin(π/8))", 9.689_861_229_908_367, Reference),
            ex(&[(A, 2.0), (Mu, -0.25)], "same at a = 2", 8.148_169_572_535_895, Reference),
            ex(&[(A, 1.0), (Mu, -0.75)], "−2²a^{1/4}Γ(−3/2)π/(−¾Γ(−¾)²sin(−3π/8))", -1.834_033_669_933_323, Reference),
            ex(&[(A, 2.0), (Mu, -0.75)], "same at a = 2", -2.181_045_889_439_26, Reference),
        ],
    ));
    v.push(build(
        G { id: "G.EulerReflection", kind: Kind::Remark, anchor: r"\frac{\pi}{\sin(\pi z)} = \int_0^\infty \frac{x^{z-1}}{1 + x}", domain_text: "0 < Re z < 1", params: &[Z], monotone: true,
            notes: "The remark's derivation drifts between z and a; only the end formula is verified." },
        mellin_of(|x, _| 1.0 / (1.0 + x), Z, |p| p[&Z], |_| 1.0),
        Box::new(|p| {
            let z = p[&Z];
            if !(z.re > 0.05 && z.re < 0.95) {
                return Err("0 < Re z < 1 required".into());
            }
            Ok(())
        }),
        vec![(Z, Draw::LogUniform { lo: 0.1, hi: 0.9, im: 0.5 })],
        [0.3, 0.5, 0.7]
            .iter()
            .map(|&z| ex(&[(Z, z)], "π/sin(πz)", PI / (PI * z).sin(), Reference))
            .chain(std::iter::once({
                let z = Cx::new(0.25, 0.1);
                Example::complex([(Z, z)].into_iter().collect(), "π/sin(πz)", PI / (PI * z).sin(), Reference)
            }))
            .collect(),
    ));
    v
}
