//! Transform operators against textbook pairs.

use integral_identities::complexmath::{cerf, cgamma};
use integral_identities::quadrature::{Envelope, Integrand};
use integral_identities::transforms::{apply, inverse_laplace, TransformKind};
use integral_identities::Cx;
use std::f64::consts::PI;

fn c(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

#[test]
fn laplace_of_one() {
    let r = apply(TransformKind::Laplace, &Integrand::real(|_| 1.0), c(2.0), 1e-12).unwrap();
    assert!((r.value.re - 0.5).abs() < 1e-13, "{r:?}");
}

#[test]
fn laplace_rejects_left_half_plane() {
    assert!(apply(TransformKind::Laplace, &Integrand::real(|_| 1.0), c(-1.0), 1e-12).is_err());
}

#[test]
fn fourier_cosine_of_lorentzian() {
    for &a in &[0.5, 1.0, 3.0] {
        let f = Integrand::real(|x| 1.0 / (x * x + 1.0)).with_envelope(Envelope::Algebraic);
        let r = apply(TransformKind::FourierCos, &f, c(a), 1e-11).unwrap();
        let want = (-a).exp() * (PI / 2.0).sqrt();
        assert!((r.value.re - want).abs() < 1e-9, "a = {a}: {r:?} vs {want}");
    }
}

#[test]
fn mellin_of_erf_sqrt() {
    let mu = -0.25;
    let f = Integrand::new(|x: f64| if x > 1e6 { c(1.0) } else { cerf(c(x.sqrt())).unwrap() });
    let r = apply(TransformKind::Mellin, &f, c(mu), 1e-12).unwrap();
    let want = -cgamma(c(mu + 0.5)).unwrap() / (PI.sqrt() * mu);
    assert!((r.value - want).norm() < 1e-10 * want.norm(), "{r:?} vs {want}");
}

#[test]
fn stieltjes_order_two() {
    // ∫ e^{−x}/(x+1)² dx = 1 − e·E₁(1) = 0.4036526376768...
    let f = Integrand::real(|x| (-x).exp()).with_envelope(Envelope::Exponential { rate: 1.0 });
    let r = apply(TransformKind::StieltjesP(c(2.0)), &f, c(1.0), 1e-12).unwrap();
    assert!((r.value.re - 0.403_652_637_676_806_5).abs() < 1e-12, "{r:?}");
}

#[test]
fn glasser_of_gaussian() {
    // ∫ e^{−x²}/√(x²+1) dx = ½ e^{1/2} K₀(1/2)
    let f = Integrand::real(|x| (-x * x).exp()).with_envelope(Envelope::Gaussian { rate: 1.0 });
    let r = apply(TransformKind::Glasser, &f, c(1.0), 1e-12).unwrap();
    assert!((r.value.re - 0.762_054_692_886_955).abs() < 1e-12, "{r:?}");
}

#[test]
fn widder_consistency_for_inverse_sqrt() {
    // g(x) = 1/√(x+a): ∫ Re g(ix)/(x²+λ²) dx = π g(λ)/(2λ).
    let a = 1.3;
    for &lam in &[0.5, 1.0, 2.5] {
        let f = Integrand::new(move |x: f64| {
            let g = Cx::new(a, x).sqrt().inv();
            if x == 0.0 { c(0.0) } else { c(g.re / x) }
        });
        let r = apply(TransformKind::Widder, &f, c(lam), 1e-12).unwrap();
        let want = PI / ((lam + a).sqrt() * 2.0 * lam);
        assert!((r.value.re - want).abs() < 1e-10, "{lam}: {r:?} vs {want}");
    }
}

#[test]
fn cosine_transform_twice_is_identity_on_gaussian() {
    let outer_points = [0.0, 0.3, 0.7, 1.0, 1.4, 1.9, 2.2, 2.6, 3.1, 3.5];
    for &y in &outer_points {
        let inner = |x: f64| {
            let f = Integrand::real(|u| (-u * u / 2.0).exp()).with_envelope(Envelope::Gaussian { rate: 0.5 });
            let kind = TransformKind::FourierCos;
            if x == 0.0 {
                // Zero frequency: √(2/π)·√(π/2) = 1.
                return c(1.0);
            }
            apply(kind, &f, c(x), 1e-13).unwrap().value
        };
        let g = Integrand::new(inner).with_envelope(Envelope::Gaussian { rate: 0.5 }).with_decay_scale(1.5);
        let r = if y == 0.0 {
            // The transform is below e^{−70} past x = 12.
            integral_identities::quadrature::integrate_finite(&g, 0.0, 12.0, 1e-11).scale(c((2.0 / PI).sqrt()))
        } else {
            apply(TransformKind::FourierCos, &g, c(y), 1e-11).unwrap()
        };
        let want = (-y * y / 2.0).exp();
        assert!((r.value.re - want).abs() < 1e-8, "y = {y}: {r:?} vs {want}");
    }
}

#[test]
fn inverse_laplace_of_sqrt_shift_over_s() {
    let a: f64 = 0.8;
    for &b in &[0.5, 1.0, 2.0] {
        let v = inverse_laplace(|s| (s + a).sqrt() / s, b, 1e-10).unwrap();
        let want = (-a * b).exp() / (PI * b).sqrt() + a.sqrt() * cerf(c((a * b).sqrt())).unwrap().re;
        assert!((v.value.re - want).abs() < 1e-11, "b = {b}: {v:?} vs {want}");
    }
}

/// The Talbot contour samples F far left of the abscissa where a numerical
/// Laplace integral exists, so the round trip runs forward over the inverse:
/// ℒ{ℒ⁻¹F}(s) = F(s).
#[test]
fn laplace_round_trip() {
    let cases: [(fn(Cx) -> Cx, f64); 2] = [(|s| (s + 1.0).inv(), 1.0), (|s| ((s + 2.0) * (s + 2.0)).inv(), 2.0)];
    for (big_f, rate) in cases {
        let orig = move |t: f64| inverse_laplace(big_f, t, 1e-8).map(|v| v.value).unwrap_or(c(f64::NAN));
        for &s in &[0.5, 1.0, 2.0] {
            let f = Integrand::new(orig).with_envelope(Envelope::Exponential { rate }).with_decay_scale(1.0);
            let r = apply(TransformKind::Laplace, &f, c(s), 1e-10).unwrap();
            let want = big_f(c(s));
            assert!((r.value - want).norm() < 1e-6, "s = {s}: {r:?} vs {want}");
        }
    }
}
