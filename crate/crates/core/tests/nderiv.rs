//! Cauchy-circle derivatives against Richardson-extrapolated central
//! differences and against closed forms.

use integral_identities::closedforms::{base_value, derivative_radius, printed, rhs_thm_a, Base};
use integral_identities::nderiv::{nth_derivative, DerivRequest};
use integral_identities::params::{Param, ParamAssignment};
use integral_identities::Cx;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

/// Central difference of order `n` ≤ 3 with step `h`; all have an
/// expansion in even powers of `h`.
fn central(f: &dyn Fn(Cx) -> Cx, x: Cx, n: usize, h: f64) -> Cx {
    let at = |k: f64| f(x + k * h);
    match n {
        1 => (at(1.0) - at(-1.0)) / (2.0 * h),
        2 => (at(1.0) - 2.0 * at(0.0) + at(-1.0)) / (h * h),
        3 => (at(2.0) - 2.0 * at(1.0) + 2.0 * at(-1.0) - at(-2.0)) / (2.0 * h.powi(3)),
        _ => unreachable!(),
    }
}

/// Richardson table over `h0, h0/2, …`; returns the corner.
fn richardson(f: &dyn Fn(Cx) -> Cx, x: Cx, n: usize, h0: f64) -> Cx {
    const LEVELS: usize = 6;
    let mut rows: Vec<Vec<Cx>> = Vec::new();
    for k in 0..LEVELS {
        let mut row = vec![central(f, x, n, h0 / 2f64.powi(k as i32))];
        for j in 1..=k {
            let p = 4f64.powi(j as i32);
            let v = row[j - 1] + (row[j - 1] - rows[k - 1][j - 1]) / (p - 1.0);
            row.push(v);
        }
        rows.push(row);
    }
    rows[LEVELS - 1][LEVELS - 1]
}

#[test]
fn polynomial_and_exponential() {
    let d = nth_derivative(|z| z * z * z, DerivRequest { center: c(2.0), order: 2, radius: 1.0 }).unwrap();
    assert!((d.value - c(12.0)).norm() < 1e-12, "{d:?}");
    let d = nth_derivative(|z| z.exp(), DerivRequest { center: c(0.0), order: 7, radius: 1.0 }).unwrap();
    // Rounding on the circle is amplified by 7!/r⁷.
    assert!((d.value - c(1.0)).norm() < 1e-10, "{d:?}");
}

#[test]
fn theorem_a_in_a_gives_the_x_squared_corollary() {
    let d = nth_derivative(|a| rhs_thm_a(a, c(4.0)), DerivRequest { center: c(3.0), order: 1, radius: 1.0 }).unwrap();
    let printed = printed::a_c1(c(3.0), c(4.0));
    let exact = -9.0 * PI.sqrt() / (250.0 * 1f64.exp());
    assert!((-d.value - printed).norm() < 1e-13, "{:?} vs {printed}", d.value);
    assert!((printed.re - exact).abs() < 1e-15);
}

#[test]
fn cauchy_error_is_reported() {
    let d = nth_derivative(|z| (2.0 * z).sin(), DerivRequest { center: c(0.3), order: 3, radius: 0.5 }).unwrap();
    let want = -8.0 * (0.6f64).cos();
    assert!((d.value.re - want).abs() < 1e-11);
    assert!(d.err < 1e-9 && d.points >= 16);
}

fn point() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (0.6..4.0f64, 0.6..4.0f64, 0.6..2.0f64, -0.15..0.15f64)
}

fn family() -> impl Strategy<Value = (Base, Param)> {
    prop::sample::select(vec![
        (Base::A, Param::A),
        (Base::A, Param::B),
        (Base::E, Param::A),
        (Base::E, Param::B),
        (Base::B, Param::A),
        (Base::B, Param::B),
        (Base::B, Param::C),
        (Base::F, Param::A),
        (Base::F, Param::B),
        (Base::F, Param::C),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn agrees_with_richardson((base, wrt) in family(), (a, b, cc, tilt) in point(), n in 1usize..=3) {
        let mut ps = ParamAssignment::new();
        ps.insert(Param::A, Cx::new(a, tilt * a));
        ps.insert(Param::B, Cx::new(b, -tilt * b));
        ps.insert(Param::C, c(cc));
        let radius = derivative_radius(base, wrt, n, &ps).unwrap();
        prop_assume!(radius > 0.05);
        let center = ps[&wrt];
        let f = |t: Cx| {
            let mut q = ps.clone();
            q.insert(wrt, t);
            base_value(base, &q).unwrap()
        };
        let cauchy = nth_derivative(f, DerivRequest { center, order: n, radius }).unwrap().value;
        let oracle = richardson(&f, center, n, 0.5 * radius);
        let scale = cauchy.norm().max(f(center).norm());
        prop_assert!((cauchy - oracle).norm() <= 1e-7 * scale, "{base:?} ∂{wrt}^{n} at {ps:?}: {cauchy} vs {oracle}");
    }

    #[test]
    fn order_zero_and_linearity(x in -1.0..1.0f64, y in -1.0..1.0f64, alpha in -3.0..3.0f64, beta in -3.0..3.0f64, n in 0usize..=4) {
        let z = Cx::new(x, y);
        let req = DerivRequest { center: z, order: n, radius: 0.5 };
        let f = |w: Cx| (w * 1.3).exp();
        let g = |w: Cx| 1.0 / (w - 3.0);
        let fg = nth_derivative(|w| alpha * f(w) + beta * g(w), req).unwrap().value;
        let sep = alpha * nth_derivative(f, req).unwrap().value + beta * nth_derivative(g, req).unwrap().value;
        prop_assert!((fg - sep).norm() <= 1e-10 * (1.0 + sep.norm()));
        if n == 0 {
            let v = nth_derivative(f, req).unwrap().value;
            prop_assert!((v - f(z)).norm() <= 1e-13 * f(z).norm());
        }
    }
}
