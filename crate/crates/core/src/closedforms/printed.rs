//! Derivative corollaries with explicitly printed right-hand sides,
//! transcribed term by term. They are cross-checked against numerical
//! derivatives of the base closed forms.
//!
//! A and E use `r = √(a²+b²)`, B and F use `r = √(b²+c²)`.

use super::{sqrt_r_minus, SQRT_HALF_PI};
use crate::complexmath::{sqrt_principal, Cx};
use std::f64::consts::PI;

fn ae(a: Cx, b: Cx) -> (Cx, Cx) {
    let r = sqrt_principal(a * a + b * b);
    (r, ((a - r) / 2.0).exp() * SQRT_HALF_PI)
}

fn bf(a: Cx, b: Cx, c: Cx) -> (Cx, Cx) {
    let r = sqrt_principal(b * b + c * c);
    (r, (-a * r).exp() * SQRT_HALF_PI)
}

/// `∫x² cos(bx√(x²+1)) e^{−ax²}`
pub fn a_c1(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    let (a2, b2) = (a * a, b * b);
    ((a2 - b2) + (a - b2) * r) * sqrt_r_minus(r, a, b) / (4.0 * b * r.powi(3)) * e
}

/// `∫x⁴ cos(bx√(x²+1)) e^{−ax²}`
pub fn a_c2(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    let (a2, b2) = (a * a, b * b);
    let (a3, a4, b4) = (a2 * a, a2 * a2, b2 * b2);
    let poly = 6.0 * a4 - 9.0 * a2 * b2 - 6.0 * a3 * b2 - 3.0 * b4 - 6.0 * a * b4 + a2 * b4 + b4 * b2
        + (6.0 * a3 - 12.0 * a * b2 - 6.0 * a2 * b2) * r;
    sqrt_r_minus(r, a, b).powi(3) / (8.0 * b.powi(3) * r.powi(5)) * poly * e
}

/// `∫x√(x²+1) sin(bx√(x²+1)) e^{−ax²}`
pub fn a_c4(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    (a * a + 2.0 * a + b * b + (a + 1.0) * r) * sqrt_r_minus(r, a, b) / (4.0 * r.powi(3)) * e
}

/// `∫x²(x²+1) cos(bx√(x²+1)) e^{−ax²}`
pub fn a_c5(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    let (a2, b2) = (a * a, b * b);
    let poly = 9.0 * a2 - 2.0 * a2 * a - 3.0 * b2 - 2.0 * a * b2 - a2 * b2 - b2 * b2
        + (4.0 * a2 - 6.0 * a - 2.0 * b2) * r;
    sqrt_principal(r + a) / (8.0 * r.powi(5)) * poly * e
}

/// `∫√x cos(b√(x(x+1))) e^{−ax}`
pub fn e_c1(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    ((a - 1.0) * r + 2.0 * a - a * a - b * b) * sqrt_principal(r + a) / (2.0 * r.powi(3)) * e
}

/// `∫x√(x+1) sin(b√(x(x+1))) e^{−ax}`
pub fn e_c2(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    let (a2, b2) = (a * a, b * b);
    let poly = 9.0 * a2 + 2.0 * a2 * a - 3.0 * b2 + 2.0 * a * b2 - a2 * b2 - b2 * b2
        + (6.0 * a + 4.0 * a2 - 2.0 * b2) * r;
    sqrt_r_minus(r, a, b) / (4.0 * r.powi(5)) * poly * e
}

/// `∫x sin(b√(x(x+1)))/√(x+1) e^{−ax}`
pub fn e_c4(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    ((a + 1.0) * r + 2.0 * a - a * a - b * b) * sqrt_r_minus(r, a, b) / (2.0 * r.powi(3)) * e
}

/// `∫x² sin(b√(x(x+1)))/√(x+1) e^{−ax}`
pub fn e_c5(a: Cx, b: Cx) -> Cx {
    let (r, e) = ae(a, b);
    let (a2, b2) = (a * a, b * b);
    let (a3, a4) = (a2 * a, a2 * a2);
    let poly = 9.0 * a2 - 2.0 * a3 + 2.0 * a4 - 3.0 * b2 - 2.0 * a * b2 + 3.0 * a2 * b2 + b2 * b2
        + (6.0 * a + 2.0 * a2 - 2.0 * a3 - 4.0 * b2 - 2.0 * a * b2) * r;
    sqrt_r_minus(r, a, b) / (4.0 * r.powi(5)) * poly * e
}

pub fn b_c1(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    ((2.0 * a * b - 1.0) * r + 2.0 * b) * sqrt_principal(r + b) / (2.0 * r.powi(3)) * e
}

pub fn b_c2(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let poly = 9.0 * b2 - 4.0 * a * b2 * b + 4.0 * a2 * b2 * b2 - 3.0 * c2 - 4.0 * a * b * c2
        + 4.0 * a2 * b2 * c2
        + (8.0 * a * b2 - 6.0 * b - 4.0 * a * c2) * r;
    sqrt_principal(r + b) / (4.0 * r.powi(5)) * poly * e
}

pub fn b_c3(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let t = (2.0 * a * b + 1.0) * r + 2.0 * (b + a * b * b + a * c * c);
    t * sqrt_r_minus(r, b, c) / (2.0 * r.powi(3)) * e
}

pub fn b_c4(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let poly = 9.0 * b2 - 4.0 * a * b2 * b - 3.0 * c2 - 4.0 * a * b * c2 - 4.0 * a2 * b2 * c2
        - 4.0 * a2 * c2 * c2
        + (8.0 * a * b2 - 6.0 * b - 4.0 * a * c2) * r;
    sqrt_principal(r + b) / (4.0 * r.powi(5)) * poly * e
}

pub fn b_c5(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    sqrt_principal(r + b) * (-a * r).exp() * (2.0 * PI).sqrt()
}

pub fn b_c6(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    2.0 * sqrt_principal(r + b) * r * (-a * r).exp() * (2.0 * PI).sqrt()
}

pub fn f_c1(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    sqrt_r_minus(r, b, c) * ((2.0 * a * b + 1.0) * r + 2.0 * b) / (2.0 * r.powi(3)) * e
}

pub fn f_c2(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let poly = 9.0 * b2 + 4.0 * a * b2 * b + 4.0 * a2 * b2 * b2 - 3.0 * c2 + 4.0 * a * b * c2
        + 4.0 * a2 * b2 * c2
        + (8.0 * a * b2 + 6.0 * b - 4.0 * a * c2) * r;
    sqrt_r_minus(r, b, c) / (4.0 * r.powi(5)) * poly * e
}

pub fn f_c3(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let c2 = c * c;
    sqrt_r_minus(r, b, c) * ((b - 2.0 * a * c2) * r + b * b - c2) / (2.0 * c * r.powi(3)) * e
}

pub fn f_c4(a: Cx, b: Cx, c: Cx) -> Cx {
    let (r, e) = bf(a, b, c);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let poly = 9.0 * b2 + 4.0 * a * b2 * b - 3.0 * c2 + 4.0 * a * b * c2 - 4.0 * a2 * b2 * c2
        - 4.0 * a2 * c2 * c2
        + (8.0 * a * b2 + 6.0 * b - 4.0 * a * c2) * r;
    sqrt_r_minus(r, b, c) / (4.0 * r.powi(5)) * poly * e
}

pub fn f_c5(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    sqrt_r_minus(r, b, c) * (-a * r).exp() * (2.0 * PI).sqrt()
}

pub fn f_c6(a: Cx, b: Cx, c: Cx) -> Cx {
    let r = sqrt_principal(b * b + c * c);
    2.0 * sqrt_r_minus(r, b, c) * r * (-a * r).exp() * (2.0 * PI).sqrt()
}
