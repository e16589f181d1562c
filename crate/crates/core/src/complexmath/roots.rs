use super::Cx;

/// Principal square root: branch cut on the negative real axis, `Re ≥ 0`.
///
/// A negative real input with a signed zero imaginary part always maps to
/// the upper imaginary axis, so `sqrt_principal(-1) = i`.
pub fn sqrt_principal(z: Cx) -> Cx {
    let z = if z.im == 0.0 { Cx::new(z.re, 0.0) } else { z };
    let r = z.sqrt();
    debug_assert!(r.re >= 0.0 || r.re.is_nan(), "principal branch violated for {z}");
    r
}

/// `√(x² + a²)` on the principal branch.
pub fn pyth_root(x: f64, a: Cx) -> Cx {
    sqrt_principal(Cx::new(x * x, 0.0) + a * a)
}
