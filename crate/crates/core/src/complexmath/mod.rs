//! Complex special functions used by the closed forms.
//!
//! Everything here is pure and works on [`Cx`].

mod erf;
mod gamma;
mod roots;
mod zeta;

pub use erf::{cerf, cerfc, cerfcx};
pub use gamma::{cgamma, clgamma};
pub use roots::{pyth_root, sqrt_principal};
pub use zeta::czeta;

use thiserror::Error;

/// Double-precision complex scalar.
pub type Cx = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

/// Real number lifted to [`Cx`].
#[inline]
pub fn re(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpecialFnError {
    #[error("pole at {0}")]
    Pole(Cx),
    #[error("argument {0} outside the supported domain")]
    Domain(Cx),
    #[error("overflow evaluating at {0}")]
    Overflow(Cx),
}

/// Returns `Some(z)` when both parts are finite.
pub fn checked(z: Cx) -> Option<Cx> {
    (z.re.is_finite() && z.im.is_finite()).then_some(z)
}

pub(crate) fn finite_or(z: Cx, err: SpecialFnError) -> Result<Cx, SpecialFnError> {
    checked(z).ok_or(err)
}
