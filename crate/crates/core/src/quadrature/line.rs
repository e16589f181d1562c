use super::{integrate_semiinf, Envelope, Integrand, QuadResult, Tolerance};
use crate::complexmath::Cx;

/// `∫_{−∞}^{∞} A(z) e^{iωz} dz` along the horizontal line `Im z = shift`.
///
/// Moving the line into the half-plane where `e^{iωz}` decays trades an
/// integral whose value is exponentially small against its integrand for
/// one without that cancellation. `A` must be analytic between the real
/// axis and the line and decay on both ends of it.
pub fn integrate_line(
    amp: impl Fn(Cx) -> Cx + Send + Sync,
    omega: Cx,
    shift: f64,
    decay_scale: f64,
    envelope: Envelope,
    tol: impl Into<Tolerance>,
) -> QuadResult {
    let i = Cx::new(0.0, 1.0);
    // A vanished amplitude must not meet an overflowed exponential.
    let term = move |z: Cx| {
        let a = amp(z);
        if a == Cx::new(0.0, 0.0) {
            a
        } else {
            a * (i * omega * z).exp()
        }
    };
    let g = move |x: f64| term(Cx::new(x, shift)) + term(Cx::new(-x, shift));
    let mut f = Integrand::new(g).with_decay_scale(decay_scale).with_envelope(envelope);
    if omega.im == 0.0 && omega.re > 0.0 {
        let w = omega.re;
        f = f.with_phase(move |x| w * x);
    }
    integrate_semiinf(&f, tol)
}
