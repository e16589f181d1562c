//! nth derivatives of analytic functions by the Cauchy integral formula on a
//! circle, discretised with the trapezoid rule.

use crate::complexmath::Cx;
use std::f64::consts::PI;
use thiserror::Error;

/// Largest number of nodes on the circle.
pub const MAX_POINTS: usize = 4096;
const AGREEMENT: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivative {
    pub value: Cx,
    /// Disagreement between the last two node counts.
    pub err: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum DerivError {
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("function not finite on the circle at {0}")]
    NonFinite(Cx),
    #[error("no agreement after {MAX_POINTS} nodes (best {best}, spread {err:e}); singularity inside the circle?")]
    NoConvergence { best: Cx, err: f64 },
}

/// Parameters of one derivative evaluation.
#[derive(Debug, Clone, Copy)]
pub struct DerivRequest {
    pub center: Cx,
    pub order: usize,
    /// Must be below the distance to the nearest singularity.
    pub radius: f64,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `f^{(n)}(center)`; node count doubles until successive estimates agree.
pub fn nth_derivative(f: impl Fn(Cx) -> Cx, req: DerivRequest) -> Result<Derivative, DerivError> {
    let DerivRequest { center, order: n, radius: r } = req;
    if !(r > 0.0 && r.is_finite()) {
        return Err(DerivError::BadRadius(r));
    }
    let nfact = factorial(n);
    let mut m = (2 * (n + 1)).next_power_of_two().max(16);
    // Σ f(c + r e^{iθ}) e^{−inθ} over the current nodes.
    let mut sum = Cx::new(0.0, 0.0);
    let mut max_abs: f64 = 0.0;
    let add_nodes = |m: usize, step: usize, offset: usize, sum: &mut Cx, max_abs: &mut f64| {
        for k in (offset..m).step_by(step) {
            let theta = 2.0 * PI * k as f64 / m as f64;
            let w = Cx::from_polar(1.0, theta);
            let z = center + w * r;
            let v = f(z);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(DerivError::NonFinite(z));
            }
            *max_abs = max_abs.max(v.norm());
            *sum += v * Cx::from_polar(1.0, -(n as f64) * theta);
        }
        Ok(())
    };
    add_nodes(m, 1, 0, &mut sum, &mut max_abs)?;
    let scale = nfact / r.powi(n as i32);
    let mut prev = sum * scale / m as f64;
    loop {
        let m2 = 2 * m;
        add_nodes(m2, 2, 1, &mut sum, &mut max_abs)?;
        let cur = sum * scale / m2 as f64;
        let diff = (cur - prev).norm();
        let floor = 100.0 * f64::EPSILON * scale * max_abs;
        if diff <= AGREEMENT * cur.norm() + floor {
            return Ok(Derivative { value: cur, err: diff.max(f64::EPSILON * cur.norm()), points: m2 });
        }
        if m2 >= MAX_POINTS {
            return Err(DerivError::NoConvergence { best: cur, err: diff });
        }
        m = m2;
        prev = cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(f: impl Fn(Cx) -> Cx, c: f64, n: usize, r: f64) -> Cx {
        nth_derivative(f, DerivRequest { center: Cx::new(c, 0.0), order: n, radius: r }).unwrap().value
    }

    #[test]
    fn cubic_second_derivative() {
        assert!((d(|z| z * z * z, 2.0, 2, 0.5) - 12.0).norm() < 1e-12);
    }

    #[test]
    fn exponential_seventh_derivative() {
        assert!((d(|z| z.exp(), 0.0, 7, 4.0) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn order_zero_is_the_value() {
        let f = |z: Cx| (z * 0.7).sin() / (z + 3.0);
        let c = Cx::new(0.4, 0.2);
        let v = nth_derivative(f, DerivRequest { center: c, order: 0, radius: 0.5 }).unwrap();
        assert!((v.value - f(c)).norm() < 1e-13);
    }

    #[test]
    fn singularity_inside_is_reported() {
        let r = nth_derivative(|z| z.sqrt(), DerivRequest { center: Cx::new(0.1, 0.0), order: 1, radius: 0.5 });
        assert!(matches!(r, Err(DerivError::NoConvergence { .. })));
    }

    #[test]
    fn bad_radius() {
        let r = nth_derivative(|z| z, DerivRequest { center: Cx::new(0.0, 0.0), order: 1, radius: 0.0 });
        assert!(matches!(r, Err(DerivError::BadRadius(_))));
    }
}
