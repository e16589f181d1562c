//! Quadrature engines: adaptive Gauss–Kronrod on finite intervals,
//! semi-infinite integrals (mapped or lobe-partitioned), straight complex
//! contours, and Wynn-epsilon series acceleration.

mod accel;
pub(crate) mod gk;
mod line;
mod semiinf;

pub use accel::{accelerate, Acceleration};
pub use line::integrate_line;
pub use semiinf::integrate_semiinf;

use crate::complexmath::Cx;
use std::sync::OnceLock;
use thiserror::Error;

/// Default cap on integrand evaluations per top-level call.
pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

/// Evaluation cap, overridable through `TA_NODE_BUDGET`.
pub fn node_budget() -> usize {
    static BUDGET: OnceLock<usize> = OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var("TA_NODE_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_NODE_BUDGET)
    })
}

/// Mixed absolute/relative accuracy request: the target for a value `v`
/// is `max(abs, rel·|v|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel }
    }

    pub fn target(&self, v: Cx) -> f64 {
        self.abs.max(self.rel * v.norm())
    }

    pub(crate) fn scaled(&self, k: f64) -> Self {
        Tolerance { abs: self.abs * k, rel: self.rel * k }
    }
}

impl From<f64> for Tolerance {
    /// Absolute for values up to one, relative beyond.
    fn from(tol: f64) -> Self {
        Tolerance { abs: tol, rel: tol }
    }
}

/// Why a quadrature call did not reach its target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, serde::Serialize)]
pub enum QuadFailure {
    #[error("evaluation budget exhausted")]
    Budget,
    #[error("integrand returned a non-finite value")]
    NonFinite,
    #[error("could not bracket a phase zero")]
    Bracketing,
    #[error("lobe series did not settle under extrapolation")]
    Acceleration,
    #[error("error estimate stuck at the rounding floor")]
    Roundoff,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Cx,
    pub err_abs: f64,
    pub n_evals: usize,
    pub converged: bool,
    pub failure: Option<QuadFailure>,
}

impl QuadResult {
    pub(crate) fn finish(value: Cx, err_abs: f64, n_evals: usize, tol: Tolerance) -> Self {
        let converged = err_abs <= tol.target(value);
        QuadResult {
            value,
            err_abs,
            n_evals,
            converged,
            failure: (!converged).then_some(QuadFailure::Budget),
        }
    }

    pub(crate) fn failed(value: Cx, err_abs: f64, n_evals: usize, why: QuadFailure) -> Self {
        QuadResult { value, err_abs, n_evals, converged: false, failure: Some(why) }
    }

    /// Sum of two independent results; tolerance is re-checked on the total.
    pub fn combine(&self, other: &QuadResult, tol: Tolerance) -> QuadResult {
        self.combine_scaled(Cx::new(1.0, 0.0), other, Cx::new(1.0, 0.0), tol)
    }

    /// `α·self + β·other` with errors scaled by |α|, |β|.
    pub fn combine_scaled(&self, alpha: Cx, other: &QuadResult, beta: Cx, tol: Tolerance) -> QuadResult {
        let value = alpha * self.value + beta * other.value;
        let err = alpha.norm() * self.err_abs + beta.norm() * other.err_abs;
        let n = self.n_evals + other.n_evals;
        let failure = self.failure.or(other.failure);
        let converged = self.converged && other.converged && err <= tol.target(value);
        QuadResult {
            value,
            err_abs: err,
            n_evals: n,
            converged,
            failure: if converged { None } else { failure.or(Some(QuadFailure::Budget)) },
        }
    }

    /// Multiply value and error by a constant.
    pub fn scale(mut self, k: Cx) -> QuadResult {
        self.value *= k;
        self.err_abs *= k.norm();
        self
    }

    /// Add an exactly known constant.
    pub fn shift(mut self, c: Cx) -> QuadResult {
        self.value += c;
        self
    }
}

/// Upper envelope of |f| on the tail, used for truncation decisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// `e^{−rate·x²}`
    Gaussian { rate: f64 },
    /// `e^{−rate·x}`
    Exponential { rate: f64 },
    /// Power-law decay (or growth): only extrapolation can finish the sum.
    Algebraic,
}

impl Envelope {
    pub(crate) fn bound(&self, x: f64) -> Option<f64> {
        match *self {
            Envelope::Gaussian { rate } => Some((-rate * x * x).exp()),
            Envelope::Exponential { rate } => Some((-rate * x).exp()),
            Envelope::Algebraic => None,
        }
    }
}

type RealFn<'a> = Box<dyn Fn(f64) -> Cx + Send + Sync + 'a>;
type PhaseFn<'a> = Box<dyn Fn(f64) -> f64 + Send + Sync + 'a>;

/// A complex integrand of a real variable plus the structural hints the
/// semi-infinite engine uses.
pub struct Integrand<'a> {
    eval: RealFn<'a>,
    phase: Option<PhaseFn<'a>>,
    decay_scale: Option<f64>,
    envelope: Option<Envelope>,
}

impl<'a> Integrand<'a> {
    pub fn new(f: impl Fn(f64) -> Cx + Send + Sync + 'a) -> Self {
        Integrand { eval: Box::new(f), phase: None, decay_scale: None, envelope: None }
    }

    /// Real integrand convenience constructor.
    pub fn real(f: impl Fn(f64) -> f64 + Send + Sync + 'a) -> Self {
        Self::new(move |x| Cx::new(f(x), 0.0))
    }

    /// Monotone phase; the integrand is expected to change sign where the
    /// phase crosses a multiple of π.
    pub fn with_phase(mut self, p: impl Fn(f64) -> f64 + Send + Sync + 'a) -> Self {
        self.phase = Some(Box::new(p));
        self
    }

    pub fn with_decay_scale(mut self, s: f64) -> Self {
        self.decay_scale = Some(s);
        self
    }

    pub fn with_envelope(mut self, e: Envelope) -> Self {
        self.envelope = Some(e);
        self
    }

    #[inline]
    pub fn eval(&self, x: f64) -> Cx {
        (self.eval)(x)
    }

    /// Phase value, zero when no phase was attached.
    pub fn phase_at(&self, x: f64) -> f64 {
        self.phase.as_ref().map_or(0.0, |p| p(x))
    }

    pub fn has_phase(&self) -> bool {
        self.phase.is_some()
    }

    pub fn decay_scale(&self) -> Option<f64> {
        self.decay_scale
    }

    pub fn envelope(&self) -> Option<Envelope> {
        self.envelope
    }
}

/// Adaptive Gauss–Kronrod (7/15) on `[lo, hi]`.
pub fn integrate_finite(f: &Integrand<'_>, lo: f64, hi: f64, tol: impl Into<Tolerance>) -> QuadResult {
    gk::adaptive(&|x| f.eval(x), lo, hi, tol.into(), node_budget())
}

/// Adaptive Gauss–Kronrod on a plain closure.
pub fn integrate_fn(f: impl Fn(f64) -> Cx, lo: f64, hi: f64, tol: impl Into<Tolerance>) -> QuadResult {
    gk::adaptive(&f, lo, hi, tol.into(), node_budget())
}

/// Integral of an analytic `f` along the segment from `z0` to `z1`.
pub fn integrate_contour(f: impl Fn(Cx) -> Cx, z0: Cx, z1: Cx, tol: impl Into<Tolerance>) -> QuadResult {
    let dz = z1 - z0;
    let tol = tol.into();
    if dz == Cx::new(0.0, 0.0) {
        return QuadResult { value: dz, err_abs: 0.0, n_evals: 1, converged: true, failure: None };
    }
    let scale = dz.norm();
    let inner = Tolerance { abs: tol.abs / scale, rel: tol.rel };
    let r = gk::adaptive(&|t| f(z0 + dz * t), 0.0, 1.0, inner, node_budget());
    let value = r.value * dz;
    let err = r.err_abs * scale;
    QuadResult { value, err_abs: err, converged: r.converged, ..r }
}

