use super::gk::adaptive;
use super::{accelerate, node_budget, Envelope, Integrand, QuadFailure, QuadResult, Tolerance};
use crate::complexmath::Cx;
use std::f64::consts::PI;

/// Integral over `[0, ∞)`.
///
/// Without a phase the domain is split at the decay scale `L`: `[0, L]` is
/// integrated directly and `[L, ∞)` through `x = L/w²`, which keeps
/// exponential tails smooth and turns an `x^{−3/2}` tail into a constant.
/// With a phase the domain is cut into lobes between successive zeros of
/// `sin(phase)`, and the lobe series is either truncated under the envelope
/// or extrapolated with the epsilon algorithm.
pub fn integrate_semiinf(f: &Integrand<'_>, tol: impl Into<Tolerance>) -> QuadResult {
    let tol = tol.into();
    match &f.phase {
        None => mapped(f, tol),
        Some(p) => lobes(f, p.as_ref(), tol),
    }
}

fn mapped(f: &Integrand<'_>, tol: Tolerance) -> QuadResult {
    let l = f.decay_scale.unwrap_or(1.0);
    let budget = node_budget();
    let half = tol.scaled(0.5);
    let head = adaptive(&|x| f.eval(x), 0.0, l, half, budget);
    let tail_fn = |w: f64| {
        if w <= 0.0 {
            return Cx::new(0.0, 0.0);
        }
        let x = l / (w * w);
        let v = f.eval(x) * (2.0 * l / (w * w * w));
        if !(v.re.is_finite() && v.im.is_finite()) && x > 1e3 * l {
            // 0·∞ from a decayed exponential times a growing power.
            return Cx::new(0.0, 0.0);
        }
        v
    };
    let tail = adaptive(&tail_fn, 0.0, 1.0, half, budget.saturating_sub(head.n_evals));
    head.combine(&tail, tol)
}

/// Root of `phase(x) = level` in `(lo, ∞)`, with `phase(lo) < level`.
fn next_zero(phase: &dyn Fn(f64) -> f64, lo: f64, level: f64, guess: f64) -> Option<f64> {
    let mut a = lo;
    let mut h = guess.max(1e-12);
    let mut b = lo + h;
    let mut tries = 0;
    while phase(b) < level {
        a = b;
        h *= 2.0;
        b = lo + h;
        tries += 1;
        if tries > 80 || !b.is_finite() {
            return None;
        }
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if phase(m) < level {
            a = m;
        } else {
            b = m;
        }
    }
    Some(b)
}

/// Integrate `[a, b]` in pieces no wider than `width` so that narrow
/// envelope features are seen by the first panels.
fn piecewise(f: &Integrand<'_>, a: f64, b: f64, width: f64, tol: Tolerance, budget: usize) -> QuadResult {
    let pieces = (((b - a) / width).ceil() as usize).clamp(1, 64);
    let h = (b - a) / pieces as f64;
    let mut acc: Option<QuadResult> = None;
    let mut used = 0;
    for i in 0..pieces {
        let lo = a + h * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + h };
        let r = adaptive(&|x| f.eval(x), lo, hi, tol, budget.saturating_sub(used));
        used += r.n_evals;
        acc = Some(match acc {
            None => r,
            Some(prev) => prev.combine(&r, Tolerance::new(f64::INFINITY, 0.0)),
        });
    }
    let mut r = acc.expect("at least one piece");
    // Each piece met its own target; keep that verdict.
    r.converged = r.failure.is_none();
    r
}

const MAX_LOBES: usize = 100_000;

fn lobes(f: &Integrand<'_>, phase: &dyn Fn(f64) -> f64, tol: Tolerance) -> QuadResult {
    let budget = node_budget();
    let width = f.decay_scale.unwrap_or(f64::INFINITY);
    let envelope = f.envelope;
    let decaying = matches!(envelope, Some(Envelope::Gaussian { .. }) | Some(Envelope::Exponential { .. }));
    // Past this point the envelope is below 1e-30.
    let x_cut = match envelope {
        Some(Envelope::Gaussian { rate }) => (69.1 / rate).sqrt(),
        Some(Envelope::Exponential { rate }) => 69.1 / rate,
        _ => f64::INFINITY,
    };
    let lobe_tol = tol.scaled(0.01);

    let mut level = ((phase(0.0) / PI).floor() + 1.0) * PI;
    let mut x_prev = 0.0;
    let mut guess = if width.is_finite() { width } else { 1.0 };
    let mut sum = Cx::new(0.0, 0.0);
    let mut lobe_err = 0.0;
    let mut evals = 0usize;
    let mut partials: Vec<Cx> = Vec::new();
    let mut last_terms = [f64::INFINITY; 2];
    let mut extrapolants: Vec<Cx> = Vec::new();

    for _ in 0..MAX_LOBES {
        let (x_next, last) = match next_zero(phase, x_prev, level, guess) {
            Some(x) if x < x_cut => (x, false),
            Some(_) => (x_cut, true),
            None if x_cut.is_finite() => (x_cut, true),
            None => {
                return QuadResult::failed(sum, lobe_err, evals.max(1), QuadFailure::Bracketing);
            }
        };
        let r = piecewise(f, x_prev, x_next, width, lobe_tol, budget.saturating_sub(evals));
        evals += r.n_evals;
        if r.failure == Some(QuadFailure::NonFinite) {
            return QuadResult::failed(sum, f64::INFINITY, evals, QuadFailure::NonFinite);
        }
        sum += r.value;
        lobe_err += r.err_abs;
        partials.push(sum);
        last_terms = [last_terms[1], r.value.norm()];
        guess = x_next - x_prev;
        x_prev = x_next;
        level += PI;

        let target = tol.target(sum);
        if last {
            return QuadResult::finish(sum, lobe_err, evals, tol);
        }
        if evals >= budget {
            return QuadResult::failed(sum, lobe_err + last_terms[1], evals, QuadFailure::Budget);
        }
        let small = last_terms.iter().all(|&t| t <= 1e-3 * target);
        let env_ok = match envelope.and_then(|e| e.bound(x_prev)) {
            Some(b) => b <= 1e-2 * target,
            None => true,
        };
        if small && env_ok {
            return QuadResult::finish(sum, lobe_err + last_terms[1], evals, tol);
        }
        if decaying || partials.len() < 6 {
            continue;
        }
        if let Some(acc) = accelerate(&partials) {
            extrapolants.push(acc.value);
            let m = extrapolants.len();
            if m >= 3 {
                let e = &extrapolants[m - 3..];
                let spread = (e[2] - e[1]).norm().max((e[2] - e[0]).norm());
                let t = tol.target(e[2]);
                if spread <= 0.1 * t && lobe_err <= 0.5 * t {
                    let err = lobe_err + 3.0 * spread.max(acc.residual);
                    return QuadResult::finish(e[2], err, evals, tol);
                }
            }
        }
    }
    let value = extrapolants.last().copied().unwrap_or(sum);
    QuadResult::failed(value, lobe_err, evals, QuadFailure::Acceleration)
}
