//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process exits non-zero when a required criterion fails.

use integral_identities::closedforms::{erf_via_representation, printed_relation, raw_derivative, ErfRep};
use integral_identities::complexmath::{cerf, cgamma, czeta};
use integral_identities::params::{real_params, Param, ParamAssignment};
use integral_identities::quadrature::Tolerance;
use integral_identities::registry::{self, catalog, get, quad_tolerance, sample_params, verify_all, RunOptions};
use integral_identities::Cx;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

/// Criterion 1: oscillatory and monotone left sides.
const EXAMPLE_REL: f64 = 1e-8;
const EXAMPLE_REL_MONOTONE: f64 = 1e-10;
const EXAMPLE_SECONDS: f64 = 120.0;
/// Criterion 2.
const SWEEP_TOL: f64 = 1e-7;
const SWEEP_SAMPLES: usize = 5;
const SWEEP_PASS_RATE: f64 = 0.99;
const SWEEP_MIN_RECORDS: usize = 45;
const SWEEP_SECONDS: f64 = 600.0;
/// Criterion 3.
const ERF_DRAWS: usize = 20;
const ERF_ABS: f64 = 1e-8;
const ERF_CROSS_V: f64 = 1e-8;
/// Criterion 4.
const ZETA_REL: f64 = 1e-7;
/// Criterion 5.
const REFLECTION_POINTS: usize = 200;
const REFLECTION_ABS: f64 = 1e-10;
const EULER_INTEGRAL_REL: f64 = 1e-9;
/// Criterion 6.
const DERIV_REL: f64 = 1e-9;
const DERIV_DRAWS: usize = 20;
/// Criterion 7.
const GAMMA_REL: f64 = 1e-7;
/// Criterion 8.
const HONEST_FRACTION: f64 = 0.95;

const SEED: u64 = 42;

fn c(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

fn rel(got: Cx, want: Cx) -> f64 {
    let d = (got - want).norm();
    if want.norm() > 0.0 {
        d / want.norm()
    } else {
        d
    }
}

struct Report {
    failed: Vec<u8>,
}

impl Report {
    fn line(&mut self, n: u8, ok: bool, title: &str, detail: String) {
        println!("[{}] criterion {n}: {title}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(n);
        }
    }
}

/// Deviation and error estimate of a passing left side, for criterion 8.
struct Honesty {
    honest: usize,
    total: usize,
}

impl Honesty {
    fn add(&mut self, dev: f64, err: f64) {
        self.total += 1;
        if dev <= 3.0 * err {
            self.honest += 1;
        }
    }
}

fn criterion_1(r: &mut Report, h: &mut Honesty) {
    let start = Instant::now();
    let (mut n, mut worst, mut bad) = (0, 0.0f64, Vec::new());
    for spec in catalog() {
        let bound = if spec.monotone { EXAMPLE_REL_MONOTONE } else { EXAMPLE_REL };
        for ex in &spec.examples {
            n += 1;
            let printed = ex.printed_value();
            let scale = c(ex.printed_scale);
            let rhs = spec.rhs(&ex.params).map(|v| v * scale);
            let lhs = spec.lhs(&ex.params, quad_tolerance(bound * 0.1, ex.value));
            match (lhs, rhs) {
                (Ok(q), Ok(rhs)) => {
                    let (dl, dr) = (rel(q.value * scale, printed), rel(rhs, printed));
                    worst = worst.max(dl).max(dr);
                    if dl > bound || dr > bound {
                        bad.push(format!("{} [{}] lhs {dl:.1e} rhs {dr:.1e}", spec.id, ex.expr));
                    } else {
                        h.add((q.value - ex.value).norm(), q.err_abs);
                    }
                }
                (l, r) => bad.push(format!("{} [{}]: {:?} / {:?}", spec.id, ex.expr, l.err(), r.err())),
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let ok = bad.is_empty() && secs < EXAMPLE_SECONDS;
    r.line(1, ok, "printed examples", format!("{}/{n} within tolerance, worst rel {worst:.1e}, {secs:.2} s {bad:?}", n - bad.len()));
}

fn criterion_2(r: &mut Report, h: &mut Honesty) {
    let start = Instant::now();
    let recs = verify_all(&RunOptions { tol: SWEEP_TOL, samples: SWEEP_SAMPLES, seed: SEED, ..RunOptions::default() });
    let secs = start.elapsed().as_secs_f64();
    let records = catalog().len();
    let passed = recs.iter().filter(|r| r.passed).count();
    let rate = passed as f64 / recs.len() as f64;
    let unexplained: Vec<_> = recs
        .iter()
        .filter(|r| !r.passed)
        .filter(|r| !r.reason.as_deref().is_some_and(|s| s.contains("non-convergence") || s.starts_with("domain-suspect")))
        .map(registry::describe)
        .collect();
    for rec in recs.iter().filter(|r| r.passed) {
        h.add(rec.abs_dev, rec.err_est);
    }
    let ok = records >= SWEEP_MIN_RECORDS && rate >= SWEEP_PASS_RATE && unexplained.is_empty() && secs < SWEEP_SECONDS;
    let failures: Vec<_> = recs.iter().filter(|r| !r.passed).map(|r| format!("{}: {}", registry::describe(r), r.reason.as_deref().unwrap_or(""))).collect();
    r.line(
        2,
        ok,
        "seeded sweep",
        format!("{passed}/{} passed ({:.2}%) over {records} records, {secs:.2} s; failures {failures:?}", recs.len(), 100.0 * rate),
    );
}

fn criterion_3(r: &mut Report) {
    let tol = Tolerance::new(1e-12, 1e-11);
    let (mut worst, mut worst_v, mut n, mut bad) = (0.0f64, 0.0f64, 0, Vec::new());
    for id in ["C.R1", "C.R2", "D.R1", "D.R2"] {
        let spec = get(id).unwrap();
        let rep = ErfRep::from_id(id).unwrap();
        let points = sample_params(id, SEED, ERF_DRAWS).unwrap();
        for p in &points[spec.examples.len()..] {
            n += 1;
            let (v, z, a) = (p[&Param::V], p[&Param::Z], p.get(&Param::A).copied());
            let want = cerf(z).unwrap();
            let got = erf_via_representation(rep, v, z, a, tol).unwrap().value;
            let d = (got - want).norm();
            worst = worst.max(d);
            // A second admissible v for the same z.
            let mut q = p.clone();
            q.insert(Param::V, v * 1.25);
            let spread = if spec.check_domain(&q).is_ok() {
                (erf_via_representation(rep, v * 1.25, z, a, tol).unwrap().value - got).norm()
            } else {
                0.0
            };
            worst_v = worst_v.max(spread);
            if d > ERF_ABS || spread > ERF_CROSS_V {
                bad.push(format!("{id} v={v} z={z}: {d:.1e} / {spread:.1e}"));
            }
        }
    }
    r.line(3, bad.is_empty(), "erf representations", format!("{n} draws, worst |Δerf| {worst:.1e}, worst cross-v {worst_v:.1e} {bad:?}"));
}

fn criterion_4(r: &mut Report) {
    let spec = get("G.Zeta").unwrap();
    let p = real_params(&[(Param::A, 1.0), (Param::B, 2.0)]);
    let want = PI * (-1f64).exp() / (2.0 * czeta(c(3.0)).unwrap());
    let q = spec.lhs(&p, quad_tolerance(ZETA_REL * 0.01, want)).unwrap();
    let d = rel(q.value, want);
    r.line(4, d <= ZETA_REL && q.converged, "zeta corollary at (1, 2)", format!("lhs {:.15e}, πe⁻¹/(2ζ(3)) {:.15e}, rel {d:.1e}", q.value.re, want.re));
}

fn criterion_5(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    let mut n = 0;
    while n < REFLECTION_POINTS {
        let z = Cx::new(rng.gen_range(-5.0..5.0), rng.gen_range(-3.0..3.0));
        if z.im.abs() < 1e-3 && (z.re - z.re.round()).abs() < 1e-3 {
            continue;
        }
        n += 1;
        let v = cgamma(z).unwrap() * cgamma(c(1.0) - z).unwrap() * (PI * z).sin() / PI;
        worst = worst.max((v - c(1.0)).norm());
    }
    let spec = get("G.EulerReflection").unwrap();
    let mut worst_int = 0.0f64;
    for z in [c(0.3), c(0.5), c(0.7), Cx::new(0.25, 0.1)] {
        let want = PI / (PI * z).sin();
        let mut p = ParamAssignment::new();
        p.insert(Param::Z, z);
        let q = spec.lhs(&p, quad_tolerance(EULER_INTEGRAL_REL * 0.01, want)).unwrap();
        worst_int = worst_int.max(rel(q.value, want));
    }
    let ok = worst <= REFLECTION_ABS && worst_int <= EULER_INTEGRAL_REL;
    r.line(5, ok, "Euler reflection", format!("{n} gamma points worst {worst:.1e}; 4 integrals worst rel {worst_int:.1e}"));
}

fn criterion_6(r: &mut Report) {
    let (mut n, mut worst, mut bad) = (0, 0.0f64, Vec::new());
    for spec in catalog() {
        let Some((base, wrt, order, k)) = printed_relation(spec.id) else { continue };
        let points = sample_params(spec.id, SEED, DERIV_DRAWS).unwrap();
        for p in &points {
            n += 1;
            let printed = spec.rhs(p).unwrap();
            let d = raw_derivative(base, wrt, order, p).unwrap() * k;
            let e = rel(d, printed);
            worst = worst.max(e);
            if e > DERIV_REL {
                bad.push(format!("{} at {}: {e:.1e}", spec.id, integral_identities::params::format_params(p)));
            }
        }
    }
    r.line(6, bad.is_empty(), "derivative corollaries", format!("{n} points, worst rel {worst:.1e} {bad:?}"));
}

fn criterion_7(r: &mut Report) {
    let spec = get("G.GammaIntegral").unwrap();
    let mut lines = Vec::new();
    let mut attainable_ok = true;
    for mu in [-0.25, -0.75, -1.5] {
        for a in [1.0, 2.0] {
            let p = real_params(&[(Param::A, a), (Param::Mu, mu)]);
            let rhs = spec.rhs(&p);
            let outcome = match &rhs {
                Ok(rhs) if rhs.re.is_finite() => {
                    let q = spec.lhs(&p, quad_tolerance(GAMMA_REL * 0.01, *rhs)).unwrap();
                    let e = rel(q.value, *rhs);
                    (e <= GAMMA_REL && q.converged, format!("rel {e:.1e}"))
                }
                other => {
                    let q = spec.lhs(&p, Tolerance::new(1e-12, GAMMA_REL * 0.01)).unwrap();
                    let rhs = match other {
                        Ok(v) => v.to_string(),
                        Err(e) => e.to_string(),
                    };
                    (false, format!("lhs {} (converged {}), rhs {rhs}", q.value, q.converged))
                }
            };
            if mu != -1.5 {
                attainable_ok &= outcome.0;
            }
            lines.push(format!("μ={mu} a={a}: {} {}", if outcome.0 { "ok" } else { "fail" }, outcome.1));
        }
    }
    r.line(
        7,
        attainable_ok,
        "gamma integral with u read as μ",
        format!("{lines:?}; μ = −3/2 sits on the pole of Γ(2μ) and of the integral's continuation, so it cannot match"),
    );
}

fn criterion_8(r: &mut Report, h: &Honesty) {
    let frac = h.honest as f64 / h.total.max(1) as f64;
    r.line(8, frac >= HONEST_FRACTION, "honest error estimates", format!("{}/{} passing records with |dev| ≤ 3·err_est ({:.1}%)", h.honest, h.total, 100.0 * frac));
}

fn main() {
    let mut r = Report { failed: Vec::new() };
    let mut h = Honesty { honest: 0, total: 0 };
    criterion_1(&mut r, &mut h);
    criterion_2(&mut r, &mut h);
    criterion_3(&mut r);
    criterion_4(&mut r);
    criterion_5(&mut r);
    criterion_6(&mut r);
    criterion_7(&mut r);
    criterion_8(&mut r, &h);
    if r.failed.is_empty() {
        println!("acceptance: all 8 criteria passed");
    } else {
        println!("acceptance: failed criteria {:?}", r.failed);
        std::process::exit(1);
    }
}
