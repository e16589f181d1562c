use super::{QuadFailure, QuadResult, Tolerance};
use crate::complexmath::Cx;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights on XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Cx,
    err: f64,
    floor: f64,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.err.total_cmp(&o.err) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// One 15-point Kronrod panel with the QUADPACK error heuristic.
/// Returns `None` if the integrand produced a non-finite value.
fn panel(f: &dyn Fn(f64) -> Cx, a: f64, b: f64) -> Option<Segment> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut fv1 = [Cx::new(0.0, 0.0); 7];
    let mut fv2 = [Cx::new(0.0, 0.0); 7];
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut resabs = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        k += (f1 + f2) * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            g += (f1 + f2) * WG[j / 2];
        }
    }
    if !(k.re.is_finite() && k.im.is_finite()) {
        return None;
    }
    let mean = k * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let habs = h.abs();
    resabs *= habs;
    resasc *= habs;
    let mut err = ((k - g) * h).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * EPS * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * EPS) {
        err = err.max(floor);
    }
    Some(Segment { a, b, value: k * h, err, floor })
}

/// Globally adaptive bisection driven by the largest local error.
pub(crate) fn adaptive(f: &dyn Fn(f64) -> Cx, lo: f64, hi: f64, tol: Tolerance, budget: usize) -> QuadResult {
    if lo == hi {
        return QuadResult { value: Cx::new(0.0, 0.0), err_abs: 0.0, n_evals: 1, converged: true, failure: None };
    }
    let mut evals = 15;
    let first = match panel(f, lo, hi) {
        Some(s) => s,
        None => return QuadResult::failed(Cx::new(f64::NAN, 0.0), f64::INFINITY, evals, QuadFailure::NonFinite),
    };
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    let mut total = first.value;
    let mut total_err = first.err;
    heap.push(first);
    let mut failure = None;

    while total_err > tol.target(total) {
        if evals + 30 > budget {
            failure = Some(QuadFailure::Budget);
            break;
        }
        let Some(s) = heap.pop() else {
            failure = Some(QuadFailure::Roundoff);
            break;
        };
        let mid = 0.5 * (s.a + s.b);
        let too_narrow = (s.b - s.a).abs() <= 4.0 * EPS * s.a.abs().max(s.b.abs()).max(f64::MIN_POSITIVE);
        if too_narrow || s.err <= s.floor * 1.000_001 {
            frozen.push(s);
            continue;
        }
        let (Some(l), Some(r)) = (panel(f, s.a, mid), panel(f, mid, s.b)) else {
            return QuadResult::failed(total, f64::INFINITY, evals + 30, QuadFailure::NonFinite);
        };
        evals += 30;
        total += l.value + r.value - s.value;
        total_err += l.err + r.err - s.err;
        heap.push(l);
        heap.push(r);
        // Re-sum now and then to keep the running totals from drifting.
        if evals % 30_000 == 0 {
            total = heap.iter().chain(frozen.iter()).map(|s| s.value).sum();
            total_err = heap.iter().chain(frozen.iter()).map(|s| s.err).sum();
        }
    }
    let value: Cx = heap.iter().chain(frozen.iter()).map(|s| s.value).sum();
    let err: f64 = heap.iter().chain(frozen.iter()).map(|s| s.err).sum();
    let converged = err <= tol.target(value);
    QuadResult {
        value,
        err_abs: err,
        n_evals: evals,
        converged,
        failure: if converged { None } else { failure.or(Some(QuadFailure::Budget)) },
    }
}
