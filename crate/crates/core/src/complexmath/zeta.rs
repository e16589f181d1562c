use super::{finite_or, Cx, SpecialFnError};
use std::f64::consts::PI;

/// Above this |Im s| the eta series needs too many terms; Euler–Maclaurin
/// takes over.
const BORWEIN_MAX_IM: f64 = 50.0;

/// Riemann zeta for `Re s > 0`, `s ≠ 1`.
pub fn czeta(s: Cx) -> Result<Cx, SpecialFnError> {
    if !(s.re.is_finite() && s.im.is_finite()) || s.re <= 0.0 {
        return Err(SpecialFnError::Domain(s));
    }
    if s == Cx::new(1.0, 0.0) {
        return Err(SpecialFnError::Pole(s));
    }
    let v = if s.im.abs() <= BORWEIN_MAX_IM {
        zeta_borwein(s)
    } else {
        zeta_euler_maclaurin(s)
    };
    finite_or(v, SpecialFnError::Overflow(s))
}

/// ζ(s) = η(s)/(1 − 2^{1−s}) with η summed by Borwein's
/// Chebyshev-weighted alternating series.
pub(crate) fn zeta_borwein(s: Cx) -> Cx {
    // Error ≈ (3+√8)^{−n} e^{π|t|/2} / |Γ(s)|, so n grows linearly in |t|.
    let n = (1.3 * s.im.abs() + 30.0).ceil() as usize;
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 1.0;
    d.push(acc);
    for i in 0..n {
        let i_f = i as f64;
        term *= 4.0 * (nf + i_f) * (nf - i_f) / ((2.0 * i_f + 1.0) * (2.0 * i_f + 2.0));
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = Cx::new(0.0, 0.0);
    for (k, dk) in d.iter().take(n).enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * (dk - dn) / dn;
        sum += w * Cx::new((k + 1) as f64, 0.0).powc(-s);
    }
    let eta = -sum;
    eta / (Cx::new(1.0, 0.0) - Cx::new(2.0, 0.0).powc(Cx::new(1.0, 0.0) - s))
}

/// `B_{2j}/(2j)!` for j = 1, 2, …
fn bernoulli_ratio(j: usize) -> f64 {
    const B: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let fact: f64 = (1..=2 * j).map(|k| k as f64).product();
    if j <= B.len() {
        return B[j - 1] / fact;
    }
    let z2j: f64 = (1..=60).map(|k| (k as f64).powi(-(2 * j as i32))).sum();
    let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2.0 * z2j / (2.0 * PI).powi(2 * j as i32)
}

/// Euler–Maclaurin summation with cutoff N ≈ |s|/2, which makes successive
/// correction terms shrink by roughly 1/π².
pub(crate) fn zeta_euler_maclaurin(s: Cx) -> Cx {
    let n = ((s.norm() / 2.0).ceil() as usize).max(20);
    let nf = n as f64;
    let one = Cx::new(1.0, 0.0);
    let mut sum = Cx::new(0.0, 0.0);
    for k in 1..n {
        sum += Cx::new(k as f64, 0.0).powc(-s);
    }
    let n_ms = Cx::new(nf, 0.0).powc(-s);
    sum += n_ms * nf / (s - one) + n_ms * 0.5;
    // poch = s(s+1)…(s+2j−2), npow = N^{−s−2j+1}
    let mut poch = s;
    let mut npow = n_ms / nf;
    for j in 1..=30 {
        let t = poch * npow * bernoulli_ratio(j);
        sum += t;
        if t.norm() < 1e-17 * sum.norm() {
            break;
        }
        let jf = j as f64;
        poch *= (s + (2.0 * jf - 1.0)) * (s + 2.0 * jf);
        npow /= nf * nf;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basel() {
        let v = czeta(Cx::new(2.0, 0.0)).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn apery() {
        let v = czeta(Cx::new(3.0, 0.0)).unwrap();
        assert!((v.re - 1.202_056_903_159_594_3).abs() < 1e-14);
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(czeta(Cx::new(1.0, 0.0)), Err(SpecialFnError::Pole(_))));
        assert!(matches!(czeta(Cx::new(-0.5, 1.0)), Err(SpecialFnError::Domain(_))));
    }

    #[test]
    fn methods_agree_in_overlap() {
        for &s in &[Cx::new(1.5, 30.0), Cx::new(0.5, 45.0), Cx::new(3.0, -40.0), Cx::new(2.0, 10.0)] {
            let a = zeta_borwein(s);
            let b = zeta_euler_maclaurin(s);
            assert!((a - b).norm() < 1e-12 * b.norm(), "{s}: {a} vs {b}");
        }
    }

    #[test]
    fn first_zero_on_critical_line() {
        let v = czeta(Cx::new(0.5, 14.134_725_141_734_693)).unwrap();
        assert!(v.norm() < 1e-12);
    }
}
