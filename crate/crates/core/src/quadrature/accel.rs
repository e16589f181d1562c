use crate::complexmath::Cx;

/// Outcome of [`accelerate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Acceleration {
    pub value: Cx,
    /// Distance between the last two extrapolants (or the last term when the
    /// table broke down).
    pub residual: f64,
    /// False when the epsilon table broke down and the plain partial sum was
    /// returned.
    pub extrapolated: bool,
}

/// Longest tail of partial sums fed to the table; deeper tables only
/// amplify rounding noise.
const WINDOW: usize = 40;

/// Wynn epsilon extrapolation of a partial-sum sequence.
///
/// Returns `None` when fewer than four partial sums are supplied.
pub fn accelerate(partials: &[Cx]) -> Option<Acceleration> {
    if partials.len() < 4 {
        return None;
    }
    let s = &partials[partials.len().saturating_sub(WINDOW)..];
    let n = s.len();
    let last_term = (s[n - 1] - s[n - 2]).norm();
    let fallback = Acceleration { value: s[n - 1], residual: last_term, extrapolated: false };

    // cols[k][j] = ε_k^{(j)}, built from s[j..=j+k].
    let mut cols: Vec<Vec<Cx>> = vec![vec![Cx::new(0.0, 0.0); n + 1], s.to_vec()];
    let mut depth = 0;
    for k in 1..n {
        let prev = &cols[k];
        let prev2 = &cols[k - 1];
        let mut next = Vec::with_capacity(n - k);
        let mut broke = false;
        for j in 0..n - k {
            let d = prev[j + 1] - prev[j];
            let scale = prev[j + 1].norm().max(prev[j].norm());
            if d.norm() <= 1e-14 * scale || d.norm() < 1e-300 {
                broke = true;
                break;
            }
            next.push(prev2[j + 1] + d.inv());
        }
        if broke {
            break;
        }
        cols.push(next);
        depth = k;
    }
    let even = depth - depth % 2;
    if even == 0 {
        return Some(fallback);
    }
    // Best estimate with all n sums, and with the first n−1 sums.
    let best = |m: usize| -> Cx {
        let k = (even).min(if (m - 1).is_multiple_of(2) { m - 1 } else { m - 2 });
        cols[k + 1][m - 1 - k]
    };
    let e_now = best(n);
    let e_prev = best(n - 1);
    if !(e_now.re.is_finite() && e_now.im.is_finite()) {
        return Some(fallback);
    }
    Some(Acceleration { value: e_now, residual: (e_now - e_prev).norm(), extrapolated: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partials(terms: impl Iterator<Item = f64>) -> Vec<Cx> {
        let mut acc = 0.0;
        terms.map(|t| {
            acc += t;
            Cx::new(acc, 0.0)
        })
        .collect()
    }

    #[test]
    fn alternating_harmonic() {
        let p = partials((0..14).map(|k| if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0)));
        let a = accelerate(&p).unwrap();
        assert!((a.value.re - std::f64::consts::LN_2).abs() < 1e-9, "{a:?}");
    }

    #[test]
    fn grandi_series_sums_to_half() {
        let p = partials((0..10).map(|k| if k % 2 == 0 { 1.0 } else { -1.0 }));
        let a = accelerate(&p).unwrap();
        assert!((a.value.re - 0.5).abs() < 1e-14, "{a:?}");
    }

    #[test]
    fn too_few_terms() {
        assert!(accelerate(&[Cx::new(1.0, 0.0); 3]).is_none());
    }

    #[test]
    fn converged_sequence_falls_back() {
        let a = accelerate(&[Cx::new(2.0, 0.0); 6]).unwrap();
        assert_eq!(a.value, Cx::new(2.0, 0.0));
        assert_eq!(a.residual, 0.0);
    }
}
