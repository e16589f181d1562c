//! Seeded parameter draws.

use crate::complexmath::Cx;
use crate::params::{Param, ParamAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Real parts are log-uniform on this interval unless a draw says otherwise.
pub const REAL_RANGE: (f64, f64) = (0.3, 8.0);
const MAX_TRIES: usize = 20_000;

/// How one parameter is drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Draw {
    /// Real part log-uniform on `[lo, hi]`; imaginary part uniform in
    /// `±im·re`.
    LogUniform { lo: f64, hi: f64, im: f64 },
    /// Integer order, inclusive.
    Order { lo: usize, hi: usize },
    /// Real part `k/den` uniform on the grid inside `(lo, hi)`, imaginary
    /// part `j/den` with `|j/den| ≤ im`.
    Rational { lo: f64, hi: f64, den: u32, im: f64 },
}

impl Draw {
    pub const fn real() -> Draw {
        Draw::LogUniform { lo: REAL_RANGE.0, hi: REAL_RANGE.1, im: 0.0 }
    }

    pub const fn complex(im: f64) -> Draw {
        Draw::LogUniform { lo: REAL_RANGE.0, hi: REAL_RANGE.1, im }
    }

    pub const fn range(lo: f64, hi: f64) -> Draw {
        Draw::LogUniform { lo, hi, im: 0.0 }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Cx {
        match *self {
            Draw::LogUniform { lo, hi, im } => {
                let re = (rng.gen_range(lo.ln()..=hi.ln())).exp();
                let im = if im > 0.0 { rng.gen_range(-im..=im) * re } else { 0.0 };
                Cx::new(re, im)
            }
            Draw::Order { lo, hi } => Cx::new(rng.gen_range(lo..=hi) as f64, 0.0),
            Draw::Rational { lo, hi, den, im } => {
                let d = den as f64;
                let k = rng.gen_range(((lo * d).floor() as i64 + 1)..=((hi * d).ceil() as i64 - 1));
                let jm = (im * d).floor() as i64;
                let j = if jm > 0 { rng.gen_range(-jm..=jm) } else { 0 };
                Cx::new(k as f64 / d, j as f64 / d)
            }
        }
    }
}

/// FNV-1a, stable across platforms and toolchains.
fn id_hash(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// `count` draws accepted by `domain`, deterministic in `(seed, id)`.
/// `None` when the rejection loop gives up.
pub fn draw(
    id: &str,
    seed: u64,
    count: usize,
    draws: &[(Param, Draw)],
    domain: &dyn Fn(&ParamAssignment) -> Result<(), String>,
) -> Option<Vec<ParamAssignment>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ id_hash(id));
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > MAX_TRIES {
            return None;
        }
        let p: ParamAssignment = draws.iter().map(|(k, d)| (*k, d.sample(&mut rng))).collect();
        if domain(&p).is_ok() {
            out.push(p);
        }
    }
    Some(out)
}
