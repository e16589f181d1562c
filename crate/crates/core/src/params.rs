//! Named complex parameters shared by integrands, closed forms and the
//! registry.

use crate::complexmath::Cx;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    A,
    B,
    C,
    Lambda,
    Mu,
    V,
    Z,
    Alpha,
    Beta,
    N,
}

impl Param {
    pub const ALL: [Param; 10] = [
        Param::A,
        Param::B,
        Param::C,
        Param::Lambda,
        Param::Mu,
        Param::V,
        Param::Z,
        Param::Alpha,
        Param::Beta,
        Param::N,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
            Param::Lambda => "lambda",
            Param::Mu => "mu",
            Param::V => "v",
            Param::Z => "z",
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::N => "n",
        }
    }

    /// Accepts the ASCII names plus the Greek letters.
    pub fn parse(s: &str) -> Option<Param> {
        Some(match s.trim() {
            "a" => Param::A,
            "b" => Param::B,
            "c" => Param::C,
            "lambda" | "λ" => Param::Lambda,
            "mu" | "μ" => Param::Mu,
            "v" => Param::V,
            "z" => Param::Z,
            "alpha" | "α" => Param::Alpha,
            "beta" | "β" => Param::Beta,
            "n" => Param::N,
            _ => return None,
        })
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One identity instance: parameter name to complex value. Integer
/// parameters (`n`) are stored on the real axis.
pub type ParamAssignment = BTreeMap<Param, Cx>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("missing parameter `{0}`")]
    Missing(Param),
    #[error("parameter `n` must be a non-negative integer, got {0}")]
    NotAnOrder(Cx),
}

/// Typed accessors on a [`ParamAssignment`].
pub trait ParamsExt {
    fn cx(&self, p: Param) -> Result<Cx, ParamError>;
    fn order(&self) -> Result<usize, ParamError>;
}

impl ParamsExt for ParamAssignment {
    fn cx(&self, p: Param) -> Result<Cx, ParamError> {
        self.get(&p).copied().ok_or(ParamError::Missing(p))
    }

    fn order(&self) -> Result<usize, ParamError> {
        let n = self.cx(Param::N)?;
        if n.im != 0.0 || n.re < 0.0 || n.re.fract() != 0.0 || n.re > 64.0 {
            return Err(ParamError::NotAnOrder(n));
        }
        Ok(n.re as usize)
    }
}

/// Builds an assignment from real values.
pub fn real_params(values: &[(Param, f64)]) -> ParamAssignment {
    values.iter().map(|&(p, v)| (p, Cx::new(v, 0.0))).collect()
}

/// Compact `a=3, b=4+1i` rendering.
pub fn format_params(p: &ParamAssignment) -> String {
    p.iter()
        .map(|(k, v)| {
            if v.im == 0.0 {
                format!("{k}={}", v.re)
            } else {
                format!("{k}={}{:+}i", v.re, v.im)
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}
