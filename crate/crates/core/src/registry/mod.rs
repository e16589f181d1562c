//! The identity catalog and the runner that sets each quadrature left side
//! against its closed form.

mod families;
mod gfamily;
pub mod report;
pub mod sample;

pub use report::{write_atomic, Format, VerificationRecord};
pub use sample::Draw;

use crate::closedforms::{closed_form, ClosedForm, ClosedFormError, IDS};
use crate::complexmath::Cx;
use crate::params::{format_params, Param, ParamAssignment, ParamError};
use crate::quadrature::{QuadResult, Tolerance};
use crate::transforms::TransformError;
use rayon::prelude::*;
use serde::Serialize;
use std::sync::OnceLock;
use std::time::Instant;
use thiserror::Error;

/// Absolute floor of the pass rule.
pub const TOL_ABS: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegistryError {
    #[error("unknown identity `{0}`")]
    UnknownId(String),
    #[error("{id}: parameters outside the domain ({why})")]
    Domain { id: String, why: String },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("could not draw admissible parameters for `{0}`")]
    Sampling(String),
    #[error("bad filter `{0}` (expected family=X, kind=K or id=PREFIX)")]
    Filter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Theorem,
    Corollary,
    Pythagorean,
    Derivative,
    ErfRepresentation,
    FiniteIntegral,
    Transform,
    Remark,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Theorem => "theorem",
            Kind::Corollary => "corollary",
            Kind::Pythagorean => "pythagorean",
            Kind::Derivative => "derivative",
            Kind::ErfRepresentation => "erf-representation",
            Kind::FiniteIntegral => "finite-integral",
            Kind::Transform => "transform",
            Kind::Remark => "remark",
        }
    }
}

/// Where an example value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Printed with the statement.
    Exact,
    /// A closed value implied by the statement (erf 1, ζ(3), …).
    Reference,
    /// Independent high-precision quadrature.
    Oracle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example {
    pub params: ParamAssignment,
    pub expr: &'static str,
    /// The value this record's integral takes at `params`.
    pub value: Cx,
    /// The printed value is `printed_scale · value`; differs from 1 where
    /// the printed example uses a rescaled integrand.
    pub printed_scale: f64,
    pub source: Source,
}

impl Example {
    pub fn new(params: ParamAssignment, expr: &'static str, value: f64, source: Source) -> Self {
        Example { params, expr, value: Cx::new(value, 0.0), printed_scale: 1.0, source }
    }

    pub fn complex(params: ParamAssignment, expr: &'static str, value: Cx, source: Source) -> Self {
        Example { params, expr, value, printed_scale: 1.0, source }
    }

    pub fn printed(mut self, scale: f64) -> Self {
        self.printed_scale = scale;
        self
    }

    pub fn printed_value(&self) -> Cx {
        self.value * self.printed_scale
    }
}

pub(crate) type LhsFn = Box<dyn Fn(&ParamAssignment, Tolerance) -> Result<QuadResult, RegistryError> + Send + Sync>;
pub(crate) type DomainFn = Box<dyn Fn(&ParamAssignment) -> Result<(), String> + Send + Sync>;

/// One catalog record.
pub struct IdentitySpec {
    pub id: &'static str,
    pub family: char,
    pub kind: Kind,
    /// A verbatim fragment of the statement.
    pub anchor: &'static str,
    /// The domain as printed.
    pub domain_text: &'static str,
    pub params: Vec<Param>,
    pub examples: Vec<Example>,
    pub notes: &'static str,
    /// True when the left side has no oscillation; tightens the example
    /// tolerance.
    pub monotone: bool,
    pub rhs: ClosedForm,
    pub(crate) lhs: LhsFn,
    pub(crate) domain: DomainFn,
    pub(crate) draws: Vec<(Param, Draw)>,
}

impl IdentitySpec {
    pub fn lhs(&self, p: &ParamAssignment, tol: Tolerance) -> Result<QuadResult, RegistryError> {
        (self.lhs)(p, tol)
    }

    pub fn rhs(&self, p: &ParamAssignment) -> Result<Cx, ClosedFormError> {
        (self.rhs.eval)(p)
    }

    /// `Ok` when `p` names exactly the record's parameters and lies inside
    /// the numeric domain.
    pub fn check_domain(&self, p: &ParamAssignment) -> Result<(), RegistryError> {
        for k in &self.params {
            if !p.contains_key(k) {
                return Err(ParamError::Missing(*k).into());
            }
        }
        if let Some(extra) = p.keys().find(|k| !self.params.contains(k)) {
            return Err(RegistryError::Domain { id: self.id.into(), why: format!("unexpected parameter `{extra}`") });
        }
        if let Some((k, v)) = p.iter().find(|(_, v)| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(RegistryError::Domain { id: self.id.into(), why: format!("{k} = {v} is not finite") });
        }
        (self.domain)(p).map_err(|why| RegistryError::Domain { id: self.id.into(), why })
    }

    pub fn summary(&self) -> Summary {
        Summary {
            id: self.id,
            family: self.family.to_string(),
            kind: self.kind,
            anchor: self.anchor,
            domain: self.domain_text,
            params: self.params.iter().map(|p| p.name()).collect(),
            examples: self.examples.len(),
            notes: self.notes,
        }
    }
}

/// Catalog row as exported by `list` and the catalog JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub id: &'static str,
    pub family: String,
    pub kind: Kind,
    pub anchor: &'static str,
    pub domain: &'static str,
    pub params: Vec<&'static str>,
    pub examples: usize,
    pub notes: &'static str,
}

/// All records, in catalog order.
pub fn catalog() -> &'static [IdentitySpec] {
    static CATALOG: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut v = families::specs();
        v.extend(gfamily::specs());
        debug_assert_eq!(v.len(), IDS.len());
        v
    })
}

pub fn get(id: &str) -> Result<&'static IdentitySpec, RegistryError> {
    catalog().iter().find(|s| s.id == id).ok_or_else(|| RegistryError::UnknownId(id.into()))
}

pub(crate) fn rhs_for(id: &'static str) -> ClosedForm {
    closed_form(id).unwrap_or_else(|| panic!("no closed form registered for {id}"))
}

/// Record filter: `family=C`, `kind=erf-representation` or `id=G.` (prefix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    Family(char),
    Kind(String),
    IdPrefix(String),
}

impl Filter {
    pub fn parse(s: &str) -> Result<Filter, RegistryError> {
        let bad = || RegistryError::Filter(s.into());
        let (k, v) = s.split_once('=').ok_or_else(bad)?;
        let v = v.trim();
        match k.trim() {
            "family" => {
                let mut cs = v.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => Ok(Filter::Family(c.to_ascii_uppercase())),
                    _ => Err(bad()),
                }
            }
            "kind" => Ok(Filter::Kind(v.to_ascii_lowercase())),
            "id" => Ok(Filter::IdPrefix(v.into())),
            _ => Err(bad()),
        }
    }

    pub fn matches(&self, s: &IdentitySpec) -> bool {
        match self {
            Filter::Family(c) => s.family == *c,
            Filter::Kind(k) => s.kind.name() == k,
            Filter::IdPrefix(p) => s.id.starts_with(p.as_str()),
        }
    }
}

/// Records passing every filter, sorted by id.
pub fn list_identities(filters: &[Filter]) -> Vec<&'static IdentitySpec> {
    let mut v: Vec<_> = catalog().iter().filter(|s| filters.iter().all(|f| f.matches(s))).collect();
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

/// Quadrature accuracy requested for a given closed-form magnitude.
pub fn quad_tolerance(tol: f64, rhs: Cx) -> Tolerance {
    Tolerance { rel: 0.1 * tol, abs: 0.1 * TOL_ABS.max(tol * rhs.norm()) }
}

/// `|lhs − rhs| ≤ max(tol_abs, tol·|rhs|) + 3·err_est`
pub fn passes(lhs: Cx, rhs: Cx, err_est: f64, tol: f64) -> bool {
    (lhs - rhs).norm() <= TOL_ABS.max(tol * rhs.norm()) + 3.0 * err_est
}

/// Evaluates both sides of `id` at `params`. Domain violations are errors;
/// numerical failures are recorded as failing records with a reason.
pub fn verify(id: &str, params: &ParamAssignment, tol: f64) -> Result<VerificationRecord, RegistryError> {
    let spec = get(id)?;
    spec.check_domain(params)?;
    let start = Instant::now();
    let mut rec = VerificationRecord::new(spec.id, params.clone());
    let rhs = match spec.rhs(params) {
        Ok(v) => v,
        Err(e) => {
            rec.reason = Some(format!("closed form: {e}"));
            rec.rhs = Cx::new(f64::NAN, f64::NAN);
            rec.wall_ms = ms(start);
            return Ok(rec);
        }
    };
    rec.rhs = rhs;
    match spec.lhs(params, quad_tolerance(tol, rhs)) {
        Ok(q) => {
            rec.lhs = q.value;
            rec.err_est = q.err_abs;
            rec.converged = q.converged;
            rec.abs_dev = (q.value - rhs).norm();
            rec.rel_dev = if rhs.norm() > 0.0 { rec.abs_dev / rhs.norm() } else { rec.abs_dev };
            rec.passed = q.converged && passes(q.value, rhs, q.err_abs, tol);
            if !q.converged {
                let why = q.failure.map_or("no convergence".to_string(), |f| f.to_string());
                rec.reason = Some(format!("non-convergence: {why}"));
            } else if !rec.passed {
                rec.reason = Some(format!("deviation {:.3e} beyond tolerance", rec.abs_dev));
            }
        }
        Err(e) => {
            rec.lhs = Cx::new(f64::NAN, f64::NAN);
            rec.reason = Some(format!("left side: {e}"));
        }
    }
    rec.wall_ms = ms(start);
    Ok(rec)
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// The record's examples followed by `count` seeded draws from its domain.
pub fn sample_params(id: &str, seed: u64, count: usize) -> Result<Vec<ParamAssignment>, RegistryError> {
    let spec = get(id)?;
    let mut out: Vec<ParamAssignment> = spec.examples.iter().map(|e| e.params.clone()).collect();
    if count > 0 {
        let domain = |p: &ParamAssignment| (spec.domain)(p);
        let drawn = sample::draw(spec.id, seed, count, &spec.draws, &domain).ok_or_else(|| RegistryError::Sampling(id.into()))?;
        out.extend(drawn);
    }
    Ok(out)
}

/// Options for [`verify_all`].
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
    pub filters: Vec<Filter>,
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { tol: 1e-10, samples: 5, seed: 42, filters: Vec::new(), parallel: true }
    }
}

/// Runs every selected record over its examples plus `samples` draws.
/// Output order is catalog order, then point order, whatever the
/// parallelism. A failure at a drawn point of a record that passes all its
/// examples is flagged `domain_suspect`.
pub fn verify_all(opts: &RunOptions) -> Vec<VerificationRecord> {
    let specs: Vec<&'static IdentitySpec> = catalog().iter().filter(|s| opts.filters.iter().all(|f| f.matches(s))).collect();
    let mut jobs: Vec<(&'static IdentitySpec, ParamAssignment, bool)> = Vec::new();
    let mut unsampled = Vec::new();
    for spec in &specs {
        let n_ex = spec.examples.len();
        match sample_params(spec.id, opts.seed, opts.samples) {
            Ok(points) => jobs.extend(points.into_iter().enumerate().map(|(i, p)| (*spec, p, i < n_ex))),
            Err(e) => {
                jobs.extend(spec.examples.iter().map(|ex| (*spec, ex.params.clone(), true)));
                let mut rec = VerificationRecord::new(spec.id, ParamAssignment::new());
                rec.reason = Some(e.to_string());
                unsampled.push(rec);
            }
        }
    }
    let run = |(spec, p, example): &(&'static IdentitySpec, ParamAssignment, bool)| {
        let mut rec = verify(spec.id, p, opts.tol).unwrap_or_else(|e| {
            let mut r = VerificationRecord::new(spec.id, p.clone());
            r.reason = Some(e.to_string());
            r
        });
        rec.example = *example;
        rec
    };
    let mut records: Vec<VerificationRecord> =
        if opts.parallel { jobs.par_iter().map(run).collect() } else { jobs.iter().map(run).collect() };
    records.extend(unsampled);
    flag_domain_suspects(&mut records);
    records
}

fn flag_domain_suspects(records: &mut [VerificationRecord]) {
    let examples_ok = |id: &str, recs: &[VerificationRecord]| recs.iter().filter(|r| r.id == id && r.example).all(|r| r.passed);
    let verdicts: Vec<bool> = records.iter().map(|r| !r.passed && !r.example && examples_ok(&r.id, records)).collect();
    for (r, suspect) in records.iter_mut().zip(verdicts) {
        if suspect {
            r.domain_suspect = true;
            let why = r.reason.take().unwrap_or_default();
            r.reason = Some(format!("domain-suspect: {why}"));
        }
    }
}

/// One-line description of a record's parameters, for messages.
pub fn describe(rec: &VerificationRecord) -> String {
    format!("{} [{}]", rec.id, format_params(&rec.params))
}
