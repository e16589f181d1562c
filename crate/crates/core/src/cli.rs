//! The `tatlas` command line: list, show, verify, sweep and transform.

use crate::complexmath::Cx;
use crate::params::{format_params, Param, ParamAssignment};
use crate::quadrature::{Envelope, Integrand};
use crate::registry::report::render;
use crate::registry::{self, write_atomic, Filter, Format, RunOptions, VerificationRecord};
use crate::transforms::{self, TransformKind};
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONCONVERGENCE: i32 = 3;

/// Numerical verification of Laplace, Glasser and Widder transform identities.
#[derive(Debug, Parser)]
#[command(name = "tatlas", version)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Relative tolerance of the pass rule.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Seeded parameter draws per record, on top of its examples.
    #[arg(long, global = true, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Output format; defaults depend on the command.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    /// Record filter: family=X, kind=K or id=PREFIX. Repeatable.
    #[arg(long = "filter", short = 'f', global = true)]
    pub filters: Vec<String>,
    /// Report wall_ms as 0 so that output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Run verify-all on one thread.
    #[arg(long, global = true)]
    pub serial: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List identity records.
    List,
    /// Print a record's anchor, domain and example values.
    Show { id: String },
    /// Verify one record at its examples, or at the given parameters.
    Verify {
        id: String,
        /// Parameter overrides `k=re` or `k=re,im`.
        params: Vec<String>,
    },
    /// Verify every selected record at its examples plus seeded draws.
    VerifyAll,
    /// Vary one parameter over `lo:hi:count` (inclusive) and emit plot rows.
    Sweep {
        id: String,
        param: String,
        grid: String,
        params: Vec<String>,
    },
    /// Apply a transform to a built-in integrand at a point.
    Transform {
        /// laplace, fourier-cos, fourier-sin, mellin, glasser, widder or stieltjes:<p>
        kind: String,
        /// One of: exp, gaussian, rational, x-exp, sinc, exp-sqrt.
        integrand: String,
        /// `re` or `re,im`
        point: String,
    },
    /// Examples-only run of the whole catalog.
    Selftest,
}

#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, &mut io::stdout().lock(), &mut io::stderr().lock()),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Runs a parsed configuration, writing results to `out` (unless `--out` is
/// set) and diagnostics to `err`.
pub fn run(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cfg, err) {
        Ok((bytes, code)) => {
            let written = match &cfg.common.out {
                Some(path) => write_atomic(path, &bytes),
                None => out.write_all(&bytes).and_then(|_| out.flush()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write output: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cfg: &CliConfig, err: &mut dyn Write) -> Result<(Vec<u8>, i32), Usage> {
    let c = &cfg.common;
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        return Err(Usage(format!("--tol must be positive, got {}", c.tol)));
    }
    let filters = c.filters.iter().map(|f| Filter::parse(f)).collect::<Result<Vec<_>, _>>()?;
    match &cfg.command {
        Command::List => Ok((list(&filters, c.format.unwrap_or(Format::Pretty))?, EXIT_OK)),
        Command::Show { id } => Ok((show(id, c.format.unwrap_or(Format::Pretty))?, EXIT_OK)),
        Command::Verify { id, params } => {
            let spec = registry::get(id)?;
            let points = if params.is_empty() {
                spec.examples.iter().map(|e| e.params.clone()).collect()
            } else {
                vec![with_overrides(spec, params, err)?]
            };
            let mut recs = Vec::with_capacity(points.len());
            for p in &points {
                recs.push(registry::verify(id, p, c.tol)?);
            }
            finish_records(recs, c, Format::Pretty, err)
        }
        Command::VerifyAll => run_all(c, c.samples, filters, err),
        Command::Selftest => run_all(c, 0, filters, err),
        Command::Sweep { id, param, grid, params } => sweep(c, id, param, grid, params, err),
        Command::Transform { kind, integrand, point } => transform(c, kind, integrand, point),
    }
}

fn run_all(c: &Common, samples: usize, filters: Vec<Filter>, err: &mut dyn Write) -> Result<(Vec<u8>, i32), Usage> {
    let opts = RunOptions { tol: c.tol, samples, seed: c.seed, filters, parallel: !c.serial };
    let recs = registry::verify_all(&opts);
    finish_records(recs, c, Format::Jsonl, err)
}

fn finish_records(
    mut recs: Vec<VerificationRecord>,
    c: &Common,
    default: Format,
    err: &mut dyn Write,
) -> Result<(Vec<u8>, i32), Usage> {
    if c.no_timings {
        recs.iter_mut().for_each(|r| r.wall_ms = 0.0);
    }
    let failed: Vec<_> = recs.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        let why = r.reason.as_deref().unwrap_or("failed");
        let _ = writeln!(err, "FAIL {}: {why}", registry::describe(r));
    }
    let _ = writeln!(err, "{} of {} passed", recs.len() - failed.len(), recs.len());
    let bytes = render(&recs, c.format.unwrap_or(default))?;
    Ok((bytes, exit_code(&recs)))
}

/// 0 when every record passed, 3 when every failure is a non-convergence,
/// 1 otherwise.
pub fn exit_code(recs: &[VerificationRecord]) -> i32 {
    let mut code = EXIT_OK;
    for r in recs.iter().filter(|r| !r.passed) {
        let nonconv = !r.converged && r.reason.as_deref().is_some_and(|s| s.contains("non-convergence"));
        if !nonconv {
            return EXIT_FAIL;
        }
        code = EXIT_NONCONVERGENCE;
    }
    code
}

/// Parses `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Cx, String> {
    let bad = || format!("bad number `{s}` (expected re or re,im)");
    let (re, im) = match s.split_once(',') {
        Some((r, i)) => (r, Some(i)),
        None => (s, None),
    };
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = match im {
        Some(i) => i.trim().parse().map_err(|_| bad())?,
        None => 0.0,
    };
    Ok(Cx::new(re, im))
}

/// Parses `k=re[,im]`.
pub fn parse_assignment(s: &str) -> Result<(Param, Cx), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("bad parameter `{s}` (expected k=re[,im])"))?;
    let p = Param::parse(k).ok_or_else(|| format!("unknown parameter `{k}`"))?;
    Ok((p, parse_complex(v)?))
}

/// The first example's parameters with `overrides` applied. Parameters the
/// record does not take are dropped with a warning.
fn with_overrides(spec: &registry::IdentitySpec, overrides: &[String], err: &mut dyn Write) -> Result<ParamAssignment, Usage> {
    let mut p = spec.examples.first().map(|e| e.params.clone()).unwrap_or_default();
    for s in overrides {
        let (k, v) = parse_assignment(s)?;
        if spec.params.contains(&k) {
            p.insert(k, v);
        } else {
            let _ = writeln!(err, "warning: {} takes no parameter `{k}`; ignored", spec.id);
        }
    }
    Ok(p)
}

/// `lo:hi:count`, both ends included.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let bad = || format!("bad grid `{s}` (expected lo:hi:count)");
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts[..] else { return Err(bad()) };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 || !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n).map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 }).collect())
}

fn sweep(c: &Common, id: &str, param: &str, grid: &str, overrides: &[String], err: &mut dyn Write) -> Result<(Vec<u8>, i32), Usage> {
    let spec = registry::get(id)?;
    let key = Param::parse(param).ok_or_else(|| Usage(format!("unknown parameter `{param}`")))?;
    if !spec.params.contains(&key) {
        return Err(Usage(format!("{id} takes no parameter `{param}`")));
    }
    let grid = parse_grid(grid)?;
    let base = with_overrides(spec, overrides, err)?;
    let mut recs = Vec::with_capacity(grid.len());
    for &x in &grid {
        let mut p = base.clone();
        p.insert(key, Cx::new(x, 0.0));
        let rec = registry::verify(id, &p, c.tol).unwrap_or_else(|e| {
            let mut r = VerificationRecord::new(spec.id, p.clone());
            r.reason = Some(e.to_string());
            r
        });
        recs.push((x, rec));
    }
    let failed = recs.iter().filter(|(_, r)| !r.passed).count();
    for (x, r) in recs.iter().filter(|(_, r)| !r.passed) {
        let _ = writeln!(err, "FAIL {param}={x}: {}", r.reason.as_deref().unwrap_or("failed"));
    }
    let _ = writeln!(err, "{} of {} passed", recs.len() - failed, recs.len());
    let bytes = render_sweep(param, &recs, c.format.unwrap_or(Format::Csv))?;
    let only: Vec<_> = recs.into_iter().map(|(_, r)| r).collect();
    Ok((bytes, exit_code(&only)))
}

fn render_sweep(param: &str, rows: &[(f64, VerificationRecord)], format: Format) -> io::Result<Vec<u8>> {
    let mut out = Vec::new();
    let num = |x: f64| serde_json::to_string(&x).unwrap_or_else(|_| "null".into());
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["param", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "dev"])?;
            for (x, r) in rows {
                w.write_record([num(*x), num(r.lhs.re), num(r.lhs.im), num(r.rhs.re), num(r.rhs.im), num(r.rel_dev)])?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for (x, r) in rows {
                let v = serde_json::json!({
                    param: x,
                    "lhs": [r.lhs.re, r.lhs.im],
                    "rhs": [r.rhs.re, r.rhs.im],
                    "dev": r.rel_dev,
                });
                serde_json::to_writer(&mut out, &v)?;
                out.push(b'\n');
            }
        }
        Format::Pretty => {
            writeln!(out, "{param:>12} {:>24} {:>24} {:>10}", "lhs.re", "rhs.re", "dev")?;
            for (x, r) in rows {
                writeln!(out, "{x:>12.6} {:>24.16e} {:>24.16e} {:>10.2e}", r.lhs.re, r.rhs.re, r.rel_dev)?;
            }
        }
    }
    Ok(out)
}

fn list(filters: &[Filter], format: Format) -> Result<Vec<u8>, Usage> {
    let specs = registry::list_identities(filters);
    let mut out = Vec::new();
    match format {
        Format::Jsonl => {
            for s in specs {
                serde_json::to_writer(&mut out, &s.summary())?;
                out.push(b'\n');
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["id", "family", "kind", "params", "domain"])?;
            for s in specs {
                let params: Vec<_> = s.params.iter().map(|p| p.name()).collect();
                w.write_record([s.id, &s.family.to_string(), s.kind.name(), &params.join(" "), s.domain_text])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for s in specs {
                let params: Vec<_> = s.params.iter().map(|p| p.name()).collect();
                writeln!(out, "{:<16} {:<18} {:<14} {}", s.id, s.kind.name(), params.join(","), s.domain_text)?;
            }
        }
    }
    Ok(out)
}

fn show(id: &str, format: Format) -> Result<Vec<u8>, Usage> {
    let s = registry::get(id)?;
    if format != Format::Pretty {
        let examples: Vec<_> = s
            .examples
            .iter()
            .map(|e| {
                let params: serde_json::Map<String, serde_json::Value> =
                    e.params.iter().map(|(k, v)| (k.name().to_string(), serde_json::json!([v.re, v.im]))).collect();
                serde_json::json!({
                    "params": params,
                    "expr": e.expr,
                    "value": [e.value.re, e.value.im],
                    "printed": [e.printed_value().re, e.printed_value().im],
                    "source": e.source,
                })
            })
            .collect();
        let mut v = serde_json::to_value(s.summary())?;
        v["examples"] = serde_json::Value::Array(examples);
        let mut out = serde_json::to_vec(&v)?;
        out.push(b'\n');
        return Ok(out);
    }
    let mut t = String::new();
    let _ = writeln!(t, "{} ({}, family {})", s.id, s.kind.name(), s.family);
    let _ = writeln!(t, "  anchor: {}", s.anchor);
    let _ = writeln!(t, "  domain: {}", s.domain_text);
    let names: Vec<_> = s.params.iter().map(|p| p.name()).collect();
    let _ = writeln!(t, "  params: {}", names.join(", "));
    if !s.notes.is_empty() {
        let _ = writeln!(t, "  notes:  {}", s.notes);
    }
    for e in &s.examples {
        let v = e.printed_value();
        let _ = write!(t, "  example [{}] {} = {:.16e}", format_params(&e.params), e.expr, v.re);
        if v.im != 0.0 {
            let _ = write!(t, " {:+.16e}i", v.im);
        }
        let _ = writeln!(t, " ({:?})", e.source);
    }
    Ok(t.into_bytes())
}

/// Built-in integrands for `transform`.
pub fn library_integrand(name: &str) -> Option<Integrand<'static>> {
    Some(match name {
        "exp" => Integrand::real(|x| (-x).exp()).with_decay_scale(1.0).with_envelope(Envelope::Exponential { rate: 1.0 }),
        "gaussian" => Integrand::real(|x| (-x * x).exp()).with_decay_scale(1.0).with_envelope(Envelope::Gaussian { rate: 1.0 }),
        "rational" => Integrand::real(|x| 1.0 / (1.0 + x * x)).with_decay_scale(1.0).with_envelope(Envelope::Algebraic),
        "x-exp" => Integrand::real(|x| x * (-x).exp()).with_decay_scale(1.0).with_envelope(Envelope::Exponential { rate: 1.0 }),
        "sinc" => Integrand::real(|x| if x == 0.0 { 1.0 } else { x.sin() / x })
            .with_decay_scale(1.0)
            .with_phase(|x| x)
            .with_envelope(Envelope::Algebraic),
        "exp-sqrt" => Integrand::real(|x| (-x.sqrt()).exp()).with_decay_scale(4.0),
        _ => return None,
    })
}

fn transform(c: &Common, kind: &str, integrand: &str, point: &str) -> Result<(Vec<u8>, i32), Usage> {
    let k = TransformKind::parse(kind).ok_or_else(|| Usage(format!("unknown transform `{kind}`")))?;
    let f = library_integrand(integrand).ok_or_else(|| Usage(format!("unknown integrand `{integrand}`")))?;
    let s = parse_complex(point)?;
    let q = transforms::apply(k, &f, s, crate::quadrature::Tolerance::new(c.tol * 1e-3, c.tol))?;
    let mut out = Vec::new();
    match c.format.unwrap_or(Format::Pretty) {
        Format::Pretty => {
            writeln!(out, "{kind}[{integrand}]({point}) = {:+.16e} {:+.16e}i", q.value.re, q.value.im)?;
            writeln!(out, "  err_est = {:.3e}  evals = {}  converged = {}", q.err_abs, q.n_evals, q.converged)?;
        }
        Format::Jsonl => {
            let v = serde_json::json!({
                "kind": kind,
                "integrand": integrand,
                "point": [s.re, s.im],
                "value": [q.value.re, q.value.im],
                "err_est": q.err_abs,
                "converged": q.converged,
            });
            serde_json::to_writer(&mut out, &v)?;
            out.push(b'\n');
        }
        Format::Csv => {
            let num = |x: f64| serde_json::to_string(&x).unwrap_or_else(|_| "null".into());
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["kind", "integrand", "point_re", "point_im", "value_re", "value_im", "err_est", "converged"])?;
            w.write_record([
                kind.to_string(),
                integrand.to_string(),
                num(s.re),
                num(s.im),
                num(q.value.re),
                num(q.value.im),
                num(q.err_abs),
                q.converged.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok((out, if q.converged { EXIT_OK } else { EXIT_NONCONVERGENCE }))
}
