//! Verification records and their JSON Lines, CSV and text renderings.

use crate::complexmath::Cx;
use crate::params::{format_params, ParamAssignment};
use serde::ser::{SerializeMap, SerializeTuple};
use serde::{Serialize, Serializer};
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

/// Serializes a complex number as `[re, im]`.
pub fn ser_cx<S: Serializer>(z: &Cx, s: S) -> Result<S::Ok, S::Error> {
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

fn ser_params<S: Serializer>(p: &ParamAssignment, s: S) -> Result<S::Ok, S::Error> {
    struct Pair(Cx);
    impl Serialize for Pair {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            ser_cx(&self.0, s)
        }
    }
    let mut m = s.serialize_map(Some(p.len()))?;
    for (k, v) in p {
        m.serialize_entry(k.name(), &Pair(*v))?;
    }
    m.end()
}

/// Outcome of one verification. Only the first nine fields are exported.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub id: String,
    #[serde(serialize_with = "ser_params")]
    pub params: ParamAssignment,
    #[serde(serialize_with = "ser_cx")]
    pub lhs: Cx,
    #[serde(serialize_with = "ser_cx")]
    pub rhs: Cx,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub err_est: f64,
    pub passed: bool,
    pub wall_ms: f64,
    #[serde(skip)]
    pub converged: bool,
    #[serde(skip)]
    pub reason: Option<String>,
    #[serde(skip)]
    pub example: bool,
    #[serde(skip)]
    pub domain_suspect: bool,
}

impl VerificationRecord {
    pub(crate) fn new(id: &str, params: ParamAssignment) -> Self {
        let nan = Cx::new(f64::NAN, f64::NAN);
        VerificationRecord {
            id: id.into(),
            params,
            lhs: nan,
            rhs: nan,
            abs_dev: f64::NAN,
            rel_dev: f64::NAN,
            err_est: f64::NAN,
            passed: false,
            wall_ms: 0.0,
            converged: false,
            reason: None,
            example: false,
            domain_suspect: false,
        }
    }

    /// Failure caused by numerics rather than by a wrong identity.
    pub fn is_nonconvergence(&self) -> bool {
        !self.passed && !self.converged
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
    Pretty,
}

pub const CSV_HEADER: [&str; 9] = ["id", "params", "lhs", "rhs", "abs_dev", "rel_dev", "err_est", "passed", "wall_ms"];

/// `[re,im]` with the shortest round-trip float formatting, as in JSON.
fn cx_text(z: Cx) -> String {
    serde_json::to_string(&[z.re, z.im]).unwrap_or_else(|_| "[null,null]".into())
}

fn float_text(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| "null".into())
}

fn params_text(p: &ParamAssignment) -> String {
    let mut s = String::from("{");
    for (i, (k, v)) in p.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "\"{}\":{}", k.name(), cx_text(*v));
    }
    s.push('}');
    s
}

/// Renders records in `format`. JSON and CSV carry the same numbers,
/// formatted identically.
pub fn render(records: &[VerificationRecord], format: Format) -> io::Result<Vec<u8>> {
    let mut out = Vec::new();
    match format {
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.push(b'\n');
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.write_record([
                    r.id.clone(),
                    params_text(&r.params),
                    cx_text(r.lhs),
                    cx_text(r.rhs),
                    float_text(r.abs_dev),
                    float_text(r.rel_dev),
                    float_text(r.err_est),
                    r.passed.to_string(),
                    float_text(r.wall_ms),
                ])?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for r in records {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {:<20} {}", r.id, format_params(&r.params))?;
                writeln!(out, "     lhs = {:+.16e} {:+.16e}i", r.lhs.re, r.lhs.im)?;
                writeln!(out, "     rhs = {:+.16e} {:+.16e}i", r.rhs.re, r.rhs.im)?;
                writeln!(out, "     abs_dev = {:.3e}  rel_dev = {:.3e}  err_est = {:.3e}  {:.1} ms", r.abs_dev, r.rel_dev, r.err_est, r.wall_ms)?;
                if let Some(why) = &r.reason {
                    writeln!(out, "     {why}")?;
                }
            }
        }
    }
    Ok(out)
}

/// Writes `bytes` to `path` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{real_params, Param};

    fn rec() -> VerificationRecord {
        let mut r = VerificationRecord::new("A.T1", real_params(&[(Param::A, 3.0), (Param::B, 4.0)]));
        r.lhs = Cx::new(0.25, 0.0);
        r.rhs = Cx::new(0.25, -1e-17);
        r.abs_dev = 1e-17;
        r.rel_dev = 4e-17;
        r.err_est = 1e-15;
        r.passed = true;
        r
    }

    #[test]
    fn jsonl_keys_exact() {
        let text = String::from_utf8(render(&[rec()], Format::Jsonl).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut want: Vec<_> = CSV_HEADER.iter().map(|s| s.to_string()).collect();
        want.sort();
        let mut got = keys.clone();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(v["params"]["a"], serde_json::json!([3.0, 0.0]));
        assert_eq!(v["rhs"], serde_json::json!([0.25, -1e-17]));
    }

    #[test]
    fn csv_matches_json_payload() {
        let j = String::from_utf8(render(&[rec()], Format::Jsonl).unwrap()).unwrap();
        let c = String::from_utf8(render(&[rec()], Format::Csv).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(j.trim()).unwrap();
        let mut rdr = csv::Reader::from_reader(c.as_bytes());
        let row = rdr.records().next().unwrap().unwrap();
        assert_eq!(serde_json::from_str::<serde_json::Value>(&row[2]).unwrap(), v["lhs"]);
        assert_eq!(serde_json::from_str::<serde_json::Value>(&row[1]).unwrap(), v["params"]);
        assert_eq!(row[4].parse::<f64>().unwrap(), v["abs_dev"].as_f64().unwrap());
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = std::env::temp_dir().join(format!("ta-report-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("out.jsonl");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), b"two");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
