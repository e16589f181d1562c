//! The command line, in process and through the built binary.

use clap::Parser;
use integral_identities::cli::{exit_code, parse_complex, parse_grid, run, CliConfig, EXIT_FAIL, EXIT_NONCONVERGENCE, EXIT_OK, EXIT_USAGE};
use integral_identities::params::{real_params, Param};
use integral_identities::registry::verify;
use std::process::Command;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn tatlas(args: &[&str]) -> Outcome {
    let cfg = CliConfig::try_parse_from(std::iter::once("tatlas").chain(args.iter().copied())).expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cfg, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

#[test]
fn verify_printed_example() {
    let o = tatlas(&["verify", "A.T1", "a=3", "b=4"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.out.starts_with("PASS A.T1"));
    // √π/(5e)
    assert_eq!(o.out.matches("1.30409866434658").count(), 2, "{}", o.out);
}

#[test]
fn verify_without_params_runs_examples() {
    let o = tatlas(&["verify", "B.T2"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.out.matches("PASS").count(), integral_identities::registry::get("B.T2").unwrap().examples.len());
}

#[test]
fn selftest_and_examples_only_run() {
    let o = tatlas(&["verify-all", "--samples", "0", "--no-timings"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    let s = tatlas(&["selftest", "--no-timings"]);
    assert_eq!(s.out, o.out);
}

#[test]
fn sweep_of_theorem_c() {
    let o = tatlas(&["sweep", "C.T3", "b", "0:8:33", "a=2", "c=1", "--format", "csv"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    assert!(o.err.contains("takes no parameter `c`"));
    let mut rdr = csv::Reader::from_reader(o.out.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["param", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "dev"]);
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 33);
    assert_eq!(&rows[0][0], "0.0");
    assert_eq!(&rows[32][0], "8.0");
    for r in &rows {
        assert!(r[5].parse::<f64>().unwrap() < 1e-8, "{r:?}");
    }
}

#[test]
fn output_is_deterministic_and_formats_agree() {
    let args = ["verify-all", "-f", "family=A", "--samples", "2", "--no-timings"];
    let j1 = tatlas(&[&args[..], &["--format", "jsonl"]].concat());
    let j2 = tatlas(&[&args[..], &["--format", "jsonl", "--serial"]].concat());
    assert_eq!(j1.out, j2.out);
    let c = tatlas(&[&args[..], &["--format", "csv"]].concat());
    let mut rdr = csv::Reader::from_reader(c.out.as_bytes());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    let lines: Vec<_> = j1.out.lines().collect();
    assert_eq!(rows.len(), lines.len());
    for (row, line) in rows.iter().zip(lines) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.as_object().unwrap().len(), headers.len());
        for (h, cell) in headers.iter().zip(row.iter()) {
            let parsed: serde_json::Value = if h == "id" { cell.into() } else { serde_json::from_str(cell).unwrap() };
            assert_eq!(parsed, v[h], "column {h}");
        }
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("tatlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.jsonl");
    let o = tatlas(&["verify-all", "-f", "family=E", "--samples", "0", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), integral_identities::registry::list_identities(&[integral_identities::registry::Filter::Family('E')]).iter().map(|s| s.examples.len()).sum::<usize>());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn list_show_and_transform() {
    let l = tatlas(&["list", "-f", "family=C"]);
    assert_eq!(l.out.lines().count(), 5);
    let s = tatlas(&["show", "G.GammaIntegral"]);
    assert!(s.out.contains("anchor:") && s.out.contains("domain:") && s.out.contains("example ["));
    let t = tatlas(&["transform", "laplace", "exp", "1", "--format", "jsonl"]);
    assert_eq!(t.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(t.out.trim()).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 0.5).abs() < 1e-12);
    let g = tatlas(&["transform", "fourier-cos", "gaussian", "2"]);
    assert_eq!(g.code, EXIT_OK);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tatlas(&["verify", "Q.Missing"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["verify", "A.T1", "a=three"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["verify", "A.T1", "a=-3"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["sweep", "C.T3", "b", "0:8"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["list", "-f", "shape=round"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["transform", "hankel", "exp", "1"]).code, EXIT_USAGE);
    assert_eq!(tatlas(&["verify-all", "--tol", "0"]).code, EXIT_USAGE);
}

#[test]
fn exit_code_classes() {
    let ok = verify("A.T1", &real_params(&[(Param::A, 3.0), (Param::B, 4.0)]), 1e-10).unwrap();
    assert_eq!(exit_code(std::slice::from_ref(&ok)), EXIT_OK);
    let mut slow = ok.clone();
    slow.passed = false;
    slow.converged = false;
    slow.reason = Some("non-convergence: evaluation budget exhausted".into());
    assert_eq!(exit_code(&[ok.clone(), slow.clone()]), EXIT_NONCONVERGENCE);
    let mut wrong = ok.clone();
    wrong.passed = false;
    wrong.reason = Some("deviation beyond tolerance".into());
    assert_eq!(exit_code(&[slow, wrong, ok]), EXIT_FAIL);
}

#[test]
fn literals_and_grids() {
    assert_eq!(parse_complex("2.5").unwrap(), integral_identities::Cx::new(2.5, 0.0));
    assert_eq!(parse_complex("1,-0.5").unwrap(), integral_identities::Cx::new(1.0, -0.5));
    assert!(parse_complex("(1,2)").is_err());
    let g = parse_grid("0:8:33").unwrap();
    assert_eq!((g.len(), g[0], g[1], g[32]), (33, 0.0, 0.25, 8.0));
    assert_eq!(parse_grid("1:2:1").unwrap(), vec![1.0]);
    assert!(parse_grid("1:2:0").is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tatlas");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["verify", "A.T1", "a=3", "b=4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("PASS"));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(status(&["verify"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
