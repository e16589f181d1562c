//! Catalog structure, sampling and the runner.

use integral_identities::params::{real_params, Param, ParamAssignment};
use integral_identities::registry::{self, catalog, get, list_identities, sample_params, verify, verify_all, Filter, RegistryError, RunOptions};
use integral_identities::Cx;
use std::collections::HashSet;

fn filter(s: &str) -> Vec<Filter> {
    vec![Filter::parse(s).unwrap()]
}

#[test]
fn catalog_size_and_unique_ids() {
    let ids: HashSet<_> = catalog().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), catalog().len());
    assert!(catalog().len() >= 45, "{} records", catalog().len());
    for s in catalog() {
        assert!(!s.examples.is_empty(), "{} has no example", s.id);
        assert!(!s.anchor.is_empty() && !s.domain_text.is_empty());
    }
}

#[test]
fn family_and_kind_filters() {
    assert_eq!(list_identities(&filter("family=C")).len(), 5);
    assert_eq!(list_identities(&filter("family=B")).len(), 8);
    assert_eq!(list_identities(&filter("kind=erf-representation")).len(), 4);
    assert_eq!(list_identities(&filter("id=G.Mellin")).len(), 1);
    let mut both = filter("family=A");
    both.extend(filter("kind=theorem"));
    let ids: Vec<_> = list_identities(&both).iter().map(|s| s.id).collect();
    assert_eq!(ids, ["A.T1"]);
    assert!(matches!(Filter::parse("colour=red"), Err(RegistryError::Filter(_))));
}

#[test]
fn listing_is_sorted() {
    let ids: Vec<_> = list_identities(&[]).iter().map(|s| s.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn samples_start_with_examples_and_are_seeded() {
    for s in catalog() {
        let pts = sample_params(s.id, 42, 5).unwrap();
        assert_eq!(pts.len(), s.examples.len() + 5, "{}", s.id);
        for (p, e) in pts.iter().zip(&s.examples) {
            assert_eq!(p, &e.params);
        }
        for p in &pts[s.examples.len()..] {
            s.check_domain(p).unwrap_or_else(|e| panic!("{}: drawn point rejected: {e}", s.id));
        }
        assert_eq!(pts, sample_params(s.id, 42, 5).unwrap());
        assert_ne!(pts, sample_params(s.id, 43, 5).unwrap(), "{}", s.id);
    }
}

#[test]
fn erf_representation_draws_respect_the_printed_domain() {
    for p in sample_params("C.R1", 7, 50).unwrap() {
        let (v, z) = (p[&Param::V], p[&Param::Z]);
        assert!(v.re > 0.0 && (v * v).re > (z * z).re, "v = {v}, z = {z}");
    }
}

#[test]
fn gamma_integral_draws_are_rational() {
    for p in sample_params("G.GammaIntegral", 42, 40).unwrap() {
        let mu = p[&Param::Mu];
        assert!(mu.re < 0.0 && mu.re > -2.0);
        assert_eq!((mu.re * 64.0).fract(), 0.0);
        assert_eq!((mu.im * 64.0).fract(), 0.0);
    }
}

#[test]
fn scaled_record_at_unit_c_matches_base_bitwise() {
    let tol = 1e-10;
    for (a, b) in [(3.0, 4.0), (1.0, 0.5), (0.7, 5.0)] {
        let base = verify("C.T3", &real_params(&[(Param::A, a), (Param::B, b)]), tol).unwrap();
        let scaled = verify("C.Cc", &real_params(&[(Param::A, a), (Param::B, b), (Param::C, 1.0)]), tol).unwrap();
        assert_eq!(base.lhs, scaled.lhs);
        assert_eq!(base.rhs, scaled.rhs);
        assert_eq!(base.err_est, scaled.err_est);
    }
}

#[test]
fn domain_and_lookup_errors() {
    assert!(matches!(get("Z.Nope"), Err(RegistryError::UnknownId(_))));
    let missing = real_params(&[(Param::A, 3.0)]);
    assert!(matches!(verify("A.T1", &missing, 1e-10), Err(RegistryError::Param(_))));
    let outside = real_params(&[(Param::A, -1.0), (Param::B, 4.0)]);
    assert!(matches!(verify("A.T1", &outside, 1e-10), Err(RegistryError::Domain { .. })));
    let mut extra: ParamAssignment = real_params(&[(Param::A, 3.0), (Param::B, 4.0)]);
    extra.insert(Param::Z, Cx::new(1.0, 0.0));
    assert!(matches!(verify("A.T1", &extra, 1e-10), Err(RegistryError::Domain { .. })));
}

#[test]
fn verify_reports_both_sides() {
    let r = verify("A.T1", &real_params(&[(Param::A, 3.0), (Param::B, 4.0)]), 1e-10).unwrap();
    let want = std::f64::consts::PI.sqrt() / (5.0 * 1f64.exp());
    assert!(r.passed && r.converged && r.reason.is_none());
    assert!((r.rhs.re - want).abs() < 1e-16);
    assert!(r.abs_dev <= 1e-10 * want);
}

#[test]
fn runner_is_deterministic_and_ordered() {
    let opts = RunOptions { samples: 2, filters: filter("family=E"), ..RunOptions::default() };
    let strip = |mut v: Vec<registry::VerificationRecord>| {
        v.iter_mut().for_each(|r| r.wall_ms = 0.0);
        v
    };
    let par = strip(verify_all(&opts));
    let ser = strip(verify_all(&RunOptions { parallel: false, ..opts.clone() }));
    assert_eq!(par, ser);
    let order: Vec<_> = catalog().iter().filter(|s| s.family == 'E').map(|s| s.id).collect();
    let mut seen: Vec<&str> = par.iter().map(|r| r.id.as_str()).collect();
    seen.dedup();
    assert_eq!(seen, order);
    assert!(par.iter().all(|r| r.passed), "{:?}", par.iter().find(|r| !r.passed));
}

#[test]
fn examples_only_run_passes() {
    let recs = verify_all(&RunOptions { samples: 0, ..RunOptions::default() });
    let total: usize = catalog().iter().map(|s| s.examples.len()).sum();
    assert_eq!(recs.len(), total);
    let failed: Vec<_> = recs.iter().filter(|r| !r.passed).map(registry::describe).collect();
    assert!(failed.is_empty(), "{failed:?}");
}
