use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use framed_core::framing::invariants as framing_invariants;
use framed_core::graphs::{build_graph, p_set, theta_over, GraphKind, GraphSnapshot};
use framed_core::strata::{is_divisorial_candidate, level_assignments};
use framed_core::witness::{find_disjoint_flat, verify_certificate, FlatCertificate};
use framed_core::{canonical_triangulation, SurfaceType};

use crate::config::{parse_multicurve, RunConfig, SurfaceArgs};
use crate::CliError;

/// Largest bound accepted for graphs of single curves and of multicurves.
const MAX_CURVE_BOUND: u32 = 48;
const MAX_MULTICURVE_BOUND: u32 = 24;

fn bound_limit(kind: GraphKind) -> u32 {
    match kind {
        GraphKind::Cadm | GraphKind::GenusSep => MAX_CURVE_BOUND,
        GraphKind::ModelK | GraphKind::ModelKbar | GraphKind::EGraph => MAX_MULTICURVE_BOUND,
    }
}

fn check_bound(kind: GraphKind, bound: u32) -> Result<(), CliError> {
    let limit = bound_limit(kind);
    if bound > limit {
        return Err(CliError::Resource(format!("bound {bound} exceeds the limit {limit} for {}", kind.name())));
    }
    Ok(())
}

fn write(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Stdout may be a closed pipe; that is not an error of the run.
fn say(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn print_json<T: Serialize>(v: &T) {
    say(&serde_json::to_string_pretty(v).expect("report serializes"));
}

pub fn graph(kind: &str, s: &SurfaceArgs, bound: u32, out: &Path) -> Result<(), CliError> {
    let kind = GraphKind::from_str(kind).map_err(CliError::usage)?;
    let cfg = RunConfig::new(s).with_bound("total_weight", bound);
    let (tri, phi) = cfg.build()?;
    check_bound(kind, bound)?;
    if bound == 0 {
        eprintln!("warning: bound 0 admits no curves; writing an empty graph");
    }
    let snap = build_graph(&tri, kind, &phi, bound)?;
    if snap.undecided > 0 {
        eprintln!("warning: {} multicurves left undecided at bound {bound}", snap.undecided);
    }
    fs::create_dir_all(out).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out.display())))?;
    let stem = format!("{}_g{}_n{}_b{bound}", kind.name(), s.g, s.n);
    let files = [("json", snap.to_json()), ("dot", snap.to_dot()), ("csv", snap.distance_csv())];
    for (ext, body) in &files {
        let p = out.join(format!("{stem}.{ext}"));
        write(&p, body)?;
        say(&p.display().to_string());
    }
    eprintln!("{} vertices, {} edges", snap.len(), snap.edges.len());
    Ok(())
}

pub fn flat(s: &SurfaceArgs, arf: Option<u8>, out: &Path) -> Result<(), CliError> {
    if arf.is_some_and(|a| a > 1) {
        return Err(CliError::Usage("--arf takes 0 or 1".into()));
    }
    let cert = find_disjoint_flat(s.g, s.n, &s.sig, arf).map_err(|e| match e {
        framed_core::Error::Construction(_) => CliError::from(e),
        _ => CliError::usage(e),
    })?;
    let report = verify_certificate(&cert)?;
    if let Some(f) = report.first_failure {
        return Err(CliError::Check(format!("constructed certificate fails: {f}")));
    }
    let body = serde_json::to_string_pretty(&cert).expect("certificate serializes");
    write(out, &body)?;
    say(&out.display().to_string());
    eprintln!("x = {:?}", cert.x);
    Ok(())
}

pub fn verify(path: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("parse failure: {e}")))?;
    let checks = if v.get("alpha_words").is_some() {
        let cert: FlatCertificate = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("not a certificate: {e}")))?;
        verify_certificate(&cert).map_err(CliError::usage)?.checks
    } else if v.get("edges").is_some() && v.get("kind").is_some() {
        verify_snapshot(&v, &text)?
    } else {
        return Err(CliError::Usage("neither a certificate nor a graph snapshot".into()));
    };
    for (name, ok) in &checks {
        say(&format!("{} {name}", if *ok { "ok  " } else { "FAIL" }));
    }
    match checks.iter().find(|c| !c.1) {
        Some((name, _)) => Err(CliError::Check(format!("first failing check: {name}"))),
        None => Ok(()),
    }
}

/// A snapshot is checked by rebuilding it from its own framing and bound.
fn verify_snapshot(v: &Value, text: &str) -> Result<Vec<(String, bool)>, CliError> {
    let surface: SurfaceType =
        serde_json::from_value(v["surface"].clone()).map_err(|e| CliError::Usage(format!("bad surface: {e}")))?;
    let tri = canonical_triangulation(surface.g, surface.n).map_err(CliError::usage)?;
    let snap = GraphSnapshot::from_json(&tri, text).map_err(CliError::usage)?;
    check_bound(snap.kind, snap.bound)?;
    let fresh = build_graph(&tri, snap.kind, &snap.framing, snap.bound)?;
    let in_range = snap.edges.iter().all(|&(u, w, _)| u < snap.len() && w < snap.len() && u != w);
    Ok(vec![
        ("edge endpoints are vertices".into(), in_range),
        ("vertices match a rebuild".into(), fresh.vertices == snap.vertices),
        ("edges match a rebuild".into(), fresh.edges == snap.edges),
        ("undecided count matches".into(), fresh.undecided == snap.undecided),
    ])
}

pub fn invariants(s: &SurfaceArgs) -> Result<(), CliError> {
    let cfg = RunConfig::new(s);
    let (tri, phi) = cfg.build()?;
    print_json(&json!({ "config": cfg, "invariants": framing_invariants(&tri, &phi) }));
    Ok(())
}

pub fn theta(s: &SurfaceArgs, mu: &str, bound: u32, target_bound: u32, count: usize) -> Result<(), CliError> {
    let cfg = RunConfig::new(s).with_bound("p_set", bound).with_bound("target", target_bound);
    let (tri, phi) = cfg.build()?;
    check_bound(GraphKind::ModelK, bound)?;
    check_bound(GraphKind::Cadm, target_bound)?;
    let mu = parse_multicurve(&tri, mu)?;
    let p = p_set(&tri, &phi, &mu, bound)?;
    if p.is_empty() {
        return Err(CliError::Resource(format!("P(μ) is empty at bound {bound}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut picked: Vec<usize> = sample(&mut rng, p.len(), count.clamp(1, p.len())).into_vec();
    picked.sort_unstable();
    let alphas: Vec<_> = picked.iter().map(|&i| p[i].clone()).collect();
    let target = build_graph(&tri, GraphKind::Cadm, &phi, target_bound)?;
    let r = theta_over(&tri, &phi, &mu, &alphas, bound, &target)?;
    print_json(&json!({ "config": cfg, "p_set_size": p.len(), "sampled": picked, "result": r }));
    Ok(())
}

pub fn levels(s: &SurfaceArgs, mu: &str) -> Result<(), CliError> {
    let cfg = RunConfig::new(s);
    let (tri, phi) = cfg.build()?;
    let gamma = parse_multicurve(&tri, mu)?;
    let splittings = level_assignments(&tri, &phi, &gamma)?;
    let candidate = if phi.is_holomorphic_type() { Some(is_divisorial_candidate(&tri, &phi, &gamma)?) } else { None };
    print_json(&json!({ "config": cfg, "splittings": splittings, "candidate": candidate }));
    Ok(())
}
