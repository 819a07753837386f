use std::path::PathBuf;
use std::process::Command;

use dkjoyce_cli::config::{MomentumInput, SuiteConfig, SuiteName};
use dkjoyce_cli::{render, run_suite, CliError, Format, Status};
use dkjoyce_core::dirac_joyce::{joyce_residual, MassParam};
use dkjoyce_core::forms::{io, Window};
use dkjoyce_core::planewave::{family_plus, Branch, EvenAmplitudes, Momentum, PlaneWaveSpec};
use num_complex::Complex64;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn dkjoyce(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dkjoyce"))
        .args(args)
        .env_remove("DKJOYCE_TOL")
        .output()
        .expect("binary runs")
}

#[test]
fn same_seed_same_json() {
    let cfg = SuiteConfig::new(SuiteName::Planewave, [5, 5, 5, 5], 7).unwrap();
    let a = render(&run_suite(&cfg), Format::Json).unwrap();
    let b = render(&run_suite(&cfg), Format::Json).unwrap();
    assert_eq!(a, b);

    let other = SuiteConfig::new(SuiteName::Planewave, [5, 5, 5, 5], 8).unwrap();
    assert_ne!(a, render(&run_suite(&other), Format::Json).unwrap());
}

#[test]
fn off_shell_momentum_fails_dispersion() {
    let mut cfg = SuiteConfig::new(SuiteName::Planewave, [5, 5, 5, 5], 1).unwrap();
    cfg.momentum = Some(MomentumInput::Explicit(Momentum::new(1.0, 1.0, 0.0, 0.0)));
    let report = run_suite(&cfg);
    assert!(!report.passed());
    let gap = report.check("planewave/dispersion-gap").unwrap();
    assert_eq!(gap.status, Status::Fail);
    assert_eq!(gap.value, 1.0);
    let family = report.check("planewave/family-minus-joyce-residual").unwrap();
    assert!(family.detail.as_deref().unwrap().contains("dispersion"));
}

#[test]
fn tiny_window_is_a_config_error() {
    let err = SuiteConfig::new(SuiteName::Identities, [4, 4, 2, 4], 1).unwrap_err();
    assert!(matches!(err, CliError::ConfigInvalid(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn rest_frame_fixture_solves_joyce() {
    let spec = PlaneWaveSpec::from_json(&std::fs::read_to_string(fixture("rest_frame_minus.json")).unwrap()).unwrap();
    let phi = spec.build().unwrap();
    assert!(phi.max_norm() > 0.5);
    let r = joyce_residual(&phi, spec.mass().unwrap(), &spec.window).unwrap();
    assert!(r.interior_max < 1e-12, "{}", r.interior_max);
}

#[test]
fn rest_frame_solution_file_reparses() {
    let path = fixture("rest_frame_plus_solution.json");
    let phi = io::parse_form(&path).unwrap();
    let win = Window::cube(4);
    let m = MassParam::new(1.0).unwrap();
    let r = joyce_residual(&phi, m, &win).unwrap();
    assert_eq!(r.interior_max, 0.0);
    assert!(r.fringe_max > 1.0);

    let p = Momentum::on_shell([0.0; 3], m, Branch::Minus);
    let coeffs = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.5), Complex64::new(-0.25, 0.0), Complex64::new(1.0, -1.0)];
    let rebuilt = family_plus(&coeffs, p, m, &win).unwrap();
    assert_eq!(rebuilt, phi);

    let dir = tempfile::tempdir().unwrap();
    let copy = dir.path().join("phi.json");
    io::serialize_form(&phi, &copy).unwrap();
    assert_eq!(io::parse_form(&copy).unwrap(), phi);
}

#[test]
fn identities_suite_passes() {
    let report = run_suite(&SuiteConfig::new(SuiteName::Identities, [4, 4, 4, 4], 42).unwrap());
    assert!(report.passed(), "{}", report.to_text());
    assert!(report.checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn rest_frame_planewave_suite_passes() {
    let mut cfg = SuiteConfig::new(SuiteName::Planewave, [5, 5, 5, 5], 3).unwrap();
    cfg.momentum = Some(MomentumInput::OnShell { spatial: [0.0; 3], branch: Branch::Plus });
    let report = run_suite(&cfg);
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(report.check("planewave/family-plus-joyce-residual").unwrap().status, Status::Skip);
    assert_eq!(report.check("planewave/family-minus-joyce-residual").unwrap().status, Status::Pass);
}

#[test]
fn scan_has_sixteen_rows() {
    let cfg = SuiteConfig::new(SuiteName::DispersionScan, [4, 4, 4, 4], 0).unwrap();
    let report = run_suite(&cfg);
    assert_eq!(report.scan.len(), 16);
    let rest: Vec<_> = report.scan.iter().filter(|r| r.p1 == 0.0 && r.p2 == 0.0 && r.p3 == 0.0).collect();
    assert_eq!(rest.len(), 2);
    assert!(rest.iter().all(|r| r.residual_interior_max < 1e-12));
    assert_eq!(rest[0].p0, -rest[1].p0);
}

#[test]
fn amplitude_file_is_used() {
    let text = std::fs::read_to_string(fixture("amplitudes.json")).unwrap();
    let a: EvenAmplitudes = serde_json::from_str(&text).unwrap();
    assert_eq!(a.alpha01, Complex64::new(0.0, 1.0));
    assert_eq!(a.alpha23, Complex64::new(0.0, 0.0));
    let mut cfg = SuiteConfig::new(SuiteName::Planewave, [4, 4, 4, 4], 0).unwrap();
    cfg.amplitudes = Some(a);
    cfg.mass = MassParam::new(2.0).unwrap();
    let report = run_suite(&cfg);
    assert_eq!(report.check("planewave/eigen-relation").unwrap().status, Status::Pass);
}

#[test]
fn exit_codes() {
    let out = dkjoyce(&["run", "--suite", "planewave", "--window", "4,4,4,4", "--seed", "1", "--spatial", "0,0,0", "--branch", "-"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["status"], "pass");

    let out = dkjoyce(&["run", "--suite", "planewave", "--window", "4,4,4,4", "--p", "1,1,0,0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("name,status,value,threshold,detail"));

    let out = dkjoyce(&["run", "--suite", "identities", "--window", "2,4,4,4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dkjoyce(&["run", "--suite", "planewave", "--window", "4,4,4,4", "--amplitudes", "/nonexistent/a.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dkjoyce(&["run", "--suite", "planewave", "--window", "4,4,4,4", "--mass", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_dkjoyce"))
            .args(["run", "--suite", "planewave", "--window", "4,4,4,4", "--seed", "2", "--spatial", "0,0,0", "--branch", "+"])
            .env("DKJOYCE_TOL", tol)
            .output()
            .unwrap()
    };
    let out = run("1e-3");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["tolerance"], 1e-3);
    assert_eq!(run("-1").status.code(), Some(2));
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = dkjoyce(&[
        "run", "--suite", "dispersion-scan", "--window", "4,4,4,4", "--grid", "0", "--perturb", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p1,p2,p3,branch,p0,residual_interior_max,residual_perturbed"));
    assert_eq!(lines.count(), 2);
}
