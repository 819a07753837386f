use std::time::Instant;

use dkjoyce_core::planewave::{Branch, Momentum};
use dkjoyce_core::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checks::{self, WaveInputs};
use crate::config::{MomentumInput, SuiteConfig, SuiteName};
use crate::report::{CheckResult, ScanRow, SuiteReport};

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport::new(cfg.suite, cfg.seed, cfg.window.extents(), cfg.mass.value(), cfg.tolerance);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    if matches!(cfg.suite, SuiteName::Identities | SuiteName::All) {
        report.checks.extend(checks::identity_checks(&cfg.window, cfg.tolerance, &mut rng));
    }
    if matches!(cfg.suite, SuiteName::Planewave | SuiteName::All) {
        let inputs = wave_inputs(cfg, &mut rng);
        report.checks.extend(checks::planewave_checks(&cfg.window, cfg.tolerance, &inputs));
    }
    if matches!(cfg.suite, SuiteName::DispersionScan | SuiteName::All) {
        let (rows, scan_checks) = dispersion_scan(cfg);
        report.scan = rows;
        report.checks.extend(scan_checks);
    }
    report.runtime = start.elapsed();
    report.finish()
}

/// Amplitudes from the config or drawn from the seed; momentum defaults to the
/// positive branch over a random spatial momentum in `[-1, 1]³`.
pub fn wave_inputs(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> WaveInputs {
    let spatial: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
    let drawn = sample::amplitudes(rng);
    let p = cfg
        .momentum
        .unwrap_or(MomentumInput::OnShell { spatial, branch: Branch::Plus })
        .resolve(cfg.mass);
    WaveInputs { p, m: cfg.mass, amplitudes: cfg.amplitudes.unwrap_or(drawn) }
}

/// Every spatial momentum in `grid³` on both branches.
pub fn dispersion_scan(cfg: &SuiteConfig) -> (Vec<ScanRow>, Vec<CheckResult>) {
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for &p1 in &cfg.grid {
        for &p2 in &cfg.grid {
            for &p3 in &cfg.grid {
                for branch in Branch::BOTH {
                    let spatial = [p1, p2, p3];
                    let started = Instant::now();
                    let (p, residual, perturbed) = checks::scan_point(spatial, branch, cfg.mass, &cfg.window, cfg.perturb);
                    let name = format!("scan/{}/p=({p1},{p2},{p3})", branch_tag(branch));
                    let mut check = match &residual {
                        Ok(r) => CheckResult::measured(name.clone(), *r, cfg.tolerance),
                        Err(e) => CheckResult::error(name.clone(), cfg.tolerance, e.to_string()),
                    };
                    check.runtime = started.elapsed();
                    out.push(check);
                    if let Some(v) = perturbed {
                        out.push(CheckResult::at_least(format!("{name}/perturbed"), v, checks::PERTURBATION_FLOOR));
                    }
                    rows.push(row(spatial, branch, p, residual.unwrap_or(f64::NAN), perturbed));
                }
            }
        }
    }
    (rows, out)
}

fn branch_tag(b: Branch) -> &'static str {
    match b {
        Branch::Plus => "plus",
        Branch::Minus => "minus",
    }
}

fn row(spatial: [f64; 3], branch: Branch, p: Momentum, residual: f64, perturbed: Option<f64>) -> ScanRow {
    ScanRow {
        p1: spatial[0],
        p2: spatial[1],
        p3: spatial[2],
        branch: branch.to_string(),
        p0: p.p0(),
        residual_interior_max: residual,
        residual_perturbed: perturbed,
    }
}
