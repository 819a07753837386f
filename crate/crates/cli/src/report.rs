use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::config::SuiteName;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to the inputs, for example a family whose denominator vanishes.
    Skip,
}

/// One named check. `value ≤ threshold` passes unless an error was recorded.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub value: f64,
    pub threshold: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckResult {
    pub fn measured(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        let status = if value <= threshold { Status::Pass } else { Status::Fail };
        CheckResult { name: name.into(), status, value, threshold, detail: None, runtime: Duration::ZERO }
    }

    /// A check that could not be evaluated.
    pub fn error(name: impl Into<String>, threshold: f64, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Fail,
            value: f64::NAN,
            threshold,
            detail: Some(detail.into()),
            runtime: Duration::ZERO,
        }
    }

    pub fn skipped(name: impl Into<String>, threshold: f64, detail: impl Into<String>) -> Self {
        CheckResult { status: Status::Skip, ..CheckResult::error(name, threshold, detail) }
    }

    /// A lower-bound check: passes when `value ≥ threshold`.
    pub fn at_least(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        let mut c = CheckResult::measured(name, value, threshold);
        c.status = if value >= threshold { Status::Pass } else { Status::Fail };
        c
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// True unless the check failed; skipped checks count as passed.
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// A row of the dispersion scan.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub branch: String,
    pub p0: f64,
    pub residual_interior_max: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_perturbed: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub seed: u64,
    pub window: [i64; 4],
    pub mass: f64,
    pub tolerance: f64,
    pub status: Status,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub scan: Vec<ScanRow>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn new(suite: SuiteName, seed: u64, window: [i64; 4], mass: f64, tolerance: f64) -> Self {
        SuiteReport {
            suite,
            seed,
            window,
            mass,
            tolerance,
            status: Status::Pass,
            checks: Vec::new(),
            scan: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    /// Sorts checks by name and settles the overall status.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.status = if self.checks.iter().all(CheckResult::passed) { Status::Pass } else { Status::Fail };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The scan table when present, otherwise one row per check.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if !self.scan.is_empty() {
            let perturbed = self.scan.iter().any(|r| r.residual_perturbed.is_some());
            let mut header = vec!["p1", "p2", "p3", "branch", "p0", "residual_interior_max"];
            if perturbed {
                header.push("residual_perturbed");
            }
            w.write_record(&header)?;
            for r in &self.scan {
                let mut rec = vec![
                    r.p1.to_string(),
                    r.p2.to_string(),
                    r.p3.to_string(),
                    r.branch.clone(),
                    r.p0.to_string(),
                    format!("{:e}", r.residual_interior_max),
                ];
                if perturbed {
                    rec.push(r.residual_perturbed.map(|v| format!("{v:e}")).unwrap_or_default());
                }
                w.write_record(&rec)?;
            }
        } else {
            w.write_record(["name", "status", "value", "threshold", "detail"])?;
            for c in &self.checks {
                w.write_record([
                    c.name.clone(),
                    format!("{:?}", c.status).to_lowercase(),
                    format!("{:e}", c.value),
                    format!("{:e}", c.threshold),
                    c.detail.clone().unwrap_or_default(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let _ = write!(s, "{mark}  {:width$}  {:>10.3e} <= {:.0e}", c.name, c.value, c.threshold);
            if let Some(d) = &c.detail {
                let _ = write!(s, "  ({d})");
            }
            let _ = writeln!(s, "  [{:.1} ms]", c.runtime.as_secs_f64() * 1e3);
        }
        if !self.scan.is_empty() {
            let _ = writeln!(s, "\n{:>6} {:>6} {:>6} {:>2} {:>10} {:>12}", "p1", "p2", "p3", "", "p0", "residual");
            for r in &self.scan {
                let _ = write!(s, "{:>6} {:>6} {:>6} {:>2} {:>10.6} {:>12.3e}", r.p1, r.p2, r.p3, r.branch, r.p0, r.residual_interior_max);
                if let Some(v) = r.residual_perturbed {
                    let _ = write!(s, " {v:>12.3e}");
                }
                s.push('\n');
            }
        }
        let count = |st: Status| self.checks.iter().filter(|c| c.status == st).count();
        let _ = writeln!(
            s,
            "\n{}/{} checks passed, {} skipped (seed {}, window {:?}, {:.2} s)",
            count(Status::Pass),
            self.checks.len(),
            count(Status::Skip),
            self.seed,
            self.window,
            self.runtime.as_secs_f64()
        );
        s
    }
}
