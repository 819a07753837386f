use std::path::PathBuf;
use std::str::FromStr;

use dkjoyce_core::dirac_joyce::MassParam;
use dkjoyce_core::forms::Window;
use dkjoyce_core::planewave::{Branch, EvenAmplitudes, Momentum};
use serde::Serialize;

use crate::error::{CliError, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const TOLERANCE_ENV: &str = "DKJOYCE_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Identities,
    Planewave,
    DispersionScan,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// How the plane-wave momentum is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentumInput {
    Explicit(Momentum),
    OnShell { spatial: [f64; 3], branch: Branch },
}

impl MomentumInput {
    pub fn resolve(&self, m: MassParam) -> Momentum {
        match *self {
            MomentumInput::Explicit(p) => p,
            MomentumInput::OnShell { spatial, branch } => Momentum::on_shell(spatial, m, branch),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub window: Window,
    pub seed: u64,
    pub momentum: Option<MomentumInput>,
    pub mass: MassParam,
    pub amplitudes: Option<EvenAmplitudes>,
    pub tolerance: f64,
    /// Spatial momentum values combined on each axis by the dispersion scan.
    pub grid: Vec<f64>,
    pub perturb: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName, window: [i64; 4], seed: u64) -> Result<Self> {
        let cfg = SuiteConfig {
            suite,
            window: Window::new(window).map_err(|e| CliError::ConfigInvalid(e.to_string()))?,
            seed,
            momentum: None,
            mass: MassParam::new(1.0)?,
            amplitudes: None,
            tolerance: DEFAULT_TOLERANCE,
            grid: vec![0.0, 0.5],
            perturb: false,
            format: Format::Json,
            out: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.window.extents();
        if n.iter().any(|&e| e < 3) {
            return Err(CliError::ConfigInvalid(format!("window extents must be at least 3, got {n:?}")));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::ConfigInvalid(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.grid.is_empty() || self.grid.iter().any(|v| !v.is_finite()) {
            return Err(CliError::ConfigInvalid("scan grid must be a non-empty list of finite values".into()));
        }
        Ok(())
    }

    /// Applies `DKJOYCE_TOL` when set.
    pub fn with_env_tolerance(mut self) -> Result<Self> {
        if let Ok(text) = std::env::var(TOLERANCE_ENV) {
            self.tolerance = parse_tolerance(&text)?;
        }
        Ok(self)
    }
}

pub fn parse_tolerance(text: &str) -> Result<f64> {
    match f64::from_str(text.trim()) {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(CliError::ConfigInvalid(format!("{TOLERANCE_ENV} must be a positive number, got {text:?}"))),
    }
}

/// Parses `a,b,c,...` into exactly `N` values.
pub fn parse_list<T: FromStr, const N: usize>(text: &str) -> Result<[T; N]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(CliError::ConfigInvalid(format!("expected {N} comma-separated values, got {text:?}")));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(p.parse().map_err(|_| CliError::ConfigInvalid(format!("cannot parse {p:?} in {text:?}")))?);
    }
    Ok(out.try_into().ok().expect("length checked"))
}

pub fn parse_grid(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|p| p.trim().parse().map_err(|_| CliError::ConfigInvalid(format!("cannot parse grid value {p:?}"))))
        .collect()
}
