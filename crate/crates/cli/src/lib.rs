//! Verification harness for the lattice Dirac-Kähler and Joyce operators.
//!
//! `dkjoyce run` executes one of the check suites and writes a report as JSON,
//! CSV or text. Exit code 0 means every check passed, 1 that at least one
//! failed and 2 that the configuration or I/O was invalid.

pub mod checks;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use dkjoyce_core::dirac_joyce::MassParam;
use dkjoyce_core::planewave::{Branch, EvenAmplitudes, Momentum};

pub use config::{Format, MomentumInput, SuiteConfig, SuiteName};
pub use error::{CliError, Result};
pub use report::{CheckResult, ScanRow, Status, SuiteReport};
pub use suite::run_suite;

#[derive(Debug, Parser)]
#[command(name = "dkjoyce", version, about = "Checks for the lattice Dirac-Kähler and Joyce equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a check suite.
    Run(RunArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteName,
    /// Window extents `n0,n1,n2,n3`.
    #[arg(long)]
    pub window: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Explicit momentum `p0,p1,p2,p3`.
    #[arg(long, conflicts_with_all = ["spatial", "branch"])]
    pub p: Option<String>,
    /// Spatial momentum `p1,p2,p3`; `p0` is put on shell.
    #[arg(long, requires = "branch")]
    pub spatial: Option<String>,
    #[arg(long, requires = "spatial", allow_hyphen_values = true)]
    pub branch: Option<Branch>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub mass: f64,
    /// JSON object with fields `alpha0` .. `alpha4`, each `[re, im]`.
    #[arg(long)]
    pub amplitudes: Option<PathBuf>,
    /// Spatial momentum values for the dispersion scan.
    #[arg(long, default_value = "0,0.5")]
    pub grid: String,
    /// Also report residuals with `p0` shifted off shell.
    #[arg(long)]
    pub perturb: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    pub fn to_config(&self) -> Result<SuiteConfig> {
        let mut cfg = SuiteConfig::new(self.suite, config::parse_list(&self.window)?, self.seed)?;
        cfg.mass = MassParam::new(self.mass)?;
        cfg.momentum = match (&self.p, &self.spatial, self.branch) {
            (Some(p), _, _) => Some(MomentumInput::Explicit(Momentum(config::parse_list(p)?))),
            (None, Some(s), Some(branch)) => Some(MomentumInput::OnShell { spatial: config::parse_list(s)?, branch }),
            _ => None,
        };
        if let Some(path) = &self.amplitudes {
            let a: EvenAmplitudes = serde_json::from_str(&fs::read_to_string(path)?)
                .map_err(|e| CliError::ConfigInvalid(format!("{}: {e}", path.display())))?;
            if !a.is_finite() {
                return Err(CliError::ConfigInvalid(format!("{}: non-finite amplitude", path.display())));
            }
            cfg.amplitudes = Some(a);
        }
        cfg.grid = config::parse_grid(&self.grid)?;
        cfg.perturb = self.perturb;
        cfg.format = self.format;
        cfg.out = self.out.clone();
        let cfg = cfg.with_env_tolerance()?;
        cfg.validate()?;
        Ok(cfg)
    }
}

pub fn render(report: &SuiteReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Text => Ok(report.to_text()),
    }
}

/// Runs the suite and writes the report; returns the exit code.
pub fn execute(cfg: &SuiteConfig) -> Result<i32> {
    let report = run_suite(cfg);
    let text = render(&report, cfg.format)?;
    match &cfg.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn main_with(cli: Cli) -> i32 {
    let Command::Run(args) = cli.command;
    match args.to_config().and_then(|cfg| execute(&cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("dkjoyce: {e}");
            e.exit_code()
        }
    }
}
