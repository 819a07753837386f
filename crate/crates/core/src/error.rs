use thiserror::Error;

use crate::complex4::{DirectionSet, MultiIndex};

#[derive(Debug, Error)]
pub enum Error {
    #[error("window extents must be positive, got {0:?}")]
    InvalidWindow([i64; 4]),

    #[error("coefficient at {k} ({dirs}) lies outside the window")]
    NotAdmissible { k: MultiIndex, dirs: DirectionSet },

    #[error("mass parameter must be positive and finite, got {0}")]
    InvalidMass(f64),

    #[error("input has odd-grade content of size {0:e}")]
    NotEven(f64),

    #[error("|{which}| = {value:e} is below the degeneracy threshold; try {alternative} instead")]
    DegenerateDenominator {
        which: &'static str,
        value: f64,
        alternative: &'static str,
    },

    #[error("dispersion relation violated: p0^2 - m^2 - |p|^2 = {gap:e}")]
    DispersionViolated { gap: f64 },

    #[error("record {index}: {reason}")]
    Schema { index: usize, reason: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
