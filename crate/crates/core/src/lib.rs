//! Discrete exterior calculus on the 4D integer lattice: chains and
//! cochains, the coboundary and codifferential, cup product, Hodge star and
//! Clifford product, and the discrete Dirac–Kähler and Joyce equations with
//! their plane-wave solutions.

pub mod clifford;
pub mod complex4;
pub mod dirac_joyce;
pub mod error;
pub mod forms;
pub mod planewave;
pub mod sample;
pub mod scalar;

pub use clifford::{blade_product, clifford_mul, grade_project, unit_form, ConstantForm, UnitFormKind};
pub use complex4::{boundary, pair, Cell, Chain, DirectionSet, MultiIndex};
pub use dirac_joyce::{
    decomposition, dirac_kahler_apply, dk_residual, joyce_apply_rhs, joyce_residual, MassParam, ResidualReport,
};
pub use error::{Error, Result};
pub use forms::{DiscreteForm, InhomogeneousForm, Window};
pub use planewave::{Branch, EvenAmplitudes, Momentum, PlaneWaveSpec, WaveLabel};
pub use scalar::{GaussianRational, Scalar};
