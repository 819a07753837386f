//! Python bindings. Forms are exchanged as [`Form`] objects or as the JSON
//! record format; momenta and windows as 4-tuples.

use dkjoyce_cli::config::{MomentumInput, SuiteConfig, SuiteName};
use dkjoyce_core::clifford::clifford_mul;
use dkjoyce_core::complex4::{DirectionSet, MultiIndex};
use dkjoyce_core::dirac_joyce::{self, MassParam, ResidualReport};
use dkjoyce_core::forms::{self, io, DiscreteForm, InhomogeneousForm, Window};
use dkjoyce_core::planewave::{self, Branch, EvenAmplitudes, Momentum, WaveLabel};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn window(n: [i64; 4]) -> PyResult<Window> {
    Window::new(n).map_err(value_error)
}

fn mass(m: f64) -> PyResult<MassParam> {
    MassParam::new(m).map_err(value_error)
}

fn branch(text: &str) -> PyResult<Branch> {
    text.parse().map_err(value_error)
}

fn amplitudes(values: [Complex64; 8]) -> EvenAmplitudes {
    EvenAmplitudes::from_array(values)
}

fn apply_graded(w: &InhomogeneousForm, f: impl Fn(&DiscreteForm) -> DiscreteForm) -> InhomogeneousForm {
    let mut out = InhomogeneousForm::zero();
    for part in w.parts() {
        out.add_form(&f(part));
    }
    out
}

fn report_json(r: &ResidualReport) -> String {
    serde_json::to_string(r).expect("reports serialize")
}

/// An inhomogeneous complex-valued form.
#[pyclass(name = "Form", module = "dkjoyce", skip_from_py_object)]
#[derive(Clone)]
pub struct Form {
    inner: InhomogeneousForm,
}

#[pymethods]
impl Form {
    #[new]
    fn new() -> Self {
        Form { inner: InhomogeneousForm::zero() }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::from_json(text).map(|inner| Form { inner }).map_err(value_error)
    }

    fn to_json(&self) -> String {
        io::to_json(&self.inner)
    }

    /// Adds `value` to the coefficient at site `k` on the axes `dirs`.
    fn add(&mut self, k: [i64; 4], dirs: Vec<usize>, value: Complex64) -> PyResult<()> {
        let d = DirectionSet::from_axes(&dirs).ok_or_else(|| value_error(format!("invalid directions {dirs:?}")))?;
        self.inner.add(MultiIndex(k), d, value);
        Ok(())
    }

    fn coeff(&self, k: [i64; 4], dirs: Vec<usize>) -> PyResult<Complex64> {
        let d = DirectionSet::from_axes(&dirs).ok_or_else(|| value_error(format!("invalid directions {dirs:?}")))?;
        Ok(self.inner.coeff(MultiIndex(k), d))
    }

    fn grade(&self, r: usize) -> PyResult<Self> {
        if r > 4 {
            return Err(value_error(format!("grade {r} out of range")));
        }
        Ok(Form { inner: self.inner.part(r).clone().into() })
    }

    fn even(&self) -> Self {
        Form { inner: self.inner.even_part() }
    }

    fn odd(&self) -> Self {
        Form { inner: self.inner.odd_part() }
    }

    fn d(&self) -> Self {
        Form { inner: apply_graded(&self.inner, forms::coboundary) }
    }

    fn delta(&self) -> Self {
        Form { inner: apply_graded(&self.inner, forms::codifferential) }
    }

    fn star(&self) -> Self {
        Form { inner: apply_graded(&self.inner, forms::hodge_star) }
    }

    fn star_inverse(&self) -> Self {
        Form { inner: apply_graded(&self.inner, forms::hodge_star_inverse) }
    }

    fn d_plus_delta(&self) -> Self {
        Form { inner: dirac_joyce::d_plus_delta(&self.inner) }
    }

    fn max_norm(&self) -> f64 {
        self.inner.max_norm()
    }

    fn max_abs_diff(&self, other: &Form) -> f64 {
        self.inner.max_abs_diff(&other.inner)
    }

    fn normalized(&self) -> Self {
        Form { inner: self.inner.normalized() }
    }

    fn __len__(&self) -> usize {
        self.inner.iter().count()
    }

    fn __add__(&self, other: &Form) -> Self {
        Form { inner: self.inner.plus(&other.inner) }
    }

    fn __sub__(&self, other: &Form) -> Self {
        Form { inner: self.inner.minus(&other.inner) }
    }

    fn __neg__(&self) -> Self {
        Form { inner: self.inner.neg() }
    }

    /// Clifford product with another form, or scaling by a number.
    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(f) = other.extract::<PyRef<'_, Form>>() {
            return Ok(Form { inner: clifford_mul(&self.inner, &f.inner) });
        }
        let c: Complex64 = other.extract()?;
        Ok(Form { inner: self.inner.scaled(&c) })
    }

    fn __rmul__(&self, other: Complex64) -> Self {
        Form { inner: self.inner.scaled(&other) }
    }

    fn __eq__(&self, other: &Form) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Form({} terms, max norm {:.3e})", self.__len__(), self.inner.max_norm())
    }
}

/// Energy `p₀ = ±sqrt(m² + |p|²)`; `branch` is `"+"` or `"-"`.
#[pyfunction]
fn on_shell(spatial: [f64; 3], m: f64, branch: &str) -> PyResult<[f64; 4]> {
    Ok(Momentum::on_shell(spatial, mass(m)?, self::branch(branch)?).0)
}

#[pyfunction]
fn dispersion_gap(p: [f64; 4], m: f64) -> PyResult<f64> {
    Ok(planewave::dispersion_gap(Momentum(p), mass(m)?))
}

/// Even plane-wave form from eight amplitudes in the order
/// `0, 01, 02, 03, 12, 13, 23, 4`.
#[pyfunction]
fn build_phi(amps: [Complex64; 8], p: [f64; 4], window: [i64; 4]) -> PyResult<Form> {
    Ok(Form { inner: planewave::build_phi(&amplitudes(amps), Momentum(p), &self::window(window)?) })
}

#[pyfunction]
fn eigen_relation_residual(phi: &Form, p: [f64; 4], window: [i64; 4]) -> PyResult<f64> {
    Ok(planewave::eigen_relation_residual(&phi.inner, Momentum(p), &self::window(window)?))
}

/// Residuals of the eight amplitude relations.
#[pyfunction]
fn amplitude_residual(amps: [Complex64; 8], p: [f64; 4], m: f64) -> PyResult<[Complex64; 8]> {
    Ok(planewave::algebraic_system_residual(&amplitudes(amps), Momentum(p), mass(m)?))
}

#[pyfunction]
fn amplitude_nullity(p: [f64; 4], m: f64) -> PyResult<usize> {
    Ok(planewave::amplitude_nullity(Momentum(p), mass(m)?))
}

/// Family with denominator `m − p₀`; coefficients multiply the labels `0, 12, 13, 23`.
#[pyfunction]
fn family_plus(coeffs: [Complex64; 4], p: [f64; 4], m: f64, window: [i64; 4]) -> PyResult<Form> {
    planewave::family_plus(&coeffs, Momentum(p), mass(m)?, &self::window(window)?)
        .map(|inner| Form { inner })
        .map_err(value_error)
}

/// Family with denominator `m + p₀`; coefficients multiply the labels `01, 02, 03, 4`.
#[pyfunction]
fn family_minus(coeffs: [Complex64; 4], p: [f64; 4], m: f64, window: [i64; 4]) -> PyResult<Form> {
    planewave::family_minus(&coeffs, Momentum(p), mass(m)?, &self::window(window)?)
        .map(|inner| Form { inner })
        .map_err(value_error)
}

/// Returns the residual report as a JSON string.
#[pyfunction]
fn dk_residual(form: &Form, m: f64, window: [i64; 4]) -> PyResult<String> {
    Ok(report_json(&dirac_joyce::dk_residual(&form.inner, mass(m)?, &self::window(window)?)))
}

/// Returns the residual report as a JSON string; the form must be even.
#[pyfunction]
fn joyce_residual(form: &Form, m: f64, window: [i64; 4]) -> PyResult<String> {
    dirac_joyce::joyce_residual(&form.inner, mass(m)?, &self::window(window)?)
        .map(|r| report_json(&r))
        .map_err(value_error)
}

#[pyfunction]
fn wave_labels() -> Vec<String> {
    WaveLabel::ALL.iter().map(ToString::to_string).collect()
}

/// Runs a check suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite, window, seed=0, mass=1.0, spatial=None, branch="+"))]
fn run_suite(suite: &str, window: [i64; 4], seed: u64, mass: f64, spatial: Option<[f64; 3]>, branch: &str) -> PyResult<String> {
    let name = match suite {
        "identities" => SuiteName::Identities,
        "planewave" => SuiteName::Planewave,
        "dispersion-scan" => SuiteName::DispersionScan,
        "all" => SuiteName::All,
        other => return Err(value_error(format!("unknown suite {other:?}"))),
    };
    let mut cfg = SuiteConfig::new(name, window, seed).map_err(value_error)?;
    cfg.mass = self::mass(mass)?;
    if let Some(spatial) = spatial {
        cfg.momentum = Some(MomentumInput::OnShell { spatial, branch: self::branch(branch)? });
    }
    Ok(dkjoyce_cli::run_suite(&cfg).to_json())
}

#[pymodule]
fn dkjoyce(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Form>()?;
    m.add_function(wrap_pyfunction!(on_shell, m)?)?;
    m.add_function(wrap_pyfunction!(dispersion_gap, m)?)?;
    m.add_function(wrap_pyfunction!(build_phi, m)?)?;
    m.add_function(wrap_pyfunction!(eigen_relation_residual, m)?)?;
    m.add_function(wrap_pyfunction!(amplitude_residual, m)?)?;
    m.add_function(wrap_pyfunction!(amplitude_nullity, m)?)?;
    m.add_function(wrap_pyfunction!(family_plus, m)?)?;
    m.add_function(wrap_pyfunction!(family_minus, m)?)?;
    m.add_function(wrap_pyfunction!(dk_residual, m)?)?;
    m.add_function(wrap_pyfunction!(joyce_residual, m)?)?;
    m.add_function(wrap_pyfunction!(wave_labels, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
