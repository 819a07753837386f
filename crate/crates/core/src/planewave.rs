//! Discrete plane waves: the eight eigen 0-forms `ψ`, the even wave form
//! `Φ`, its `Φ±` split, the constraint maps between the halves, and the two
//! four-parameter solution families of the Joyce equation.
//!
//! Powers of `1 ± ip_μ` are built by repeated multiplication. The supported
//! envelope is window extents up to 32 and `|p_μ| ≤ 10`, where
//! `|ψ| ≤ √101^32` stays well inside double range.

use std::fmt;

use nalgebra::SMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{momentum_vector, ConstantForm};
use crate::complex4::{DirectionSet, MultiIndex};
use crate::dirac_joyce::{d_plus_delta, MassParam};
use crate::error::{Error, Result};
use crate::forms::table::*;
use crate::forms::{InhomogeneousForm, Window};

/// Denominators `m ∓ p₀` smaller than this are rejected.
pub const DENOMINATOR_THRESHOLD: f64 = 1e-9;
/// Relative tolerance on `p₀² − m² − |p|²` for the family constructors.
pub const DISPERSION_TOLERANCE: f64 = 1e-9;
/// Singular values below this count toward the nullity of the amplitude matrix.
pub const RANK_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Momentum(pub [f64; 4]);

impl Momentum {
    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        Momentum([p0, p1, p2, p3])
    }

    /// The on-shell momentum with the given spatial part and energy sign.
    pub fn on_shell(spatial: [f64; 3], m: MassParam, branch: Branch) -> Self {
        let [p1, p2, p3] = spatial;
        Momentum([branch.energy(spatial, m), p1, p2, p3])
    }

    pub fn p0(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    pub fn component(&self, mu: usize) -> f64 {
        self.0[mu]
    }

    pub fn with_p0(mut self, p0: f64) -> Self {
        self.0[0] = p0;
        self
    }
}

/// Sign of `p₀ = ±√(m² + |p|²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Plus, Branch::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn energy(self, spatial: [f64; 3], m: MassParam) -> f64 {
        let m = m.value();
        self.sign() * (m * m + spatial.iter().map(|p| p * p).sum::<f64>()).sqrt()
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            _ => Err(format!("branch must be + or -, got {s:?}")),
        }
    }
}

/// Selects one of the eight plane-wave 0-forms, and the even basis component
/// it multiplies in `Φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WaveLabel {
    L0,
    L01,
    L02,
    L03,
    L12,
    L13,
    L23,
    L4,
}

impl WaveLabel {
    pub const ALL: [WaveLabel; 8] = [
        WaveLabel::L0,
        WaveLabel::L01,
        WaveLabel::L02,
        WaveLabel::L03,
        WaveLabel::L12,
        WaveLabel::L13,
        WaveLabel::L23,
        WaveLabel::L4,
    ];

    /// Labels whose component commutes with `e₀`.
    pub const PLUS: [WaveLabel; 4] = [WaveLabel::L0, WaveLabel::L12, WaveLabel::L13, WaveLabel::L23];
    /// Labels whose component anticommutes with `e₀`.
    pub const MINUS: [WaveLabel; 4] = [WaveLabel::L01, WaveLabel::L02, WaveLabel::L03, WaveLabel::L4];

    /// The axes carrying `(1 − ip_μ)^{−k_μ}`; also the basis component of `Φ`.
    pub fn dirs(self) -> DirectionSet {
        DirectionSet::from_mask(match self {
            WaveLabel::L0 => X,
            WaveLabel::L01 => E01,
            WaveLabel::L02 => E02,
            WaveLabel::L03 => E03,
            WaveLabel::L12 => E12,
            WaveLabel::L13 => E13,
            WaveLabel::L23 => E23,
            WaveLabel::L4 => E,
        })
    }

    pub fn from_dirs(dirs: DirectionSet) -> Option<Self> {
        WaveLabel::ALL.into_iter().find(|l| l.dirs() == dirs)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_plus(self) -> bool {
        WaveLabel::PLUS.contains(&self)
    }
}

impl fmt::Display for WaveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WaveLabel::L0 => "0",
            WaveLabel::L01 => "01",
            WaveLabel::L02 => "02",
            WaveLabel::L03 => "03",
            WaveLabel::L12 => "12",
            WaveLabel::L13 => "13",
            WaveLabel::L23 => "23",
            WaveLabel::L4 => "4",
        })
    }
}

impl std::str::FromStr for WaveLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        WaveLabel::ALL.into_iter().find(|l| l.to_string() == s).ok_or_else(|| format!("unknown wave label {s:?}"))
    }
}

/// `z^n` by repeated multiplication, inverting first for negative `n`.
fn int_power(z: Complex64, n: i64) -> Complex64 {
    let base = if n < 0 { z.inv() } else { z };
    (0..n.unsigned_abs()).fold(Complex64::new(1.0, 0.0), |acc, _| acc * base)
}

fn plus_factor(p: f64) -> Complex64 {
    Complex64::new(1.0, p)
}

fn minus_factor_inv(p: f64) -> Complex64 {
    Complex64::new(1.0, -p).inv()
}

/// `ψ^label_k`: `(1+ip_μ)^{k_μ}` off the label's axes, `(1−ip_μ)^{−k_μ}` on them.
pub fn wave_component(label: WaveLabel, k: MultiIndex, p: Momentum) -> Complex64 {
    let on = label.dirs();
    (0..4).fold(Complex64::new(1.0, 0.0), |acc, mu| {
        let pm = p.component(mu);
        let f = if on.contains(mu) { int_power(Complex64::new(1.0, -pm), -k.component(mu)) } else { int_power(plus_factor(pm), k.component(mu)) };
        acc * f
    })
}

/// Per-axis powers cached over an index range, for filling whole windows.
#[derive(Clone, Debug)]
pub struct WaveTable {
    lo: [i64; 4],
    plus: [Vec<Complex64>; 4],
    minus: [Vec<Complex64>; 4],
}

impl WaveTable {
    /// Tables covering `lo[μ]..=hi[μ]` on each axis. The range must contain 0.
    pub fn new(p: Momentum, lo: [i64; 4], hi: [i64; 4]) -> Self {
        let build = |mu: usize, step: Complex64| {
            let (a, b) = (lo[mu].min(0), hi[mu].max(0));
            let mut v = vec![Complex64::new(0.0, 0.0); (b - a + 1) as usize];
            let zero = (-a) as usize;
            v[zero] = Complex64::new(1.0, 0.0);
            for i in zero + 1..v.len() {
                v[i] = v[i - 1] * step;
            }
            let back = step.inv();
            for i in (0..zero).rev() {
                v[i] = v[i + 1] * back;
            }
            v
        };
        let lo = std::array::from_fn(|mu| lo[mu].min(0));
        WaveTable {
            lo,
            plus: std::array::from_fn(|mu| build(mu, plus_factor(p.component(mu)))),
            minus: std::array::from_fn(|mu| build(mu, minus_factor_inv(p.component(mu)))),
        }
    }

    /// Covers every site of `win` plus a one-cell margin.
    pub fn for_window(p: Momentum, win: &Window) -> Self {
        let r = win.region().expanded(1);
        WaveTable::new(p, r.lo, r.hi)
    }

    pub fn value(&self, label: WaveLabel, k: MultiIndex) -> Complex64 {
        let on = label.dirs();
        (0..4).fold(Complex64::new(1.0, 0.0), |acc, mu| {
            let i = (k.component(mu) - self.lo[mu]) as usize;
            acc * if on.contains(mu) { self.minus[mu][i] } else { self.plus[mu][i] }
        })
    }
}

/// Largest relative deviation over interior sites of `win` from
/// `Δ⁻_μψ = ip_μψ` on the label's axes and `Δ⁺_μψ = ip_μψ` elsewhere.
pub fn eigen_difference_check(label: WaveLabel, p: Momentum, win: &Window) -> f64 {
    let table = WaveTable::for_window(p, win);
    let on = label.dirs();
    let mut worst = 0.0f64;
    for k in win.interior().sites() {
        let psi = table.value(label, k);
        for mu in 0..4 {
            let diff = if on.contains(mu) {
                psi - table.value(label, k.sigma(mu))
            } else {
                table.value(label, k.tau(mu)) - psi
            };
            let expected = Complex64::new(0.0, p.component(mu)) * psi;
            worst = worst.max((diff - expected).norm() / psi.norm());
        }
    }
    worst
}

/// Constant even-form amplitudes `α`. Serialized as `[re, im]` pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvenAmplitudes {
    #[serde(default)]
    pub alpha0: Complex64,
    #[serde(default)]
    pub alpha01: Complex64,
    #[serde(default)]
    pub alpha02: Complex64,
    #[serde(default)]
    pub alpha03: Complex64,
    #[serde(default)]
    pub alpha12: Complex64,
    #[serde(default)]
    pub alpha13: Complex64,
    #[serde(default)]
    pub alpha23: Complex64,
    #[serde(default)]
    pub alpha4: Complex64,
}

impl EvenAmplitudes {
    /// Amplitudes in [`WaveLabel::ALL`] order.
    pub fn from_array(a: [Complex64; 8]) -> Self {
        let [alpha0, alpha01, alpha02, alpha03, alpha12, alpha13, alpha23, alpha4] = a;
        EvenAmplitudes { alpha0, alpha01, alpha02, alpha03, alpha12, alpha13, alpha23, alpha4 }
    }

    pub fn to_array(&self) -> [Complex64; 8] {
        [self.alpha0, self.alpha01, self.alpha02, self.alpha03, self.alpha12, self.alpha13, self.alpha23, self.alpha4]
    }

    pub fn get(&self, label: WaveLabel) -> Complex64 {
        self.to_array()[label.index()]
    }

    pub fn with(&self, label: WaveLabel, v: Complex64) -> Self {
        let mut a = self.to_array();
        a[label.index()] = v;
        EvenAmplitudes::from_array(a)
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(|z| *z == Complex64::new(0.0, 0.0))
    }

    /// The constant form `α⁰x + Σα^{μν}e_{μν} + α⁴e`.
    pub fn to_constant(&self) -> ConstantForm {
        ConstantForm::from_terms(WaveLabel::ALL.map(|l| (l.dirs(), self.get(l))))
    }

    pub fn from_constant(c: &ConstantForm) -> Self {
        EvenAmplitudes::from_array(WaveLabel::ALL.map(|l| c.coeff(l.dirs())))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let (a, b) = (self.to_array(), other.to_array());
        (0..8).map(|i| (a[i] - b[i]).norm()).fold(0.0, f64::max)
    }
}

/// `Φ = α⁰ψ⁰ + Σ α^{μν}ψ^{μν}e_{μν} + α⁴ψ⁴e` on the sites of `win`.
pub fn build_phi(a: &EvenAmplitudes, p: Momentum, win: &Window) -> InhomogeneousForm {
    let table = WaveTable::for_window(p, win);
    let mut phi = InhomogeneousForm::zero();
    for k in win.sites() {
        for label in WaveLabel::ALL {
            let alpha = a.get(label);
            if alpha != Complex64::new(0.0, 0.0) {
                phi.add(k, label.dirs(), alpha * table.value(label, k));
            }
        }
    }
    phi
}

/// Interior max-norm of `(d^c+δ^c)Φ − i(Σp_μe_μ)Φ`.
pub fn eigen_relation_residual(phi: &InhomogeneousForm, p: Momentum, win: &Window) -> f64 {
    let lhs = d_plus_delta(phi);
    let rhs = momentum_vector(p.0).left_mul(phi).scaled(&Complex64::i());
    lhs.minus(&rhs).max_norm_where(|k| win.is_interior(k))
}

/// `p₀² − m² − p₁² − p₂² − p₃²`.
pub fn dispersion_gap(p: Momentum, m: MassParam) -> f64 {
    let [p0, p1, p2, p3] = p.0;
    let m = m.value();
    p0 * p0 - m * m - p1 * p1 - p2 * p2 - p3 * p3
}

fn check_dispersion(p: Momentum, m: MassParam) -> Result<()> {
    let gap = dispersion_gap(p, m);
    let scale = 1.0 + p.0.iter().map(|x| x * x).sum::<f64>() + m.value() * m.value();
    if gap.abs() > DISPERSION_TOLERANCE * scale {
        return Err(Error::DispersionViolated { gap });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Coef {
    P0PlusM,
    P0MinusM,
    P(usize),
}

#[derive(Clone, Copy, Debug)]
struct AmpTerm {
    sign: i8,
    coef: Coef,
    label: WaveLabel,
}

const fn t(sign: i8, coef: Coef, label: WaveLabel) -> AmpTerm {
    AmpTerm { sign, coef, label }
}

use Coef::{P0MinusM, P0PlusM, P};
use WaveLabel::*;

/// The eight relations among `α` and `ψ`. Each term pairs `α^L` with `ψ^L`.
/// Rows are the negated odd components of `−(Σp_μe_μ)A − mAe₀` (see
/// [`amplitude_oracle`]); note the fourth row pairs `α²³` with `ψ²³` and the
/// second row carries `+p₃α⁴`.
const AMPLITUDE_SYSTEM: [[AmpTerm; 4]; 8] = [
    [t(1, P0PlusM, L0), t(1, P(1), L01), t(1, P(2), L02), t(1, P(3), L03)],
    [t(1, P0PlusM, L12), t(-1, P(1), L02), t(1, P(2), L01), t(1, P(3), L4)],
    [t(1, P0PlusM, L13), t(-1, P(1), L03), t(-1, P(2), L4), t(1, P(3), L01)],
    [t(1, P0PlusM, L23), t(1, P(1), L4), t(-1, P(2), L03), t(1, P(3), L02)],
    [t(1, P0MinusM, L01), t(1, P(1), L0), t(1, P(2), L12), t(1, P(3), L13)],
    [t(1, P0MinusM, L02), t(-1, P(1), L12), t(1, P(2), L0), t(1, P(3), L23)],
    [t(1, P0MinusM, L03), t(-1, P(1), L13), t(-1, P(2), L23), t(1, P(3), L0)],
    [t(1, P0MinusM, L4), t(1, P(1), L23), t(-1, P(2), L13), t(1, P(3), L12)],
];

fn coefficient(c: Coef, p: Momentum, m: MassParam) -> f64 {
    match c {
        Coef::P0PlusM => p.p0() + m.value(),
        Coef::P0MinusM => p.p0() - m.value(),
        Coef::P(mu) => p.component(mu),
    }
}

/// The eight relations evaluated with every `ψ = 1`, i.e. at the origin.
pub fn algebraic_system_residual(a: &EvenAmplitudes, p: Momentum, m: MassParam) -> [Complex64; 8] {
    algebraic_system_residual_with(a, p, m, |_| Complex64::new(1.0, 0.0))
}

/// The eight relations evaluated at site `k` with the `ψ` factors in place.
pub fn algebraic_system_residual_at(a: &EvenAmplitudes, p: Momentum, m: MassParam, k: MultiIndex) -> [Complex64; 8] {
    algebraic_system_residual_with(a, p, m, |l| wave_component(l, k, p))
}

fn algebraic_system_residual_with(
    a: &EvenAmplitudes,
    p: Momentum,
    m: MassParam,
    psi: impl Fn(WaveLabel) -> Complex64,
) -> [Complex64; 8] {
    AMPLITUDE_SYSTEM.map(|row| {
        row.iter().fold(Complex64::new(0.0, 0.0), |acc, term| {
            acc + f64::from(term.sign) * coefficient(term.coef, p, m) * a.get(term.label) * psi(term.label)
        })
    })
}

/// Real 8×8 matrix of the amplitude system; column order is [`WaveLabel::ALL`].
pub fn amplitude_matrix(p: Momentum, m: MassParam) -> SMatrix<f64, 8, 8> {
    let mut out = SMatrix::<f64, 8, 8>::zeros();
    for (i, row) in AMPLITUDE_SYSTEM.iter().enumerate() {
        for term in row {
            out[(i, term.label.index())] += f64::from(term.sign) * coefficient(term.coef, p, m);
        }
    }
    out
}

/// Number of singular values of [`amplitude_matrix`] below [`RANK_THRESHOLD`].
pub fn amplitude_nullity(p: Momentum, m: MassParam) -> usize {
    amplitude_matrix(p, m).singular_values().iter().filter(|s| **s < RANK_THRESHOLD).count()
}

/// `−(Σp_μe_μ)A − mAe₀` for constant `A`; its eight odd components are the
/// amplitude system up to sign.
pub fn amplitude_oracle(a: &EvenAmplitudes, p: Momentum, m: MassParam) -> ConstantForm {
    let a = a.to_constant();
    let e0 = ConstantForm::unit(crate::clifford::UnitFormKind::Axis(0));
    let pe = momentum_vector(p.0);
    pe.mul(&a).scaled(&Complex64::new(-1.0, 0.0)).minus(&a.mul(&e0).scaled(&Complex64::new(m.value(), 0.0)))
}

/// `(Φ₊, Φ₋)`: the `{x, e₁₂, e₁₃, e₂₃}` and `{e₀₁, e₀₂, e₀₃, e}` components.
pub fn split_even(phi: &InhomogeneousForm) -> (InhomogeneousForm, InhomogeneousForm) {
    let mut plus = InhomogeneousForm::zero();
    let mut minus = InhomogeneousForm::zero();
    for (cell, v) in phi.iter() {
        match WaveLabel::from_dirs(cell.dirs) {
            Some(l) if l.is_plus() => plus.add(cell.k, cell.dirs, *v),
            Some(_) => minus.add(cell.k, cell.dirs, *v),
            None => {}
        }
    }
    (plus, minus)
}

/// `p₁e₀₁ + p₂e₀₂ + p₃e₀₃`.
pub fn spatial_boost(p: Momentum) -> ConstantForm {
    ConstantForm::from_terms(
        (1..4).map(|mu| (DirectionSet::pair(0, mu), Complex64::new(p.component(mu), 0.0))),
    )
}

fn boost_over(p: Momentum, denom: f64, which: &'static str, alternative: &'static str) -> Result<ConstantForm> {
    if denom.abs() <= DENOMINATOR_THRESHOLD {
        return Err(Error::DegenerateDenominator { which, value: denom, alternative });
    }
    Ok(spatial_boost(p).scaled(&Complex64::new(1.0 / denom, 0.0)))
}

/// `Φ₋ = (p₁e₀₁+p₂e₀₂+p₃e₀₃)/(m−p₀) · Φ₊`.
pub fn constraint_minus_from_plus(phi_plus: &InhomogeneousForm, p: Momentum, m: MassParam) -> Result<InhomogeneousForm> {
    let b = boost_over(p, m.value() - p.p0(), "m - p0", "constraint_plus_from_minus")?;
    Ok(b.left_mul(phi_plus))
}

/// `Φ₊ = −(p₁e₀₁+p₂e₀₂+p₃e₀₃)/(m+p₀) · Φ₋`.
pub fn constraint_plus_from_minus(phi_minus: &InhomogeneousForm, p: Momentum, m: MassParam) -> Result<InhomogeneousForm> {
    let b = boost_over(p, m.value() + p.p0(), "m + p0", "constraint_minus_from_plus")?;
    Ok(b.left_mul(phi_minus).neg())
}

/// Amplitude-level form of [`constraint_minus_from_plus`].
pub fn amplitudes_minus_from_plus(a: &EvenAmplitudes, p: Momentum, m: MassParam) -> Result<EvenAmplitudes> {
    let b = boost_over(p, m.value() - p.p0(), "m - p0", "amplitudes_plus_from_minus")?;
    Ok(EvenAmplitudes::from_constant(&b.mul(&plus_half(a).to_constant())))
}

/// Amplitude-level form of [`constraint_plus_from_minus`].
pub fn amplitudes_plus_from_minus(a: &EvenAmplitudes, p: Momentum, m: MassParam) -> Result<EvenAmplitudes> {
    let b = boost_over(p, m.value() + p.p0(), "m + p0", "amplitudes_minus_from_plus")?;
    Ok(EvenAmplitudes::from_constant(&b.mul(&minus_half(a).to_constant()).scaled(&Complex64::new(-1.0, 0.0))))
}

pub fn plus_half(a: &EvenAmplitudes) -> EvenAmplitudes {
    EvenAmplitudes::from_array(WaveLabel::ALL.map(|l| if l.is_plus() { a.get(l) } else { Complex64::new(0.0, 0.0) }))
}

pub fn minus_half(a: &EvenAmplitudes) -> EvenAmplitudes {
    EvenAmplitudes::from_array(WaveLabel::ALL.map(|l| if l.is_plus() { Complex64::new(0.0, 0.0) } else { a.get(l) }))
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The four terms of the `(m − p₀)` family: each is a wave label and the
/// constant even form it multiplies. Each shape is `(m − p₀)A₊ + B·A₊` for a
/// unit `A₊`, with `B = p₁e₀₁ + p₂e₀₂ + p₃e₀₃`. For `A₊ = e₁₃` this puts
/// `−p₂` on `e` since `e₀₂e₁₃ = −e`.
pub fn family_plus_terms(p: Momentum, m: MassParam) -> [(WaveLabel, ConstantForm); 4] {
    let [_, p1, p2, p3] = p.0;
    let d = m.value() - p.p0();
    let c = |terms: [(u8, f64); 4]| ConstantForm::from_terms(terms.map(|(mask, v)| (DirectionSet::from_mask(mask), real(v))));
    [
        (L0, c([(X, d), (E01, p1), (E02, p2), (E03, p3)])),
        (L12, c([(E12, d), (E01, p2), (E02, -p1), (E, p3)])),
        (L13, c([(E13, d), (E01, p3), (E03, -p1), (E, -p2)])),
        (L23, c([(E23, d), (E02, p3), (E03, -p2), (E, p1)])),
    ]
}

/// The four terms of the `(m + p₀)` family.
pub fn family_minus_terms(p: Momentum, m: MassParam) -> [(WaveLabel, ConstantForm); 4] {
    let [_, p1, p2, p3] = p.0;
    let s = m.value() + p.p0();
    let c = |terms: [(u8, f64); 4]| ConstantForm::from_terms(terms.map(|(mask, v)| (DirectionSet::from_mask(mask), real(v))));
    [
        (L01, c([(E01, s), (X, -p1), (E12, -p2), (E13, -p3)])),
        (L02, c([(E02, s), (X, -p2), (E12, p1), (E23, -p3)])),
        (L03, c([(E03, s), (X, -p3), (E13, p1), (E23, p2)])),
        (L4, c([(E, s), (E12, -p3), (E13, p2), (E23, -p1)])),
    ]
}

/// `Σ c_i ψ^{L_i} shape_i` on the sites of `win` for any momentum; the
/// family constructors add the dispersion and denominator checks.
pub fn family_form(terms: &[(WaveLabel, ConstantForm); 4], coeffs: &[Complex64; 4], p: Momentum, win: &Window) -> InhomogeneousForm {
    let table = WaveTable::for_window(p, win);
    let mut phi = InhomogeneousForm::zero();
    for ((label, shape), c) in terms.iter().zip(coeffs) {
        if *c == Complex64::new(0.0, 0.0) {
            continue;
        }
        for k in win.sites() {
            let w = c * table.value(*label, k);
            for (dirs, v) in shape.terms() {
                phi.add(k, dirs, w * v);
            }
        }
    }
    phi
}

fn family_amplitudes(terms: &[(WaveLabel, ConstantForm); 4], coeffs: &[Complex64; 4]) -> EvenAmplitudes {
    let sum = terms.iter().zip(coeffs).fold(ConstantForm::zero(), |acc, ((_, shape), c)| acc.plus(&shape.scaled(c)));
    EvenAmplitudes::from_constant(&sum)
}

/// `Σ a_i ψ^{L_i} (shape_i)` over `{ψ⁰, ψ¹², ψ¹³, ψ²³}` with shapes
/// `(m−p₀)x + p₁e₀₁ + p₂e₀₂ + p₃e₀₃` and so on; see [`family_plus_terms`].
pub fn family_plus(a: &[Complex64; 4], p: Momentum, m: MassParam, win: &Window) -> Result<InhomogeneousForm> {
    check_dispersion(p, m)?;
    boost_over(p, m.value() - p.p0(), "m - p0", "family_minus")?;
    Ok(family_form(&family_plus_terms(p, m), a, p, win))
}

/// `Σ b_i ψ^{L_i} (shape_i)` over `{ψ⁰¹, ψ⁰², ψ⁰³, ψ⁴}`.
pub fn family_minus(b: &[Complex64; 4], p: Momentum, m: MassParam, win: &Window) -> Result<InhomogeneousForm> {
    check_dispersion(p, m)?;
    boost_over(p, m.value() + p.p0(), "m + p0", "family_plus")?;
    Ok(family_form(&family_minus_terms(p, m), b, p, win))
}

/// Family solution with every `ψ` set to 1: the constant amplitudes `A`.
pub fn family_plus_amplitudes(a: &[Complex64; 4], p: Momentum, m: MassParam) -> Result<EvenAmplitudes> {
    check_dispersion(p, m)?;
    boost_over(p, m.value() - p.p0(), "m - p0", "family_minus_amplitudes")?;
    Ok(family_amplitudes(&family_plus_terms(p, m), a))
}

pub fn family_minus_amplitudes(b: &[Complex64; 4], p: Momentum, m: MassParam) -> Result<EvenAmplitudes> {
    check_dispersion(p, m)?;
    boost_over(p, m.value() + p.p0(), "m + p0", "family_plus_amplitudes")?;
    Ok(family_amplitudes(&family_minus_terms(p, m), b))
}

/// The 8×4 matrix whose columns are the amplitude vectors of the four unit
/// solutions of a family, split into real parts (the shapes are real).
pub fn family_matrix(terms: &[(WaveLabel, ConstantForm); 4]) -> SMatrix<f64, 8, 4> {
    SMatrix::from_fn(|row, col| terms[col].1.coeff(WaveLabel::ALL[row].dirs()).re)
}

/// Solves for the `(m − p₀)` family coefficients reproducing the constant
/// amplitudes of a `(m + p₀)` family solution, in the least-squares sense.
pub fn plus_coefficients_for(b: &[Complex64; 4], p: Momentum, m: MassParam) -> Result<[Complex64; 4]> {
    let target = family_minus_amplitudes(b, p, m)?.to_array();
    boost_over(p, m.value() - p.p0(), "m - p0", "family_minus")?;
    let mat = family_matrix(&family_plus_terms(p, m));
    let svd = mat.svd(true, true);
    let solve = |f: fn(&Complex64) -> f64| {
        let rhs = SMatrix::<f64, 8, 1>::from_fn(|r, _| f(&target[r]));
        svd.solve(&rhs, 1e-12).expect("svd computed with both factors")
    };
    let re = solve(|z| z.re);
    let im = solve(|z| z.im);
    Ok(std::array::from_fn(|i| Complex64::new(re[i], im[i])))
}

/// Which construction a [`PlaneWaveSpec`] requests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plus,
    Minus,
    Explicit,
}

/// Momentum either as four components or as spatial part, mass and branch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MomentumSpec {
    Components([f64; 4]),
    OnShell { spatial: [f64; 3], mass: f64, branch: Branch },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneWaveSpec {
    pub p: MomentumSpec,
    pub m: f64,
    pub amplitudes: EvenAmplitudes,
    pub window: Window,
    pub family: Family,
}

impl PlaneWaveSpec {
    pub fn mass(&self) -> Result<MassParam> {
        MassParam::new(self.m)
    }

    pub fn momentum(&self) -> Result<Momentum> {
        match &self.p {
            MomentumSpec::Components(p) => Ok(Momentum(*p)),
            MomentumSpec::OnShell { spatial, mass, branch } => Ok(Momentum::on_shell(*spatial, MassParam::new(*mass)?, *branch)),
        }
    }

    /// Family coefficients: `a_i = α/(m − p₀)` over `{α⁰, α¹², α¹³, α²³}`
    /// for `plus`, `b_i = α/(m + p₀)` over `{α⁰¹, α⁰², α⁰³, α⁴}` for `minus`.
    pub fn coefficients(&self) -> Result<[Complex64; 4]> {
        let (p, m) = (self.momentum()?, self.mass()?);
        let (labels, denom, which, alternative) = match self.family {
            Family::Plus | Family::Explicit => (WaveLabel::PLUS, m.value() - p.p0(), "m - p0", "minus"),
            Family::Minus => (WaveLabel::MINUS, m.value() + p.p0(), "m + p0", "plus"),
        };
        if denom.abs() <= DENOMINATOR_THRESHOLD {
            return Err(Error::DegenerateDenominator { which, value: denom, alternative });
        }
        Ok(labels.map(|l| self.amplitudes.get(l) / denom))
    }

    pub fn build(&self) -> Result<InhomogeneousForm> {
        let (p, m) = (self.momentum()?, self.mass()?);
        if !self.amplitudes.is_finite() {
            return Err(Error::Schema { index: 0, reason: "non-finite amplitude".into() });
        }
        match self.family {
            Family::Explicit => Ok(build_phi(&self.amplitudes, p, &self.window)),
            Family::Plus => family_plus(&self.coefficients()?, p, m, &self.window),
            Family::Minus => family_minus(&self.coefficients()?, p, m, &self.window),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
