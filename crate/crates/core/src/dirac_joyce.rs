//! The discrete Dirac–Kähler operator `i(d^c + δ^c)`, the Dirac–Kähler and
//! Joyce equations as residual computations, and their per-site component
//! systems.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{ConstantForm, UnitFormKind};
use crate::complex4::{DirectionSet, MultiIndex};
use crate::error::{Error, Result};
use crate::forms::table::*;
use crate::forms::{
    backward_diff, coboundary, codifferential, forward_diff, InhomogeneousForm, LatticeBox, Window,
};
use crate::scalar::Scalar;

/// Odd-grade content above this is rejected by the Joyce operators.
pub const EVEN_TOLERANCE: f64 = 1e-12;

/// Positive mass parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct MassParam(f64);

impl MassParam {
    pub fn new(m: f64) -> Result<Self> {
        if m.is_finite() && m > 0.0 {
            Ok(MassParam(m))
        } else {
            Err(Error::InvalidMass(m))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for MassParam {
    type Error = Error;
    fn try_from(m: f64) -> Result<Self> {
        MassParam::new(m)
    }
}

impl From<MassParam> for f64 {
    fn from(m: MassParam) -> f64 {
        m.0
    }
}

/// `(d^c + δ^c) Ω`.
pub fn d_plus_delta<S: Scalar>(o: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
    let mut out = InhomogeneousForm::zero();
    for p in o.parts() {
        if p.is_zero() {
            continue;
        }
        out.add_form(&coboundary(p));
        out.add_form(&codifferential(p));
    }
    out
}

/// `i (d^c + δ^c) Ω`.
pub fn dirac_kahler_apply<S: Scalar>(o: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
    d_plus_delta(o).scaled(&S::i())
}

/// `Σ_{r<4} (Σ_μ e_μ Δ⁺_μ ω^r)_{r+1} + Σ_{r>0} (Σ_μ e_μ Δ⁻_μ ω^r)_{r−1}`,
/// built from Clifford products with the unit 1-forms and grade projection.
/// Equals `(d^c + δ^c) Ω`.
pub fn decomposition<S: Scalar>(o: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
    let mut out = InhomogeneousForm::zero();
    for (r, part) in o.parts().iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        let mut raised = InhomogeneousForm::zero();
        let mut lowered = InhomogeneousForm::zero();
        for mu in 0..4 {
            let e_mu = ConstantForm::<S>::unit(UnitFormKind::Axis(mu));
            if r < 4 {
                raised = raised.plus(&e_mu.left_mul(&forward_diff(part, mu).into()));
            }
            if r > 0 {
                lowered = lowered.plus(&e_mu.left_mul(&backward_diff(part, mu).into()));
            }
        }
        if r < 4 {
            out.add_form(raised.part(r + 1));
        }
        if r > 0 {
            out.add_form(lowered.part(r - 1));
        }
    }
    out
}

/// `i(d^c + δ^c)Ω − mΩ`.
pub fn dk_residual_form(o: &InhomogeneousForm, m: MassParam) -> InhomogeneousForm {
    dirac_kahler_apply(o).minus(&o.scaled(&Complex64::new(m.value(), 0.0)))
}

/// Residual of the Dirac–Kähler equation, split into interior and fringe
/// norms relative to `win`.
pub fn dk_residual(o: &InhomogeneousForm, m: MassParam, win: &Window) -> ResidualReport {
    ResidualReport::from_residual(&dk_residual_form(o, m), win)
}

fn check_even<S: Scalar>(o: &InhomogeneousForm<S>) -> Result<()> {
    let odd = o.odd_part().max_norm();
    if odd > EVEN_TOLERANCE {
        return Err(Error::NotEven(odd));
    }
    Ok(())
}

/// `m · Ω^{ev} e_0`, with `e_0` the unit 1-form acting from the right.
pub fn joyce_apply_rhs<S: Scalar>(oev: &InhomogeneousForm<S>, m: &S) -> Result<InhomogeneousForm<S>> {
    check_even(oev)?;
    let e0 = ConstantForm::<S>::unit(UnitFormKind::Axis(0));
    Ok(e0.right_mul(&oev.even_part()).scaled(m))
}

/// `i(d^c + δ^c)Ω^{ev} − m Ω^{ev} e_0`.
pub fn joyce_residual_form<S: Scalar>(oev: &InhomogeneousForm<S>, m: &S) -> Result<InhomogeneousForm<S>> {
    let rhs = joyce_apply_rhs(oev, m)?;
    Ok(dirac_kahler_apply(&oev.even_part()).minus(&rhs))
}

pub fn joyce_residual(oev: &InhomogeneousForm, m: MassParam, win: &Window) -> Result<ResidualReport> {
    let r = joyce_residual_form(oev, &Complex64::new(m.value(), 0.0))?;
    Ok(ResidualReport::from_residual(&r, win))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradeNorm {
    pub max: f64,
    pub l2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SiteResidual {
    pub k: [i64; 4],
    pub component: String,
    pub re: f64,
    pub im: f64,
}

/// Norms of a residual form. `interior_max` covers sites at least one cell
/// from every window face; everything else, including sites outside the
/// window, counts as fringe.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub grade_norms: [GradeNorm; 5],
    pub interior_max: f64,
    pub fringe_max: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_site: Option<Vec<SiteResidual>>,
}

impl ResidualReport {
    pub fn from_residual(r: &InhomogeneousForm, win: &Window) -> Self {
        let grade_norms = std::array::from_fn(|g| GradeNorm { max: r.part(g).max_norm(), l2: r.part(g).l2_norm() });
        ResidualReport {
            grade_norms,
            interior_max: r.max_norm_where(|k| win.is_interior(k)),
            fringe_max: r.max_norm_where(|k| !win.is_interior(k)),
            per_site: None,
        }
    }

    /// Attaches the nonzero entries of `r` as a per-site table.
    pub fn with_per_site(mut self, r: &InhomogeneousForm) -> Self {
        self.per_site = Some(
            r.iter()
                .map(|(cell, v)| SiteResidual { k: cell.k.0, component: cell.dirs.to_string(), re: v.re, im: v.im })
                .collect(),
        );
        self
    }

    pub fn max(&self) -> f64 {
        self.interior_max.max(self.fringe_max)
    }

    pub fn is_zero(&self) -> bool {
        self.max() == 0.0
    }
}

/// One displayed per-site equation `i Σ(terms) = rhs_sign · m · ω^{rhs}_k`,
/// whose residual lands on basis component `output`.
#[derive(Clone, Copy, Debug)]
pub struct ComponentEquation {
    pub output: u8,
    pub terms: &'static [Term],
    pub rhs_sign: i8,
    pub rhs: u8,
}

const fn eq(output: u8, terms: &'static [Term], rhs_sign: i8, rhs: u8) -> ComponentEquation {
    ComponentEquation { output, terms, rhs_sign, rhs }
}

/// The sixteen component equations of `i(d^c + δ^c)Ω = mΩ`.
pub const DIRAC_KAHLER_SYSTEM: [ComponentEquation; 16] = [
    eq(X, &[bwd(1, 0, E0), bwd(-1, 1, E1), bwd(-1, 2, E2), bwd(-1, 3, E3)], 1, X),
    eq(E0, &[fwd(1, 0, X), bwd(1, 1, E01), bwd(1, 2, E02), bwd(1, 3, E03)], 1, E0),
    eq(E1, &[fwd(1, 1, X), bwd(1, 0, E01), bwd(1, 2, E12), bwd(1, 3, E13)], 1, E1),
    eq(E2, &[fwd(1, 2, X), bwd(1, 0, E02), bwd(-1, 1, E12), bwd(1, 3, E23)], 1, E2),
    eq(E3, &[fwd(1, 3, X), bwd(1, 0, E03), bwd(-1, 1, E13), bwd(-1, 2, E23)], 1, E3),
    eq(E01, &[fwd(1, 0, E1), fwd(-1, 1, E0), bwd(-1, 2, E012), bwd(-1, 3, E013)], 1, E01),
    eq(E02, &[fwd(1, 0, E2), fwd(-1, 2, E0), bwd(1, 1, E012), bwd(-1, 3, E023)], 1, E02),
    eq(E03, &[fwd(1, 0, E3), fwd(-1, 3, E0), bwd(1, 1, E013), bwd(1, 2, E023)], 1, E03),
    eq(E12, &[fwd(1, 1, E2), fwd(-1, 2, E1), bwd(1, 0, E012), bwd(-1, 3, E123)], 1, E12),
    eq(E13, &[fwd(1, 1, E3), fwd(-1, 3, E1), bwd(1, 0, E013), bwd(1, 2, E123)], 1, E13),
    eq(E23, &[fwd(1, 2, E3), fwd(-1, 3, E2), bwd(1, 0, E023), bwd(-1, 1, E123)], 1, E23),
    eq(E012, &[fwd(1, 0, E12), fwd(-1, 1, E02), fwd(1, 2, E01), bwd(1, 3, E)], 1, E012),
    eq(E013, &[fwd(1, 0, E13), fwd(-1, 1, E03), fwd(1, 3, E01), bwd(-1, 2, E)], 1, E013),
    eq(E023, &[fwd(1, 0, E23), fwd(-1, 2, E03), fwd(1, 3, E02), bwd(1, 1, E)], 1, E023),
    eq(E123, &[fwd(1, 1, E23), fwd(-1, 2, E13), fwd(1, 3, E12), bwd(1, 0, E)], 1, E123),
    eq(E, &[fwd(1, 0, E123), fwd(-1, 1, E023), fwd(1, 2, E013), fwd(-1, 3, E012)], 1, E),
];

/// The eight component equations of `i(d^c + δ^c)Ω^{ev} = mΩ^{ev}e_0`.
pub const JOYCE_SYSTEM: [ComponentEquation; 8] = [
    eq(E0, &[fwd(1, 0, X), bwd(1, 1, E01), bwd(1, 2, E02), bwd(1, 3, E03)], 1, X),
    eq(E1, &[fwd(1, 1, X), bwd(1, 0, E01), bwd(1, 2, E12), bwd(1, 3, E13)], -1, E01),
    eq(E2, &[fwd(1, 2, X), bwd(1, 0, E02), bwd(-1, 1, E12), bwd(1, 3, E23)], -1, E02),
    eq(E3, &[fwd(1, 3, X), bwd(1, 0, E03), bwd(-1, 1, E13), bwd(-1, 2, E23)], -1, E03),
    eq(E012, &[fwd(1, 0, E12), fwd(-1, 1, E02), fwd(1, 2, E01), bwd(1, 3, E)], 1, E12),
    eq(E013, &[fwd(1, 0, E13), fwd(-1, 1, E03), fwd(1, 3, E01), bwd(-1, 2, E)], 1, E13),
    eq(E023, &[fwd(1, 0, E23), fwd(-1, 2, E03), fwd(1, 3, E02), bwd(1, 1, E)], 1, E23),
    eq(E123, &[fwd(1, 1, E23), fwd(-1, 2, E13), fwd(1, 3, E12), bwd(1, 0, E)], -1, E),
];

/// Evaluates a component system site by site over `region`, returning the
/// residual `i Σ(terms) − rhs_sign · m · ω^{rhs}` placed on each equation's
/// output component.
pub fn evaluate_system(
    o: &InhomogeneousForm,
    m: MassParam,
    system: &[ComponentEquation],
    region: &LatticeBox,
) -> InhomogeneousForm {
    let i = Complex64::i();
    let m = m.value();
    let value = |k: MultiIndex, mask: u8| o.coeff(k, DirectionSet::from_mask(mask));
    let mut out = InhomogeneousForm::zero();
    for k in region.sites() {
        for eq in system {
            let mut lhs = Complex64::new(0.0, 0.0);
            for t in eq.terms {
                let d = match t.diff {
                    Diff::Forward => value(k.tau(t.axis), t.input) - value(k, t.input),
                    Diff::Backward => value(k, t.input) - value(k.sigma(t.axis), t.input),
                };
                lhs += f64::from(t.sign) * d;
            }
            let r = i * lhs - f64::from(eq.rhs_sign) * m * value(k, eq.rhs);
            out.add(k, DirectionSet::from_mask(eq.output), r);
        }
    }
    out
}

/// Region covering every site a residual of `o` can touch.
pub fn residual_region(o: &InhomogeneousForm) -> Option<LatticeBox> {
    o.support_box().map(|b| b.expanded(1))
}

/// The sixteen-equation evaluation of the Dirac–Kähler residual.
pub fn dk_component_residual(o: &InhomogeneousForm, m: MassParam) -> InhomogeneousForm {
    match residual_region(o) {
        Some(region) => evaluate_system(o, m, &DIRAC_KAHLER_SYSTEM, &region),
        None => InhomogeneousForm::zero(),
    }
}

/// The eight-equation evaluation of the Joyce residual.
pub fn joyce_component_residual(oev: &InhomogeneousForm, m: MassParam) -> Result<InhomogeneousForm> {
    check_even(oev)?;
    Ok(match residual_region(oev) {
        Some(region) => evaluate_system(oev, m, &JOYCE_SYSTEM, &region),
        None => InhomogeneousForm::zero(),
    })
}
