//! Discrete forms (cochains of `K(4)`) and the calculus operators acting on
//! them.
//!
//! Forms are finitely supported; every operator treats coefficients that are
//! not stored as zero.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::complex4::{add_into, Cell, DirectionSet, MultiIndex};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

mod codiff;
mod coboundary;
mod cup;
mod diff;
mod hodge;
mod inner;
pub mod io;
pub(crate) mod table;
mod window;

pub use codiff::{codifferential, codifferential_via_star, laplacian, star_d_star};
pub use coboundary::coboundary;
pub use cup::cup;
pub use diff::{backward_diff, forward_diff};
pub use hodge::{hodge_star, hodge_star_basis, hodge_star_inverse, hodge_star_inverse_basis};
pub use inner::{inner_product, signature};
pub use window::{LatticeBox, Window};

/// A degree-homogeneous discrete form `Σ_k Σ_(r) ω_k^(r) s^k_(r)`.
///
/// Every key has a direction set of cardinality `degree`. The empty form is
/// the zero of every degree and compares equal to any other empty form.
#[derive(Clone, Debug)]
pub struct DiscreteForm<S: Scalar = Complex64> {
    degree: usize,
    coeffs: BTreeMap<Cell, S>,
}

impl<S: Scalar> PartialEq for DiscreteForm<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return true;
        }
        self.degree == other.degree && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> DiscreteForm<S> {
    /// Panics if `degree > 4`.
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 4, "form degree {degree} out of range");
        DiscreteForm { degree, coeffs: BTreeMap::new() }
    }

    /// Unit coefficient on one basis cochain.
    pub fn basis(cell: Cell) -> Self {
        let mut w = Self::zero(cell.degree());
        w.add(cell.k, cell.dirs, S::one());
        w
    }

    /// Builds a form from `(k, dirs, value)` triples, summing repeats.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (MultiIndex, DirectionSet, S)>) -> Self {
        let mut w = Self::zero(degree);
        for (k, dirs, v) in terms {
            w.add(k, dirs, v);
        }
        w
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `value` to the coefficient of `dirs` at `k`.
    ///
    /// Panics if `dirs` does not have the form's degree.
    pub fn add(&mut self, k: MultiIndex, dirs: DirectionSet, value: S) {
        assert_eq!(
            dirs.degree(),
            self.degree,
            "direction set {dirs} does not match form degree {}",
            self.degree
        );
        add_into(&mut self.coeffs, Cell::new(dirs, k), value);
    }

    pub fn coeff(&self, k: MultiIndex, dirs: DirectionSet) -> S {
        self.coeffs.get(&Cell::new(dirs, k)).cloned().unwrap_or_else(S::zero)
    }

    /// Stored coefficients in `(k, dirs)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &S)> {
        self.coeffs.iter().map(|(c, v)| (*c, v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, by: &S) -> Self {
        self.map_values(|v| v.clone() * by.clone())
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| -v.clone())
    }

    /// Complex conjugate, coefficientwise.
    pub fn conj(&self) -> Self {
        self.map_values(Scalar::conj)
    }

    fn map_values(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::zero(self.degree);
        for (cell, v) in &self.coeffs {
            add_into(&mut out.coeffs, *cell, f(v));
        }
        out
    }

    /// Coefficientwise sum. A zero operand adopts the other's degree.
    ///
    /// Panics on two nonzero forms of different degree.
    pub fn plus(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (cell, v) in &other.coeffs {
            add_into(&mut out.coeffs, *cell, v.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.neg())
    }

    /// Moves every coefficient from `k` to `f(k)`.
    pub fn reindexed(&self, f: impl Fn(MultiIndex) -> MultiIndex) -> Self {
        let mut out = Self::zero(self.degree);
        for (cell, v) in &self.coeffs {
            add_into(&mut out.coeffs, Cell::new(cell.dirs, f(cell.k)), v.clone());
        }
        out
    }

    /// `Σ_k ω_k s^{τk}`: the basis index of every coefficient moved by `τ`.
    pub fn shifted_tau(&self) -> Self {
        self.reindexed(MultiIndex::tau_all)
    }

    /// `Σ_k ω_k s^{σk}`.
    pub fn shifted_sigma(&self) -> Self {
        self.reindexed(MultiIndex::sigma_all)
    }

    /// Keeps only the coefficients whose site satisfies `keep`.
    pub fn restricted(&self, keep: impl Fn(MultiIndex) -> bool) -> Self {
        DiscreteForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().filter(|(c, _)| keep(c.k)).map(|(c, v)| (*c, v.clone())).collect(),
        }
    }

    /// Largest coefficient modulus; 0 for the zero form.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.values().map(|v| v.magnitude().powi(2)).sum::<f64>().sqrt()
    }

    /// Smallest box containing every stored site, or `None` for the zero form.
    pub fn support_box(&self) -> Option<LatticeBox> {
        let mut it = self.coeffs.keys();
        let first = it.next()?.k.0;
        let mut b = LatticeBox { lo: first, hi: first };
        for cell in it {
            for mu in 0..4 {
                b.lo[mu] = b.lo[mu].min(cell.k.0[mu]);
                b.hi[mu] = b.hi[mu].max(cell.k.0[mu]);
            }
        }
        Some(b)
    }

    /// Whether every stored coefficient lies in `win`.
    pub fn is_admissible(&self, win: &Window) -> bool {
        self.first_outside(win).is_none()
    }

    pub(crate) fn check_admissible(&self, win: &Window) -> Result<()> {
        match self.first_outside(win) {
            Some(cell) => Err(Error::NotAdmissible { k: cell.k, dirs: cell.dirs }),
            None => Ok(()),
        }
    }

    fn first_outside(&self, win: &Window) -> Option<Cell> {
        self.coeffs.keys().find(|c| !win.contains(c.k)).copied()
    }
}

impl DiscreteForm<Complex64> {
    /// Coefficientwise max distance; a tolerance-friendly comparison.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.is_zero() || other.is_zero() || self.degree == other.degree {
            let mut d = 0.0f64;
            for (cell, v) in &self.coeffs {
                d = d.max((v - other.coeff(cell.k, cell.dirs)).norm());
            }
            for (cell, v) in &other.coeffs {
                if !self.coeffs.contains_key(cell) {
                    d = d.max(v.norm());
                }
            }
            d
        } else {
            self.max_norm().max(other.max_norm())
        }
    }

    /// Drops coefficients with modulus at or below `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        DiscreteForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().filter(|(_, v)| v.norm() > tol).map(|(c, v)| (*c, *v)).collect(),
        }
    }
}

/// An inhomogeneous form `Ω = Σ_{r=0}^{4} ω^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct InhomogeneousForm<S: Scalar = Complex64> {
    parts: [DiscreteForm<S>; 5],
}

impl<S: Scalar> Default for InhomogeneousForm<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> From<DiscreteForm<S>> for InhomogeneousForm<S> {
    fn from(w: DiscreteForm<S>) -> Self {
        let mut out = Self::zero();
        let r = w.degree();
        out.parts[r] = w;
        out
    }
}

impl<S: Scalar> InhomogeneousForm<S> {
    pub fn zero() -> Self {
        InhomogeneousForm { parts: std::array::from_fn(DiscreteForm::zero) }
    }

    /// Panics if some part has the wrong degree (and is nonzero).
    pub fn from_parts(parts: [DiscreteForm<S>; 5]) -> Self {
        let mut out = Self::zero();
        for (r, p) in parts.into_iter().enumerate() {
            if !p.is_zero() {
                assert_eq!(p.degree(), r, "part {r} has degree {}", p.degree());
                out.parts[r] = p;
            }
        }
        out
    }

    /// `(Ω)_r`.
    pub fn part(&self, r: usize) -> &DiscreteForm<S> {
        &self.parts[r]
    }

    pub fn parts(&self) -> &[DiscreteForm<S>; 5] {
        &self.parts
    }

    pub fn into_parts(self) -> [DiscreteForm<S>; 5] {
        self.parts
    }

    /// Adds `w` into the part of matching degree.
    pub fn add_form(&mut self, w: &DiscreteForm<S>) {
        if w.is_zero() {
            return;
        }
        let r = w.degree();
        self.parts[r] = self.parts[r].plus(w);
    }

    /// Adds `value` on basis cochain `dirs` at `k`.
    pub fn add(&mut self, k: MultiIndex, dirs: DirectionSet, value: S) {
        self.parts[dirs.degree()].add(k, dirs, value);
    }

    pub fn coeff(&self, k: MultiIndex, dirs: DirectionSet) -> S {
        self.parts[dirs.degree()].coeff(k, dirs)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, &S)> {
        self.parts.iter().flat_map(|p| p.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(DiscreteForm::is_zero)
    }

    pub fn plus(&self, other: &Self) -> Self {
        InhomogeneousForm { parts: std::array::from_fn(|r| self.parts[r].plus(&other.parts[r])) }
    }

    pub fn minus(&self, other: &Self) -> Self {
        InhomogeneousForm { parts: std::array::from_fn(|r| self.parts[r].minus(&other.parts[r])) }
    }

    pub fn scaled(&self, by: &S) -> Self {
        self.map_parts(|p| p.scaled(by))
    }

    pub fn neg(&self) -> Self {
        self.map_parts(DiscreteForm::neg)
    }

    /// Applies `f` to each grade part. `f` must preserve degree.
    pub fn map_parts(&self, f: impl Fn(&DiscreteForm<S>) -> DiscreteForm<S>) -> Self {
        Self::from_parts(std::array::from_fn(|r| f(&self.parts[r])))
    }

    /// Grades 0, 2 and 4.
    pub fn even_part(&self) -> Self {
        self.keep_grades(|r| r % 2 == 0)
    }

    /// Grades 1 and 3.
    pub fn odd_part(&self) -> Self {
        self.keep_grades(|r| r % 2 == 1)
    }

    fn keep_grades(&self, keep: impl Fn(usize) -> bool) -> Self {
        InhomogeneousForm {
            parts: std::array::from_fn(|r| if keep(r) { self.parts[r].clone() } else { DiscreteForm::zero(r) }),
        }
    }

    pub fn restricted(&self, keep: impl Fn(MultiIndex) -> bool + Copy) -> Self {
        self.map_parts(|p| p.restricted(keep))
    }

    pub fn max_norm(&self) -> f64 {
        self.parts.iter().map(DiscreteForm::max_norm).fold(0.0, f64::max)
    }

    pub fn l2_norm(&self) -> f64 {
        self.parts.iter().map(|p| p.l2_norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn support_box(&self) -> Option<LatticeBox> {
        self.parts.iter().filter_map(DiscreteForm::support_box).reduce(|a, b| LatticeBox {
            lo: std::array::from_fn(|mu| a.lo[mu].min(b.lo[mu])),
            hi: std::array::from_fn(|mu| a.hi[mu].max(b.hi[mu])),
        })
    }

    pub fn is_admissible(&self, win: &Window) -> bool {
        self.parts.iter().all(|p| p.is_admissible(win))
    }
}

impl InhomogeneousForm<Complex64> {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (0..5).map(|r| self.parts[r].max_abs_diff(&other.parts[r])).fold(0.0, f64::max)
    }

    /// Max coefficient modulus over sites where `keep` holds.
    pub fn max_norm_where(&self, keep: impl Fn(MultiIndex) -> bool + Copy) -> f64 {
        self.iter().filter(|(c, _)| keep(c.k)).map(|(_, v)| v.norm()).fold(0.0, f64::max)
    }

    /// The same form divided by its max coefficient modulus (unchanged when
    /// zero).
    pub fn normalized(&self) -> Self {
        let n = self.max_norm();
        if n == 0.0 {
            self.clone()
        } else {
            self.scaled(&Complex64::new(1.0 / n, 0.0))
        }
    }

    pub fn pruned(&self, tol: f64) -> Self {
        self.map_parts(|p| p.pruned(tol))
    }
}
