//! Clifford multiplication on discrete forms.
//!
//! Basis elements multiply only at a common site `k`; there
//! `e_μ e_ν + e_ν e_μ = 2 g_{μν} x` with `g = diag(1, −1, −1, −1)`, `x` is the
//! identity, and ordered products of distinct `e_μ` concatenate indices.
//! A product of two basis blades is reduced to normal form by counting the
//! transpositions needed to sort the concatenated index word and contracting
//! each repeated index with `g_{μμ}`.

use std::fmt;

use num_complex::Complex64;

use crate::complex4::{Cell, DirectionSet};
use crate::forms::{DiscreteForm, InhomogeneousForm, Window};
use crate::scalar::{signed, Scalar};

/// Diagonal of the metric, `g_{μμ}`.
pub const METRIC: [i8; 4] = [1, -1, -1, -1];

/// Product of two blades at one site: `e_A e_B = sign · e_{A △ B}`.
pub fn blade_product(a: DirectionSet, b: DirectionSet) -> (i8, DirectionSet) {
    let swaps: usize = b.iter().map(|mu| a.iter().filter(|&nu| nu > mu).count()).sum();
    let mut sign: i8 = if swaps % 2 == 0 { 1 } else { -1 };
    for mu in a.intersection(b).iter() {
        sign *= METRIC[mu];
    }
    (sign, a.symmetric_difference(b))
}

/// Clifford product of two basis cochains; `None` when the sites differ.
pub fn clifford_basis_product(a: Cell, b: Cell) -> Option<(i8, Cell)> {
    if a.k != b.k {
        return None;
    }
    let (sign, dirs) = blade_product(a.dirs, b.dirs);
    Some((sign, Cell::new(dirs, a.k)))
}

/// Bilinear extension of [`clifford_basis_product`].
pub fn clifford_mul<S: Scalar>(a: &InhomogeneousForm<S>, b: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
    let mut out = InhomogeneousForm::zero();
    for (ca, va) in a.iter() {
        for db in DirectionSet::all() {
            let vb = b.coeff(ca.k, db);
            if vb.is_zero() {
                continue;
            }
            let (sign, dirs) = blade_product(ca.dirs, db);
            out.add(ca.k, dirs, signed(sign, va.clone() * vb));
        }
    }
    out
}

/// `(A)_r`.
pub fn grade_project<S: Scalar>(a: &InhomogeneousForm<S>, r: usize) -> DiscreteForm<S> {
    a.part(r).clone()
}

/// The unit forms `x`, `e`, `e_μ` and `e_{μν}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitFormKind {
    X,
    E,
    Axis(usize),
    /// Requires `μ < ν`; build through [`UnitFormKind::pair`].
    Pair(usize, usize),
}

impl UnitFormKind {
    /// `e_{μν}`, or `None` unless `μ < ν ≤ 3`.
    pub fn pair(mu: usize, nu: usize) -> Option<Self> {
        (mu < nu && nu <= 3).then_some(UnitFormKind::Pair(mu, nu))
    }

    pub fn dirs(self) -> DirectionSet {
        match self {
            UnitFormKind::X => DirectionSet::EMPTY,
            UnitFormKind::E => DirectionSet::FULL,
            UnitFormKind::Axis(mu) => DirectionSet::single(mu),
            UnitFormKind::Pair(mu, nu) => {
                assert!(mu < nu && nu <= 3, "e_munu needs mu < nu");
                DirectionSet::pair(mu, nu)
            }
        }
    }
}

impl fmt::Display for UnitFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.dirs().fmt(f)
    }
}

/// Coefficient 1 on the selected basis pattern at every site of `win`.
pub fn unit_form<S: Scalar>(kind: UnitFormKind, win: &Window) -> InhomogeneousForm<S> {
    let dirs = kind.dirs();
    let mut out = InhomogeneousForm::zero();
    for k in win.sites() {
        out.add(k, dirs, S::one());
    }
    out
}

/// A site-independent element `Σ_D c_D Σ_k e_D^k` of the algebra, i.e. a
/// linear combination of unit forms over the whole lattice. Multiplying a
/// form by it acts site by site.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantForm<S: Scalar = Complex64> {
    coeffs: [S; 16],
}

impl<S: Scalar> Default for ConstantForm<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> ConstantForm<S> {
    pub fn zero() -> Self {
        ConstantForm { coeffs: std::array::from_fn(|_| S::zero()) }
    }

    pub fn unit(kind: UnitFormKind) -> Self {
        Self::zero().with(kind.dirs(), S::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (DirectionSet, S)>) -> Self {
        let mut c = Self::zero();
        for (d, v) in terms {
            c = c.with(d, v);
        }
        c
    }

    /// Adds `v` to the coefficient of `dirs`.
    pub fn with(mut self, dirs: DirectionSet, v: S) -> Self {
        let slot = &mut self.coeffs[dirs.mask() as usize];
        *slot = slot.clone() + v;
        self
    }

    pub fn coeff(&self, dirs: DirectionSet) -> S {
        self.coeffs[dirs.mask() as usize].clone()
    }

    /// Nonzero components in `(degree, dirs)` order.
    pub fn terms(&self) -> impl Iterator<Item = (DirectionSet, S)> + '_ {
        DirectionSet::all().map(|d| (d, self.coeff(d))).filter(|(_, v)| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scaled(&self, by: &S) -> Self {
        ConstantForm { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * by.clone()) }
    }

    pub fn plus(&self, other: &Self) -> Self {
        ConstantForm { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + other.coeffs[i].clone()) }
    }

    pub fn minus(&self, other: &Self) -> Self {
        ConstantForm { coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - other.coeffs[i].clone()) }
    }

    /// Algebra product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, va) in self.terms() {
            for (b, vb) in other.terms() {
                let (sign, d) = blade_product(a, b);
                out = out.with(d, signed(sign, va.clone() * vb.clone()));
            }
        }
        out
    }

    /// `self · w`, site by site.
    pub fn left_mul(&self, w: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
        self.mul_sitewise(w, true)
    }

    /// `w · self`, site by site.
    pub fn right_mul(&self, w: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
        self.mul_sitewise(w, false)
    }

    fn mul_sitewise(&self, w: &InhomogeneousForm<S>, left: bool) -> InhomogeneousForm<S> {
        let terms: Vec<_> = self.terms().collect();
        let mut out = InhomogeneousForm::zero();
        for (cell, v) in w.iter() {
            for (d, c) in &terms {
                let (sign, dirs) = if left { blade_product(*d, cell.dirs) } else { blade_product(cell.dirs, *d) };
                out.add(cell.k, dirs, signed(sign, c.clone() * v.clone()));
            }
        }
        out
    }

    /// The element materialized on the sites of `win`.
    pub fn on_window(&self, win: &Window) -> InhomogeneousForm<S> {
        let mut out = InhomogeneousForm::zero();
        for k in win.sites() {
            for (d, v) in self.terms() {
                out.add(k, d, v);
            }
        }
        out
    }
}

/// `Σ_μ p_μ e_μ` as a constant form.
pub fn momentum_vector(p: [f64; 4]) -> ConstantForm {
    ConstantForm::from_terms((0..4).map(|mu| (DirectionSet::single(mu), Complex64::new(p[mu], 0.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex4::MultiIndex;
    use crate::scalar::{gaussian, GaussianRational};

    type Q = GaussianRational;

    fn at(dirs: DirectionSet) -> Cell {
        Cell::new(dirs, MultiIndex::new(1, 2, 3, 4))
    }

    #[test]
    fn basis_products() {
        let e = DirectionSet::single;
        assert_eq!(clifford_basis_product(at(e(0)), at(e(0))), Some((1, at(DirectionSet::EMPTY))));
        assert_eq!(clifford_basis_product(at(e(1)), at(e(1))), Some((-1, at(DirectionSet::EMPTY))));
        assert_eq!(clifford_basis_product(at(e(1)), at(e(2))), Some((1, at(DirectionSet::pair(1, 2)))));
        assert_eq!(clifford_basis_product(at(e(2)), at(e(1))), Some((-1, at(DirectionSet::pair(1, 2)))));
        let elsewhere = Cell::new(e(2), MultiIndex::ORIGIN);
        assert_eq!(clifford_basis_product(at(e(1)), elsewhere), None);
    }

    #[test]
    fn hand_reductions() {
        // e0 e1 e0 e1 = -e0 e0 e1 e1 = -(1)(-1) = +x
        assert_eq!(blade_product(DirectionSet::pair(0, 1), DirectionSet::pair(0, 1)), (1, DirectionSet::EMPTY));
        // e0123 e0123 = -x
        assert_eq!(blade_product(DirectionSet::FULL, DirectionSet::FULL), (-1, DirectionSet::EMPTY));
        // e01 e0 = -e0 e0 e1 = -e1
        assert_eq!(blade_product(DirectionSet::pair(0, 1), DirectionSet::single(0)), (-1, DirectionSet::single(1)));
        // e0 e01 = e1
        assert_eq!(blade_product(DirectionSet::single(0), DirectionSet::pair(0, 1)), (1, DirectionSet::single(1)));
    }

    #[test]
    fn unit_forms() {
        let win = Window::cube(2);
        let x: InhomogeneousForm<Q> = unit_form(UnitFormKind::X, &win);
        assert_eq!(x.part(0).len(), 16);
        let e01: InhomogeneousForm<Q> = unit_form(UnitFormKind::pair(0, 1).unwrap(), &win);
        assert_eq!(clifford_mul(&e01, &e01), x);
        let e: InhomogeneousForm<Q> = unit_form(UnitFormKind::E, &win);
        assert_eq!(clifford_mul(&e, &e), x.neg());
        assert_eq!(UnitFormKind::pair(2, 1), None);
    }

    #[test]
    fn grade_projection() {
        let k = MultiIndex::ORIGIN;
        let mut a = InhomogeneousForm::<Q>::zero();
        a.add(k, DirectionSet::EMPTY, gaussian(1, 0));
        a.add(k, DirectionSet::pair(1, 2), gaussian(1, 0));
        assert_eq!(grade_project(&a, 2), DiscreteForm::basis(Cell::new(DirectionSet::pair(1, 2), k)));
        for r in 0..5 {
            assert!(grade_project(&InhomogeneousForm::<Q>::zero(), r).is_zero());
        }
        let e0: InhomogeneousForm<Q> = DiscreteForm::basis(Cell::new(DirectionSet::single(0), k)).into();
        let e01: InhomogeneousForm<Q> = DiscreteForm::basis(Cell::new(DirectionSet::pair(0, 1), k)).into();
        let prod = clifford_mul(&e0, &e01);
        assert_eq!(grade_project(&prod, 1), DiscreteForm::basis(Cell::new(DirectionSet::single(1), k)));
    }

    #[test]
    fn boost_square_gives_dispersion_factor() {
        // (p0 x − Σ p_μ e0 e_μ)(p0 x + Σ p_μ e0 e_μ) = (p0² − |p|²) x
        let p = [3i64, 1, -2, 5];
        let boost = |s: i64| {
            let mut c = ConstantForm::<Q>::zero().with(DirectionSet::EMPTY, gaussian(p[0], 0));
            for mu in 1..4 {
                c = c.with(DirectionSet::pair(0, mu), gaussian(s * p[mu], 0));
            }
            c
        };
        let prod = boost(-1).mul(&boost(1));
        let expected = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
        assert_eq!(prod, ConstantForm::zero().with(DirectionSet::EMPTY, gaussian(expected, 0)));
    }

    #[test]
    fn sitewise_matches_materialized_unit_form() {
        let win = Window::cube(3);
        let mut w = InhomogeneousForm::<Q>::zero();
        w.add(MultiIndex::new(1, 2, 3, 1), DirectionSet::pair(1, 3), gaussian(2, -1));
        w.add(MultiIndex::new(2, 2, 2, 2), DirectionSet::single(0), gaussian(0, 1));
        let c = ConstantForm::unit(UnitFormKind::Axis(2)).plus(&ConstantForm::unit(UnitFormKind::E));
        assert_eq!(c.left_mul(&w), clifford_mul(&c.on_window(&win), &w));
        assert_eq!(c.right_mul(&w), clifford_mul(&w, &c.on_window(&win)));
    }
}
