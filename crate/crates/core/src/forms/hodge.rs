//! The discrete Hodge star `∗: K^r(4) → K^{4−r}(4)`.
//!
//! On a basis element with interval axes `D`, `∗ s_D^k = ±s_{D^c}^{τ_D k}`:
//! the image carries the complementary direction set and sits one step up on
//! every axis of `D`. The sign table is fixed below; a unit test re-derives it
//! from `s^k ∪ ∗s^k = Q(k_0) e^k`.

use crate::complex4::{Cell, DirectionSet};
use crate::forms::table::*;
use crate::forms::DiscreteForm;
use crate::scalar::{signed, Scalar};

/// `(input, sign)`; the output direction set is always the complement.
const STAR_SIGNS: [(u8, i8); 16] = [
    (X, 1),
    (E, -1),
    (E0, -1),
    (E1, -1),
    (E2, 1),
    (E3, -1),
    (E01, -1),
    (E02, 1),
    (E03, -1),
    (E12, 1),
    (E13, -1),
    (E23, 1),
    (E012, -1),
    (E013, 1),
    (E023, -1),
    (E123, -1),
];

fn star_sign(dirs: DirectionSet) -> i8 {
    STAR_SIGNS
        .iter()
        .find(|(m, _)| *m == dirs.mask())
        .map(|(_, s)| *s)
        .expect("every direction set has a star row")
}

/// `∗` on one basis element: `(sign, image cell)`.
pub fn hodge_star_basis(cell: Cell) -> (i8, Cell) {
    (star_sign(cell.dirs), Cell::new(cell.dirs.complement(), cell.k.tau_over(cell.dirs)))
}

/// `∗⁻¹` on one basis element, inverting the star table row by row.
pub fn hodge_star_inverse_basis(cell: Cell) -> (i8, Cell) {
    let source = cell.dirs.complement();
    (star_sign(source), Cell::new(source, cell.k.sigma_over(source)))
}

pub fn hodge_star<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    map_basis(w, 4 - w.degree(), hodge_star_basis)
}

/// The linear inverse of [`hodge_star`].
pub fn hodge_star_inverse<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    map_basis(w, 4 - w.degree(), hodge_star_inverse_basis)
}

fn map_basis<S: Scalar>(w: &DiscreteForm<S>, degree: usize, f: impl Fn(Cell) -> (i8, Cell)) -> DiscreteForm<S> {
    let mut out = DiscreteForm::zero(degree);
    for (cell, v) in w.iter() {
        let (sign, image) = f(cell);
        out.add(image.k, image.dirs, signed(sign, v.clone()));
    }
    out
}
