use crate::forms::table::*;
use crate::forms::{coboundary, hodge_star, hodge_star_inverse, DiscreteForm, InhomogeneousForm};
use crate::scalar::Scalar;

const FROM_1: &[Row] = &[Row {
    output: X,
    terms: &[bwd(1, 0, E0), bwd(-1, 1, E1), bwd(-1, 2, E2), bwd(-1, 3, E3)],
}];

const FROM_2: &[Row] = &[
    Row { output: E0, terms: &[bwd(1, 1, E01), bwd(1, 2, E02), bwd(1, 3, E03)] },
    Row { output: E1, terms: &[bwd(1, 0, E01), bwd(1, 2, E12), bwd(1, 3, E13)] },
    Row { output: E2, terms: &[bwd(1, 0, E02), bwd(-1, 1, E12), bwd(1, 3, E23)] },
    Row { output: E3, terms: &[bwd(1, 0, E03), bwd(-1, 1, E13), bwd(-1, 2, E23)] },
];

const FROM_3: &[Row] = &[
    Row { output: E01, terms: &[bwd(-1, 2, E012), bwd(-1, 3, E013)] },
    Row { output: E02, terms: &[bwd(1, 1, E012), bwd(-1, 3, E023)] },
    Row { output: E03, terms: &[bwd(1, 1, E013), bwd(1, 2, E023)] },
    Row { output: E12, terms: &[bwd(1, 0, E012), bwd(-1, 3, E123)] },
    Row { output: E13, terms: &[bwd(1, 0, E013), bwd(1, 2, E123)] },
    Row { output: E23, terms: &[bwd(1, 0, E023), bwd(-1, 1, E123)] },
];

const FROM_4: &[Row] = &[
    Row { output: E012, terms: &[bwd(1, 3, E)] },
    Row { output: E013, terms: &[bwd(-1, 2, E)] },
    Row { output: E023, terms: &[bwd(1, 1, E)] },
    Row { output: E123, terms: &[bwd(1, 0, E)] },
];

/// Indexed by input degree; degree 0 has no rows.
pub(crate) const CODIFFERENTIAL_ROWS: [&[Row]; 5] = [&[], FROM_1, FROM_2, FROM_3, FROM_4];

/// The codifferential `δ^c`, lowering degree by one through backward
/// differences. 0-forms map to the zero form.
pub fn codifferential<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    match w.degree() {
        0 => DiscreteForm::zero(0),
        r => apply_rows(w, CODIFFERENTIAL_ROWS[r], r - 1),
    }
}

/// `(−1)^r ∗⁻¹ d^c ∗ w` for a degree-`r` form `w`; agrees with
/// [`codifferential`].
pub fn codifferential_via_star<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    if w.degree() == 0 {
        return DiscreteForm::zero(0);
    }
    let v = hodge_star_inverse(&coboundary(&hodge_star(w)));
    if w.degree() % 2 == 1 {
        v.neg()
    } else {
        v
    }
}

/// `∗ d^c ∗ w`. This is the codifferential with every coefficient read one
/// step back along all axes: `(∗d^c∗w)_k = (δ^c w)_{σk}`.
pub fn star_d_star<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    if w.degree() == 0 {
        return DiscreteForm::zero(0);
    }
    hodge_star(&coboundary(&hodge_star(w)))
}

/// The discrete Laplacian `−(d^c δ^c + δ^c d^c)`, applied grade by grade.
pub fn laplacian<S: Scalar>(w: &InhomogeneousForm<S>) -> InhomogeneousForm<S> {
    w.map_parts(|p| {
        let a = coboundary(&codifferential(p));
        let b = codifferential(&coboundary(p));
        let sum = a.plus(&b).neg();
        if sum.is_zero() {
            DiscreteForm::zero(p.degree())
        } else {
            sum
        }
    })
}
