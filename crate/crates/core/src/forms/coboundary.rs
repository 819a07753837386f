use crate::forms::table::*;
use crate::forms::DiscreteForm;
use crate::scalar::Scalar;

/// `d^c` on 0-forms.
const FROM_0: &[Row] = &[
    Row { output: E0, terms: &[fwd(1, 0, X)] },
    Row { output: E1, terms: &[fwd(1, 1, X)] },
    Row { output: E2, terms: &[fwd(1, 2, X)] },
    Row { output: E3, terms: &[fwd(1, 3, X)] },
];

/// `d^c` on 1-forms: `(Δ⁺_μ ω^ν − Δ⁺_ν ω^μ) e_{μν}`.
const FROM_1: &[Row] = &[
    Row { output: E01, terms: &[fwd(1, 0, E1), fwd(-1, 1, E0)] },
    Row { output: E02, terms: &[fwd(1, 0, E2), fwd(-1, 2, E0)] },
    Row { output: E03, terms: &[fwd(1, 0, E3), fwd(-1, 3, E0)] },
    Row { output: E12, terms: &[fwd(1, 1, E2), fwd(-1, 2, E1)] },
    Row { output: E13, terms: &[fwd(1, 1, E3), fwd(-1, 3, E1)] },
    Row { output: E23, terms: &[fwd(1, 2, E3), fwd(-1, 3, E2)] },
];

const FROM_2: &[Row] = &[
    Row { output: E012, terms: &[fwd(1, 0, E12), fwd(-1, 1, E02), fwd(1, 2, E01)] },
    Row { output: E013, terms: &[fwd(1, 0, E13), fwd(-1, 1, E03), fwd(1, 3, E01)] },
    Row { output: E023, terms: &[fwd(1, 0, E23), fwd(-1, 2, E03), fwd(1, 3, E02)] },
    Row { output: E123, terms: &[fwd(1, 1, E23), fwd(-1, 2, E13), fwd(1, 3, E12)] },
];

const FROM_3: &[Row] = &[Row {
    output: E,
    terms: &[fwd(1, 0, E123), fwd(-1, 1, E023), fwd(1, 2, E013), fwd(-1, 3, E012)],
}];

pub(crate) const COBOUNDARY_ROWS: [&[Row]; 4] = [FROM_0, FROM_1, FROM_2, FROM_3];

/// The coboundary `d^c`, raising degree by one through forward differences.
/// 4-forms map to the zero form.
pub fn coboundary<S: Scalar>(w: &DiscreteForm<S>) -> DiscreteForm<S> {
    match w.degree() {
        4 => DiscreteForm::zero(4),
        r => apply_rows(w, COBOUNDARY_ROWS[r], r + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex4::{Cell, DirectionSet, MultiIndex};
    use crate::scalar::{gaussian, GaussianRational};

    type Q = GaussianRational;

    #[test]
    fn coboundary_of_delta_zero_form() {
        let k = MultiIndex::new(3, 3, 3, 3);
        let d = coboundary(&DiscreteForm::<Q>::basis(Cell::new(DirectionSet::EMPTY, k)));
        let mut expected = DiscreteForm::zero(1);
        for mu in 0..4 {
            expected.add(k.sigma(mu), DirectionSet::single(mu), gaussian(1, 0));
            expected.add(k, DirectionSet::single(mu), gaussian(-1, 0));
        }
        assert_eq!(d, expected);
        assert_eq!(d.len(), 8);
    }

    #[test]
    fn four_forms_map_to_zero() {
        let w = DiscreteForm::<Q>::basis(Cell::new(DirectionSet::FULL, MultiIndex::ORIGIN));
        assert!(coboundary(&w).is_zero());
    }

    #[test]
    fn every_output_component_is_listed_once() {
        for (r, rows) in COBOUNDARY_ROWS.iter().enumerate() {
            let outs: Vec<_> = rows.iter().map(|row| DirectionSet::from_mask(row.output)).collect();
            let expected: Vec<_> = DirectionSet::of_degree(r + 1).collect();
            assert_eq!(outs, expected);
            for row in *rows {
                for t in row.terms {
                    let input = DirectionSet::from_mask(t.input);
                    assert_eq!(input.with(t.axis), DirectionSet::from_mask(row.output));
                    assert!(!input.contains(t.axis));
                }
            }
        }
    }
}
