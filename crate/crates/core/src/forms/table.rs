//! Hard-coded operator tables, one row per output basis component.

use crate::complex4::{Cell, DirectionSet};
use crate::forms::DiscreteForm;
use crate::scalar::{signed, Scalar};

// Direction masks: bit μ set for an interval factor on axis μ.
pub const X: u8 = 0b0000;
pub const E0: u8 = 0b0001;
pub const E1: u8 = 0b0010;
pub const E2: u8 = 0b0100;
pub const E3: u8 = 0b1000;
pub const E01: u8 = 0b0011;
pub const E02: u8 = 0b0101;
pub const E03: u8 = 0b1001;
pub const E12: u8 = 0b0110;
pub const E13: u8 = 0b1010;
pub const E23: u8 = 0b1100;
pub const E012: u8 = 0b0111;
pub const E013: u8 = 0b1011;
pub const E023: u8 = 0b1101;
pub const E123: u8 = 0b1110;
pub const E: u8 = 0b1111;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diff {
    /// `Δ⁺_μ`
    Forward,
    /// `Δ⁻_μ`
    Backward,
}

/// `sign · Δ^±_axis ω^{input}`.
#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub sign: i8,
    pub diff: Diff,
    pub axis: usize,
    pub input: u8,
}

/// One displayed component equation: the output component and the
/// difference terms summed into it.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    pub output: u8,
    pub terms: &'static [Term],
}

pub const fn fwd(sign: i8, axis: usize, input: u8) -> Term {
    Term { sign, diff: Diff::Forward, axis, input }
}

pub const fn bwd(sign: i8, axis: usize, input: u8) -> Term {
    Term { sign, diff: Diff::Backward, axis, input }
}

/// Applies a table of difference terms to `w`, producing a form of degree
/// `out_degree`. Works by scattering each stored coefficient to the (at most
/// two) sites whose difference reads it.
pub fn apply_rows<S: Scalar>(w: &DiscreteForm<S>, rows: &[Row], out_degree: usize) -> DiscreteForm<S> {
    let mut out = DiscreteForm::zero(out_degree);
    for row in rows {
        let output = DirectionSet::from_mask(row.output);
        for term in row.terms {
            let input = DirectionSet::from_mask(term.input);
            if input.degree() != w.degree() {
                continue;
            }
            for (cell, v) in w.iter().filter(|(c, _)| c.dirs == input) {
                scatter(&mut out, output, term, cell, v);
            }
        }
    }
    out
}

#[inline]
fn scatter<S: Scalar>(out: &mut DiscreteForm<S>, output: DirectionSet, term: &Term, cell: Cell, v: &S) {
    let j = cell.k;
    // Δ⁺ω_k = ω_{τk} - ω_k reads ω_j at k = σj (+) and k = j (-).
    // Δ⁻ω_k = ω_k - ω_{σk} reads ω_j at k = j (+) and k = τj (-).
    let (plus_at, minus_at) = match term.diff {
        Diff::Forward => (j.sigma(term.axis), j),
        Diff::Backward => (j, j.tau(term.axis)),
    };
    out.add(plus_at, output, signed(term.sign, v.clone()));
    out.add(minus_at, output, signed(-term.sign, v.clone()));
}
