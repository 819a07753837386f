use crate::complex4::DirectionSet;
use crate::forms::DiscreteForm;
use crate::scalar::{signed, Scalar};

/// Sign of moving the interval factors of `v` past those of `u` when the
/// four tensor factors are multiplied axis by axis: one transposition per
/// pair `a ∈ u, b ∈ v` with `a > b`.
pub(crate) fn koszul_sign(u: DirectionSet, v: DirectionSet) -> i8 {
    let swaps: usize = v.iter().map(|b| u.iter().filter(|&a| a > b).count()).sum();
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `∪` product.
///
/// Per axis: `x^κ ∪ x^κ = x^κ`, `e^κ ∪ x^{κ+1} = e^κ`, `x^κ ∪ e^κ = e^κ`,
/// everything else zero. A basis product is nonzero only if every axis
/// matches one of the three patterns, so `s_u^k ∪ s_v^{k'}` needs
/// `k' = τ_{u} k` and disjoint direction sets. The result lives at `k`.
///
/// When `deg u + deg v > 4` the product vanishes; the zero 4-form is returned.
pub fn cup<S: Scalar>(u: &DiscreteForm<S>, v: &DiscreteForm<S>) -> DiscreteForm<S> {
    let degree = u.degree() + v.degree();
    if degree > 4 {
        return DiscreteForm::zero(4);
    }
    let v_dirs: Vec<DirectionSet> = DirectionSet::of_degree(v.degree()).collect();
    let mut out = DiscreteForm::zero(degree);
    for (cell, a) in u.iter() {
        let partner = cell.k.tau_over(cell.dirs);
        for &dv in v_dirs.iter().filter(|dv| dv.is_disjoint(cell.dirs)) {
            let b = v.coeff(partner, dv);
            if b.is_zero() {
                continue;
            }
            let sign = koszul_sign(cell.dirs, dv);
            out.add(cell.k, cell.dirs.union(dv), signed(sign, a.clone() * b));
        }
    }
    out
}
