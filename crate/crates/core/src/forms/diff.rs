use crate::forms::DiscreteForm;
use crate::scalar::Scalar;

/// `Δ⁺_μ ω_k = ω_{τ_μ k} − ω_k` on every component.
pub fn forward_diff<S: Scalar>(w: &DiscreteForm<S>, mu: usize) -> DiscreteForm<S> {
    let mut out = DiscreteForm::zero(w.degree());
    for (cell, v) in w.iter() {
        out.add(cell.k.sigma(mu), cell.dirs, v.clone());
        out.add(cell.k, cell.dirs, -v.clone());
    }
    out
}

/// `Δ⁻_μ ω_k = ω_k − ω_{σ_μ k}` on every component.
pub fn backward_diff<S: Scalar>(w: &DiscreteForm<S>, mu: usize) -> DiscreteForm<S> {
    let mut out = DiscreteForm::zero(w.degree());
    for (cell, v) in w.iter() {
        out.add(cell.k, cell.dirs, v.clone());
        out.add(cell.k.tau(mu), cell.dirs, -v.clone());
    }
    out
}
