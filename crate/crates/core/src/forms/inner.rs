use crate::complex4::DirectionSet;
use crate::error::Result;
use crate::forms::{DiscreteForm, Window};
use crate::scalar::{signed, Scalar};

/// Lorentz weight of a basis component in the window inner product: `−1`
/// when the direction set contains the time axis, `+1` otherwise.
pub fn signature(dirs: DirectionSet) -> i8 {
    if dirs.contains(0) {
        -1
    } else {
        1
    }
}

/// `(u, v)_{e_n} = ⟨e_n, u ∪ ∗v̄⟩`, evaluated through its componentwise sum
/// `Σ_k Σ_D signature(D) u_k^D conj(v_k^D)`. Forms of different degree give 0.
///
/// Both forms must vanish outside `win`.
pub fn inner_product<S: Scalar>(u: &DiscreteForm<S>, v: &DiscreteForm<S>, win: &Window) -> Result<S> {
    u.check_admissible(win)?;
    v.check_admissible(win)?;
    if u.degree() != v.degree() {
        return Ok(S::zero());
    }
    Ok(u.iter().fold(S::zero(), |acc, (cell, a)| {
        let b = v.coeff(cell.k, cell.dirs);
        acc + signed(signature(cell.dirs), a.clone() * b.conj())
    }))
}
