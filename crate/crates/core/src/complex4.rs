//! The combinatorial complex `C(4) = C ⊗ C ⊗ C ⊗ C`: lattice indices, basis
//! cells, finitely supported chains, the boundary operator and the
//! chain–cochain pairing.
//!
//! A basis cell is a tensor product of four one-dimensional factors, each
//! either a point `x_κ` or an interval `e_κ`. It is stored as the multi-index
//! `k` together with the set of axes carrying an interval factor.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::forms::DiscreteForm;
use crate::scalar::{signed, Scalar};

/// The four lattice axes; axis 0 is time.
pub const AXES: [usize; 4] = [0, 1, 2, 3];

/// A point `k = (k0, k1, k2, k3)` of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub [i64; 4]);

impl MultiIndex {
    pub const ORIGIN: MultiIndex = MultiIndex([0; 4]);

    pub const fn new(k0: i64, k1: i64, k2: i64, k3: i64) -> Self {
        MultiIndex([k0, k1, k2, k3])
    }

    #[inline]
    pub fn component(&self, mu: usize) -> i64 {
        self.0[mu]
    }

    /// `τ_μ k`: component `mu` incremented.
    #[inline]
    pub fn tau(mut self, mu: usize) -> Self {
        self.0[mu] += 1;
        self
    }

    /// `σ_μ k`: component `mu` decremented.
    #[inline]
    pub fn sigma(mut self, mu: usize) -> Self {
        self.0[mu] -= 1;
        self
    }

    /// `τ k`, every component incremented.
    pub fn tau_all(self) -> Self {
        self.offset(1)
    }

    /// `σ k`, every component decremented.
    pub fn sigma_all(self) -> Self {
        self.offset(-1)
    }

    /// Applies `τ_μ` for every `μ` in `dirs`.
    #[inline]
    pub fn tau_over(mut self, dirs: DirectionSet) -> Self {
        for mu in dirs.iter() {
            self.0[mu] += 1;
        }
        self
    }

    /// Applies `σ_μ` for every `μ` in `dirs`.
    #[inline]
    pub fn sigma_over(mut self, dirs: DirectionSet) -> Self {
        for mu in dirs.iter() {
            self.0[mu] -= 1;
        }
        self
    }

    fn offset(mut self, by: i64) -> Self {
        for c in &mut self.0 {
            *c += by;
        }
        self
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// `τ_μ k`.
pub fn tau_shift(k: MultiIndex, mu: usize) -> MultiIndex {
    k.tau(mu)
}

/// `σ_μ k`.
pub fn sigma_shift(k: MultiIndex, mu: usize) -> MultiIndex {
    k.sigma(mu)
}

/// Subset of `{0,1,2,3}` stored as a 4-bit mask. Bit `μ` set means the cell
/// has an interval factor along axis `μ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DirectionSet(u8);

impl DirectionSet {
    pub const EMPTY: DirectionSet = DirectionSet(0);
    pub const FULL: DirectionSet = DirectionSet(0b1111);

    /// Panics if `mask` has bits above axis 3.
    pub const fn from_mask(mask: u8) -> Self {
        assert!(mask < 16, "direction mask out of range");
        DirectionSet(mask)
    }

    /// Builds the set from axis numbers. Returns `None` on a repeated or
    /// out-of-range axis.
    pub fn from_axes(axes: &[usize]) -> Option<Self> {
        let mut mask = 0u8;
        for &mu in axes {
            if mu > 3 || mask & (1 << mu) != 0 {
                return None;
            }
            mask |= 1 << mu;
        }
        Some(DirectionSet(mask))
    }

    pub const fn single(mu: usize) -> Self {
        DirectionSet(1 << mu)
    }

    pub const fn pair(mu: usize, nu: usize) -> Self {
        DirectionSet((1 << mu) | (1 << nu))
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    /// Cardinality, which is the degree of any cell labelled by the set.
    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, mu: usize) -> bool {
        self.0 & (1 << mu) != 0
    }

    pub const fn with(self, mu: usize) -> Self {
        DirectionSet(self.0 | (1 << mu))
    }

    pub const fn without(self, mu: usize) -> Self {
        DirectionSet(self.0 & !(1 << mu))
    }

    pub const fn complement(self) -> Self {
        DirectionSet(!self.0 & 0b1111)
    }

    pub const fn union(self, other: Self) -> Self {
        DirectionSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        DirectionSet(self.0 & other.0)
    }

    pub const fn symmetric_difference(self, other: Self) -> Self {
        DirectionSet(self.0 ^ other.0)
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Number of members strictly below axis `mu`.
    pub const fn count_below(self, mu: usize) -> usize {
        (self.0 & ((1 << mu) - 1)).count_ones() as usize
    }

    /// Axes in strictly increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        AXES.into_iter().filter(move |&mu| self.contains(mu))
    }

    pub fn axes(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All 16 direction sets, grouped by degree.
    pub fn all() -> impl Iterator<Item = DirectionSet> {
        (0..=4).flat_map(DirectionSet::of_degree)
    }

    /// Direction sets of cardinality `r` in lexicographic order.
    pub fn of_degree(r: usize) -> impl Iterator<Item = DirectionSet> {
        let mut sets: Vec<DirectionSet> =
            (0u8..16).map(DirectionSet).filter(|d| d.degree() == r).collect();
        sets.sort();
        sets.into_iter()
    }
}

impl PartialOrd for DirectionSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DirectionSet {
    /// Lexicographic on the sorted axis list, so `01 < 02 < 03 < 12`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for DirectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectionSet({self})")
    }
}

impl fmt::Display for DirectionSet {
    /// `x` for the empty set, `e` for the full set, otherwise the axis digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            0 => f.write_str("x"),
            4 => f.write_str("e"),
            _ => {
                f.write_str("e")?;
                for mu in self.iter() {
                    write!(f, "{mu}")?;
                }
                Ok(())
            }
        }
    }
}

/// A basis element of `C(4)` (or, read dually, of `K(4)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub k: MultiIndex,
    pub dirs: DirectionSet,
}

pub type BasisChain = Cell;
pub type BasisCochain = Cell;

impl Cell {
    pub const fn new(dirs: DirectionSet, k: MultiIndex) -> Self {
        Cell { k, dirs }
    }

    pub const fn degree(&self) -> usize {
        self.dirs.degree()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.dirs, self.k)
    }
}

/// Finitely supported chain with coefficients in `S`. Exact zeros are never
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<S: Scalar> {
    terms: BTreeMap<Cell, S>,
}

impl<S: Scalar> Default for Chain<S> {
    fn default() -> Self {
        Chain { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> Chain<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(cell: Cell) -> Self {
        let mut c = Self::zero();
        c.add_term(cell, S::one());
        c
    }

    pub fn add_term(&mut self, cell: Cell, coeff: S) {
        add_into(&mut self.terms, cell, coeff);
    }

    pub fn coeff(&self, cell: &Cell) -> S {
        self.terms.get(cell).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cell, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, by: &S) -> Self {
        let mut out = Self::zero();
        for (cell, c) in &self.terms {
            out.add_term(*cell, c.clone() * by.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (cell, c) in &other.terms {
            out.add_term(*cell, c.clone());
        }
        out
    }
}

impl<S: Scalar> FromIterator<(Cell, S)> for Chain<S> {
    fn from_iter<T: IntoIterator<Item = (Cell, S)>>(iter: T) -> Self {
        let mut c = Self::zero();
        for (cell, v) in iter {
            c.add_term(cell, v);
        }
        c
    }
}

pub(crate) fn add_into<K: Ord, S: Scalar>(map: &mut BTreeMap<K, S>, key: K, coeff: S) {
    use std::collections::btree_map::Entry;
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Boundary of a single basis cell as signed faces.
///
/// The interval factor on axis `μ` is replaced by `x_{κ+1} − x_κ`, with the
/// sign `Q` accumulated over the factors to its left: `−1` per interval.
pub fn boundary_cell(cell: Cell) -> Vec<(i8, Cell)> {
    let mut faces = Vec::with_capacity(2 * cell.degree());
    for mu in cell.dirs.iter() {
        let sign: i8 = if cell.dirs.count_below(mu) % 2 == 0 { 1 } else { -1 };
        let face = cell.dirs.without(mu);
        faces.push((sign, Cell::new(face, cell.k.tau(mu))));
        faces.push((-sign, Cell::new(face, cell.k)));
    }
    faces
}

/// The boundary operator `∂`, extended linearly.
pub fn boundary<S: Scalar>(a: &Chain<S>) -> Chain<S> {
    let mut out = Chain::zero();
    for (cell, c) in a.iter() {
        for (sign, face) in boundary_cell(*cell) {
            out.add_term(face, signed(sign, c.clone()));
        }
    }
    out
}

/// Bilinear chain–cochain pairing `⟨a, ω⟩`. Cells of a different degree
/// than `w` contribute nothing.
pub fn pair<S: Scalar>(a: &Chain<S>, w: &DiscreteForm<S>) -> S {
    a.iter()
        .filter(|(cell, _)| cell.degree() == w.degree())
        .fold(S::zero(), |acc, (cell, c)| acc + c.clone() * w.coeff(cell.k, cell.dirs))
}
