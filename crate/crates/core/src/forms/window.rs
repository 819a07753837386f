use serde::{Deserialize, Serialize};

use crate::complex4::MultiIndex;
use crate::error::Error;

/// Inclusive box `lo ≤ k ≤ hi` (componentwise) of lattice sites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    pub lo: [i64; 4],
    pub hi: [i64; 4],
}

impl LatticeBox {
    pub fn contains(&self, k: MultiIndex) -> bool {
        (0..4).all(|mu| self.lo[mu] <= k.0[mu] && k.0[mu] <= self.hi[mu])
    }

    pub fn is_empty(&self) -> bool {
        (0..4).any(|mu| self.lo[mu] > self.hi[mu])
    }

    /// Grows the box by `by` sites on every face.
    pub fn expanded(&self, by: i64) -> LatticeBox {
        LatticeBox { lo: self.lo.map(|c| c - by), hi: self.hi.map(|c| c + by) }
    }

    pub fn site_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        (0..4).map(|mu| (self.hi[mu] - self.lo[mu] + 1) as usize).product()
    }

    /// Sites in lexicographic order of `(k0, k1, k2, k3)`.
    pub fn sites(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        let b = *self;
        let empty = b.is_empty();
        (b.lo[0]..=b.hi[0])
            .flat_map(move |k0| (b.lo[1]..=b.hi[1]).map(move |k1| (k0, k1)))
            .flat_map(move |(k0, k1)| (b.lo[2]..=b.hi[2]).map(move |k2| (k0, k1, k2)))
            .flat_map(move |(k0, k1, k2)| {
                (b.lo[3]..=b.hi[3]).map(move |k3| MultiIndex::new(k0, k1, k2, k3))
            })
            .filter(move |_| !empty)
    }
}

/// The finite block `e_n`: sites with `1 ≤ k_μ ≤ n_μ` on every axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct Window {
    n: [i64; 4],
}

impl Window {
    pub fn new(n: [i64; 4]) -> Result<Self, Error> {
        if n.iter().any(|&e| e < 1) {
            return Err(Error::InvalidWindow(n));
        }
        Ok(Window { n })
    }

    /// `n⁴` window. Panics if `n < 1`.
    pub fn cube(n: i64) -> Self {
        Window::new([n; 4]).expect("window extent must be positive")
    }

    pub fn extents(&self) -> [i64; 4] {
        self.n
    }

    pub fn region(&self) -> LatticeBox {
        LatticeBox { lo: [1; 4], hi: self.n }
    }

    /// Sites at least one cell away from every face. Empty when some
    /// extent is below 3.
    pub fn interior(&self) -> LatticeBox {
        LatticeBox { lo: [2; 4], hi: self.n.map(|e| e - 1) }
    }

    pub fn contains(&self, k: MultiIndex) -> bool {
        self.region().contains(k)
    }

    pub fn is_interior(&self, k: MultiIndex) -> bool {
        self.interior().contains(k)
    }

    pub fn sites(&self) -> impl Iterator<Item = MultiIndex> {
        let region = self.region();
        region.sites().collect::<Vec<_>>().into_iter()
    }

    pub fn site_count(&self) -> usize {
        self.region().site_count()
    }
}

impl TryFrom<[i64; 4]> for Window {
    type Error = Error;
    fn try_from(n: [i64; 4]) -> Result<Self, Error> {
        Window::new(n)
    }
}

impl From<Window> for [i64; 4] {
    fn from(w: Window) -> Self {
        w.n
    }
}
