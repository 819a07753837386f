//! Seeded random forms, chains and amplitudes for tests and check suites.

use num_complex::Complex64;
use rand::Rng;

use crate::complex4::{Cell, Chain, DirectionSet, MultiIndex};
use crate::forms::{DiscreteForm, InhomogeneousForm, LatticeBox, Window};
use crate::planewave::{EvenAmplitudes, Momentum};
use crate::scalar::{gaussian, GaussianRational, Scalar};

pub fn complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Gaussian integer with both parts in `-3..=3`.
pub fn gaussian_int<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

fn fill<S: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    sites: &LatticeBox,
    draw: impl Fn(&mut R) -> S,
) -> DiscreteForm<S> {
    let mut w = DiscreteForm::zero(degree);
    for k in sites.sites() {
        for dirs in DirectionSet::of_degree(degree) {
            w.add(k, dirs, draw(rng));
        }
    }
    w
}

/// Dense random degree-`r` form on the sites of `sites`.
pub fn form_on<R: Rng + ?Sized>(rng: &mut R, degree: usize, sites: &LatticeBox) -> DiscreteForm {
    fill(rng, degree, sites, complex)
}

pub fn form<R: Rng + ?Sized>(rng: &mut R, degree: usize, win: &Window) -> DiscreteForm {
    form_on(rng, degree, &win.region())
}

pub fn exact_form_on<R: Rng + ?Sized>(rng: &mut R, degree: usize, sites: &LatticeBox) -> DiscreteForm<GaussianRational> {
    fill(rng, degree, sites, gaussian_int)
}

pub fn exact_form<R: Rng + ?Sized>(rng: &mut R, degree: usize, win: &Window) -> DiscreteForm<GaussianRational> {
    exact_form_on(rng, degree, &win.region())
}

pub fn inhomogeneous<R: Rng + ?Sized>(rng: &mut R, win: &Window) -> InhomogeneousForm {
    InhomogeneousForm::from_parts(std::array::from_fn(|r| form(rng, r, win)))
}

pub fn exact_inhomogeneous<R: Rng + ?Sized>(rng: &mut R, win: &Window) -> InhomogeneousForm<GaussianRational> {
    InhomogeneousForm::from_parts(std::array::from_fn(|r| exact_form(rng, r, win)))
}

/// Random even form: grades 0, 2 and 4 only.
pub fn even<R: Rng + ?Sized>(rng: &mut R, win: &Window) -> InhomogeneousForm {
    InhomogeneousForm::from_parts(std::array::from_fn(|r| {
        if r % 2 == 0 {
            form(rng, r, win)
        } else {
            DiscreteForm::zero(r)
        }
    }))
}

/// Random chain of `terms` degree-`r` cells with sites in `sites`.
pub fn exact_chain<R: Rng + ?Sized>(rng: &mut R, degree: usize, sites: &LatticeBox, terms: usize) -> Chain<GaussianRational> {
    let dirs: Vec<DirectionSet> = DirectionSet::of_degree(degree).collect();
    (0..terms)
        .map(|_| {
            let k = MultiIndex(std::array::from_fn(|mu| rng.gen_range(sites.lo[mu]..=sites.hi[mu])));
            let d = dirs[rng.gen_range(0..dirs.len())];
            (Cell::new(d, k), gaussian_int(rng))
        })
        .collect()
}

pub fn amplitudes<R: Rng + ?Sized>(rng: &mut R) -> EvenAmplitudes {
    EvenAmplitudes::from_array(std::array::from_fn(|_| complex(rng)))
}

/// Momentum with every component in `[-bound, bound]`.
pub fn momentum<R: Rng + ?Sized>(rng: &mut R, bound: f64) -> Momentum {
    Momentum(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
}
