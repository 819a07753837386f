//! Coefficient rings for chains and forms.
//!
//! Everything in this crate is generic over [`Scalar`]. Production code uses
//! [`Complex64`]; the exact [`GaussianRational`] ring lets identity checks run
//! with zero tolerance.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_rational::Rational64;
use num_traits::{One, Zero};

/// Gaussian rationals `a + ib` with `a, b ∈ ℚ`.
pub type GaussianRational = Complex<Rational64>;

/// A commutative ring with conjugation that contains the Gaussian integers.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_i64(v: i64) -> Self;
    fn conj(&self) -> Self;
    /// Exact zero test; stored coefficients are never exactly zero.
    fn is_zero(&self) -> bool;
    /// Modulus as a float, used for norms and reports.
    fn magnitude(&self) -> f64;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn i() -> Self {
        Complex::new(Rational64::zero(), Rational64::one())
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(Rational64::from_integer(v), Rational64::zero())
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        let re = *self.re.numer() as f64 / *self.re.denom() as f64;
        let im = *self.im.numer() as f64 / *self.im.denom() as f64;
        re.hypot(im)
    }
}

/// Gaussian integer `re + i·im` in the exact ring.
pub fn gaussian(re: i64, im: i64) -> GaussianRational {
    Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
}

/// Multiplies by `±1` without a ring multiplication.
#[inline]
pub(crate) fn signed<S: Scalar>(sign: i8, v: S) -> S {
    if sign < 0 {
        -v
    } else {
        v
    }
}
