//! Coefficient-ring abstraction shared by polynomials, series, and
//! quasipolynomials.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Commutative ring with a distinguished embedding of the rationals.
///
/// Implemented by [`Rational`], [`crate::Cyclotomic`], and
/// [`crate::group::ClassFunction`]. Operations take references so that
/// big-integer values are never cloned implicitly.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embedding of a rational scalar into the ring.
    fn from_rational(r: &Rational) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}
