//! Scalar abstraction shared by the exact and numeric pipelines.
//!
//! Every construction formula in this crate (covariants, dual points,
//! correspondences, pencil coefficients) is written once against this trait
//! and instantiated with [`Rational`](crate::rational::Rational) for exact
//! runs and [`BigComplex`](crate::complex::BigComplex) for high-precision
//! numeric runs.

use crate::rational::Rational;

/// A field-like scalar: exact rationals or arbitrary-precision complex values.
///
/// `div` panics on a zero divisor; numeric callers are expected to guard
/// denominators against their precision floor before dividing.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Indistinguishable from zero at `digits` of working precision; exact
    /// zero test when `digits` is `None` (the exact mode).
    fn negligible_at(&self, digits: Option<u32>) -> bool;

    /// Lossy decimal magnitude, `log10 |x|`; `f64::NEG_INFINITY` for zero.
    /// Only used to scale numeric guards, never for exact decisions.
    fn magnitude_log10(&self) -> f64;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_int(n)
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn negligible_at(&self, _digits: Option<u32>) -> bool {
        self.is_zero()
    }

    fn magnitude_log10(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        const LOG2: f64 = std::f64::consts::LOG10_2;
        (self.numer().bits() as f64 - self.denom().bits() as f64) * LOG2
    }
}

/// Product of scalars.
pub fn prod<S: Scalar>(items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::one(), |a, b| a.mul(&b))
}

/// Sum of scalars.
pub fn sum<S: Scalar>(items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::zero(), |a, b| a.add(&b))
}
