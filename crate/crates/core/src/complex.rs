//! Arbitrary-precision complex arithmetic on top of [`BigFloat`].

use std::fmt;

use crate::bigfloat::BigFloat;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// A complex number with explicit decimal precision.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero() -> Self {
        BigComplex {
            re: BigFloat::zero(),
            im: BigFloat::zero(),
        }
    }

    pub fn from_real(re: BigFloat) -> Self {
        BigComplex {
            re,
            im: BigFloat::zero(),
        }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        Self::from_real(BigFloat::from_rational(r, digits))
    }

    pub fn from_f64_pair(re: f64, im: f64, digits: u32) -> Self {
        BigComplex {
            re: BigFloat::from_f64(re, digits),
            im: BigFloat::from_f64(im, digits),
        }
    }

    pub fn digits(&self) -> u32 {
        self.re.digits().max(self.im.digits())
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn abs_sq(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> BigFloat {
        self.abs_sq().sqrt()
    }

    /// `|re| + |im|`, a cheap norm equivalent for guards and tolerances.
    pub fn norm1(&self) -> BigFloat {
        self.re.abs().add(&self.im.abs())
    }
}

impl Scalar for BigComplex {
    fn zero() -> Self {
        BigComplex::zero()
    }

    fn one() -> Self {
        BigComplex::from_real(BigFloat::from_i64(1))
    }

    fn from_i64(n: i64) -> Self {
        BigComplex::from_real(BigFloat::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        BigComplex {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        BigComplex {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        BigComplex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        let den = rhs.abs_sq();
        assert!(!den.is_zero(), "BigComplex division by zero");
        let num = self.mul(&rhs.conj());
        BigComplex {
            re: num.re.div(&den),
            im: num.im.div(&den),
        }
    }

    fn neg(&self) -> Self {
        BigComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    /// Below the precision-derived floor `10^(-digits/2)`.
    fn negligible_at(&self, digits: Option<u32>) -> bool {
        match digits {
            None => self.is_zero(),
            Some(d) => !self.norm1().abs_gt(&BigFloat::pow10(-((d / 2) as i64))),
        }
    }

    fn magnitude_log10(&self) -> f64 {
        match self.norm1().log10_floor() {
            None => f64::NEG_INFINITY,
            Some(k) => k as f64,
        }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_division() {
        let a = BigComplex::from_f64_pair(3.0, 4.0, 40);
        let b = BigComplex::from_f64_pair(0.0, 2.0, 40);
        let q = a.div(&b);
        // (3+4i)/(2i) = 2 - 1.5i
        assert_eq!(q.re.to_rational(), Rational::from_int(2));
        assert_eq!(q.im.to_rational(), Rational::ratio(-3, 2));
    }

    #[test]
    fn abs_of_three_four() {
        let a = BigComplex::from_f64_pair(3.0, -4.0, 30);
        assert_eq!(a.abs().to_rational(), Rational::from_int(5));
    }
}
