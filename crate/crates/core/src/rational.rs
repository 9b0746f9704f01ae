//! Exact arbitrary-precision rational numbers.
//!
//! Thin wrapper around `num_rational::BigRational` fixing the conventions the
//! rest of the crate relies on: denominators are positive, fractions are
//! always reduced, and the text form is `"p/q"` (or `"p"` when `q = 1`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number. Arithmetic never rounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`. Panics when `den = 0`.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Builds `p/q` from machine integers. Panics when `q = 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, negative exponents allowed (panics on `0^-n`).
    pub fn pow(&self, exp: i32) -> Self {
        if exp >= 0 {
            Rational(self.0.pow(exp))
        } else {
            self.recip().pow(-exp)
        }
    }

    /// Exact square root when one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let sn = self.numer().sqrt();
        let sd = self.denom().sqrt();
        if &(&sn * &sn) == self.numer() && &(&sd * &sd) == self.denom() {
            Some(Rational::new(sn, sd))
        } else {
            None
        }
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        self.abs().0.cmp(&other.abs().0)
    }

    /// Lossy `log10 |x|` (diagnostics and numeric guard scaling only).
    pub fn magnitude_log10_public(&self) -> f64 {
        crate::scalar::Scalar::magnitude_log10(self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional sign; no decimal forms.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = |_| Error::InvalidInput(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            None => Ok(Rational::from_bigint(BigInt::from_str(s).map_err(bad)?)),
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(bad)?;
                let den = BigInt::from_str(q.trim()).map_err(bad)?;
                if den.is_zero() {
                    return Err(Error::InvalidInput(format!("zero denominator: {s:?}")));
                }
                Ok(Rational::new(num, den))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Sum of a slice of rationals.
pub fn rat_sum<'a>(items: impl IntoIterator<Item = &'a Rational>) -> Rational {
    items.into_iter().fold(Rational::zero(), |a, b| a + b)
}

/// Product of a slice of rationals.
pub fn rat_prod<'a>(items: impl IntoIterator<Item = &'a Rational>) -> Rational {
    items.into_iter().fold(Rational::one(), |a, b| a * b)
}

/// Integer sign helper used when canonicalizing: |sign| of a `BigInt`.
pub fn bigint_is_negative(n: &BigInt) -> bool {
    n.sign() == Sign::Minus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.to_string(), "-2/3");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "22/7", "-385/113"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(
            Rational::ratio(9, 4).sqrt_exact(),
            Some(Rational::ratio(3, 2))
        );
        assert_eq!(Rational::from_int(2).sqrt_exact(), None);
        assert_eq!(Rational::from_int(-4).sqrt_exact(), None);
    }
}
