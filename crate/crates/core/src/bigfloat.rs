//! Fixed-point arbitrary-precision real arithmetic in base 10.
//!
//! A [`BigFloat`] stores `mant / 10^digits` with an explicit decimal precision
//! field. Addition and subtraction are exact after alignment; multiplication,
//! division and square roots truncate toward zero, so every operation is
//! accurate to within one unit in the last place. Mixed-precision operands are
//! aligned to the finer precision, which makes small integer constants (stored
//! at zero digits) exact in every context.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A decimal fixed-point real: `mant / 10^digits`.
#[derive(Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    digits: u32,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            digits: 0,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        BigFloat {
            mant: BigInt::from(n),
            digits: 0,
        }
    }

    /// `10^k` (k may be negative); negative powers carry `-k` digits.
    pub fn pow10(k: i64) -> Self {
        if k >= 0 {
            BigFloat {
                mant: pow10(k as u32),
                digits: 0,
            }
        } else {
            BigFloat {
                mant: BigInt::from(1),
                digits: (-k) as u32,
            }
        }
    }

    /// Truncation of `r` to `digits` decimal digits.
    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let mant = (r.numer() * pow10(digits)) / r.denom();
        BigFloat { mant, digits }
    }

    /// Exact value as a rational, `mant / 10^digits`.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), pow10(self.digits))
    }

    /// Lossy conversion used only for sizing heuristics (initial radii, ...).
    pub fn to_f64_lossy(&self) -> f64 {
        let r = self.to_rational();
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    }

    /// Conversion from an `f64` sample; exact (binary fractions are finite decimals).
    pub fn from_f64(x: f64, digits: u32) -> Self {
        assert!(x.is_finite(), "non-finite f64 into BigFloat");
        // 10^digits * x, truncated via string-free integer arithmetic on the
        // IEEE decomposition: x = m * 2^e with |m| < 2^53.
        let (m, e, s) = {
            let bits = x.to_bits();
            let sign = if bits >> 63 == 1 { -1 } else { 1 };
            let exp = ((bits >> 52) & 0x7ff) as i64;
            let frac = bits & ((1u64 << 52) - 1);
            if exp == 0 {
                (frac, -1074i64, sign)
            } else {
                (frac | (1u64 << 52), exp - 1075, sign)
            }
        };
        let mut num = BigInt::from(m) * pow10(digits);
        let mant = if e >= 0 {
            num <<= e as usize;
            num
        } else {
            num >> ((-e) as usize)
        };
        BigFloat {
            mant: mant * s,
            digits,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Re-scales to exactly `d` digits (exact when raising, truncating when lowering).
    pub fn with_digits(&self, d: u32) -> Self {
        match d.cmp(&self.digits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => BigFloat {
                mant: &self.mant * pow10(d - self.digits),
                digits: d,
            },
            Ordering::Less => BigFloat {
                mant: &self.mant / pow10(self.digits - d),
                digits: d,
            },
        }
    }

    fn aligned(&self, rhs: &Self) -> (BigInt, BigInt, u32) {
        let d = self.digits.max(rhs.digits);
        (
            &self.mant * pow10(d - self.digits),
            &rhs.mant * pow10(d - rhs.digits),
            d,
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b, d) = self.aligned(rhs);
        BigFloat {
            mant: a + b,
            digits: d,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let (a, b, d) = self.aligned(rhs);
        BigFloat {
            mant: a - b,
            digits: d,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let d = self.digits.max(rhs.digits);
        let lower = self.digits.min(rhs.digits);
        BigFloat {
            mant: (&self.mant * &rhs.mant) / pow10(lower),
            digits: d,
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let d = self.digits.max(rhs.digits);
        // a/10^da / (b/10^db) = a * 10^(d - da + db) / b / 10^d
        let scaled = &self.mant * pow10(d - self.digits + rhs.digits);
        BigFloat {
            mant: scaled / &rhs.mant,
            digits: d,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            digits: self.digits,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            digits: self.digits,
        }
    }

    /// Truncated square root; panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of negative value");
        // sqrt(a / 10^d) = sqrt(a * 10^d) / 10^d
        BigFloat {
            mant: (&self.mant * pow10(self.digits)).sqrt(),
            digits: self.digits,
        }
    }

    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        let (a, b, _) = self.aligned(rhs);
        a.cmp(&b)
    }

    /// `|self| > |rhs|`?
    pub fn abs_gt(&self, rhs: &Self) -> bool {
        let (a, b, _) = self.aligned(rhs);
        a.abs() > b.abs()
    }

    /// Rough decimal magnitude: `floor(log10 |x|)`, or `None` for zero.
    pub fn log10_floor(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let digits_of_mant = self.mant.abs().to_str_radix(10).len() as i64;
        Some(digits_of_mant - 1 - self.digits as i64)
    }
}

impl fmt::Display for BigFloat {
    /// Plain decimal form, e.g. `-3.250000...`; all `digits` places are kept.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mant.is_negative() { "-" } else { "" };
        let a = self.mant.abs();
        if self.digits == 0 {
            return write!(f, "{sign}{a}");
        }
        let scale = pow10(self.digits);
        let int = &a / &scale;
        let frac = &a % &scale;
        write!(
            f,
            "{sign}{int}.{frac:0>width$}",
            width = self.digits as usize
        )
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}~{}d", self.digits)
    }
}

impl FromStr for BigFloat {
    type Err = Error;

    /// Parses a plain decimal string (`-12.345`); precision = fraction length.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("not a decimal: {s:?}"));
        let (int_part, frac_part) = match s.split_once('.') {
            None => (s, ""),
            Some((i, fr)) => (i, fr),
        };
        let digits = frac_part.len() as u32;
        let negative = int_part.starts_with('-');
        let int_mag = int_part.trim_start_matches(['-', '+']);
        if int_mag.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let joined = format!(
            "{}{}",
            if int_mag.is_empty() { "0" } else { int_mag },
            frac_part
        );
        let mant = BigInt::from_str(&joined).map_err(|_| bad())?;
        Ok(BigFloat {
            mant: if negative { -mant } else { mant },
            digits,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(s: &str) -> BigFloat {
        s.parse().unwrap()
    }

    #[test]
    fn exact_add_mixed_precision() {
        let a = BigFloat::from_rational(&Rational::ratio(1, 4), 50);
        let b = BigFloat::from_i64(2);
        assert_eq!(a.add(&b).to_rational(), Rational::ratio(9, 4));
        assert_eq!(a.add(&b).digits(), 50);
    }

    #[test]
    fn truncating_mul_within_one_ulp() {
        let third = BigFloat::from_rational(&Rational::ratio(1, 3), 40);
        let p = third.mul(&third);
        let exact = Rational::ratio(1, 9);
        let err = (p.to_rational() - exact).abs();
        assert!(err < Rational::new(1.into(), pow10(39)));
    }

    #[test]
    fn sqrt_two() {
        let two = BigFloat::from_i64(2).with_digits(60);
        let r = two.sqrt();
        let square = r.mul(&r);
        let err = (square.to_rational() - Rational::from_int(2)).abs();
        assert!(err < Rational::new(1.into(), pow10(58)));
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0.500", "-12.0625", "3", "-0.001"] {
            assert_eq!(bf(s).to_string(), s);
        }
    }

    #[test]
    fn f64_conversion_is_exact() {
        let x = BigFloat::from_f64(0.78125, 10); // 25/32
        assert_eq!(x.to_rational(), Rational::ratio(25, 32));
        assert_eq!(BigFloat::from_f64(-3.0, 5).to_rational(), Rational::from_int(-3));
    }

    #[test]
    fn magnitude_estimate() {
        assert_eq!(bf("123.4").log10_floor(), Some(2));
        assert_eq!(bf("0.004").log10_floor(), Some(-3));
        assert_eq!(BigFloat::zero().log10_floor(), None);
    }
}
