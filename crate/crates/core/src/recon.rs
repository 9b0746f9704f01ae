//! Rational reconstruction from high-precision decimals.
//!
//! Continued-fraction convergents of the decimal value are accepted as "the"
//! underlying rational only when the evidence is overwhelming: the convergent
//! must match within the value's error bound, fit the denominator bound, and
//! the *next* convergent's denominator must overshoot that bound by a large
//! safety factor (or the fraction must terminate). Everything else is a
//! normal failure meaning "not plausibly rational at this precision".

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bigfloat::BigFloat;
use crate::rational::Rational;

/// Safety factor the next convergent's denominator must exceed
/// `max_denominator` by before a reconstruction is trusted.
pub const SAFETY_FACTOR: u64 = 1_000_000;

/// Error bound attached to a value carrying `digits` decimal digits: ten
/// digits are sacrificed to accumulated round-off.
pub fn default_eps(digits: u32) -> Rational {
    Rational::new(1.into(), BigInt::from(10u32).pow(digits.saturating_sub(10)))
}

/// Reconstructs `v` as a rational with denominator at most `max_denominator`,
/// using the value's precision-derived error bound. `None` means "not
/// plausibly rational at this precision".
pub fn rational_reconstruct(v: &BigFloat, max_denominator: &BigInt) -> Option<Rational> {
    rational_reconstruct_eps(v, &default_eps(v.digits()), max_denominator)
}

/// [`rational_reconstruct`] with an explicit error bound.
pub fn rational_reconstruct_eps(
    v: &BigFloat,
    eps: &Rational,
    max_denominator: &BigInt,
) -> Option<Rational> {
    assert!(max_denominator >= &BigInt::from(1));
    let target = v.to_rational();
    let safety = BigInt::from(SAFETY_FACTOR);

    // Continued-fraction walk with convergents p_k/q_k, where
    // p_k = a_k p_{k-1} + p_{k-2} and likewise for q_k.
    let mut num = target.numer().clone();
    let mut den = target.denom().clone();
    let (mut p_a, mut q_a) = (BigInt::zero(), BigInt::from(1)); // k-2
    let (mut p_b, mut q_b) = (BigInt::from(1), BigInt::zero()); // k-1
    loop {
        let (a, r) = num_integer::Integer::div_mod_floor(&num, &den);
        let p_k = &a * &p_b + &p_a;
        let q_k = &a * &q_b + &q_a;

        if q_k > *max_denominator {
            // convergent denominators only grow; nothing admissible remains
            return None;
        }
        let candidate = Rational::new(p_k.clone(), q_k.clone());
        if (&candidate - &target).abs() <= *eps {
            if r.is_zero() {
                // terminating fraction: the value is exactly p_k/q_k
                return Some(candidate);
            }
            let a_next = num_integer::Integer::div_floor(&den, &r);
            let q_next = &a_next * &q_k + &q_b;
            if q_next > max_denominator * &safety {
                return Some(candidate);
            }
            return None;
        }
        if r.is_zero() {
            return None;
        }
        p_a = std::mem::replace(&mut p_b, p_k);
        q_a = std::mem::replace(&mut q_b, q_k);
        num = den;
        den = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn at_digits(r: &Rational, digits: u32) -> BigFloat {
        BigFloat::from_rational(r, digits)
    }

    #[test]
    fn recovers_one_half() {
        let v = at_digits(&Rational::ratio(1, 2), 50);
        let got = rational_reconstruct(&v, &BigInt::from(100)).unwrap();
        assert_eq!(got, Rational::ratio(1, 2));
    }

    #[test]
    fn rejects_sqrt_two() {
        let two = BigFloat::from_i64(2).with_digits(50);
        let v = two.sqrt();
        assert_eq!(rational_reconstruct(&v, &BigInt::from(1_000_000)), None);
    }

    #[test]
    fn recovers_large_integer_with_explicit_eps() {
        let n = Rational::from_int(987_654_321_012);
        // value carries accumulated error ~1e-150: a chained computation
        let v = at_digits(&n, 200).add(&BigFloat::pow10(-150));
        let eps = Rational::new(1.into(), BigInt::from(10u32).pow(100));
        let got = rational_reconstruct_eps(&v, &eps, &BigInt::from(1_000)).unwrap();
        assert_eq!(got, n);
        // the tight default bound rejects the perturbed value
        assert_eq!(rational_reconstruct(&v, &BigInt::from(1_000)), None);
    }

    #[test]
    fn round_trip_small_denominators() {
        for (p, q) in [(22, 7), (-355, 113), (1, 9973), (4097, 9999)] {
            let r = Rational::ratio(p, q);
            let v = at_digits(&r, 100);
            let got = rational_reconstruct(&v, &BigInt::from(10_000)).unwrap();
            assert_eq!(got, r, "{p}/{q}");
        }
    }

    #[test]
    fn negative_values() {
        let r = Rational::ratio(-7, 3);
        let v = at_digits(&r, 80);
        assert_eq!(
            rational_reconstruct(&v, &BigInt::from(10)).unwrap(),
            r
        );
    }
}
