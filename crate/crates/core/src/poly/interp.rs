//! Lagrange interpolation over the rationals.
//!
//! Used to compute resultants and discriminants of pencils by specializing a
//! parameter at enough sample values and interpolating; this keeps the exact
//! bivariate computations within small univariate determinants.

use super::uni::UniPoly;
use super::Var;
use crate::rational::Rational;

/// The unique polynomial of degree `< points.len()` through the given points.
/// Panics on repeated abscissae.
pub fn lagrange(var: Var, points: &[(Rational, Rational)]) -> UniPoly<Rational> {
    let mut acc = UniPoly::zero(var);
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(var, Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = xi - xj;
            assert!(!diff.is_zero(), "repeated interpolation abscissa");
            basis = basis.mul_linear_root(xj);
            denom = denom * diff;
        }
        acc = acc.add(&basis.scale(&(yi / &denom)));
    }
    acc
}

/// Interpolates a polynomial of degree at most `bound` from values of `f`
/// at the sample points `0, -1, 1, -2, 2, ...` where `accept` holds.
pub fn interpolate_from_samples(
    var: Var,
    bound: usize,
    mut accept: impl FnMut(&Rational) -> bool,
    mut f: impl FnMut(&Rational) -> Rational,
) -> UniPoly<Rational> {
    // candidate abscissae: 0, -1, 1, -2, 2, ...
    let candidates = (0i64..).map(|n| {
        let k = (n + 1) / 2;
        Rational::from_int(if n % 2 == 0 { k } else { -k })
    });
    let mut points = Vec::with_capacity(bound + 1);
    for (tried, t) in candidates.enumerate() {
        assert!(tried < 10_000, "could not find enough admissible sample points");
        if !accept(&t) {
            continue;
        }
        let y = f(&t);
        points.push((t, y));
        if points.len() == bound + 1 {
            break;
        }
    }
    lagrange(var, &points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_polynomial() {
        let p = UniPoly::from_ints(Var::T, &[3, 0, -5, 1, 7]);
        let pts: Vec<_> = (0..5)
            .map(|k| {
                let x = Rational::from_int(k - 2);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(lagrange(Var::T, &pts), p);
    }

    #[test]
    fn sampling_skips_rejected_points() {
        let p = UniPoly::from_ints(Var::T, &[1, -4, 2]);
        let got = interpolate_from_samples(
            Var::T,
            2,
            |t| *t != Rational::from_int(1),
            |t| p.eval(t),
        );
        assert_eq!(got, p);
    }
}
