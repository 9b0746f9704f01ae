//! Small sparse polynomials in the seven configuration variables.
//!
//! Just enough symbolic arithmetic to expand the covariant generators, act on
//! them by permutations, and check multilinearity; the heavy formulas are
//! always *evaluated* at configurations, never expanded.

use std::collections::BTreeMap;

use crate::perm::Perm;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// A sparse polynomial in `x_1..x_7` with rational coefficients; keys are
/// exponent vectors.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<[u8; 7], Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert([0; 7], c);
        }
        p
    }

    /// The variable `x_i`, `i` 1-based.
    pub fn var(i: u8) -> Self {
        assert!((1..=7).contains(&i));
        let mut e = [0u8; 7];
        e[(i - 1) as usize] = 1;
        let mut p = Self::zero();
        p.terms.insert(e, Rational::one());
        p
    }

    /// `x_i - x_j`.
    pub fn diff(i: u8, j: u8) -> Self {
        Self::var(i).sub(&Self::var(j))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 7], &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, e: [u8; 7], c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let new = &*old + &c;
                if new.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = new;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for k in 0..7 {
                    e[k] += eb[k];
                }
                out.insert(e, ca * cb);
            }
        }
        out
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&d| d as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Degree at most one in each variable?
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&d| d <= 1))
    }

    /// The action substituting `x_i -> x_{p(i)}`.
    pub fn permuted(&self, p: &Perm) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = [0u8; 7];
            for i in 0..7 {
                ne[(p.apply(i as u8 + 1) - 1) as usize] += e[i];
            }
            out.insert(ne, c.clone());
        }
        out
    }

    /// For a multilinear polynomial, homogeneous of degree d:
    /// `x_1...x_7 * p(1/x_1, ..., 1/x_7)`, a multilinear polynomial of
    /// degree `7 - d` (each monomial is replaced by its complement).
    pub fn reciprocal_complement(&self) -> Self {
        assert!(self.is_multilinear(), "reciprocal transform needs multilinearity");
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = [0u8; 7];
            for k in 0..7 {
                ne[k] = 1 - e[k];
            }
            out.insert(ne, c.clone());
        }
        out
    }

    /// Exact evaluation at a rational tuple.
    pub fn eval(&self, xs: &[Rational; 7]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..7 {
                for _ in 0..e[k] {
                    t = t * &xs[k];
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Generic evaluation; requires all coefficients to be integers (which
    /// holds for every covariant generator used in the construction).
    pub fn eval_generic<S: Scalar>(&self, xs: &[S; 7]) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            assert!(c.is_integer(), "generic evaluation needs integer coefficients");
            let ci = c.numer().try_into().expect("coefficient fits i64");
            let mut t = S::from_i64(ci);
            for k in 0..7 {
                for _ in 0..e[k] {
                    t = t.mul(&xs[k]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_differences() {
        // (x1 - x2)(x1 + x2) = x1^2 - x2^2
        let p = MultiPoly::diff(1, 2).mul(&MultiPoly::var(1).add(&MultiPoly::var(2)));
        assert_eq!(p.num_terms(), 2);
        let xs: [Rational; 7] = std::array::from_fn(|k| Rational::from_int(k as i64 + 2));
        assert_eq!(p.eval(&xs), Rational::from_int(2 * 2 - 3 * 3));
    }

    #[test]
    fn permutation_action() {
        let p = MultiPoly::diff(1, 2);
        let s = Perm::from_cycles(&[&[1, 3]]);
        assert_eq!(p.permuted(&s), MultiPoly::diff(3, 2));
    }

    #[test]
    fn reciprocal_complement_of_monomial() {
        // x1 x2 x3 -> x4 x5 x6 x7
        let m = MultiPoly::var(1).mul(&MultiPoly::var(2)).mul(&MultiPoly::var(3));
        let c = m.reciprocal_complement();
        let expect = MultiPoly::var(4)
            .mul(&MultiPoly::var(5))
            .mul(&MultiPoly::var(6))
            .mul(&MultiPoly::var(7));
        assert_eq!(c, expect);
    }
}
