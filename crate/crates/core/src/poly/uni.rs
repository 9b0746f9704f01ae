//! Dense univariate polynomials, ascending degree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Var;
use crate::complex::BigComplex;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// A dense univariate polynomial; `coeffs[k]` multiplies `var^k`.
///
/// The coefficient vector is always trimmed: the leading coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq)]
pub struct UniPoly<S> {
    var: Var,
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(var: Var, mut coeffs: Vec<S>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: S) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, S::one())
    }

    /// The monomial `c * var^k`.
    pub fn monomial(var: Var, c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// `prod (var - r_i)`, multiplied in slice order.
    pub fn from_roots(var: Var, roots: &[S]) -> Self {
        let mut p = Self::one(var);
        for r in roots {
            p = p.mul_linear_root(r);
        }
        p
    }

    /// Multiplies by `(var - r)`.
    pub fn mul_linear_root(&self, r: &S) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![S::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = out[k + 1].add(c);
            out[k] = out[k].sub(&c.mul(r));
        }
        Self::new(self.var, out)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Re-tags the variable (the coefficients are unchanged).
    pub fn with_var(&self, var: Var) -> Self {
        UniPoly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| *c == S::one())
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var, "variable mismatch in add");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect();
        Self::new(self.var, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var, "variable mismatch in sub");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect();
        Self::new(self.var, coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.var,
            self.coeffs.iter().map(|c| c.mul(s)).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var, "variable mismatch in mul");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.var);
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.var, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&S::from_i64(k as i64)))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Field division: `self = q * d + r` with `deg r < deg d`. Panics on zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert_eq!(self.var, d.var, "variable mismatch in div_rem");
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(self.var), self.clone());
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].div(&lc);
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = q.mul(dc);
                rem[k - dd + j] = rem[k - dd + j].sub(&t);
            }
            quot[k - dd] = q;
        }
        (Self::new(self.var, quot), Self::new(self.var, rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let lc = lc.clone();
                self.scale(&S::one().div(&lc))
            }
        }
    }

    /// `p(a*var + b)`.
    pub fn compose_linear(&self, a: &S, b: &S) -> Self {
        let lin = Self::new(self.var, vec![b.clone(), a.clone()]);
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(self.var, c.clone()));
        }
        acc
    }

    /// Reverses the coefficients: `var^deg * p(1/var)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(self.var, coeffs)
    }

    /// The ratio `other / self` when the two are equal up to a scalar.
    pub fn proportionality(&self, other: &Self) -> Option<S> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero())?;
        if other.coeffs[k].is_zero() {
            return None;
        }
        let ratio = other.coeffs[k].div(&self.coeffs[k]);
        let ok = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a.mul(&ratio) == *b);
        ok.then_some(ratio)
    }
}

impl UniPoly<Rational> {
    /// Convenience constructor from machine integers (tests, fixtures).
    pub fn from_ints(var: Var, ints: &[i64]) -> Self {
        Self::new(var, ints.iter().map(|&n| Rational::from_int(n)).collect())
    }

    /// Numeric image of the polynomial at the given precision.
    pub fn to_complex(&self, digits: u32) -> UniPoly<BigComplex> {
        UniPoly::new(
            self.var,
            self.coeffs
                .iter()
                .map(|c| BigComplex::from_rational(c, digits))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean algorithm (gcd(0, 0) = 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: returns `(g_i, i)` with
    /// `self = lc * prod g_i^i` and the `g_i` monic, square-free, coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let p = self.monic();
        let dp = p.derivative();
        let mut a = p.gcd(&dp);
        if a.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut b = p.div_exact(&a).expect("gcd divides");
        let mut c = dp.div_exact(&a).expect("gcd divides derivative");
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree() != Some(0) {
                    out.push((b.monic(), i));
                }
                break;
            }
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Writes `self = c * prim` with `prim` having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_normalized(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = Self::new(
            self.var,
            ints.iter()
                .map(|v| Rational::from_bigint(v / &content))
                .collect(),
        );
        (Rational::new(content, den_lcm), prim)
    }

    /// Divides by the lowest-degree nonzero coefficient.
    pub fn normalized_by_first_coeff(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(c) => {
                let c = c.clone();
                self.scale(&c.recip())
            }
        }
    }

    /// Monic `n`-th root of a monic polynomial, when it exists exactly.
    pub fn nth_root_monic(&self, n: usize) -> Option<Self> {
        assert!(n >= 1);
        if self.is_zero() || !self.is_monic() {
            return None;
        }
        let deg = self.degree().unwrap();
        if deg % n != 0 {
            return None;
        }
        let d = deg / n;
        // Undetermined coefficients, solved top-down: the coefficient of
        // x^(n*d - k) in h^n is n*h_{d-k} plus terms in already-known
        // higher coefficients of h.
        let mut root = Self::monomial(self.var, Rational::one(), d);
        let nn = Rational::from_int(n as i64);
        for k in 1..=d {
            let power = root.pow(n);
            let target = self.coeff(n * d - k);
            let have = power.coeff(n * d - k);
            let correction = (target - have) / &nn;
            root = root.add(&Self::monomial(self.var, correction, d - k));
        }
        (root.pow(n) == *self).then_some(root)
    }

    /// Writes `self = c * s^2` with `s` monic, when possible.
    pub fn sqrt_up_to_constant(&self) -> Option<(Rational, Self)> {
        let lc = self.leading()?.clone();
        let s = self.monic().nth_root_monic(2)?;
        Some((lc, s))
    }

    /// Writes `self = c * s^3` with `s` monic, when possible.
    pub fn cbrt_up_to_constant(&self) -> Option<(Rational, Self)> {
        let lc = self.leading()?.clone();
        let s = self.monic().nth_root_monic(3)?;
        Some((lc, s))
    }
}

impl<S: Scalar> fmt::Debug for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c:?}")?,
                1 => write!(f, "{c:?}*{}", self.var)?,
                _ => write!(f, "{c:?}*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ints: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, ints)
    }

    #[test]
    fn trim_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[2, -3, 0, 1, 5]);
        let d = p(&[1, 1, 2]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn from_roots_and_eval() {
        let roots = [1, -2, 3].map(Rational::from_int);
        let q = UniPoly::from_roots(Var::X, &roots);
        assert!(q.is_monic());
        for r in &roots {
            assert!(q.eval(r).is_zero());
        }
        assert!(!q.eval(&Rational::from_int(4)).is_zero());
    }

    #[test]
    fn squarefree_decomposition_of_cube() {
        // (X-1)^2 (X+2)^3
        let ones = vec![Rational::from_int(1); 2];
        let twos = vec![Rational::from_int(-2); 3];
        let q = UniPoly::from_roots(Var::X, &ones).mul(&UniPoly::from_roots(Var::X, &twos));
        let parts = q.squarefree_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (p(&[-1, 1]), 2));
        assert_eq!(parts[1], (p(&[2, 1]), 3));
    }

    #[test]
    fn primitive_normalization() {
        let q = p(&[6, -4, 2]).scale(&Rational::ratio(1, 3));
        let (c, prim) = q.primitive_normalized();
        assert_eq!(prim, p(&[3, -2, 1]));
        assert_eq!(prim.scale(&c), q);
        // sign goes into the constant
        let (c2, prim2) = p(&[2, -2]).primitive_normalized();
        assert_eq!(prim2, p(&[-1, 1]));
        assert_eq!(c2, Rational::from_int(-2));
    }

    #[test]
    fn monic_square_root() {
        let s = p(&[3, -1, 1]); // X^2 - X + 3, monic
        let sq = s.mul(&s).scale(&Rational::ratio(-5, 7));
        let (c, root) = sq.sqrt_up_to_constant().unwrap();
        assert_eq!(root, s);
        assert_eq!(c, Rational::ratio(-5, 7));
        assert!(p(&[1, 1, 1, 1]).sqrt_up_to_constant().is_none());
    }

    #[test]
    fn cube_root() {
        let s = p(&[2, 0, 1, 1]);
        let cube = s.pow(3);
        assert_eq!(cube.monic().nth_root_monic(3).unwrap(), s);
    }

    #[test]
    fn compose_linear_shift() {
        let q = p(&[1, 2, 1]); // (X+1)^2
        let shifted = q.compose_linear(&Rational::one(), &Rational::from_int(3));
        assert_eq!(shifted, p(&[16, 8, 1])); // (X+4)^2
    }

    #[test]
    fn proportionality_detects_scalars() {
        let a = p(&[0, 2, -4, 6]);
        let b = a.scale(&Rational::ratio(-7, 3));
        assert_eq!(a.proportionality(&b), Some(Rational::ratio(-7, 3)));
        assert_eq!(a.proportionality(&p(&[0, 2, -4, 7])), None);
    }
}
