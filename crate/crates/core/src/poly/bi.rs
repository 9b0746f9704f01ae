//! Dense bivariate polynomials.
//!
//! `coeffs[i][j]` multiplies `vars.0^i * vars.1^j`; the outer index is the
//! first variable's degree (row = first-variable degree).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::uni::UniPoly;
use super::Var;
use crate::complex::BigComplex;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// A dense bivariate polynomial over `S`.
#[derive(Clone, PartialEq)]
pub struct BiPoly<S> {
    vars: (Var, Var),
    coeffs: Vec<Vec<S>>,
}

impl<S: Scalar> BiPoly<S> {
    pub fn new(vars: (Var, Var), coeffs: Vec<Vec<S>>) -> Self {
        assert_ne!(vars.0, vars.1, "bivariate polynomial needs two variables");
        let mut p = BiPoly { vars, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while self.coeffs.last().map_or(false, |row| row.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(vars: (Var, Var)) -> Self {
        BiPoly {
            vars,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(vars: (Var, Var), c: S) -> Self {
        Self::new(vars, vec![vec![c]])
    }

    /// Builds from coefficients of the first variable: `rows[i]` is the
    /// polynomial in the second variable multiplying `vars.0^i`.
    pub fn from_first_coeffs(vars: (Var, Var), rows: Vec<UniPoly<S>>) -> Self {
        Self::new(
            vars,
            rows.into_iter().map(|p| p.coeffs().to_vec()).collect(),
        )
    }

    /// `p(first) * q(second)` as a bivariate polynomial.
    pub fn outer(vars: (Var, Var), p: &UniPoly<S>, q: &UniPoly<S>) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|a| q.coeffs().iter().map(|b| a.mul(b)).collect())
            .collect();
        Self::new(vars, coeffs)
    }

    /// Embeds a univariate polynomial as constant in the second variable.
    pub fn from_uni_first(vars: (Var, Var), p: &UniPoly<S>) -> Self {
        Self::new(vars, p.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    /// Embeds a univariate polynomial as constant in the first variable.
    pub fn from_uni_second(vars: (Var, Var), p: &UniPoly<S>) -> Self {
        Self::new(vars, vec![p.coeffs().to_vec()])
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(deg in first, deg in second)`, `None` for zero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        if self.is_zero() {
            return None;
        }
        let d1 = self.coeffs.len() - 1;
        let d2 = self.coeffs.iter().map(|r| r.len()).max().unwrap() - 1;
        Some((d1, d2))
    }

    pub fn coeff(&self, i: usize, j: usize) -> S {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Coefficient of `vars.0^i` as a polynomial in the second variable.
    pub fn first_coeff(&self, i: usize) -> UniPoly<S> {
        UniPoly::new(
            self.vars.1,
            self.coeffs.get(i).cloned().unwrap_or_default(),
        )
    }

    /// All first-variable coefficients, ascending.
    pub fn first_coeffs(&self) -> Vec<UniPoly<S>> {
        (0..self.coeffs.len()).map(|i| self.first_coeff(i)).collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in add");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let m = self
                .coeffs
                .get(i)
                .map_or(0, |r| r.len())
                .max(rhs.coeffs.get(i).map_or(0, |r| r.len()));
            out.push((0..m).map(|j| self.coeff(i, j).add(&rhs.coeff(i, j))).collect());
        }
        Self::new(self.vars, out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| c.neg()).collect())
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.vars,
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|c| c.mul(s)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars, "variable mismatch in mul");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.vars);
        }
        let (a1, a2) = self.bidegree().unwrap();
        let (b1, b2) = rhs.bidegree().unwrap();
        let mut out = vec![vec![S::zero(); a2 + b2 + 1]; a1 + b1 + 1];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rrow) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in rrow.iter().enumerate() {
                        out[i + k][j + l] = out[i + k][j + l].add(&a.mul(b));
                    }
                }
            }
        }
        Self::new(self.vars, out)
    }

    pub fn eval(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for row in self.coeffs.iter().rev() {
            let mut r = S::zero();
            for c in row.iter().rev() {
                r = r.mul(y).add(c);
            }
            acc = acc.mul(x).add(&r);
        }
        acc
    }

    /// Substitutes the first variable, leaving a polynomial in the second.
    pub fn eval_first(&self, x: &S) -> UniPoly<S> {
        let mut acc = UniPoly::zero(self.vars.1);
        for i in (0..self.coeffs.len()).rev() {
            acc = acc.scale(x).add(&self.first_coeff(i));
        }
        acc
    }

    /// Substitutes the second variable, leaving a polynomial in the first.
    pub fn eval_second(&self, y: &S) -> UniPoly<S> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| UniPoly::new(self.vars.1, row.clone()).eval(y))
            .collect();
        UniPoly::new(self.vars.0, coeffs)
    }

    /// Transposes the coefficient matrix and swaps the variable tags.
    pub fn swapped(&self) -> Self {
        if self.is_zero() {
            return Self::zero((self.vars.1, self.vars.0));
        }
        let (d1, d2) = self.bidegree().unwrap();
        let mut out = vec![vec![S::zero(); d1 + 1]; d2 + 1];
        for i in 0..=d1 {
            for j in 0..=d2 {
                out[j][i] = self.coeff(i, j);
            }
        }
        Self::new((self.vars.1, self.vars.0), out)
    }

    /// Is the coefficient matrix symmetric?
    pub fn is_symmetric(&self) -> bool {
        match self.bidegree() {
            None => true,
            Some((d1, d2)) => {
                d1 == d2
                    && (0..=d1).all(|i| (0..=d2).all(|j| self.coeff(i, j) == self.coeff(j, i)))
            }
        }
    }

    /// Partial derivative in the first variable.
    pub fn derivative_first(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.vars);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, row)| {
                let k = S::from_i64(i as i64);
                row.iter().map(|c| c.mul(&k)).collect()
            })
            .collect();
        Self::new(self.vars, coeffs)
    }

    /// Partial derivative in the second variable.
    pub fn derivative_second(&self) -> Self {
        self.swapped().derivative_first().swapped()
    }

    /// Exact quotient by long division in the first variable, or `None`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.vars, d.vars, "variable mismatch in div_exact");
        assert!(!d.is_zero(), "bivariate division by zero");
        if self.is_zero() {
            return Some(Self::zero(self.vars));
        }
        let dd = d.coeffs.len() - 1;
        let dlc = d.first_coeff(dd);
        let mut rem = self.first_coeffs();
        if rem.len() < dd + 1 {
            return None;
        }
        let mut quot = vec![UniPoly::zero(self.vars.1); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].div_exact(&dlc)?;
            for j in 0..=dd {
                let t = q.mul(&d.first_coeff(j));
                rem[k - dd + j] = rem[k - dd + j].sub(&t);
            }
            quot[k - dd] = q;
        }
        if rem.iter().all(|r| r.is_zero()) {
            Some(Self::from_first_coeffs(self.vars, quot))
        } else {
            None
        }
    }

    /// The ratio `other / self` when the two are equal up to a scalar.
    pub fn proportionality(&self, other: &Self) -> Option<S> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.bidegree() != other.bidegree() {
            return None;
        }
        let (d1, d2) = self.bidegree().unwrap();
        let mut ratio = None;
        for i in 0..=d1 {
            for j in 0..=d2 {
                let a = self.coeff(i, j);
                if !a.is_zero() {
                    ratio = Some(other.coeff(i, j).div(&a));
                    break;
                }
            }
            if ratio.is_some() {
                break;
            }
        }
        let ratio = ratio?;
        for i in 0..=d1 {
            for j in 0..=d2 {
                if self.coeff(i, j).mul(&ratio) != other.coeff(i, j) {
                    return None;
                }
            }
        }
        Some(ratio)
    }
}

impl BiPoly<Rational> {
    /// Numeric image at the given precision.
    pub fn to_complex(&self, digits: u32) -> BiPoly<BigComplex> {
        BiPoly::new(
            self.vars,
            self.coeffs
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| BigComplex::from_rational(c, digits))
                        .collect()
                })
                .collect(),
        )
    }

    /// Writes `self = c * prim` with coprime integer coefficients; the first
    /// nonzero coefficient in lexicographic `(i, j)` order is positive.
    pub fn primitive_normalized(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        for row in &self.coeffs {
            for c in row {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let ints: Vec<Vec<BigInt>> = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect())
            .collect();
        let mut content = BigInt::zero();
        for row in &ints {
            for v in row {
                content = content.gcd(v);
            }
        }
        let first = ints
            .iter()
            .flat_map(|r| r.iter())
            .find(|v| !v.is_zero())
            .unwrap();
        if first.is_negative() {
            content = -content;
        }
        let prim = Self::new(
            self.vars,
            ints.iter()
                .map(|row| row.iter().map(|v| Rational::from_bigint(v / &content)).collect())
                .collect(),
        );
        (Rational::new(content, den_lcm), prim)
    }
}

impl<S: Scalar> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{c:?}")?;
                if i > 0 {
                    write!(f, "*{}^{i}", self.vars.0)?;
                }
                if j > 0 {
                    write!(f, "*{}^{j}", self.vars.1)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Var, Var) {
        (Var::X, Var::Y)
    }

    fn rp(ints: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, ints)
    }

    #[test]
    fn outer_product_and_eval() {
        let p = rp(&[1, 2]); // 1 + 2X
        let q = UniPoly::from_ints(Var::Y, &[3, 0, 1]); // 3 + Y^2
        let b = BiPoly::outer(xy(), &p, &q);
        assert_eq!(b.bidegree(), Some((1, 2)));
        let x = Rational::from_int(2);
        let y = Rational::from_int(-1);
        assert_eq!(b.eval(&x, &y), p.eval(&x) * q.eval(&y));
    }

    #[test]
    fn exact_division_round_trip() {
        let a = BiPoly::new(
            xy(),
            vec![
                vec![Rational::from_int(1), Rational::from_int(2)],
                vec![Rational::from_int(-1), Rational::from_int(3)],
            ],
        );
        let b = BiPoly::new(
            xy(),
            vec![
                vec![Rational::from_int(4), Rational::from_int(0), Rational::from_int(1)],
                vec![Rational::from_int(2), Rational::from_int(5)],
                vec![Rational::from_int(7)],
            ],
        );
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let off = prod.add(&BiPoly::constant(xy(), Rational::one()));
        assert_eq!(off.div_exact(&a), None);
    }

    #[test]
    fn swap_and_symmetry() {
        let sym = BiPoly::new(
            xy(),
            vec![
                vec![Rational::from_int(1), Rational::from_int(2)],
                vec![Rational::from_int(2), Rational::from_int(5)],
            ],
        );
        assert!(sym.is_symmetric());
        assert_eq!(sym.swapped().swapped(), sym);
    }

    #[test]
    fn partial_derivatives() {
        // X^2 Y -> d/dX = 2XY, d/dY = X^2
        let b = BiPoly::new(
            xy(),
            vec![vec![], vec![], vec![Rational::zero(), Rational::one()]],
        );
        assert_eq!(b.derivative_first().coeff(1, 1), Rational::from_int(2));
        assert_eq!(b.derivative_second().coeff(2, 0), Rational::one());
    }

    #[test]
    fn primitive_normalization_sign() {
        let b = BiPoly::new(
            xy(),
            vec![vec![Rational::zero(), Rational::ratio(-2, 3)], vec![Rational::from_int(4)]],
        );
        let (c, prim) = b.primitive_normalized();
        assert_eq!(prim.coeff(0, 1), Rational::from_int(1));
        assert_eq!(prim.coeff(1, 0), Rational::from_int(-6));
        assert_eq!(prim.scale(&c), b);
    }
}
