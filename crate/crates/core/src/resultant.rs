//! Resultants and discriminants via Sylvester determinants.
//!
//! The determinant is computed with fraction-free (Bareiss) elimination over
//! any exact-division ring, so resultants of polynomials whose coefficients
//! are themselves polynomials stay exact without gcd blowup. For pencil
//! discriminants there is an interpolation fast path that only ever computes
//! determinants over the rationals.

use crate::error::{Error, Result};
use crate::poly::{interp, BiPoly, UniPoly, Var};
use crate::rational::Rational;

/// A commutative ring with exact division, as needed by Bareiss elimination.
pub trait RingElem: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; panics when the division is not exact.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl RingElem for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
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
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl RingElem for UniPoly<Rational> {
    fn zero() -> Self {
        UniPoly::zero(Var::X)
    }
    fn one() -> Self {
        UniPoly::one(Var::X)
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.div_exact(rhs).expect("non-exact division in Bareiss step")
    }
}

impl RingElem for BiPoly<Rational> {
    fn zero() -> Self {
        BiPoly::zero((Var::X, Var::Z))
    }
    fn one() -> Self {
        BiPoly::constant((Var::X, Var::Z), Rational::one())
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        BiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        BiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.div_exact(rhs).expect("non-exact division in Bareiss step")
    }
}

/// Zero-aware subtract: `BiPoly::zero` above carries placeholder variable
/// tags, so arithmetic with zero operands must not assert tag equality.
fn ring_sub<R: RingElem>(a: &R, b: &R) -> R {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        b.neg()
    } else {
        a.sub(b)
    }
}

fn ring_mul<R: RingElem>(a: &R, b: &R) -> R {
    if a.is_zero() || b.is_zero() {
        R::zero()
    } else {
        a.mul(b)
    }
}

/// Determinant by fraction-free (Bareiss) elimination; exact over any
/// exact-division ring.
pub fn bareiss_determinant<R: RingElem>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    if n == 0 {
        return R::one();
    }
    assert!(matrix.iter().all(|r| r.len() == n), "non-square matrix");
    let mut m: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring_sub(&ring_mul(&m[i][j], &pivot), &ring_mul(&m[i][k], &m[k][j]));
                m[i][j] = if num.is_zero() {
                    R::zero()
                } else {
                    num.exact_div(&prev)
                };
            }
            m[i][k] = R::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of `f` and `g` given as ascending coefficient slices.
///
/// Rows hold descending-order shifts of `f` (deg g rows) then of `g`
/// (deg f rows); its determinant is `res(f, g)` with the convention
/// `res(f, g) = lc(f)^deg(g) lc(g)^deg(f) prod (alpha_i - beta_j)`.
pub fn sylvester_matrix<R: RingElem>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    let mut m = vec![vec![R::zero(); n]; n];
    for i in 0..dg {
        for (j, c) in f.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..df {
        for (j, c) in g.iter().rev().enumerate() {
            m[dg + i][i + j] = c.clone();
        }
    }
    m
}

/// Resultant of two nonzero polynomials over an exact-division ring.
///
/// The coefficient slices are ascending and must be trimmed (nonzero leading
/// entry); degree-zero inputs follow `res(c, g) = c^deg(g)`.
pub fn resultant_coeffs<R: RingElem>(f: &[R], g: &[R]) -> R {
    assert!(
        !f.is_empty() && !g.is_empty(),
        "resultant of a zero polynomial"
    );
    let df = f.len() - 1;
    let dg = g.len() - 1;
    if df == 0 {
        return pow_ring(&f[0], dg);
    }
    if dg == 0 {
        return pow_ring(&g[0], df);
    }
    bareiss_determinant(&sylvester_matrix(f, g))
}

fn pow_ring<R: RingElem>(base: &R, e: usize) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = ring_mul(&acc, base);
    }
    acc
}

/// Resultant of two univariate rational polynomials.
pub fn resultant(p: &UniPoly<Rational>, q: &UniPoly<Rational>) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial { op: "resultant" });
    }
    Ok(resultant_coeffs(p.coeffs(), q.coeffs()))
}

/// Discriminant `(-1)^(n(n-1)/2) res(p, p') / lc(p)` of a rational polynomial.
pub fn discriminant(p: &UniPoly<Rational>) -> Result<Rational> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial { op: "discriminant" }),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant(p, &p.derivative())?;
    let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / p.leading().unwrap())
}

/// `disc_X(p - t q)` as an exact polynomial in `T`, taken at the generic
/// degree `n = max(deg p, deg q)`.
///
/// Computed by interpolation from `2n - 1` rational specializations at
/// parameter values where the degree does not drop.
pub fn pencil_discriminant(
    p: &UniPoly<Rational>,
    q: &UniPoly<Rational>,
) -> Result<UniPoly<Rational>> {
    let n = p
        .degree()
        .into_iter()
        .chain(q.degree())
        .max()
        .ok_or(Error::ZeroPolynomial {
            op: "pencil_discriminant",
        })?;
    if n < 2 {
        return Err(Error::ConstantPolynomial);
    }
    let bound = 2 * n - 2;
    Ok(interp::interpolate_from_samples(
        Var::T,
        bound,
        |t| !(p.coeff(n) - q.coeff(n) * t).is_zero(),
        |t| {
            let pt = p.sub(&q.scale(t));
            discriminant(&pt).expect("degree guard admits only non-degenerate samples")
        },
    ))
}

/// `res_Y(f(X,Y), g(Z,Y))` where `f` has variables `(X, Y)` and `g` has
/// variables `(Z, Y)`; the result has variables `(X, Z)`.
///
/// Direct symbolic expansion of the Sylvester determinant over `Q[X, Z]`.
pub fn resultant_y_direct(f: &BiPoly<Rational>, g: &BiPoly<Rational>) -> BiPoly<Rational> {
    let fy = bipoly_second_coeffs_embedded(f, true);
    let gy = bipoly_second_coeffs_embedded(g, false);
    resultant_coeffs(&fy, &gy)
}

/// Y-coefficients of `p(V, Y)` as `BiPoly`s in `(X, Z)`: the first variable of
/// `p` is embedded as `X` (when `as_first`) or as `Z`.
fn bipoly_second_coeffs_embedded(p: &BiPoly<Rational>, as_first: bool) -> Vec<BiPoly<Rational>> {
    let vars = (Var::X, Var::Z);
    let swapped = p.swapped(); // rows now indexed by the Y-degree
    let (dy, _) = swapped.bidegree().expect("nonzero polynomial");
    (0..=dy)
        .map(|k| {
            let row = swapped.first_coeff(k); // polynomial in p's first var
            if as_first {
                BiPoly::from_uni_first(vars, &row.with_var(Var::X))
            } else {
                BiPoly::from_uni_second(vars, &row.with_var(Var::Z))
            }
        })
        .collect()
}

/// Same resultant as [`resultant_y_direct`] computed by specializing `Z` and
/// interpolating; degree bound `deg_X(g) * deg_Y(f)` in `Z`.
pub fn resultant_y_interpolated(
    f: &BiPoly<Rational>,
    g: &BiPoly<Rational>,
) -> BiPoly<Rational> {
    let (fx, fy) = f.bidegree().expect("nonzero polynomial");
    let (gx, gy) = g.bidegree().expect("nonzero polynomial");
    let xbound = gy * fx;
    let zbound = fy * gx;
    let f_by_y = f.swapped(); // rows indexed by Y-degree, entries in X
    let g_by_y = g.swapped();
    let f_lead = f_by_y.first_coeff(fy);
    let g_lead = g_by_y.first_coeff(gy);

    // admissible sample points keep both Y-degrees intact
    let xs = sample_points(xbound + 1, |x0| !f_lead.eval(x0).is_zero());
    let zs = sample_points(zbound + 1, |z0| !g_lead.eval(z0).is_zero());

    // scalar resultants on the grid, interpolated in Z then in X
    let per_x: Vec<UniPoly<Rational>> = xs
        .iter()
        .map(|x0| {
            let fx0: Vec<Rational> = (0..=fy).map(|k| f_by_y.first_coeff(k).eval(x0)).collect();
            let pts: Vec<(Rational, Rational)> = zs
                .iter()
                .map(|z0| {
                    let gz0: Vec<Rational> =
                        (0..=gy).map(|k| g_by_y.first_coeff(k).eval(z0)).collect();
                    (z0.clone(), resultant_coeffs(&fx0, &gz0))
                })
                .collect();
            interp::lagrange(Var::Z, &pts)
        })
        .collect();
    // for each Z-coefficient, interpolate its X-profile
    let columns: Vec<UniPoly<Rational>> = (0..=zbound)
        .map(|k| {
            let pts: Vec<(Rational, Rational)> = xs
                .iter()
                .zip(&per_x)
                .map(|(x0, w)| (x0.clone(), w.coeff(k)))
                .collect();
            interp::lagrange(Var::X, &pts)
        })
        .collect();
    let d1 = columns.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let mat: Vec<Vec<Rational>> = (0..=d1)
        .map(|i| (0..=zbound).map(|k| columns[k].coeff(i)).collect())
        .collect();
    BiPoly::new((Var::X, Var::Z), mat)
}

/// The first `count` values `0, -1, 1, -2, 2, ...` accepted by the guard.
pub(crate) fn sample_points(
    count: usize,
    mut accept: impl FnMut(&Rational) -> bool,
) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut n = 0i64;
    while out.len() < count {
        let k = (n + 1) / 2;
        let t = Rational::from_int(if n % 2 == 0 { k } else { -k });
        if accept(&t) {
            out.push(t);
        }
        n += 1;
        assert!(n < 10_000, "could not find enough admissible sample points");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(ints: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, ints)
    }

    #[test]
    fn linear_resultant_convention() {
        // res(X - 3, X - 5) = 3 - 5 = -2
        let r = resultant(&px(&[-3, 1]), &px(&[-5, 1])).unwrap();
        assert_eq!(r, Rational::from_int(-2));
    }

    #[test]
    fn shared_root_vanishes() {
        let r = resultant(&px(&[-1, 0, 1]), &px(&[-1, 1])).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn zero_input_is_error() {
        assert!(matches!(
            resultant(&UniPoly::zero(Var::X), &px(&[1, 1])),
            Err(Error::ZeroPolynomial { .. })
        ));
    }

    #[test]
    fn quadratic_discriminant() {
        // disc(X^2 + bX + c) = b^2 - 4c, sampled over several (b, c)
        for (b, c) in [(3i64, 2i64), (-5, 7), (0, -4), (11, 0)] {
            let p = px(&[c, b, 1]);
            let want = Rational::from_int(b * b - 4 * c);
            assert_eq!(discriminant(&p).unwrap(), want);
        }
    }

    #[test]
    fn repeated_root_kills_discriminant() {
        // (X-1)^2 (X+1)
        let p = px(&[-1, 1]).mul(&px(&[-1, 1])).mul(&px(&[1, 1]));
        assert!(discriminant(&p).unwrap().is_zero());
    }

    #[test]
    fn constant_has_no_discriminant() {
        assert!(matches!(
            discriminant(&px(&[5])),
            Err(Error::ConstantPolynomial)
        ));
    }

    #[test]
    fn pencil_discriminant_matches_pointwise() {
        let p = px(&[2, 0, -1, 0, 0, 1]); // degree 5
        let q = px(&[1, 1, 0, 2]);
        let d = pencil_discriminant(&p, &q).unwrap();
        for t in [-3i64, 2, 9] {
            let t = Rational::from_int(t);
            let spec = p.sub(&q.scale(&t));
            assert_eq!(d.eval(&t), discriminant(&spec).unwrap());
        }
    }

    #[test]
    fn bivariate_resultant_interp_agrees_with_direct() {
        // f(X,Y) and g(Z,Y), modest degrees
        let f = BiPoly::new(
            (Var::X, Var::Y),
            vec![
                vec![Rational::from_int(1), Rational::from_int(-2), Rational::from_int(1)],
                vec![Rational::from_int(3), Rational::from_int(1)],
                vec![Rational::from_int(0), Rational::from_int(5), Rational::from_int(-1)],
            ],
        );
        let g = BiPoly::new(
            (Var::Z, Var::Y),
            vec![
                vec![Rational::from_int(2), Rational::from_int(1), Rational::from_int(4)],
                vec![Rational::from_int(-1), Rational::from_int(2)],
                vec![Rational::from_int(1), Rational::from_int(0), Rational::from_int(3)],
            ],
        );
        let direct = resultant_y_direct(&f, &g);
        let interp = resultant_y_interpolated(&f, &g);
        assert_eq!(direct, interp);
        assert!(!direct.is_zero());
    }

    #[test]
    fn resultant_multiplicativity_smoke() {
        let p = px(&[1, 2, 1]);
        let q = px(&[-4, 0, 3]);
        let r = px(&[5, -1, 0, 2]);
        let lhs = resultant(&p.mul(&q), &r).unwrap();
        let rhs = resultant(&p, &r).unwrap() * resultant(&q, &r).unwrap();
        assert_eq!(lhs, rhs);
    }
}
