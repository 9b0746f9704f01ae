//! The pencil quartet `(P, Q, U, V)` and its construction routes.
//!
//! `F H = P(X) V(Y) - Q(X) U(Y)` is the load-bearing identity: `P` and `U`
//! are the monic degree-7 polynomials over the configuration and its dual,
//! `V` and `Q` are extracted by exact Euclidean division of `F H` by `P` in
//! `X`. The stored `Q` and `V` keep the scale induced by the normalized `F`
//! and `H`, so the identity holds exactly as stored; the closed-form `Q`
//! formula is computed independently and recorded as a proportionality ratio.

use crate::corr::{
    build_f_closed, build_h_closed, dual_points_canonical, normalize_first_coeff, DualPoints,
    SeptupleConfig,
};
use crate::covariants::{permuted_tuple, Covariants};
use crate::error::{Error, Result};
use crate::fano::FanoContext;
use crate::poly::{BiPoly, UniPoly, Var};
use crate::scalar::Scalar;

/// The correspondences and the four pencil polynomials of a configuration.
#[derive(Clone, Debug)]
pub struct CorrespondenceQuartet<S: Scalar> {
    pub config: SeptupleConfig<S>,
    pub y: DualPoints<S>,
    /// Bidegree (3,3); first nonzero coefficient normalized to 1.
    pub f: BiPoly<S>,
    /// Bidegree (4,4); first nonzero coefficient normalized to 1.
    pub h: BiPoly<S>,
    /// Monic, degree 7, roots are the configuration values.
    pub p: UniPoly<S>,
    /// Monic, degree 7, roots are the dual points.
    pub u: UniPoly<S>,
    /// Degree 7 in Y, extracted from the division identity.
    pub v: UniPoly<S>,
    /// Degree <= 6 in X, extracted from the division identity.
    pub q: UniPoly<S>,
    /// `q = prop2_ratio * Q_closed_form`; recorded, not assumed.
    pub prop2_ratio: S,
}

/// Builds the full quartet from a configuration.
pub fn quartet<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
) -> Result<CorrespondenceQuartet<S>> {
    let y = dual_points_canonical(ctx, cov, cfg)?;
    let f = normalize_first_coeff(&build_f_closed(ctx, cov, cfg, &y)?);
    let h = normalize_first_coeff(&build_h_closed(ctx, cov, cfg, &y)?);
    let p = cfg.p_poly();
    let u = UniPoly::from_roots(Var::Y, &y.y);
    let (v, q) = extract_v_q(&f, &h, &p, &u, cfg.digits())?;
    let q_closed = q_closed_form(ctx, cov, cfg);
    let prop2_ratio = match q_closed.proportionality(&q) {
        Some(r) => r,
        None => {
            return Err(Error::Inconsistency(
                "division-extracted Q is not proportional to the closed-form Q".into(),
            ))
        }
    };
    Ok(CorrespondenceQuartet {
        config: cfg.clone(),
        y,
        f,
        h,
        p,
        u,
        v,
        q,
        prop2_ratio,
    })
}

/// Division of `F H` by `P` in `X`: the quotient is `V(Y)` (constant in `X`
/// by degrees) and the remainder must factor as `-Q(X) U(Y)`.
pub fn extract_v_q<S: Scalar>(
    f: &BiPoly<S>,
    h: &BiPoly<S>,
    p: &UniPoly<S>,
    u: &UniPoly<S>,
    digits: Option<u32>,
) -> Result<(UniPoly<S>, UniPoly<S>)> {
    let fh = f.mul(h);
    // P monic of degree 7 and deg_X(FH) = 7: quotient = X^7 row
    let v = fh.first_coeff(7);
    // remainder rho = FH - P (x) V, degree <= 6 in X
    let pv = BiPoly::outer((Var::X, Var::Y), p, &v);
    let rho = fh.sub(&pv);
    if let Some((d1, _)) = rho.bidegree() {
        if d1 > 6 {
            return Err(Error::Inconsistency(
                "division remainder exceeds degree 6 in X".into(),
            ));
        }
    }
    // each X-coefficient of rho must be a scalar multiple of U(Y)
    let mut q_coeffs = Vec::with_capacity(7);
    for i in 0..=6usize {
        let row = rho.first_coeff(i);
        if row.is_zero() {
            q_coeffs.push(S::zero());
            continue;
        }
        let ratio = match division_ratio(&row, u, digits) {
            Some(r) => r,
            None => {
                return Err(Error::Inconsistency(format!(
                    "division remainder row {i} is not a multiple of U"
                )))
            }
        };
        q_coeffs.push(ratio.neg());
    }
    let q = UniPoly::new(Var::X, q_coeffs);
    Ok((v, q))
}

/// The ratio `row / u` when `row` is a scalar multiple of `u` (with a
/// precision-floor comparison in numeric mode).
fn division_ratio<S: Scalar>(row: &UniPoly<S>, u: &UniPoly<S>, digits: Option<u32>) -> Option<S> {
    // u is monic of degree 7; row has degree <= 7
    let ratio = row.coeff(7);
    let check = row.sub(&u.scale(&ratio));
    let scale = row
        .coeffs()
        .iter()
        .map(|c| c.magnitude_log10())
        .fold(f64::NEG_INFINITY, f64::max);
    for c in check.coeffs() {
        match digits {
            None => {
                if !c.is_zero() {
                    return None;
                }
            }
            Some(d) => {
                if c.magnitude_log10() > scale - (d as f64) / 2.0 {
                    return None;
                }
            }
        }
    }
    Some(ratio)
}

/// The closed-form `Q`: the Sylow sum of `q_1 / (X - x_1)` translates, times
/// `P`, where `q_1 = u_1^2 P'(x_1) (x2-x6)(x3-x5)(x4-x7)`.
///
/// Only the point covariants enter, which is what makes the numeric lift
/// pipeline cheap: no dual points are needed.
pub fn q_closed_form<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
) -> UniPoly<S> {
    let xs = cfg.internal();
    let mut acc = UniPoly::zero(Var::X);
    for sigma in &ctx.sylow {
        let z = permuted_tuple(xs, sigma);
        let u = cov.u1.eval_generic(&z);
        // P'(x_{sigma(1)}) = prod_{j != sigma(1)} (x_{sigma(1)} - x_j)
        let a = (sigma.apply(1) - 1) as usize;
        let mut dp = S::one();
        for j in 0..7 {
            if j != a {
                dp = dp.mul(&xs[a].sub(&xs[j]));
            }
        }
        let pairs = [(2u8, 6u8), (3, 5), (4, 7)];
        let mut w = u.mul(&u).mul(&dp);
        for (i, j) in pairs {
            let xi = &z[(i - 1) as usize];
            let xj = &z[(j - 1) as usize];
            w = w.mul(&xi.sub(xj));
        }
        // P / (X - x_{sigma(1)})
        let others: Vec<S> = (0..7).filter(|&j| j != a).map(|j| xs[j].clone()).collect();
        let cof = UniPoly::from_roots(Var::X, &others);
        acc = acc.add(&cof.scale(&w));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::FanoStructure;
    use crate::rational::Rational;

    fn setup() -> (FanoContext, Covariants) {
        (FanoContext::new(), Covariants::new())
    }

    fn reference_quartet() -> CorrespondenceQuartet<Rational> {
        let (ctx, cov) = setup();
        let vals = [0i64, 1, -1, 2, -2, 3, -3].map(Rational::from_int);
        let cfg = SeptupleConfig::new(&ctx, &cov, vals, &FanoStructure::base()).unwrap();
        quartet(&ctx, &cov, &cfg).unwrap()
    }

    #[test]
    fn division_identity_holds_exactly() {
        let q = reference_quartet();
        let fh = q.f.mul(&q.h);
        let pv = BiPoly::outer((Var::X, Var::Y), &q.p, &q.v);
        let qu = BiPoly::outer((Var::X, Var::Y), &q.q, &q.u);
        assert_eq!(fh, pv.sub(&qu));
    }

    #[test]
    fn q_degree_and_coprimality() {
        let q = reference_quartet();
        assert!(q.q.degree().unwrap_or(0) <= 6);
        let g = q.p.gcd(&q.q);
        assert_eq!(g.degree(), Some(0));
        assert!(!q.prop2_ratio.is_zero());
    }

    #[test]
    fn u_is_monic_with_dual_roots() {
        let q = reference_quartet();
        assert!(q.u.is_monic());
        assert_eq!(q.u.degree(), Some(7));
        for yb in &q.y.y {
            assert!(q.u.eval(yb).is_zero());
        }
    }
}
