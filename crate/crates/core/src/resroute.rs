//! The complementary correspondence recovered from resultants of F alone.
//!
//! Composing a bidegree (3,3) incidence correspondence with itself gives the
//! "six others" correspondence `R1` (symmetric, bidegree (6,6)) after the
//! forced `(X-Z)^3` factor is removed; composing once more factors as
//! `c * F^2 * H^3`, which pins the complementary `H` up to a scalar without
//! ever using the dual points. The cube root is extracted slice-by-slice in
//! the second variable and re-interpolated, then the full factorization
//! identity is certified on enough slices to determine it.

use crate::error::{Error, Result};
use crate::poly::{interp, BiPoly, UniPoly, Var};
use crate::rational::Rational;
use crate::resultant::{resultant_coeffs, resultant_y_interpolated};

/// Output of the resultant route.
#[derive(Clone, Debug)]
pub struct ResultantRoute {
    /// `res_Y(F(X,Y), F(Z,Y)) / (X-Z)^3`: symmetric of bidegree (6,6).
    pub r1: BiPoly<Rational>,
    /// The complementary correspondence, primitive-normalized; proportional
    /// to the closed-form `H`.
    pub h: BiPoly<Rational>,
    /// The global constant in `res_Z(R1, F) = c * F^2 * H^3` for the stored
    /// normalizations.
    pub c: Rational,
}

fn x_minus_z() -> BiPoly<Rational> {
    BiPoly::new(
        (Var::X, Var::Z),
        vec![vec![Rational::zero(), -Rational::one()], vec![Rational::one()]],
    )
}

/// Recovers `R1` and `H` from `F` alone. See the module docs.
pub fn complementary_via_resultant(f: &BiPoly<Rational>) -> Result<ResultantRoute> {
    let (_, f) = f.primitive_normalized();
    match f.bidegree() {
        Some((3, 3)) => {}
        other => {
            return Err(Error::FactorShape {
                detail: format!("expected a (3,3) correspondence, got {other:?}"),
            })
        }
    }
    // self-composition resultant in Y
    let g = retag(&f, (Var::Z, Var::Y));
    let r = resultant_y_interpolated(&f, &g);

    // exact (X - Z)^3 extraction, sharp
    let xz = x_minus_z();
    let mut r1 = r;
    for k in 0..3 {
        r1 = r1.div_exact(&xz).ok_or_else(|| Error::FactorShape {
            detail: format!("self-resultant only divisible by (X-Z)^{k}"),
        })?;
    }
    if r1.div_exact(&xz).is_some() {
        return Err(Error::FactorShape {
            detail: "self-resultant divisible by (X-Z)^4".into(),
        });
    }
    if !r1.is_symmetric() {
        return Err(Error::FactorShape {
            detail: "R1 is not symmetric".into(),
        });
    }
    if r1.bidegree() != Some((6, 6)) {
        return Err(Error::FactorShape {
            detail: format!("R1 has bidegree {:?}, expected (6,6)", r1.bidegree()),
        });
    }
    let (_, r1) = r1.primitive_normalized();

    // slices of W(X, y0) = res_Z(R1(X, .), F(., y0)); 19 slices determine the
    // degree-18 identity W = c F^2 H^3. Each slice is itself interpolated in
    // X from scalar resultants (deg_X W <= 18).
    let lead3 = f.first_coeff(3); // Y-polynomial multiplying X^3
    let r1_by_z = r1.swapped(); // Z rows, X coefficients
    let r1_zlead = r1_by_z.first_coeff(6);
    let x_pts = crate::resultant::sample_points(19, |x0| !r1_zlead.eval(x0).is_zero());
    // R1's Z-coefficients evaluated at each x sample
    let r1_at_x: Vec<Vec<Rational>> = x_pts
        .iter()
        .map(|x0| (0..=6).map(|k| r1_by_z.first_coeff(k).eval(x0)).collect())
        .collect();
    let y_pts = crate::resultant::sample_points(19, |y0| !lead3.eval(y0).is_zero());
    let mut slices: Vec<(Rational, UniPoly<Rational>, UniPoly<Rational>)> = Vec::new();
    for y0 in &y_pts {
        let f_slice = f.eval_second(y0); // degree 3 in X
        let fz = f_slice.coeffs().to_vec();
        let pts: Vec<(Rational, Rational)> = x_pts
            .iter()
            .zip(&r1_at_x)
            .map(|(x0, rz)| (x0.clone(), resultant_coeffs(rz, &fz)))
            .collect();
        let w = interp::lagrange(Var::X, &pts);
        // remove F(X, y0)^2
        let cube = w
            .div_exact(&f_slice)
            .and_then(|t| t.div_exact(&f_slice))
            .ok_or_else(|| Error::FactorShape {
                detail: format!("slice at Y={y0}: second resultant not divisible by F^2"),
            })?;
        slices.push((y0.clone(), f_slice, cube));
    }

    // X^4-row of H, as the cube root of the interpolated X^12 coefficient
    let w12 = interp::lagrange(
        Var::Y,
        &slices
            .iter()
            .map(|(y0, _, cube)| (y0.clone(), cube.coeff(12)))
            .collect::<Vec<_>>(),
    );
    let (_, h4) = w12.cbrt_up_to_constant().ok_or_else(|| Error::FactorShape {
        detail: "X^12 coefficient of the composed resultant is not a cube".into(),
    })?;

    // per-slice monic cube roots, rescaled by h4 and re-interpolated
    let mut by_row: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); 5];
    for (y0, _, cube) in &slices {
        let h4v = h4.eval(y0);
        if h4v.is_zero() {
            continue;
        }
        if cube.degree() != Some(12) {
            return Err(Error::FactorShape {
                detail: format!("slice at Y={y0}: cube factor has degree {:?}", cube.degree()),
            });
        }
        let m = cube.monic().nth_root_monic(3).ok_or_else(|| Error::FactorShape {
            detail: format!("slice at Y={y0}: cube factor is not a cube"),
        })?;
        let h_slice = m.scale(&h4v); // H(X, y0) for the h4 normalization
        for i in 0..=4usize {
            by_row[i].push((y0.clone(), h_slice.coeff(i)));
        }
    }
    if by_row[0].len() < 5 {
        return Err(Error::FactorShape {
            detail: "too few usable slices for the cube-root interpolation".into(),
        });
    }
    let rows: Vec<UniPoly<Rational>> = by_row
        .iter()
        .map(|pts| interp::lagrange(Var::Y, pts))
        .collect();
    if rows.iter().any(|r| r.degree().map_or(false, |d| d > 4)) {
        return Err(Error::FactorShape {
            detail: "interpolated H has Y-degree above 4".into(),
        });
    }
    let h = BiPoly::from_first_coeffs((Var::X, Var::Y), rows);
    if h.bidegree() != Some((4, 4)) {
        return Err(Error::FactorShape {
            detail: format!("extracted H has bidegree {:?}", h.bidegree()),
        });
    }
    let (_, h) = h.primitive_normalized();

    // certify W = c F^2 H^3 on all 19 slices (degree 18 in Y, so 19 points
    // pin the identity)
    let mut c_global: Option<Rational> = None;
    for (y0, f_slice, cube) in &slices {
        let h_slice = h.eval_second(y0);
        let rhs = h_slice.mul(&h_slice).mul(&h_slice);
        let ratio = rhs.proportionality(cube).ok_or_else(|| Error::FactorShape {
            detail: format!("slice at Y={y0}: H^3 does not match the cube factor"),
        })?;
        match &c_global {
            None => c_global = Some(ratio),
            Some(c) if *c == ratio => {}
            Some(c) => {
                return Err(Error::FactorShape {
                    detail: format!(
                        "inconsistent factorization constant: {c} vs {ratio} at Y={y0}"
                    ),
                })
            }
        }
        let _ = f_slice;
    }
    Ok(ResultantRoute {
        r1,
        h,
        c: c_global.expect("at least one slice"),
    })
}

fn retag(p: &BiPoly<Rational>, vars: (Var, Var)) -> BiPoly<Rational> {
    BiPoly::from_first_coeffs(
        vars,
        p.first_coeffs()
            .iter()
            .map(|r| r.with_var(vars.1))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::SeptupleConfig;
    use crate::covariants::Covariants;
    use crate::fano::{FanoContext, FanoStructure};
    use crate::quartet::quartet;

    #[test]
    fn reference_config_resultant_route_matches_closed_form() {
        let ctx = FanoContext::new();
        let cov = Covariants::new();
        let vals = [0i64, 1, -1, 2, -2, 3, -3].map(Rational::from_int);
        let cfg = SeptupleConfig::new(&ctx, &cov, vals, &FanoStructure::base()).unwrap();
        let qt = quartet(&ctx, &cov, &cfg).unwrap();
        let route = complementary_via_resultant(&qt.f).unwrap();
        assert!(route.h.proportionality(&qt.h).is_some());
        assert!(route.r1.is_symmetric());
    }
}
