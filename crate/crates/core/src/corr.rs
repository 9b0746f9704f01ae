//! Dual points, the incidence correspondences F (3-3) and H (4-4), and the
//! pencil quartet (P, Q, U, V).
//!
//! From seven distinct values carrying a plane structure, the construction
//! produces seven dual values attached to the lines, the two correspondences
//! whose zero patterns on the 49 value pairs reproduce point-line incidence,
//! and the four polynomials tied together by `F H = P(X) V(Y) - Q(X) U(Y)`.
//!
//! Everything is generic over the scalar: exact rationals or high-precision
//! complex values.

use crate::covariants::{permuted_tuple, Covariants};
use crate::error::{Error, Result};
use crate::fano::{FanoContext, FanoStructure};
use crate::linalg::RatMatrix;
use crate::perm::Perm;
use crate::poly::{BiPoly, UniPoly, Var};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Seven pairwise-distinct values with a plane structure on their index set.
///
/// Internally the values are relabeled to the reference labeling through the
/// structure's representative permutation, so all formulas run against the
/// base plane; `internal[i-1]` plays the role of the i-th coordinate.
#[derive(Clone, Debug)]
pub struct SeptupleConfig<S: Scalar> {
    values: [S; 7],
    structure: FanoStructure,
    relabel: Perm,
    internal: [S; 7],
    /// Working precision (None = exact mode).
    digits: Option<u32>,
}

impl<S: Scalar> SeptupleConfig<S> {
    fn build(
        ctx: &FanoContext,
        cov: &Covariants,
        values: [S; 7],
        structure: FanoStructure,
        relabel: Perm,
        digits: Option<u32>,
    ) -> Result<Self> {
        let internal: [S; 7] =
            std::array::from_fn(|i| values[(relabel.apply(i as u8 + 1) - 1) as usize].clone());
        for i in 0..7 {
            for j in (i + 1)..7 {
                if internal[i].sub(&internal[j]).negligible_at(digits) {
                    return Err(Error::RepeatedValues { i: i + 1, j: j + 1 });
                }
            }
        }
        let cfg = SeptupleConfig {
            values,
            structure,
            relabel,
            internal,
            digits,
        };
        // genericity guards: every point and line covariant must be nonzero
        let fam = cov.family_values(ctx, &cfg.internal);
        for a in 1..=7usize {
            if fam.u[a - 1].negligible_at(digits) {
                return Err(Error::Degenerate {
                    what: format!("point covariant u_{a}"),
                });
            }
        }
        for b in 1..=7usize {
            if fam.v[b - 1].negligible_at(digits) {
                return Err(Error::Degenerate {
                    what: format!("line covariant v_{b}"),
                });
            }
        }
        Ok(cfg)
    }

    /// Exact configuration; all genericity guards are checked eagerly.
    pub fn new(
        ctx: &FanoContext,
        cov: &Covariants,
        values: [S; 7],
        structure: &FanoStructure,
    ) -> Result<Self> {
        Self::with_digits(ctx, cov, values, structure, None)
    }

    /// Numeric configuration at a working precision; guards use the
    /// precision-derived floor.
    pub fn with_digits(
        ctx: &FanoContext,
        cov: &Covariants,
        values: [S; 7],
        structure: &FanoStructure,
        digits: Option<u32>,
    ) -> Result<Self> {
        let relabel = relabeling_for(structure)?;
        Self::build(ctx, cov, values, structure.clone(), relabel, digits)
    }

    pub fn values(&self) -> &[S; 7] {
        &self.values
    }

    /// Values in reference-labeling order.
    pub fn internal(&self) -> &[S; 7] {
        &self.internal
    }

    pub fn structure(&self) -> &FanoStructure {
        &self.structure
    }

    pub fn relabel(&self) -> &Perm {
        &self.relabel
    }

    pub fn digits(&self) -> Option<u32> {
        self.digits
    }

    /// The monic degree-7 polynomial with the configuration as roots.
    pub fn p_poly(&self) -> UniPoly<S> {
        UniPoly::from_roots(Var::X, &self.internal)
    }
}

fn relabeling_for(structure: &FanoStructure) -> Result<Perm> {
    crate::fano::all_fano_structures()
        .into_iter()
        .find(|(s, _)| s == structure)
        .map(|(_, phi)| phi)
        .ok_or_else(|| Error::InvalidInput("not a Fano structure".into()))
}

/// Where a dual-point family came from.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    Kernel,
    Canonical,
}

/// The seven dual values, indexed by line (`y[b-1]` belongs to line `b` of
/// the reference labeling).
#[derive(Clone, Debug)]
pub struct DualPoints<S: Scalar> {
    pub y: [S; 7],
    pub provenance: Provenance,
}

/// The line polynomials: `r[b-1]` is the monic cubic over line b's points,
/// `s[b-1]` the monic quartic over its complement.
#[derive(Clone, Debug)]
pub struct LinePolys<S: Scalar> {
    pub r: [UniPoly<S>; 7],
    pub s: [UniPoly<S>; 7],
}

/// Builds the `r_b` and `s_b` from a configuration.
pub fn line_polys<S: Scalar>(ctx: &FanoContext, cfg: &SeptupleConfig<S>) -> LinePolys<S> {
    let xs = cfg.internal();
    let r = std::array::from_fn(|b| {
        let pts = ctx.plane.line(b as u8 + 1);
        let roots: Vec<S> = pts.iter().map(|&p| xs[(p - 1) as usize].clone()).collect();
        UniPoly::from_roots(Var::X, &roots)
    });
    let s = std::array::from_fn(|b| {
        let pts = ctx.plane.complement(b as u8 + 1);
        let roots: Vec<S> = pts.iter().map(|&p| xs[(p - 1) as usize].clone()).collect();
        UniPoly::from_roots(Var::X, &roots)
    });
    LinePolys { r, s }
}

/// The 5 x 7 matrix whose column `b` holds the coefficients of `s_b`.
pub fn s_coefficient_matrix(lp: &LinePolys<Rational>) -> RatMatrix {
    RatMatrix::from_fn(5, 7, |i, j| lp.s[j].coeff(i))
}

/// Dual points from the two-dimensional kernel of the `s_b` system.
///
/// The kernel basis is echelon-reduced; when some first-basis coordinate
/// vanishes the basis is re-mixed by a fixed sequence of unimodular
/// transforms (the y-family is anyway only canonical up to a homography).
pub fn dual_points_kernel(
    ctx: &FanoContext,
    cfg: &SeptupleConfig<Rational>,
) -> Result<DualPoints<Rational>> {
    let lp = line_polys(ctx, cfg);
    let kernel = s_coefficient_matrix(&lp).kernel_basis();
    if kernel.len() != 2 {
        return Err(Error::KernelDimension {
            system: "quartic annihilator system",
            got: kernel.len(),
            expected: 2,
        });
    }
    let (b0, b1) = (&kernel[0], &kernel[1]);
    // candidate (denominator, numerator) mixes; each is unimodular
    let mixes: [((i64, i64), (i64, i64)); 5] =
        [((1, 0), (0, 1)), ((1, 1), (0, 1)), ((1, -1), (0, 1)), ((1, 2), (0, 1)), ((2, 1), (1, 1))];
    'mix: for ((da, db), (na, nb)) in mixes {
        let den: Vec<Rational> = (0..7)
            .map(|j| &b0[j] * &Rational::from_int(da) + &b1[j] * &Rational::from_int(db))
            .collect();
        let num: Vec<Rational> = (0..7)
            .map(|j| &b0[j] * &Rational::from_int(na) + &b1[j] * &Rational::from_int(nb))
            .collect();
        if den.iter().any(Rational::is_zero) {
            continue;
        }
        let y: [Rational; 7] = std::array::from_fn(|j| &num[j] / &den[j]);
        for i in 0..7 {
            for j in (i + 1)..7 {
                if y[i] == y[j] {
                    continue 'mix;
                }
            }
        }
        return Ok(DualPoints {
            y,
            provenance: Provenance::Kernel,
        });
    }
    Err(Error::Degenerate {
        what: "kernel coordinates (no basis mix avoids zero denominators)".into(),
    })
}

/// Canonical dual points: for the Sylow element carrying line 1 to line b,
/// `y_b` is the permuted evaluation of `-v1_reciprocal / v1`.
///
/// When a line covariant vanishes the configuration is translated by a fixed
/// shift, computed there, and translated back (translations commute with the
/// construction); five shifts are tried before declaring degeneracy.
pub fn dual_points_canonical<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
) -> Result<DualPoints<S>> {
    let digits = cfg.digits();
    let shifts: [i64; 5] = [0, 1, -1, 2, -2];
    'shift: for a in shifts {
        let aa = S::from_i64(a);
        let xs: [S; 7] = std::array::from_fn(|i| cfg.internal()[i].add(&aa));
        let mut y: Vec<S> = Vec::with_capacity(7);
        for b in 1..=7usize {
            let sigma = &ctx.by_line[b - 1];
            let den = cov.v1_at(&xs, sigma);
            if den.negligible_at(digits) {
                continue 'shift;
            }
            let num = cov.v1_rec_at(&xs, sigma);
            // y at the shifted configuration, then translate back
            y.push(num.div(&den).neg().sub(&aa));
        }
        for i in 0..7 {
            for j in (i + 1)..7 {
                if y[i].sub(&y[j]).negligible_at(digits) {
                    continue 'shift;
                }
            }
        }
        let y: [S; 7] = y.try_into().expect("seven dual points");
        return Ok(DualPoints {
            y,
            provenance: Provenance::Canonical,
        });
    }
    Err(Error::Degenerate {
        what: "line covariant v_b (all fallback shifts)".into(),
    })
}

/// `prod_{c != b} (Y - y_c)`.
fn l_poly<S: Scalar>(y: &[S; 7], b: usize) -> UniPoly<S> {
    let others: Vec<S> = (0..7).filter(|&c| c != b).map(|c| y[c].clone()).collect();
    UniPoly::from_roots(Var::Y, &others)
}

/// Drops second-variable degrees above `d2`, requiring the dropped
/// coefficients to be negligible relative to the largest one.
fn reduce_second_degree<S: Scalar>(
    raw: &BiPoly<S>,
    d2: usize,
    digits: Option<u32>,
    what: &str,
) -> Result<BiPoly<S>> {
    let Some((b1, b2)) = raw.bidegree() else {
        return Err(Error::Inconsistency(format!("{what}: sum collapsed to zero")));
    };
    if b2 <= d2 {
        return Ok(raw.clone());
    }
    let mut scale = f64::NEG_INFINITY;
    for i in 0..=b1 {
        for j in 0..=d2.min(b2) {
            scale = scale.max(raw.coeff(i, j).magnitude_log10());
        }
    }
    let allowance = match digits {
        None => {
            return Err(Error::Inconsistency(format!(
                "{what}: exact sum has degree {b2}, expected {d2}"
            )))
        }
        Some(d) => scale - (d as f64) / 2.0,
    };
    let mut rows: Vec<Vec<S>> = Vec::new();
    for i in 0..=b1 {
        let mut row = Vec::new();
        for j in 0..=b2 {
            let c = raw.coeff(i, j);
            if j > d2 {
                if c.magnitude_log10() > allowance {
                    return Err(Error::Inconsistency(format!(
                        "{what}: non-negligible coefficient above degree {d2}"
                    )));
                }
            } else {
                row.push(c);
            }
        }
        rows.push(row);
    }
    Ok(BiPoly::new(raw.vars(), rows))
}

/// F by the closed-form route: the Sylow sum of `l_1 r_1 / (Y - y_1)`
/// translates, times `U`.
pub fn build_f_closed<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
    y: &DualPoints<S>,
) -> Result<BiPoly<S>> {
    build_fh_closed(ctx, cov, cfg, y, true)
}

/// H by the closed-form route: the Sylow sum of `m_1 s_1 / (Y - y_1)`
/// translates, times `U`.
pub fn build_h_closed<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
    y: &DualPoints<S>,
) -> Result<BiPoly<S>> {
    build_fh_closed(ctx, cov, cfg, y, false)
}

fn build_fh_closed<S: Scalar>(
    ctx: &FanoContext,
    cov: &Covariants,
    cfg: &SeptupleConfig<S>,
    y: &DualPoints<S>,
    f_mode: bool,
) -> Result<BiPoly<S>> {
    let xs = cfg.internal();
    let line1 = ctx.plane.line(1);
    let mut acc = BiPoly::zero((Var::X, Var::Y));
    for sigma in &ctx.sylow {
        // scalar sigma(l_1) = sigma(u_2 u_3 u_4 v_1^2), resp. sigma(m_1)
        let mut coef = cov.v1_at(xs, sigma);
        if f_mode {
            coef = coef.mul(&cov.v1_at(xs, sigma));
        } else {
            // m_1 carries (x2-x3)(x3-x4)(x4-x2) instead of a second v_1
            let x = |i: u8| xs[(sigma.apply(i) - 1) as usize].clone();
            let vdm = x(2)
                .sub(&x(3))
                .mul(&x(3).sub(&x(4)))
                .mul(&x(4).sub(&x(2)));
            coef = coef.mul(&vdm);
        }
        for &a in &line1 {
            let tau = &ctx.by_point[(a - 1) as usize];
            coef = coef.mul(&cov.u1_at(xs, &sigma.compose(tau)));
        }
        // sigma(r_1) resp. sigma(s_1) in X
        let pts: Vec<u8> = if f_mode {
            line1.to_vec()
        } else {
            ctx.plane.complement(1).to_vec()
        };
        let roots: Vec<S> = pts
            .iter()
            .map(|&i| xs[(sigma.apply(i) - 1) as usize].clone())
            .collect();
        let rx = UniPoly::from_roots(Var::X, &roots);
        // U / (Y - sigma(y_1)): sigma carries line 1 to line sigma_L(1)
        let b = ctx.line_action(sigma).apply(1) as usize;
        let ly = l_poly(&y.y, b - 1);
        acc = acc.add(&BiPoly::outer((Var::X, Var::Y), &rx, &ly.scale(&coef)));
    }
    let target = if f_mode { 3 } else { 4 };
    let reduced = reduce_second_degree(&acc, target, cfg.digits(), if f_mode { "F" } else { "H" })?;
    match reduced.bidegree() {
        Some((d1, d2)) if d1 == target && d2 == target => Ok(reduced),
        other => Err(Error::Inconsistency(format!(
            "closed-form {} has bidegree {other:?}, expected ({target},{target})",
            if f_mode { "F" } else { "H" }
        ))),
    }
}

/// F by the linear-system route: the unique (up to scalar) combination
/// `sum a_b L_b(Y) r_b(X)` of degree 3 in Y.
pub fn build_f_linear(
    ctx: &FanoContext,
    cfg: &SeptupleConfig<Rational>,
    y: &DualPoints<Rational>,
) -> Result<BiPoly<Rational>> {
    build_fh_linear(ctx, cfg, y, true)
}

/// H by the linear-system route: `sum b_b L_b(Y) s_b(X)` of degree 4 in Y.
pub fn build_h_linear(
    ctx: &FanoContext,
    cfg: &SeptupleConfig<Rational>,
    y: &DualPoints<Rational>,
) -> Result<BiPoly<Rational>> {
    build_fh_linear(ctx, cfg, y, false)
}

fn build_fh_linear(
    ctx: &FanoContext,
    cfg: &SeptupleConfig<Rational>,
    y: &DualPoints<Rational>,
    f_mode: bool,
) -> Result<BiPoly<Rational>> {
    let lp = line_polys(ctx, cfg);
    let polys = if f_mode { &lp.r } else { &lp.s };
    let rows_per_power = if f_mode { 4 } else { 5 };
    let powers = if f_mode { 3 } else { 2 };
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for e in 0..powers {
        for c in 0..rows_per_power {
            let row = (0..7)
                .map(|b| y.y[b].pow(e as i32) * polys[b].coeff(c))
                .collect();
            rows.push(row);
        }
    }
    let kernel = RatMatrix::from_rows(rows).kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::KernelDimension {
            system: if f_mode {
                "degree-3 combination system"
            } else {
                "degree-4 combination system"
            },
            got: kernel.len(),
            expected: 1,
        });
    }
    let coeffs = &kernel[0];
    let mut acc = BiPoly::zero((Var::X, Var::Y));
    for b in 0..7 {
        if coeffs[b].is_zero() {
            continue;
        }
        let ly = l_poly(&y.y, b);
        acc = acc.add(&BiPoly::outer(
            (Var::X, Var::Y),
            &polys[b],
            &ly.scale(&coeffs[b]),
        ));
    }
    let target = if f_mode { 3 } else { 4 };
    match acc.bidegree() {
        Some((d1, d2)) if d1 == target && d2 == target => Ok(acc),
        other => Err(Error::Inconsistency(format!(
            "linear-system {} has bidegree {other:?}, expected ({target},{target})",
            if f_mode { "F" } else { "H" }
        ))),
    }
}

/// Normalizes a bivariate polynomial so its first nonzero coefficient in
/// lexicographic (x-degree, y-degree) order is 1.
pub fn normalize_first_coeff<S: Scalar>(p: &BiPoly<S>) -> BiPoly<S> {
    let Some((d1, d2)) = p.bidegree() else {
        return p.clone();
    };
    for i in 0..=d1 {
        for j in 0..=d2 {
            let c = p.coeff(i, j);
            if !c.is_zero() {
                return p.scale(&S::one().div(&c));
            }
        }
    }
    p.clone()
}

/// The incidence pattern of a correspondence on the 49 value pairs: entry
/// `(i-1, b-1)` says whether it vanishes at `(x_i, y_b)`.
///
/// In numeric mode the 49 magnitudes must split into a "zero" group and a
/// "nonzero" group separated by a factor `10^(digits/4)`, otherwise the
/// classification is refused.
pub fn incidence_pattern<S: Scalar>(
    corr: &BiPoly<S>,
    cfg: &SeptupleConfig<S>,
    y: &DualPoints<S>,
    zeros_expected: usize,
) -> Result<[[bool; 7]; 7]> {
    let mut mags = Vec::with_capacity(49);
    let mut vals: Vec<Vec<f64>> = Vec::new();
    for i in 0..7 {
        let mut row = Vec::with_capacity(7);
        for b in 0..7 {
            let v = corr.eval(&cfg.internal()[i], &y.y[b]);
            let m = v.magnitude_log10();
            row.push(m);
            mags.push(m);
        }
        vals.push(row);
    }
    mags.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let lo = mags[zeros_expected - 1];
    let hi = mags[zeros_expected];
    let gap_needed = match cfg.digits() {
        None => {
            // exact mode: zeros are exact
            if !lo.is_infinite() || hi.is_infinite() {
                return Err(Error::Inconsistency(format!(
                    "incidence pattern has {} exact zeros, expected {zeros_expected}",
                    mags.iter().filter(|m| m.is_infinite()).count()
                )));
            }
            f64::NEG_INFINITY
        }
        Some(d) => (d as f64) / 4.0,
    };
    if hi - lo < gap_needed {
        return Err(Error::AmbiguousClustering {
            poly: "incidence pattern".into(),
            digits: cfg.digits().unwrap_or(0),
        });
    }
    let threshold = (lo + hi) / 2.0;
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|b| vals[i][b] <= threshold)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::all_fano_structures;

    fn exact_setup() -> (FanoContext, Covariants) {
        (FanoContext::new(), Covariants::new())
    }

    fn base_cfg(values: [i64; 7]) -> Result<SeptupleConfig<Rational>> {
        let (ctx, cov) = exact_setup();
        SeptupleConfig::new(
            &ctx,
            &cov,
            values.map(Rational::from_int),
            &FanoStructure::base(),
        )
    }

    #[test]
    fn distinctness_is_enforced() {
        assert!(matches!(
            base_cfg([0, 1, 2, 3, 4, 5, 5]),
            Err(Error::RepeatedValues { .. })
        ));
    }

    #[test]
    fn reference_config_passes_guards() {
        base_cfg([0, 1, -1, 2, -2, 3, -3]).unwrap();
    }

    #[test]
    fn line_polys_structure() {
        let (ctx, _) = exact_setup();
        let cfg = base_cfg([0, 1, -1, 2, -2, 3, -3]).unwrap();
        let lp = line_polys(&ctx, &cfg);
        // r_1 = (X - x2)(X - x3)(X - x4)
        let expect = UniPoly::from_roots(
            Var::X,
            &[
                Rational::from_int(1),
                Rational::from_int(-1),
                Rational::from_int(2),
            ],
        );
        assert_eq!(lp.r[0], expect);
        // r_b * s_b = P for every b
        let p = cfg.p_poly();
        for b in 0..7 {
            assert_eq!(lp.r[b].mul(&lp.s[b]), p);
        }
    }

    #[test]
    fn s_matrix_rank_and_kernel() {
        let (ctx, _) = exact_setup();
        let cfg = base_cfg([0, 1, -1, 2, -2, 3, -3]).unwrap();
        let lp = line_polys(&ctx, &cfg);
        let m = s_coefficient_matrix(&lp);
        assert_eq!(m.rank(), 5);
        assert_eq!(m.kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_dual_points_distinct_and_annihilating() {
        let (ctx, _) = exact_setup();
        let cfg = base_cfg([0, 1, -1, 2, -2, 3, -3]).unwrap();
        let lp = line_polys(&ctx, &cfg);
        let dp = dual_points_kernel(&ctx, &cfg).unwrap();
        // y_b = b'_b / b_b for a kernel pair: check sum b_b s_b = 0 and
        // sum b_b y_b s_b = 0 for the reconstructed coefficients
        // (reconstruct b from y via the kernel basis is the construction
        // itself, so here only pairwise distinctness is rechecked)
        for i in 0..7 {
            for j in (i + 1)..7 {
                assert_ne!(dp.y[i], dp.y[j]);
            }
        }
        let _ = lp;
    }

    #[test]
    fn canonical_dual_points_exist_for_reference_config() {
        let (ctx, cov) = exact_setup();
        let cfg = base_cfg([0, 1, -1, 2, -2, 3, -3]).unwrap();
        let dp = dual_points_canonical(&ctx, &cov, &cfg).unwrap();
        assert_eq!(dp.provenance, Provenance::Canonical);
    }

    #[test]
    fn structures_round_trip_through_relabeling() {
        for (s, _) in all_fano_structures().into_iter().step_by(9) {
            let phi = relabeling_for(&s).unwrap();
            for &l in FanoStructure::base().lines() {
                assert!(s.lines().contains(&phi.apply_triple(l)));
            }
        }
    }
}
