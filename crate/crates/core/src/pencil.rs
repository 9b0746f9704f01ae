//! The degree-7 pencil `P - TQ`: branch data, ramification profiles, the
//! lift pipeline from a rational septic to a certified pencil, and the
//! one-parameter recombination used by the generic-polynomial construction.
//!
//! Certification is always exact: numerics only propose (root images,
//! reconstructed coefficients); every reported pencil is re-checked with
//! exact arithmetic (square discriminant) plus high-precision ramification
//! profiles at every branch point.

use num_bigint::BigInt;

use crate::complex::BigComplex;
use crate::corr::SeptupleConfig;
use crate::covariants::Covariants;
use crate::error::{Error, Result};
use crate::fano::{all_fano_structures, FanoContext, FanoStructure};
use crate::poly::{UniPoly, Var};
use crate::quartet::{q_closed_form, CorrespondenceQuartet};
use crate::rational::Rational;
use crate::recon::rational_reconstruct_eps;
use crate::resultant::{discriminant, pencil_discriminant};
use crate::roots::{complex_roots, complex_roots_raw};
use crate::scalar::Scalar;

/// A validated pencil: `P` monic separable of degree 7, `deg Q <= 6`,
/// `gcd(P, Q) = 1`.
#[derive(Clone, Debug)]
pub struct Pencil {
    p: UniPoly<Rational>,
    q: UniPoly<Rational>,
}

impl Pencil {
    pub fn new(p: UniPoly<Rational>, q: UniPoly<Rational>) -> Result<Self> {
        if p.degree() != Some(7) || !p.is_monic() {
            return Err(Error::InvalidInput(
                "pencil needs a monic degree-7 P".into(),
            ));
        }
        if q.is_zero() || q.degree().unwrap() > 6 {
            return Err(Error::InvalidInput(
                "pencil needs a nonzero Q of degree at most 6".into(),
            ));
        }
        if p.gcd(&q).degree() != Some(0) {
            return Err(Error::Degenerate {
                what: "gcd(P, Q) is nontrivial; the pencil".into(),
            });
        }
        Ok(Pencil { p, q })
    }

    pub fn p(&self) -> &UniPoly<Rational> {
        &self.p
    }

    pub fn q(&self) -> &UniPoly<Rational> {
        &self.q
    }

    /// The member `P - tQ`.
    pub fn member(&self, t: &Rational) -> UniPoly<Rational> {
        self.p.sub(&self.q.scale(t))
    }
}

/// A branch point of the covering `X -> P(X)/Q(X)`.
#[derive(Clone, Debug)]
pub enum BranchPoint {
    Finite(BigComplex),
    Infinity,
}

/// Discriminant data of a pencil: the exact square split and the branch
/// points.
#[derive(Clone, Debug)]
pub struct BranchData {
    /// `disc_X(P - TQ)` as an exact polynomial in `T`.
    pub disc: UniPoly<Rational>,
    /// `disc = c * S^2` with `S` monic.
    pub c: Rational,
    /// The monic square root `S(T)`.
    pub s: UniPoly<Rational>,
    /// Numeric roots of `S` with multiplicities.
    pub finite_points: Vec<(BigComplex, usize)>,
    /// Whether `T = infinity` is a branch point (degree drop or repeated
    /// roots of `Q`).
    pub infinity: bool,
    pub digits: u32,
}

impl BranchData {
    /// All branch points, including infinity when flagged; only meaningful
    /// when the finite points are simple.
    pub fn branch_points(&self) -> Vec<BranchPoint> {
        let mut out: Vec<BranchPoint> = self
            .finite_points
            .iter()
            .map(|(z, _)| BranchPoint::Finite(z.clone()))
            .collect();
        if self.infinity {
            out.push(BranchPoint::Infinity);
        }
        out
    }

    pub fn count_branch_points(&self) -> usize {
        self.finite_points.len() + usize::from(self.infinity)
    }
}

/// Splits `disc_X(P - TQ)` as `c * S(T)^2` exactly and finds the branch
/// points. A non-square discriminant is the NOT-IN-GROUP signal.
pub fn disc_split(pencil: &Pencil, digits: u32) -> Result<BranchData> {
    let disc = pencil_discriminant(&pencil.p, &pencil.q)?;
    if disc.is_zero() {
        return Err(Error::Degenerate {
            what: "pencil discriminant".into(),
        });
    }
    let (c, s) = disc.sqrt_up_to_constant().ok_or(Error::NotASquare)?;
    let finite_points = if s.degree() == Some(0) {
        Vec::new()
    } else {
        complex_roots(&s, digits)?.roots
    };
    let dq = pencil.q.degree().unwrap();
    let q_repeated = dq >= 2 && discriminant(&pencil.q)?.is_zero();
    let infinity = dq < 6 || q_repeated;
    Ok(BranchData {
        disc,
        c,
        s,
        finite_points,
        infinity,
        digits,
    })
}

/// Multiplicity profile (sorted descending, summing to 7) of the fiber of
/// `X -> P/Q` over a branch point.
///
/// The infinite fiber is computed exactly from `Q`'s square-free
/// decomposition plus the degree drop; finite fibers numerically, with one
/// doubled-precision retry when the clustering is ambiguous.
pub fn ramification_profile(
    pencil: &Pencil,
    point: &BranchPoint,
    digits: u32,
) -> Result<Vec<usize>> {
    match point {
        BranchPoint::Infinity => {
            let mut profile: Vec<usize> = pencil
                .q
                .squarefree_decomposition()
                .into_iter()
                .flat_map(|(factor, mult)| {
                    std::iter::repeat(mult).take(factor.degree().unwrap_or(0))
                })
                .collect();
            let drop = 7 - pencil.q.degree().unwrap();
            if drop > 0 {
                profile.push(drop);
            }
            profile.sort_unstable_by(|a, b| b.cmp(a));
            Ok(profile)
        }
        BranchPoint::Finite(t) => {
            for attempt in [digits, digits * 2] {
                let member = member_at_complex(pencil, t, attempt);
                let rs = complex_roots_raw(&member, attempt)?;
                if rs.total_multiplicity() != 7 {
                    continue;
                }
                // residual sanity at the working precision
                let bound = crate::bigfloat::BigFloat::pow10(-((attempt / 2) as i64));
                if rs.residual.abs_gt(&bound.mul(&coeff_scale(&member))) {
                    continue;
                }
                return Ok(rs.profile());
            }
            Err(Error::AmbiguousClustering {
                poly: "pencil member at a branch point".into(),
                digits,
            })
        }
    }
}

fn member_at_complex(pencil: &Pencil, t: &BigComplex, digits: u32) -> UniPoly<BigComplex> {
    let pc = pencil.p.to_complex(digits);
    let qc = pencil.q.to_complex(digits);
    pc.sub(&qc.scale(t))
}

fn coeff_scale(p: &UniPoly<BigComplex>) -> crate::bigfloat::BigFloat {
    let mut scale = crate::bigfloat::BigFloat::from_i64(1);
    for c in p.coeffs() {
        let n = c.norm1();
        if n.abs_gt(&scale) {
            scale = n;
        }
    }
    scale
}

/// The expected profile at each of the six branch points.
pub const EXPECTED_PROFILE: [usize; 5] = [2, 2, 1, 1, 1];

/// Exact certification outcome for one pencil.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub branch: BranchData,
    /// Profiles per branch point, in `branch.branch_points()` order.
    pub profiles: Vec<Vec<usize>>,
}

/// Why a candidate pencil failed certification.
#[derive(Clone, Debug)]
pub enum CertFailure {
    DiscNotSquare,
    RepeatedBranchPoints,
    WrongBranchCount(usize),
    WrongProfile(Vec<usize>),
    Degenerate(String),
}

/// Certifies the ramification shape: square discriminant, six branch points
/// counting infinity, profile (2,2,1,1,1) at each.
pub fn certify(pencil: &Pencil, digits: u32) -> Result<std::result::Result<Certificate, CertFailure>> {
    let branch = match disc_split(pencil, digits) {
        Ok(b) => b,
        Err(Error::NotASquare) => return Ok(Err(CertFailure::DiscNotSquare)),
        Err(Error::Degenerate { what }) => return Ok(Err(CertFailure::Degenerate(what))),
        Err(e) => return Err(e),
    };
    if branch.finite_points.iter().any(|(_, m)| *m > 1) {
        return Ok(Err(CertFailure::RepeatedBranchPoints));
    }
    if branch.count_branch_points() != 6 {
        return Ok(Err(CertFailure::WrongBranchCount(branch.count_branch_points())));
    }
    let mut profiles = Vec::new();
    for pt in branch.branch_points() {
        let profile = ramification_profile(pencil, &pt, digits)?;
        if profile != EXPECTED_PROFILE {
            return Ok(Err(CertFailure::WrongProfile(profile)));
        }
        profiles.push(profile);
    }
    Ok(Ok(Certificate { branch, profiles }))
}

/// One certified `(structure, Q)` pair of a lift.
#[derive(Clone, Debug)]
pub struct CertifiedPair {
    pub structure_index: usize,
    pub structure: FanoStructure,
    /// Primitive integer coefficients, positive leading coefficient.
    pub q: UniPoly<Rational>,
    pub certificate: Certificate,
}

/// Result of the lift pipeline on a rational septic.
#[derive(Clone, Debug)]
pub struct LiftReport {
    /// The monic polynomial the pipeline ran on.
    pub p: UniPoly<Rational>,
    /// Leading coefficient divided out of the input (1 when already monic).
    pub normalization: Rational,
    pub digits: u32,
    pub denominator_bound: BigInt,
    pub certified: Vec<CertifiedPair>,
    /// Structure indices skipped by genericity guards.
    pub skipped_degenerate: Vec<usize>,
    /// Structure indices where coefficient reconstruction failed.
    pub not_rational: Vec<usize>,
    /// Structure indices with rational Q that failed exact certification.
    pub not_certified: Vec<usize>,
}

impl LiftReport {
    pub fn is_certified(&self) -> bool {
        !self.certified.is_empty()
    }
}

/// Default reconstruction denominator bound, scaled with the coefficient
/// height of the input.
pub fn default_denominator_bound(p: &UniPoly<Rational>) -> BigInt {
    let mut height = BigInt::from(1);
    for c in p.coeffs() {
        let m = c.numer().magnitude().to_owned().into();
        height = height.max(m);
        height = height.max(c.denom().clone());
    }
    BigInt::from(10u64.pow(12)) * height
}

/// The lift pipeline: numeric roots, the closed-form `Q` for each of the 30
/// plane structures, rational reconstruction, then exact certification.
pub fn lift(
    ctx: &FanoContext,
    cov: &Covariants,
    p_in: &UniPoly<Rational>,
    digits: u32,
    denominator_bound: Option<BigInt>,
) -> Result<LiftReport> {
    if p_in.degree() != Some(7) {
        return Err(Error::InvalidInput("lift needs a degree-7 polynomial".into()));
    }
    let normalization = p_in.leading().unwrap().clone();
    let p = p_in.monic();
    if discriminant(&p)?.is_zero() {
        return Err(Error::Degenerate {
            what: "input is not separable: its discriminant".into(),
        });
    }
    let bound = denominator_bound.unwrap_or_else(|| default_denominator_bound(&p));
    let roots = complex_roots(&p, digits)?;
    let alphas: [BigComplex; 7] = std::array::from_fn(|i| roots.roots[i].0.clone());

    let mut report = LiftReport {
        p: p.clone(),
        normalization,
        digits,
        denominator_bound: bound.clone(),
        certified: Vec::new(),
        skipped_degenerate: Vec::new(),
        not_rational: Vec::new(),
        not_certified: Vec::new(),
    };

    for (idx, (structure, _)) in all_fano_structures().into_iter().enumerate() {
        let cfg = match SeptupleConfig::with_digits(ctx, cov, alphas.clone(), &structure, Some(digits))
        {
            Ok(c) => c,
            Err(_) => {
                report.skipped_degenerate.push(idx);
                continue;
            }
        };
        let q_num = q_closed_form(ctx, cov, &cfg);
        let Some(q_rat) = reconstruct_poly(&q_num, digits, &bound) else {
            report.not_rational.push(idx);
            continue;
        };
        if q_rat.is_zero() || q_rat.degree().unwrap() > 6 {
            report.not_rational.push(idx);
            continue;
        }
        let (_, q_prim) = q_rat.primitive_normalized();
        let pencil = match Pencil::new(p.clone(), q_prim.clone()) {
            Ok(p) => p,
            Err(_) => {
                report.not_certified.push(idx);
                continue;
            }
        };
        match certify(&pencil, digits.min(100).max(60))? {
            Ok(certificate) => report.certified.push(CertifiedPair {
                structure_index: idx,
                structure,
                q: q_prim,
                certificate,
            }),
            Err(_) => report.not_certified.push(idx),
        }
    }
    Ok(report)
}

/// Reconstructs every coefficient of a numeric polynomial; fails when any
/// coefficient has a non-negligible imaginary part or resists
/// reconstruction.
fn reconstruct_poly(
    q: &UniPoly<BigComplex>,
    digits: u32,
    bound: &BigInt,
) -> Option<UniPoly<Rational>> {
    let scale = q
        .coeffs()
        .iter()
        .map(|c| c.magnitude_log10())
        .fold(0f64, f64::max);
    let eps_exp = (digits as f64) / 2.0 - scale.max(0.0);
    if eps_exp < 20.0 {
        return None; // not enough precision to distinguish anything
    }
    let eps = Rational::new(BigInt::from(1), BigInt::from(10u32).pow(eps_exp as u32));
    let mut coeffs = Vec::with_capacity(8);
    for c in q.coeffs() {
        // imaginary parts must be noise
        if c.im.to_rational().abs() > eps {
            return None;
        }
        let v = rational_reconstruct_eps(&c.re, &eps, bound)?;
        coeffs.push(v);
    }
    Some(UniPoly::new(Var::X, coeffs))
}

/// The recombination `P = R - t Q1` with `R` monic vanishing at 0: the
/// explicit coordinates behind the generic-pencil assembly.
#[derive(Clone, Debug)]
pub struct NoetherDecomposition {
    pub r: UniPoly<Rational>,
    pub q1: UniPoly<Rational>,
    pub t: Rational,
}

/// Splits a quartet's `P` as `R - t Q1` with `Q1 = Q` made monic,
/// `t = (prod x_a) / q6`, and `R = P + t Q1` monic of degree 7 with
/// `R(0) = 0`.
pub fn noether_decompose(qt: &CorrespondenceQuartet<Rational>) -> Result<NoetherDecomposition> {
    if qt.q.degree() != Some(6) {
        return Err(Error::Degenerate {
            what: "Q has degree below 6; the decomposition".into(),
        });
    }
    let q1 = qt.q.monic();
    let q6 = q1.coeff(0);
    if q6.is_zero() {
        return Err(Error::Degenerate {
            what: "Q(0); the decomposition".into(),
        });
    }
    // prod x_a = -P(0) for a monic degree-7 P
    let prod_x = -qt.p.coeff(0);
    let t = &prod_x / &q6;
    let r = qt.p.add(&q1.scale(&t));
    if !(r.is_monic() && r.degree() == Some(7)) {
        return Err(Error::Inconsistency("R is not monic of degree 7".into()));
    }
    if !r.coeff(0).is_zero() {
        return Err(Error::Inconsistency("R(0) != 0".into()));
    }
    if r.sub(&q1.scale(&t)) != qt.p {
        return Err(Error::Inconsistency("P != R - t Q1".into()));
    }
    Ok(NoetherDecomposition { r, q1, t })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trinks() -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, &[3, -7, 0, 0, 0, 0, 0, 1])
    }

    fn trinks_q() -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, &[2, -1, -1, -1, -1, 2])
    }

    #[test]
    fn trinks_disc_matches_published_display() {
        let pencil = Pencil::new(trinks(), trinks_q()).unwrap();
        let b = disc_split(&pencil, 60).unwrap();
        // 81 (T^2 - 5T + 7)^2 (800 T^3 + 21 T^2 - 441 T + 3087)^2
        let f1 = UniPoly::from_ints(Var::T, &[7, -5, 1]);
        let f2 = UniPoly::from_ints(Var::T, &[3087, -441, 21, 800]);
        let expect = f1.mul(&f1).mul(&f2).mul(&f2).scale(&Rational::from_int(81));
        assert_eq!(b.disc, expect);
        // S is the monic quintic square root; infinity carries a branch point
        assert_eq!(b.s.degree(), Some(5));
        assert!(b.infinity);
        assert_eq!(b.count_branch_points(), 6);
    }

    #[test]
    fn trinks_infinite_profile() {
        let pencil = Pencil::new(trinks(), trinks_q()).unwrap();
        let prof = ramification_profile(&pencil, &BranchPoint::Infinity, 60).unwrap();
        assert_eq!(prof, vec![2, 2, 1, 1, 1]);
    }

    #[test]
    fn trinks_full_certification() {
        let pencil = Pencil::new(trinks(), trinks_q()).unwrap();
        let cert = certify(&pencil, 100).unwrap().expect("certifies");
        assert_eq!(cert.profiles.len(), 6);
        for p in &cert.profiles {
            assert_eq!(*p, vec![2, 2, 1, 1, 1]);
        }
    }

    #[test]
    fn generic_pencil_is_rejected() {
        let p = trinks();
        let q = UniPoly::from_ints(Var::X, &[1, 3, 0, 2, 0, 0, 5]);
        let pencil = Pencil::new(p, q).unwrap();
        assert!(matches!(disc_split(&pencil, 50), Err(Error::NotASquare)));
    }

    #[test]
    fn non_branch_member_is_separable() {
        let pencil = Pencil::new(trinks(), trinks_q()).unwrap();
        let t = Rational::from_int(1);
        let member = pencil.member(&t);
        let rs = complex_roots(&member, 60).unwrap();
        assert_eq!(rs.profile(), vec![1; 7]);
    }
}
