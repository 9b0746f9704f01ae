//! Arbitrary-precision complex root finding.
//!
//! Simultaneous Aberth-Ehrlich iteration polished by Newton steps, with
//! residual-driven cluster merging for multiple roots. Rational input
//! polynomials are first split into square-free factors, so their multiple
//! roots are detected exactly; the raw complex-coefficient path relies on
//! clustering alone and is what the ramification checks use.
//!
//! All runs are deterministic: initial guesses sit on a fixed perturbed
//! circle and there is no randomness anywhere.

use num_bigint::BigInt;

use crate::bigfloat::BigFloat;
use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Extra working digits carried on top of the requested precision.
const GUARD_DIGITS: u32 = 30;

/// Hard cap on Aberth sweeps before declaring non-convergence.
const MAX_ITERATIONS: usize = 3000;

/// Sweeps without improvement after which a stalled (clustered) iteration
/// is handed over to the merging stage.
const STALL_WINDOW: usize = 40;

/// Numeric roots of a polynomial with multiplicities.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// Roots with multiplicities, sorted by (re, im) for determinism.
    pub roots: Vec<(BigComplex, usize)>,
    /// Requested precision in decimal digits.
    pub digits: u32,
    /// Max |p(root)| over the returned roots.
    pub residual: BigFloat,
}

impl RootSet {
    /// Total number of roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    /// Multiplicities as a partition, largest first.
    pub fn profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.roots.iter().map(|&(_, m)| m).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

fn sort_key(z: &BigComplex) -> (Rational, Rational) {
    (z.re.to_rational(), z.im.to_rational())
}

fn sort_roots(roots: &mut [(BigComplex, usize)]) {
    roots.sort_by(|a, b| {
        let (ar, ai) = sort_key(&a.0);
        let (br, bi) = sort_key(&b.0);
        (ar, ai).cmp(&(br, bi))
    });
}

/// Roots of a rational polynomial at the given precision.
///
/// Multiplicities come from the exact square-free decomposition; each
/// square-free factor is solved with simple roots only.
pub fn complex_roots(p: &UniPoly<Rational>, digits: u32) -> Result<RootSet> {
    if p.degree().map_or(true, |d| d == 0) {
        return Err(Error::ZeroPolynomial { op: "complex_roots" });
    }
    let work = digits + GUARD_DIGITS;
    let mut all: Vec<(BigComplex, usize)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree() == Some(0) {
            continue;
        }
        let coeffs = factor.to_complex(work);
        let roots = aberth(&coeffs, work)?;
        for r in roots {
            all.push((r, mult));
        }
    }
    sort_roots(&mut all);
    let pc = p.to_complex(work);
    let residual = max_residual(&pc, &all);
    Ok(RootSet {
        roots: all,
        digits,
        residual,
    })
}

/// Roots of a complex-coefficient polynomial; multiplicities are recovered by
/// residual-driven cluster merging.
pub fn complex_roots_raw(p: &UniPoly<BigComplex>, digits: u32) -> Result<RootSet> {
    if p.degree().map_or(true, |d| d == 0) {
        return Err(Error::ZeroPolynomial {
            op: "complex_roots_raw",
        });
    }
    let work = digits + GUARD_DIGITS;
    let coeffs: UniPoly<BigComplex> = UniPoly::new(
        p.var(),
        p.coeffs().iter().map(|c| pad(c, work)).collect(),
    );
    let raw = aberth(&coeffs, work)?;
    let merged = merge_clusters(&coeffs, raw, work);
    let mut roots = merged;
    sort_roots(&mut roots);
    let residual = max_residual(&coeffs, &roots);
    Ok(RootSet {
        roots,
        digits,
        residual,
    })
}

fn pad(c: &BigComplex, digits: u32) -> BigComplex {
    BigComplex::new(
        c.re.with_digits(digits.max(c.re.digits())),
        c.im.with_digits(digits.max(c.im.digits())),
    )
}

fn max_residual(p: &UniPoly<BigComplex>, roots: &[(BigComplex, usize)]) -> BigFloat {
    let mut worst = BigFloat::zero();
    for (r, _) in roots {
        // 1-norm: |.| after squaring would underflow the fixed point
        let v = p.eval(r).norm1();
        if v.abs_gt(&worst) {
            worst = v;
        }
    }
    worst
}

/// Aberth-Ehrlich iteration for a polynomial with simple-enough roots.
///
/// Clustered (multiple) roots stall the corrections at the cluster radius;
/// the iteration detects the stall and returns the cluster members as-is for
/// the caller to merge. Residuals are NOT checked here.
pub fn aberth(p: &UniPoly<BigComplex>, work_digits: u32) -> Result<Vec<BigComplex>> {
    let n = p.degree().expect("nonzero polynomial");
    assert!(n >= 1);
    let lc = p.leading().unwrap().clone();
    let monic = p.scale(&BigComplex::one().div(&lc));
    let dp = monic.derivative();

    let mut z = initial_guesses(&monic, n, work_digits);
    let tol = BigFloat::pow10(-((work_digits as i64) - 5));
    let tiny = BigFloat::pow10(-2 * (work_digits as i64));

    let mut best: Option<BigFloat> = None;
    let mut since_improvement = 0usize;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = BigFloat::zero();
        for k in 0..n {
            let pv = monic.eval(&z[k]);
            let dv = dp.eval(&z[k]);
            if pv.norm1().is_zero() {
                continue;
            }
            if !dv.norm1().abs_gt(&tiny) {
                // sitting on a critical point: nudge deterministically
                z[k] = z[k].add(&BigComplex::new(
                    BigFloat::pow10(-((work_digits as i64) / 4)),
                    BigFloat::pow10(-((work_digits as i64) / 3)),
                ));
                max_step = BigFloat::from_i64(1);
                continue;
            }
            let newton = pv.div(&dv);
            let mut repulsion = BigComplex::zero();
            for j in 0..n {
                if j != k {
                    let d = z[k].sub(&z[j]);
                    if d.norm1().is_zero() {
                        continue;
                    }
                    repulsion = repulsion.add(&BigComplex::one().div(&d));
                }
            }
            let denom = BigComplex::one().sub(&newton.mul(&repulsion));
            let step = if denom.norm1().abs_gt(&tiny) {
                newton.div(&denom)
            } else {
                newton
            };
            z[k] = z[k].sub(&step);
            let sz = step.norm1();
            if sz.abs_gt(&max_step) {
                max_step = sz;
            }
        }
        if !max_step.abs_gt(&tol) {
            return Ok(polish(&monic, &dp, z, work_digits));
        }
        // progress = the worst step at least halved since the last best
        match &best {
            Some(b) if b.abs_gt(&max_step.mul(&BigFloat::from_i64(2))) => {
                best = Some(max_step);
                since_improvement = 0;
            }
            Some(_) => {
                since_improvement += 1;
                if since_improvement > STALL_WINDOW {
                    // clustered roots keep each other at the cluster radius
                    return Ok(polish(&monic, &dp, z, work_digits));
                }
            }
            None => best = Some(max_step),
        }
    }
    Err(Error::NonConvergence {
        poly: format!("{p:?}"),
    })
}

/// Three Newton steps per root, skipped near critical points.
fn polish(
    monic: &UniPoly<BigComplex>,
    dp: &UniPoly<BigComplex>,
    mut z: Vec<BigComplex>,
    work_digits: u32,
) -> Vec<BigComplex> {
    let tiny = BigFloat::pow10(-((work_digits as i64) * 3 / 4));
    for zk in &mut z {
        for _ in 0..3 {
            let dv = dp.eval(zk);
            if !dv.norm1().abs_gt(&tiny) {
                break;
            }
            let pv = monic.eval(zk);
            *zk = zk.sub(&pv.div(&dv));
        }
    }
    z
}

/// Deterministic initial guesses on a perturbed circle of Cauchy radius.
fn initial_guesses(monic: &UniPoly<BigComplex>, n: usize, digits: u32) -> Vec<BigComplex> {
    let mut maxc = 0.0f64;
    for c in monic.coeffs() {
        let m = c.norm1().to_f64_lossy().abs();
        if m.is_finite() && m > maxc {
            maxc = m;
        }
    }
    let radius = 1.0 + maxc.min(1e12);
    (0..n)
        .map(|k| {
            // fixed angular offset avoids real-axis symmetry traps
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let r = radius * (0.55 + 0.4 * ((k * 7 + 3) % 11) as f64 / 11.0);
            BigComplex::from_f64_pair(r * theta.cos(), r * theta.sin(), digits)
        })
        .collect()
}

/// Merges root approximations whose separation is within ten times their
/// residual-derived radii; the merged root is the cluster centroid.
fn merge_clusters(
    p: &UniPoly<BigComplex>,
    roots: Vec<BigComplex>,
    work_digits: u32,
) -> Vec<(BigComplex, usize)> {
    let n = roots.len();
    let dp = p.derivative();
    let huge = BigFloat::pow10(6);
    // residuals are only known to the fixed-point resolution, so the Newton
    // radius carries an ulp floor; without it a residual truncated to zero
    // would give a zero radius at a multiple root
    let ulp = BigFloat::pow10(-(work_digits as i64 - 3));
    let radii: Vec<BigFloat> = roots
        .iter()
        .map(|z| {
            let pv = p.eval(z).norm1().add(&ulp);
            let dv = dp.eval(z).norm1();
            if dv.is_zero() || !dv.mul(&huge).abs_gt(&pv) {
                // derivative too small for a Newton radius: force clustering
                BigFloat::pow10(-((work_digits as i64) / 2))
            } else {
                pv.div(&dv).mul(&BigFloat::from_i64(n as i64))
            }
        })
        .collect();

    // union-find over pairwise-mergeable approximations
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let ten = BigFloat::from_i64(10);
    for i in 0..n {
        for j in i + 1..n {
            let sep = roots[i].sub(&roots[j]).norm1();
            let bound = radii[i].add(&radii[j]).mul(&ten);
            if !sep.abs_gt(&bound) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut clusters: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(i);
    }
    clusters
        .values()
        .map(|members| {
            let m = members.len();
            let mut sum = BigComplex::zero();
            for &i in members {
                sum = sum.add(&roots[i]);
            }
            let centroid = BigComplex::new(
                sum.re.div(&BigFloat::from_i64(m as i64)),
                sum.im.div(&BigFloat::from_i64(m as i64)),
            );
            (centroid, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn rp(ints: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(Var::X, ints)
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let rs = complex_roots(&rp(&[1, 0, 1]), 50).unwrap();
        assert_eq!(rs.roots.len(), 2);
        for (r, m) in &rs.roots {
            assert_eq!(*m, 1);
            assert!(r.re.abs().to_rational() < Rational::new(1.into(), BigInt::from(10u32).pow(45)));
            let im_err = (r.im.abs().to_rational() - Rational::one()).abs();
            assert!(im_err < Rational::new(1.into(), BigInt::from(10u32).pow(45)));
        }
    }

    #[test]
    fn multiplicities_from_squarefree_route() {
        // (X-1)^2 (X+1) (2X^2+X+2)
        let p = rp(&[-1, 1])
            .mul(&rp(&[-1, 1]))
            .mul(&rp(&[1, 1]))
            .mul(&rp(&[2, 1, 2]));
        let rs = complex_roots(&p, 60).unwrap();
        assert_eq!(rs.total_multiplicity(), 5);
        assert_eq!(rs.profile(), vec![2, 1, 1, 1]);
    }

    #[test]
    fn raw_clustering_agrees_with_exact_multiplicities() {
        // (X-2)^2 (X+3) with complex-path clustering only
        let p = rp(&[-2, 1]).mul(&rp(&[-2, 1])).mul(&rp(&[3, 1]));
        let rs = complex_roots_raw(&p.to_complex(80), 80).unwrap();
        assert_eq!(rs.profile(), vec![2, 1]);
        let exact = complex_roots(&p, 80).unwrap();
        assert_eq!(rs.profile(), exact.profile());
    }

    #[test]
    fn trinks_roots_residual_and_symmetric_functions() {
        let p = rp(&[3, -7, 0, 0, 0, 0, 0, 1]);
        let rs = complex_roots(&p, 200).unwrap();
        assert_eq!(rs.roots.len(), 7);
        assert!(rs.profile().iter().all(|&m| m == 1));
        let bound = Rational::new(1.into(), BigInt::from(10u32).pow(190));
        assert!(rs.residual.to_rational().abs() < bound * Rational::from_int(8));
        // sum of roots = 0, product = -3
        let mut sum = BigComplex::zero();
        let mut prod = BigComplex::one();
        for (r, _) in &rs.roots {
            sum = sum.add(r);
            prod = prod.mul(r);
        }
        let tol = Rational::new(1.into(), BigInt::from(10u32).pow(180));
        assert!(sum.norm1().to_rational().abs() < tol);
        assert!((prod.re.to_rational() + Rational::from_int(3)).abs() < tol);
        assert!(prod.im.to_rational().abs() < tol);
    }

    #[test]
    fn doubling_precision_improves_roots() {
        // residual-derived error bounds shrink by at least 10^(digits/2);
        // bounds carry the fixed-point resolution floor
        let bound = |rs: &RootSet| {
            let floor = Rational::new(1.into(), BigInt::from(10u32).pow(rs.digits + GUARD_DIGITS));
            let res = rs.residual.to_rational();
            if res > floor {
                res
            } else {
                floor
            }
        };
        let p = rp(&[5, -3, 0, 2, 0, 0, 0, 1]);
        let lo = complex_roots(&p, 40).unwrap();
        let hi = complex_roots(&p, 80).unwrap();
        assert!(bound(&hi) * Rational::from_bigint(BigInt::from(10u32).pow(20)) <= bound(&lo));
    }
}
