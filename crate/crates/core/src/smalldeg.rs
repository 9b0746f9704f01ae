//! Pencils with small dihedral-type groups: the V4 quartic via the Hessian,
//! the two-parameter D4 quartic family, the D5 quintic with its 2-2
//! correspondence factorization, and the D6 hexagon condition.

use crate::covariants::involution_condition;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::{BiPoly, UniPoly, Var};
use crate::rational::Rational;
use crate::resultant::discriminant;

/// A small cyclically-indexed configuration of 4, 5 or 6 distinct rationals.
#[derive(Clone, Debug)]
pub struct SmallConfig {
    values: Vec<Rational>,
}

impl SmallConfig {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if !(4..=6).contains(&values.len()) {
            return Err(Error::InvalidInput(
                "small configurations have 4, 5 or 6 values".into(),
            ));
        }
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                if values[i] == values[j] {
                    return Err(Error::RepeatedValues { i, j });
                }
            }
        }
        Ok(SmallConfig { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cyclic access.
    pub fn at(&self, i: isize) -> &Rational {
        let n = self.values.len() as isize;
        &self.values[(((i % n) + n) % n) as usize]
    }

    pub fn p_poly(&self) -> UniPoly<Rational> {
        UniPoly::from_roots(Var::X, &self.values)
    }
}

/// A homography `z -> (az + b)/(cz + d)` as a 2x2 matrix up to scale;
/// involutions are normalized to trace 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Homography {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Homography {
    pub fn determinant(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_involution(&self) -> bool {
        (&self.a + &self.d).is_zero() && !self.determinant().is_zero()
    }

    /// Image of a point; `None` at the pole.
    pub fn apply(&self, z: &Rational) -> Option<Rational> {
        let den = &self.c * z + &self.d;
        if den.is_zero() {
            return None;
        }
        Some((&self.a * z + &self.b) / den)
    }

    /// The graph `(cX + d) Y - (aX + b) = 0` as a (1,1) correspondence;
    /// symmetric for involutions.
    pub fn graph(&self) -> BiPoly<Rational> {
        BiPoly::new(
            (Var::X, Var::Y),
            vec![
                vec![-self.b.clone(), self.d.clone()],
                vec![-self.a.clone(), self.c.clone()],
            ],
        )
    }
}

/// The unique involution swapping two pairs, or the vanishing condition plus
/// the involution for three pairs.
///
/// A pair `(p, q)` is swapped by the trace-zero homography
/// `z -> (az + b)/(cz - a)` iff `a(p + q) + b - c p q = 0`, which is one
/// linear condition; two pairs generically determine the involution up to
/// scale, three pairs impose the determinant condition of
/// [`involution_condition`].
pub fn involution_from_pairs(pairs: &[(Rational, Rational)]) -> Result<Option<Homography>> {
    match pairs.len() {
        2 => {
            let rows: Vec<Vec<Rational>> = pairs
                .iter()
                .map(|(p, q)| vec![p + q, Rational::one(), -(p * q)])
                .collect();
            let kernel = RatMatrix::from_rows(rows).kernel_basis();
            if kernel.len() != 1 {
                return Err(Error::Degenerate {
                    what: "involution system (pairs do not determine a unique map)".into(),
                });
            }
            let (a, b, c) = (kernel[0][0].clone(), kernel[0][1].clone(), kernel[0][2].clone());
            let h = Homography {
                d: -a.clone(),
                a,
                b,
                c,
            };
            if h.determinant().is_zero() {
                return Err(Error::Degenerate {
                    what: "involution determinant".into(),
                });
            }
            Ok(Some(h))
        }
        3 => {
            let arr: [(Rational, Rational); 3] =
                [pairs[0].clone(), pairs[1].clone(), pairs[2].clone()];
            let det = involution_condition(&arr)?;
            if det.is_zero() {
                involution_from_pairs(&pairs[..2])
            } else {
                Ok(None)
            }
        }
        _ => Err(Error::InvalidInput(
            "involution_from_pairs takes two or three pairs".into(),
        )),
    }
}

/// The homography through three point pairs `z_k -> w_k`, when the pairs are
/// in general position (unique up to scale, nonzero determinant).
pub fn mobius_through_pairs(pairs: &[(Rational, Rational); 3]) -> Option<Homography> {
    // a z + b - c z w - d w = 0
    let rows: Vec<Vec<Rational>> = pairs
        .iter()
        .map(|(z, w)| vec![z.clone(), Rational::one(), -(z * w), -w.clone()])
        .collect();
    let kernel = RatMatrix::from_rows(rows).kernel_basis();
    if kernel.len() != 1 {
        return None;
    }
    let h = Homography {
        a: kernel[0][0].clone(),
        b: kernel[0][1].clone(),
        c: kernel[0][2].clone(),
        d: kernel[0][3].clone(),
    };
    (!h.determinant().is_zero()).then_some(h)
}

/// The V4 companion `Q` of a separable quartic: the dehomogenized Hessian
/// `R''_XX R''_ZZ - (R''_XZ)^2` of `R(X, Z) = Z^4 P(X/Z)`, cross-checked
/// against `P'^2 mod P` (the two agree up to a scalar).
pub fn v4_q(p: &UniPoly<Rational>) -> Result<UniPoly<Rational>> {
    if p.degree() != Some(4) {
        return Err(Error::InvalidInput("v4 needs a degree-4 polynomial".into()));
    }
    if discriminant(p)?.is_zero() {
        return Err(Error::Degenerate {
            what: "quartic discriminant (repeated root); v4".into(),
        });
    }
    // homogenization: coefficient of X^i Z^(4-i) is p_i
    let r = BiPoly::new(
        (Var::X, Var::Z),
        (0..=4)
            .map(|i| {
                let mut row = vec![Rational::zero(); 5 - i];
                row[4 - i] = p.coeff(i);
                row
            })
            .collect(),
    );
    let rxx = r.derivative_first().derivative_first();
    let rzz = r.derivative_second().derivative_second();
    let rxz = r.derivative_first().derivative_second();
    let hes = rxx.mul(&rzz).sub(&rxz.mul(&rxz));
    let q = hes.eval_second(&Rational::one());
    // independent route: P'^2 mod P agrees with Q up to a constant, mod P
    let dp = p.derivative();
    let (_, rem) = dp.mul(&dp).div_rem(p);
    let (_, q_rem) = q.div_rem(p);
    if q_rem.proportionality(&rem).is_none() {
        return Err(Error::Inconsistency(
            "Hessian route and P'^2 mod P disagree".into(),
        ));
    }
    Ok(q)
}

/// The V4 triple factorization data.
#[derive(Clone, Debug)]
pub struct V4Factorization {
    pub q: UniPoly<Rational>,
    /// Graphs of the three involutions pairing the roots.
    pub factors: [BiPoly<Rational>; 3],
    /// `P(X)Q(Y) - P(Y)Q(X) = scale * (X - Y) F1 F2 F3`.
    pub scale: Rational,
}

/// Factors `P(X)Q(Y) - P(Y)Q(X)` into `(X - Y)` times the graphs of the
/// three root-pairing involutions.
pub fn v4_factor(cfg: &SmallConfig) -> Result<V4Factorization> {
    if cfg.len() != 4 {
        return Err(Error::InvalidInput("v4 needs four values".into()));
    }
    let p = cfg.p_poly();
    let q = v4_q(&p)?;
    let x = cfg.values();
    let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let mut factors = Vec::with_capacity(3);
    for pairing in pairings {
        let pairs: Vec<(Rational, Rational)> = pairing
            .iter()
            .map(|&(i, j)| (x[i].clone(), x[j].clone()))
            .collect();
        let h = involution_from_pairs(&pairs)?.expect("two pairs always determine one");
        if !h.is_involution() {
            return Err(Error::Degenerate {
                what: "pairing involution trace".into(),
            });
        }
        factors.push(h.graph());
    }
    let lhs = BiPoly::outer((Var::X, Var::Y), &p, &q).sub(&BiPoly::outer(
        (Var::X, Var::Y),
        &q,
        &p,
    ));
    let x_minus_y = BiPoly::new(
        (Var::X, Var::Y),
        vec![vec![Rational::zero(), -Rational::one()], vec![Rational::one()]],
    );
    let rhs = x_minus_y
        .mul(&factors[0])
        .mul(&factors[1])
        .mul(&factors[2]);
    let scale = rhs.proportionality(&lhs).ok_or(Error::FactorShape {
        detail: "V4 product identity failed".into(),
    })?;
    Ok(V4Factorization {
        q,
        factors: [factors[0].clone(), factors[1].clone(), factors[2].clone()],
        scale,
    })
}

/// The two-parameter D4 quartic pencil data.
#[derive(Clone, Debug)]
pub struct D4Pencil {
    pub q1: UniPoly<Rational>,
    pub q2: UniPoly<Rational>,
    /// The involution sending each root to its cyclic opposite.
    pub involution: Homography,
}

/// `Q1 = q^2` and `Q2 = u q (2X^2 - X sum + x0 x2 + x1 x3)` where
/// `u = x0 - x1 + x2 - x3` and `q = uX + x1 x3 - x0 x2`.
pub fn d4_pencil(cfg: &SmallConfig) -> Result<D4Pencil> {
    if cfg.len() != 4 {
        return Err(Error::InvalidInput("d4 needs four values".into()));
    }
    let x = cfg.values();
    let u = &(&x[0] - &x[1]) + &(&x[2] - &x[3]);
    if u.is_zero() {
        return Err(Error::Degenerate {
            what: "alternating sum u".into(),
        });
    }
    let q = UniPoly::new(Var::X, vec![&x[1] * &x[3] - &(&x[0] * &x[2]), u.clone()]);
    let q1 = q.mul(&q);
    let sum = &(&x[0] + &x[1]) + &(&x[2] + &x[3]);
    let quad = UniPoly::new(
        Var::X,
        vec![
            &(&x[0] * &x[2]) + &(&x[1] * &x[3]),
            -sum,
            Rational::from_int(2),
        ],
    );
    let q2 = q.scale(&u).mul(&quad);
    let involution = involution_from_pairs(&[
        (x[0].clone(), x[2].clone()),
        (x[1].clone(), x[3].clone()),
    ])?
    .expect("two pairs determine an involution");
    Ok(D4Pencil { q1, q2, involution })
}

/// The D5 quintic pencil data.
#[derive(Clone, Debug)]
pub struct D5Pencil {
    pub q: UniPoly<Rational>,
    /// Symmetric (2,2) correspondence vanishing at index distance 1.
    pub f: BiPoly<Rational>,
    /// Symmetric (2,2) correspondence vanishing at index distance 2.
    pub g: BiPoly<Rational>,
    /// `P(X)Q(Y) - P(Y)Q(X) = scale * (X - Y) F G`.
    pub scale: Rational,
}

/// Builds the D5 companion `Q` and the exact factorization into the two
/// symmetric distance correspondences.
pub fn d5_pencil(cfg: &SmallConfig) -> Result<D5Pencil> {
    if cfg.len() != 5 {
        return Err(Error::InvalidInput("d5 needs five values".into()));
    }
    let p = cfg.p_poly();
    // Q = P sum_i P'(x_i)(x_{i-1} - x_{i+1})(x_{i-2} - x_{i+2}) / (X - x_i)
    let mut q = UniPoly::zero(Var::X);
    for i in 0..5isize {
        let mut w = &(cfg.at(i - 1) - cfg.at(i + 1)) * &(cfg.at(i - 2) - cfg.at(i + 2));
        let mut others = Vec::with_capacity(4);
        for j in 0..5isize {
            if j != i {
                w = w * (cfg.at(i) - cfg.at(j)); // P'(x_i) factors
                others.push(cfg.at(j).clone());
            }
        }
        q = q.add(&UniPoly::from_roots(Var::X, &others).scale(&w));
    }
    if q.is_zero() || q.degree().unwrap() > 4 {
        return Err(Error::FactorShape {
            detail: format!("D5 companion has degree {:?}", q.degree()),
        });
    }
    let f = distance_correspondence(cfg, 1)?;
    let g = distance_correspondence(cfg, 2)?;
    let lhs = BiPoly::outer((Var::X, Var::Y), &p, &q).sub(&BiPoly::outer(
        (Var::X, Var::Y),
        &q,
        &p,
    ));
    let x_minus_y = BiPoly::new(
        (Var::X, Var::Y),
        vec![vec![Rational::zero(), -Rational::one()], vec![Rational::one()]],
    );
    let rhs = x_minus_y.mul(&f).mul(&g);
    let scale = rhs.proportionality(&lhs).ok_or(Error::FactorShape {
        detail: "D5 product identity failed".into(),
    })?;
    Ok(D5Pencil { q, f, g, scale })
}

/// The symmetric (2,2) correspondence vanishing exactly on root pairs at
/// cyclic index distance `dist`, by interpolation through its zero set.
fn distance_correspondence(cfg: &SmallConfig, dist: isize) -> Result<BiPoly<Rational>> {
    // symmetric coefficient unknowns (k <= l): (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
    let idx: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let sym_eval = |k: usize, l: usize, a: &Rational, b: &Rational| {
        if k == l {
            a.pow(k as i32) * b.pow(l as i32)
        } else {
            a.pow(k as i32) * b.pow(l as i32) + a.pow(l as i32) * b.pow(k as i32)
        }
    };
    let rows: Vec<Vec<Rational>> = (0..5isize)
        .map(|i| {
            let (a, b) = (cfg.at(i), cfg.at(i + dist));
            idx.iter().map(|&(k, l)| sym_eval(k, l, a, b)).collect()
        })
        .collect();
    let kernel = RatMatrix::from_rows(rows).kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::KernelDimension {
            system: "distance correspondence system",
            got: kernel.len(),
            expected: 1,
        });
    }
    let mut m = vec![vec![Rational::zero(); 3]; 3];
    for (e, &(k, l)) in kernel[0].iter().zip(&idx) {
        m[k][l] = e.clone();
        m[l][k] = e.clone();
    }
    let out = BiPoly::new((Var::X, Var::Y), m);
    if out.bidegree() != Some((2, 2)) {
        return Err(Error::FactorShape {
            detail: format!("distance-{dist} correspondence has bidegree {:?}", out.bidegree()),
        });
    }
    Ok(out)
}

/// The hexagon condition
/// `(x0-x1)(x2-x3)(x4-x5) + (x1-x2)(x3-x4)(x5-x0)`; it vanishes iff an
/// involution maps each `x_i` to `x_{i+3}`.
pub fn d6_condition(cfg: &SmallConfig) -> Result<Rational> {
    if cfg.len() != 6 {
        return Err(Error::InvalidInput("d6 needs six values".into()));
    }
    let t1 = &(cfg.at(0) - cfg.at(1)) * &(&(cfg.at(2) - cfg.at(3)) * &(cfg.at(4) - cfg.at(5)));
    let t2 = &(cfg.at(1) - cfg.at(2)) * &(&(cfg.at(3) - cfg.at(4)) * &(cfg.at(5) - cfg.at(0)));
    Ok(t1 + t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(vals: &[i64]) -> SmallConfig {
        SmallConfig::new(vals.iter().map(|&v| Rational::from_int(v)).collect()).unwrap()
    }

    fn cfg_rat(vals: &[(i64, i64)]) -> SmallConfig {
        SmallConfig::new(vals.iter().map(|&(p, q)| Rational::ratio(p, q)).collect()).unwrap()
    }

    #[test]
    fn involution_swapping_sign_pairs() {
        let h = involution_from_pairs(&[
            (Rational::from_int(1), Rational::from_int(-1)),
            (Rational::from_int(2), Rational::from_int(-2)),
        ])
        .unwrap()
        .unwrap();
        // z -> -z
        assert_eq!(h.apply(&Rational::from_int(5)), Some(Rational::from_int(-5)));
        assert!(h.is_involution());
    }

    #[test]
    fn v4_routes_agree_on_random_quartics() {
        for vals in [[0i64, 1, 2, 6], [3, -1, 7, 2], [10, -4, 5, 1]] {
            let c = cfg(&vals);
            v4_q(&c.p_poly()).unwrap();
        }
        // non-split separable quartic
        let p = UniPoly::from_ints(Var::X, &[1, 1, 0, 0, 1]);
        v4_q(&p).unwrap();
        // repeated root is rejected
        let bad = UniPoly::from_ints(Var::X, &[0, 0, 1, -2, 1]);
        assert!(v4_q(&bad).is_err());
    }

    #[test]
    fn v4_triple_factorization() {
        let c = cfg(&[0, 1, 2, 6]);
        let fac = v4_factor(&c).unwrap();
        let x = c.values();
        // each factor vanishes on its pairing and is symmetric
        let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
        for (f, pairing) in fac.factors.iter().zip(pairings) {
            assert!(f.is_symmetric());
            for (i, j) in pairing {
                assert!(f.eval(&x[i], &x[j]).is_zero());
                assert!(f.eval(&x[j], &x[i]).is_zero());
            }
        }
        assert!(!fac.scale.is_zero());
    }

    #[test]
    fn d4_objects() {
        let c = cfg(&[0, 1, 3, 7]);
        let d4 = d4_pencil(&c).unwrap();
        assert_eq!(d4.q1.degree(), Some(2));
        assert!(d4.q2.degree().unwrap() <= 4);
        assert!(d4.involution.is_involution());
        let x = c.values();
        assert_eq!(d4.involution.apply(&x[0]), Some(x[2].clone()));
        assert_eq!(d4.involution.apply(&x[1]), Some(x[3].clone()));
        // u = x0 - x1 + x2 - x3 = 0 is rejected
        assert!(matches!(
            d4_pencil(&cfg(&[0, 2, 3, 1])),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn d5_factorization_and_incidence() {
        let c = cfg(&[0, 1, 3, 7, 12]);
        let d5 = d5_pencil(&c).unwrap();
        assert!(d5.f.is_symmetric());
        assert!(d5.g.is_symmetric());
        for i in 0..5isize {
            for j in 0..5isize {
                let dist = ((i - j).rem_euclid(5)).min((j - i).rem_euclid(5));
                let fv = d5.f.eval(c.at(i), c.at(j));
                let gv = d5.g.eval(c.at(i), c.at(j));
                assert_eq!(fv.is_zero(), dist == 1, "F at ({i},{j})");
                assert_eq!(gv.is_zero(), dist == 2, "G at ({i},{j})");
            }
        }
        // disc of P - TQ is a square up to constant
        let disc = crate::resultant::pencil_discriminant(&c.p_poly(), &d5.q).unwrap();
        assert!(disc.sqrt_up_to_constant().is_some());
    }

    #[test]
    fn d6_condition_on_involution_orbit() {
        // x_{i+3} = 1/x_i
        let c = cfg_rat(&[(2, 1), (3, 1), (5, 1), (1, 2), (1, 3), (1, 5)]);
        assert!(d6_condition(&c).unwrap().is_zero());
        // generic hexagon: nonzero
        let g = cfg(&[0, 1, 3, 7, 12, 20]);
        assert!(!d6_condition(&g).unwrap().is_zero());
    }

    #[test]
    fn d6_condition_matches_involution_determinant() {
        for vals in [[0i64, 1, 3, 7, 12, 20], [5, -2, 9, 4, 11, -7], [1, 2, 4, 8, 16, 32]] {
            let c = cfg(&vals);
            let det = involution_condition(&[
                (c.at(0).clone(), c.at(3).clone()),
                (c.at(1).clone(), c.at(4).clone()),
                (c.at(2).clone(), c.at(5).clone()),
            ])
            .unwrap();
            let cond = d6_condition(&c).unwrap();
            assert_eq!(det.is_zero(), cond.is_zero());
        }
    }
}
