//! Exact rational matrices: reduced row echelon form, rank, kernel bases.

use crate::rational::Rational;

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Rational::zero(), |acc, j| acc + self.at(i, j) * &v[j])
            })
            .collect()
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.at(row, j).clone();
                    let b = m.at(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.at(row, col).recip();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let v = m.at(i, j) - &(m.at(row, j) * &factor);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : M v = 0}` in reduced echelon form.
    ///
    /// One basis vector per free column, with a `1` in the free position and
    /// zeros in the other free positions; deterministic for equal inputs.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); self.cols];
                v[fc] = Rational::one();
                for (prow, &pcol) in pivots.iter().enumerate() {
                    v[pcol] = -r.at(prow, fc).clone();
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(id.kernel_basis().is_empty());
        assert_eq!(id.rank(), 3);
    }

    #[test]
    fn zero_row_has_full_kernel() {
        let z = m(&[&[0, 0]]);
        let basis = z.kernel_basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0][0], Rational::one());
        assert_eq!(basis[1][1], Rational::one());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.apply(v).iter().all(Rational::is_zero));
        }
        // determinism
        assert_eq!(basis, a.kernel_basis());
    }

    #[test]
    fn rank_of_rank_deficient() {
        let a = m(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(a.rank(), 1);
    }
}
