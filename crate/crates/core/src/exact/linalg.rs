//! Small exact linear algebra: dense matrices over the rational-function
//! field (for the cluster method) and over the rationals (for polytope
//! sections), plus integer rank for face dimensions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ratfun::RationalFunction;
use crate::{Error, Result};

/// Rectangular matrix with rational-function entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RfMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<RationalFunction>,
}

impl RfMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<RationalFunction>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data must be rectangular");
        RfMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RfMatrix {
            rows,
            cols,
            data: vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RationalFunction::one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &RationalFunction {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut RationalFunction {
        &mut self.data[r * self.cols + c]
    }

    pub fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        RfMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &RfMatrix) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = RationalFunction::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &RfMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        RfMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Solves `self * x = b` exactly by Gaussian elimination over the
    /// rational-function field, pivoting on the first nonzero entry in
    /// column order.
    pub fn solve(&self, b: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
        assert_eq!(self.rows, self.cols, "solve needs a square system");
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(Error::SingularSystem)?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a.at(pivot, c).clone();
                    *a.at_mut(pivot, c) = a.at(col, c).clone();
                    *a.at_mut(col, c) = tmp;
                }
                rhs.swap(pivot, col);
            }
            let inv = a.at(col, col).recip()?;
            for r in col + 1..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let factor = &(a.at(r, col) * &inv);
                for c in col..n {
                    let delta = factor * a.at(col, c);
                    *a.at_mut(r, c) = &(a.at(r, c).clone()) - &delta;
                }
                let delta = factor * &rhs[col];
                rhs[r] = &rhs[r] - &delta;
            }
        }
        let mut x = vec![RationalFunction::zero(); n];
        for row in (0..n).rev() {
            let mut acc = rhs[row].clone();
            for c in row + 1..n {
                acc = &acc - &(a.at(row, c) * &x[c]);
            }
            x[row] = &acc / a.at(row, row);
        }
        Ok(x)
    }

    /// Inverse via column-by-column solves.
    pub fn inverse(&self) -> Result<RfMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut out = Self::zero(n, n);
        for j in 0..n {
            let mut e = vec![RationalFunction::zero(); n];
            e[j] = RationalFunction::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                *out.at_mut(i, j) = col[i].clone();
            }
        }
        Ok(out)
    }
}

/// Solves a square rational system `a x = b`; `None` when singular.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n));
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        rhs.swap(pivot, col);
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row].clone();
        for c in row + 1..n {
            acc -= &m[row][c] * &x[c];
        }
        x[row] = acc / &m[row][row];
    }
    Some(x)
}

/// Solves a (possibly overdetermined) rational system `a x = b` when it has
/// a unique exact solution: full column rank and consistent. Returns `None`
/// otherwise.
pub fn solve_unique(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    assert_eq!(b.len(), rows);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            return None; // column of zeros below: rank-deficient
        };
        m.swap(p, row);
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[row][col];
                for c in col..=cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
    }
    // Remaining rows must have vanished for the system to be consistent.
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for &(r, c) in &pivot_rows {
        x[c] = &m[r][cols] / &m[r][c];
    }
    Some(x)
}

/// Rank of an integer matrix, computed over the rationals.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot, rank);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratfun::rf;

    #[test]
    fn identity_solve() {
        let id = RfMatrix::identity(3);
        let b = vec![rf(&[1], &[1]), rf(&[0, 1], &[1]), rf(&[2], &[1, 1])];
        assert_eq!(id.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_residual_zero() {
        let a = RfMatrix::new(
            2,
            2,
            vec![
                rf(&[1], &[1]),
                rf(&[0, 1], &[1]),
                rf(&[0, -1], &[1]),
                rf(&[1], &[1]),
            ],
        );
        let b = vec![rf(&[0, 0, -1], &[1]), rf(&[0, 0, -1], &[1])];
        let x = a.solve(&b).unwrap();
        for i in 0..2 {
            let mut acc = RationalFunction::zero();
            for j in 0..2 {
                acc = &acc + &(a.at(i, j) * &x[j]);
            }
            assert_eq!(acc, b[i]);
        }
    }

    #[test]
    fn singular_detected() {
        let a = RfMatrix::new(
            2,
            2,
            vec![
                rf(&[1], &[1]),
                rf(&[1], &[1]),
                rf(&[1], &[1]),
                rf(&[1], &[1]),
            ],
        );
        let b = vec![rf(&[1], &[1]), rf(&[0], &[1])];
        assert_eq!(a.solve(&b), Err(Error::SingularSystem));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = RfMatrix::new(
            2,
            2,
            vec![
                rf(&[1, 1], &[1]),
                rf(&[0, 1], &[1]),
                rf(&[1], &[1]),
                rf(&[1], &[1, -1]),
            ],
        );
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RfMatrix::identity(2));
    }

    #[test]
    fn rational_solver() {
        use num_traits::One;
        let one = BigRational::one;
        let a = vec![
            vec![one(), one()],
            vec![one(), -one()],
        ];
        let b = vec![one() + one(), BigRational::zero()];
        let x = solve_rational(&a, &b).unwrap();
        assert_eq!(x, vec![one(), one()]);
    }

    #[test]
    fn int_rank_examples() {
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(int_rank(&rows), 2);
        assert_eq!(int_rank(&[]), 0);
    }
}
