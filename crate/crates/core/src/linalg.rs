//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::ratpoly::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    fn row_echelon(&self) -> (RatMatrix, usize, Rational) {
        let mut m = self.clone();
        let mut rank = 0;
        let mut det = Rational::one();
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                det = Rational::zero();
                continue;
            };
            if pivot != rank {
                m.swap_rows(pivot, rank);
                det = -det;
            }
            let p = m[(rank, col)].clone();
            det *= &p;
            for r in (rank + 1)..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for c in col..m.cols {
                    let delta = &factor * &m[(rank, c)];
                    m[(r, c)] -= delta;
                }
            }
            rank += 1;
        }
        (m, rank, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return Rational::one();
        }
        self.row_echelon().2
    }

    /// Inverse by Gauss-Jordan; `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] /= &p;
                inv[(col, c)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let d1 = &factor * &a[(col, c)];
                    a[(r, c)] -= d1;
                    let d2 = &factor * &inv[(col, c)];
                    inv[(r, c)] -= d2;
                }
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn det_and_inverse() {
        let m = RatMatrix::from_fn(3, 3, |i, j| rat([[2, 1, 0], [1, 3, 1], [0, 1, 4]][i][j]));
        assert_eq!(m.determinant(), rat(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(3));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn singular() {
        let m = RatMatrix::from_fn(2, 2, |i, j| rat(((i + 1) * (j + 1)) as i64));
        assert_eq!(m.determinant(), rat(0));
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_none());
    }
}
