use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over an exact scalar type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != m) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {m}",
                r.len()
            )));
        }
        Ok(Matrix { rows: n, cols: m, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Applies the same permutation to rows and columns: entry `(i, j)`
    /// of the result is entry `(perm[i], perm[j])` of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self
    where
        T: Clone,
    {
        assert_eq!(perm.len(), self.rows, "permutation length");
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(perm[i], perm[j])].clone())
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Matrix::from_fn(r + other.rows, c + other.cols, |i, j| {
            if i < r && j < c {
                self[(i, j)].clone()
            } else if i >= r && j >= c {
                other[(i - r, j - c)].clone()
            } else {
                T::zero()
            }
        })
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Matrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, t| {
                acc + self[(i, t)].clone() * rhs[(t, j)].clone()
            })
        })
    }
}

impl<T: Clone + Zero + PartialEq + std::ops::Neg<Output = T>> Matrix<T> {
    /// `m^T = -m` with zero diagonal.
    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero()
                    && (i + 1..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::from_rows(vec![vec![1, 2], vec![3]]).unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
        assert!(Matrix::new(2, 2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn direct_sum_and_skew() {
        let j = Matrix::from_rows(vec![vec![0i64, 1], vec![-1, 0]]).unwrap();
        let s = j.direct_sum(&j);
        assert_eq!(s.shape(), (4, 4));
        assert_eq!(s[(2, 3)], 1);
        assert_eq!(s[(0, 3)], 0);
        assert!(s.is_skew_symmetric());
        assert!(!s.is_symmetric());
    }

    #[test]
    fn symmetric_permutation() {
        let m = Matrix::from_rows(vec![vec![0i64, 1, 2], vec![-1, 0, 3], vec![-2, -3, 0]]).unwrap();
        let p = m.permute_symmetric(&[2, 0, 1]);
        assert_eq!(p[(0, 1)], -2);
        assert!(p.is_skew_symmetric());
    }

    #[test]
    fn product_with_identity() {
        let m = Matrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.mul(&Matrix::identity(2)), m);
        assert_eq!(m.transpose()[(0, 1)], 3);
    }
}
