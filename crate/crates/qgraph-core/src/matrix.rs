//! Dense integer matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

/// Row-major dense matrix of `i64`.
///
/// Fusion, annular, toric and graph-algebra matrices all live here; their
/// entries are small nonnegative integers, so plain `i64` arithmetic is used.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds from rows; `None` if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Option<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.as_ref().len() != cols {
                return None;
            }
            data.extend_from_slice(r.as_ref());
        }
        Some(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<i64>) -> Option<Self> {
        (data.len() == rows * cols).then_some(IntMatrix { rows, cols, data })
    }

    /// Outer product `u vᵀ`.
    pub fn outer(u: &[i64], v: &[i64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j])
    }

    /// Permutation matrix with `P[i][perm[i]] = 1`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len(), perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m[(i, j)] = 1;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, c: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: i64, other: &IntMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    /// Exact division of every entry; `None` unless all entries divide.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        if d == 0 || self.data.iter().any(|x| x % d != 0) {
            return None;
        }
        Some(IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x / d).collect() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn min(&self) -> Option<i64> {
        self.data.iter().copied().min()
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn sum(&self) -> i64 {
        self.data.iter().sum()
    }

    /// Gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> i64 {
        self.data.iter().fold(0i64, |g, &x| num_integer::gcd(g, x))
    }

    pub fn commutes_with(&self, other: &IntMatrix) -> bool {
        &(self * other) == &(other * self)
    }

    /// Entry-wise `self ≤ other`.
    pub fn dominated_by(&self, other: &IntMatrix) -> bool {
        self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }

    /// `P M Pᵀ` for the permutation sending new index `i` to old `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self[(perm[i], perm[j])])
    }

    /// Principal submatrix on `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// `Mᵖ` by repeated squaring.
    pub fn pow(&self, mut p: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while p > 0 {
            if p & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            p >>= 1;
        }
        acc
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Block `(bi, bj)` of size `size`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self[(bi * size + i, bj * size + j)])
    }

    /// Assembles a square block matrix from a grid of equally sized blocks.
    pub fn from_blocks(grid: &[Vec<IntMatrix>]) -> Self {
        let nb = grid.len();
        let size = grid[0][0].rows;
        let mut out = Self::zeros(nb * size, nb * size);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                for i in 0..size {
                    for j in 0..size {
                        out[(bi * size + i, bj * size + j)] = b[(i, j)];
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi != 0 {
                for (o, &m) in out.iter_mut().zip(self.row(i)) {
                    *o += vi * m;
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[[1, 2], [0, 1]]).unwrap();
        let b = IntMatrix::from_rows(&[[1, 0], [3, 1]]).unwrap();
        assert_eq!(&a * &b, IntMatrix::from_rows(&[[7, 2], [3, 1]]).unwrap());
        assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_none());
    }

    #[test]
    fn permuted_conjugates_by_permutation_matrix() {
        let m = IntMatrix::from_fn(3, 3, |i, j| (3 * i + j) as i64);
        let p = [2, 0, 1];
        let pm = IntMatrix::permutation(&p);
        assert_eq!(m.permuted(&p), &(&pm * &m) * &pm.transpose());
    }

    #[test]
    fn blocks_round_trip() {
        let a = IntMatrix::identity(2);
        let b = a.scale(3);
        let d = IntMatrix::block_diag(&[a.clone(), b.clone()]);
        assert_eq!(d.block(0, 0, 2), a);
        assert_eq!(d.block(1, 1, 2), b);
        assert!(d.block(0, 1, 2).is_zero());
    }
}
