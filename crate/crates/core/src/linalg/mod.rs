//! Dense matrices and vectors over any exact ring.
//!
//! Shapes are validated with assertions: a dimension mismatch is a
//! programming error, not a recoverable condition. Mathematical failures
//! (singular input, no unit pivot) surface as [`crate::Error`].

use std::ops::{Index, IndexMut};

use crate::rings::Ring;

mod elimination;
mod oracle;

pub use elimination::{det_gauss, gauss_jordan_inverse, lin_solve, MatrixInverse};
pub use oracle::{adjugate_oracle, det_cofactor};

/// Dense matrix in row-major order. All entries belong to the ring
/// instance stored alongside the data.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, data: Vec<R::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let data = vec![ring.zero(); rows * cols];
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            let one = m.ring.one();
            m[(i, i)] = one;
        }
        m
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Reduces an array of signed integers into the ring.
    pub fn from_i64_rows(ring: R, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            ring.clone(),
            rows.iter()
                .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn row(&self, i: usize) -> RowVector<R> {
        assert!(i < self.rows);
        RowVector::new(
            self.ring.clone(),
            self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        )
    }

    pub fn col(&self, j: usize) -> ColVector<R> {
        assert!(j < self.cols);
        ColVector::new(
            self.ring.clone(),
            (0..self.rows).map(|i| self[(i, j)].clone()).collect(),
        )
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut out = Matrix::zeros(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Classical product; panics on inner-dimension mismatch.
    pub fn mul(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert!(self.ring == other.ring, "operands use different rings");
        let mut out = Matrix::zeros(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    self.ring
                        .add_mul_assign(&mut acc, &self[(i, k)], &other[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn mul_col(&self, v: &ColVector<R>) -> ColVector<R> {
        assert_eq!(self.cols, v.dim(), "inner dimensions must agree");
        let mut out = ColVector::zeros(self.ring.clone(), self.rows);
        for i in 0..self.rows {
            let mut acc = self.ring.zero();
            for k in 0..self.cols {
                self.ring.add_mul_assign(&mut acc, &self[(i, k)], v.at(k));
            }
            out.set(i, acc);
        }
        out
    }

    pub fn add(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.ring.sub(a, b))
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Matrix<R>) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            self.ring.add_assign(a, b);
        }
    }

    /// Entrywise multiplication by a ring element.
    pub fn scale(&self, c: &R::Elem) -> Matrix<R> {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    /// Entrywise image under `f` in another ring, in row-major order.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Inverse via the ring-specific strategy; see [`MatrixInverse`].
    pub fn inverse(&self) -> crate::error::Result<Matrix<R>>
    where
        R: MatrixInverse,
    {
        self.ring.clone().invert_matrix(self)
    }
}

impl<R: Ring> Index<(usize, usize)> for Matrix<R> {
    type Output = R::Elem;

    fn index(&self, (i, j): (usize, usize)) -> &R::Elem {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R: Ring> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R::Elem {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Companion matrix of the monic polynomial x^n + tail\[n-1\] x^{n-1} +
/// ... + tail\[0\]: ones on the subdiagonal, negated `tail` in the last
/// column. Its characteristic and minimal polynomials both equal the
/// input polynomial.
pub fn companion_matrix<R: Ring>(ring: &R, tail: &[R::Elem]) -> Matrix<R> {
    let n = tail.len();
    assert!(n >= 1);
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for i in 1..n {
        m[(i, i - 1)] = ring.one();
    }
    for (i, c) in tail.iter().enumerate() {
        m[(i, n - 1)] = ring.neg(c);
    }
    m
}

/// 1 x n row vector.
#[derive(Clone, PartialEq, Debug)]
pub struct RowVector<R: Ring> {
    ring: R,
    entries: Vec<R::Elem>,
}

/// n x 1 column vector.
#[derive(Clone, PartialEq, Debug)]
pub struct ColVector<R: Ring> {
    ring: R,
    entries: Vec<R::Elem>,
}

impl<R: Ring> RowVector<R> {
    pub fn new(ring: R, entries: Vec<R::Elem>) -> Self {
        RowVector { ring, entries }
    }

    pub fn zeros(ring: R, n: usize) -> Self {
        let entries = vec![ring.zero(); n];
        RowVector { ring, entries }
    }

    /// e_k as a row.
    pub fn basis(ring: R, n: usize, k: usize) -> Self {
        let mut v = Self::zeros(ring, n);
        let one = v.ring.one();
        v.entries[k] = one;
        v
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, k: usize) -> &R::Elem {
        &self.entries[k]
    }

    pub fn set(&mut self, k: usize, e: R::Elem) {
        self.entries[k] = e;
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    /// self * m, a row times a matrix.
    pub fn mul_mat(&self, m: &Matrix<R>) -> RowVector<R> {
        assert_eq!(self.dim(), m.rows(), "inner dimensions must agree");
        let mut out = RowVector::zeros(self.ring.clone(), m.cols());
        for j in 0..m.cols() {
            let mut acc = self.ring.zero();
            for k in 0..self.dim() {
                self.ring
                    .add_mul_assign(&mut acc, &self.entries[k], &m[(k, j)]);
            }
            out.entries[j] = acc;
        }
        out
    }

    /// Inner product with a column.
    pub fn dot(&self, v: &ColVector<R>) -> R::Elem {
        assert_eq!(self.dim(), v.dim());
        let mut acc = self.ring.zero();
        for (a, b) in self.entries.iter().zip(&v.entries) {
            self.ring.add_mul_assign(&mut acc, a, b);
        }
        acc
    }

    pub fn scale(&self, c: &R::Elem) -> RowVector<R> {
        RowVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &RowVector<R>) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            self.ring.add_assign(a, b);
        }
    }

    pub fn transpose(&self) -> ColVector<R> {
        ColVector {
            ring: self.ring.clone(),
            entries: self.entries.clone(),
        }
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> RowVector<S> {
        RowVector {
            ring,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<R: Ring> ColVector<R> {
    pub fn new(ring: R, entries: Vec<R::Elem>) -> Self {
        ColVector { ring, entries }
    }

    pub fn zeros(ring: R, n: usize) -> Self {
        let entries = vec![ring.zero(); n];
        ColVector { ring, entries }
    }

    /// e_k as a column.
    pub fn basis(ring: R, n: usize, k: usize) -> Self {
        let mut v = Self::zeros(ring, n);
        let one = v.ring.one();
        v.entries[k] = one;
        v
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, k: usize) -> &R::Elem {
        &self.entries[k]
    }

    pub fn set(&mut self, k: usize, e: R::Elem) {
        self.entries[k] = e;
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn scale(&self, c: &R::Elem) -> ColVector<R> {
        ColVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &ColVector<R>) {
        assert_eq!(self.dim(), other.dim());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            self.ring.add_assign(a, b);
        }
    }

    pub fn transpose(&self) -> RowVector<R> {
        RowVector {
            ring: self.ring.clone(),
            entries: self.entries.clone(),
        }
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> ColVector<S> {
        ColVector {
            ring,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Rank-one outer product: column times row.
pub fn outer<R: Ring>(c: &ColVector<R>, r: &RowVector<R>) -> Matrix<R> {
    let ring = c.ring().clone();
    let mut out = Matrix::zeros(ring.clone(), c.dim(), r.dim());
    for i in 0..c.dim() {
        for j in 0..r.dim() {
            out[(i, j)] = ring.mul(c.at(i), r.at(j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::PrimeField;

    fn gf7() -> PrimeField {
        PrimeField::new(7)
    }

    #[test]
    fn product_matches_hand_calculation() {
        let f = gf7();
        let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(f, &[&[5, 6], &[0, 1]]);
        let c = a.mul(&b);
        assert_eq!(c, Matrix::from_i64_rows(f, &[&[5, 1], &[1, 1]]));
    }

    #[test]
    fn identity_and_zero_products() {
        let f = gf7();
        let x = Matrix::from_i64_rows(f, &[&[1, 2, 3], &[4, 5, 6], &[0, 1, 0]]);
        assert_eq!(Matrix::identity(f, 3).mul(&x), x);
        let z = Matrix::zeros(f, 3, 3);
        assert_eq!(x.mul(&z), z);
    }

    #[test]
    #[should_panic(expected = "inner dimensions")]
    fn dimension_mismatch_panics() {
        let f = gf7();
        let a = Matrix::zeros(f, 2, 3);
        let b = Matrix::zeros(f, 2, 3);
        let _ = a.mul(&b);
    }

    #[test]
    fn row_times_matrix_and_outer_product() {
        let f = gf7();
        let m = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let u = RowVector::new(f, vec![1, 1]);
        assert_eq!(u.mul_mat(&m).entries(), &[4, 6]);
        let c = ColVector::new(f, vec![2, 3]);
        let got = outer(&c, &u);
        assert_eq!(got, Matrix::from_i64_rows(f, &[&[2, 2], &[3, 3]]));
        assert_eq!(u.dot(&c), 5);
    }

    #[test]
    fn companion_matrix_shape() {
        let f = gf7();
        // x^3 - 1
        let c = companion_matrix(&f, &[f.from_i64(-1), 0, 0]);
        assert_eq!(
            c,
            Matrix::from_i64_rows(f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
        );
    }
}
