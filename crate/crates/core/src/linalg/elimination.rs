//! Gaussian elimination with unit-pivot search.
//!
//! Pivots are chosen by `is_unit`, never merely by being nonzero: over a
//! field the two coincide, while over a series ring this selects pivots
//! with unit constant term and so keeps every division legal. A nonzero
//! column without a unit pivot only exists over non-field rings and
//! reports `NoUnitPivot`.

use crate::error::{Error, Result};
use crate::rings::{Ring, SeriesRing};

use super::{ColVector, Matrix};

/// Finds a pivot row at or below `k` whose entry in column `k` is a
/// unit. `Ok(None)` means the whole column is zero.
fn find_unit_pivot<R: Ring>(m: &Matrix<R>, k: usize) -> Result<Option<usize>> {
    let ring = m.ring().clone();
    let mut saw_nonzero = false;
    for i in k..m.rows() {
        if ring.is_unit(&m[(i, k)]) {
            return Ok(Some(i));
        }
        saw_nonzero |= !ring.is_zero(&m[(i, k)]);
    }
    if saw_nonzero {
        Err(Error::NoUnitPivot)
    } else {
        Ok(None)
    }
}

fn swap_rows<R: Ring>(m: &mut Matrix<R>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m[(a, j)].clone();
        let y = m[(b, j)].clone();
        m[(a, j)] = y;
        m[(b, j)] = x;
    }
}

/// Exact determinant by elimination, tracking the sign of row swaps.
///
/// Returns zero when elimination exposes an all-zero column (the matrix
/// is singular); fails with `NoUnitPivot` only over non-field rings.
pub fn det_gauss<R: Ring>(m: &Matrix<R>) -> Result<R::Elem> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let ring = m.ring().clone();
    let n = m.rows();
    let mut work = m.clone();
    let mut negate = false;
    let mut det = ring.one();
    for k in 0..n {
        let pivot_row = match find_unit_pivot(&work, k)? {
            Some(row) => row,
            None => return Ok(ring.zero()),
        };
        if pivot_row != k {
            swap_rows(&mut work, pivot_row, k);
            negate = !negate;
        }
        let pivot = work[(k, k)].clone();
        det = ring.mul(&det, &pivot);
        let pivot_inv = ring.inv(&pivot).expect("pivot was chosen to be a unit");
        for i in k + 1..n {
            if ring.is_zero(&work[(i, k)]) {
                continue;
            }
            let factor = ring.mul(&work[(i, k)], &pivot_inv);
            for j in k..n {
                let t = ring.mul(&factor, &work[(k, j)]);
                let updated = ring.sub(&work[(i, j)], &t);
                work[(i, j)] = updated;
            }
        }
    }
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Solves the square system a*x = b by elimination and back
/// substitution. `SingularMatrix` when a zero column appears.
pub fn lin_solve<R: Ring>(a: &Matrix<R>, b: &ColVector<R>) -> Result<ColVector<R>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.dim());
    let ring = a.ring().clone();
    let n = a.rows();
    let mut work = a.clone();
    let mut rhs = b.clone();
    for k in 0..n {
        let pivot_row = match find_unit_pivot(&work, k)? {
            Some(row) => row,
            None => return Err(Error::SingularMatrix),
        };
        if pivot_row != k {
            swap_rows(&mut work, pivot_row, k);
            let x = rhs.at(pivot_row).clone();
            let y = rhs.at(k).clone();
            rhs.set(pivot_row, y);
            rhs.set(k, x);
        }
        let pivot_inv = ring.inv(&work[(k, k)]).expect("unit pivot");
        for i in k + 1..n {
            if ring.is_zero(&work[(i, k)]) {
                continue;
            }
            let factor = ring.mul(&work[(i, k)], &pivot_inv);
            for j in k..n {
                let t = ring.mul(&factor, &work[(k, j)]);
                let updated = ring.sub(&work[(i, j)], &t);
                work[(i, j)] = updated;
            }
            let t = ring.mul(&factor, rhs.at(k));
            rhs.set(i, ring.sub(rhs.at(i), &t));
        }
    }
    let mut x = ColVector::zeros(ring.clone(), n);
    for k in (0..n).rev() {
        let mut acc = rhs.at(k).clone();
        for j in k + 1..n {
            let t = ring.mul(&work[(k, j)], x.at(j));
            acc = ring.sub(&acc, &t);
        }
        let pivot_inv = ring.inv(&work[(k, k)]).expect("unit pivot");
        x.set(k, ring.mul(&acc, &pivot_inv));
    }
    Ok(x)
}

/// Gauss-Jordan inverse on the augmented system, unit pivots only.
pub fn gauss_jordan_inverse<R: Ring>(m: &Matrix<R>) -> Result<Matrix<R>> {
    assert!(m.is_square());
    let ring = m.ring().clone();
    let n = m.rows();
    let mut work = m.clone();
    let mut inv = Matrix::identity(ring.clone(), n);
    for k in 0..n {
        let pivot_row = match find_unit_pivot(&work, k)? {
            Some(row) => row,
            None => return Err(Error::SingularMatrix),
        };
        swap_rows(&mut work, pivot_row, k);
        swap_rows(&mut inv, pivot_row, k);
        let pivot_inv = ring.inv(&work[(k, k)]).expect("unit pivot");
        for j in 0..n {
            work[(k, j)] = ring.mul(&work[(k, j)], &pivot_inv);
            inv[(k, j)] = ring.mul(&inv[(k, j)], &pivot_inv);
        }
        for i in 0..n {
            if i == k || ring.is_zero(&work[(i, k)]) {
                continue;
            }
            let factor = work[(i, k)].clone();
            for j in 0..n {
                let t = ring.mul(&factor, &work[(k, j)]);
                let updated = ring.sub(&work[(i, j)], &t);
                work[(i, j)] = updated;
                let t = ring.mul(&factor, &inv[(k, j)]);
                let updated = ring.sub(&inv[(i, j)], &t);
                inv[(i, j)] = updated;
            }
        }
    }
    Ok(inv)
}

/// Ring-specific exact matrix inversion with `a * a^-1 = I`.
///
/// Base rings eliminate directly; series rings lift the inverse of the
/// constant-coefficient matrix by Newton iteration, which stays
/// division-free beyond that single base inversion.
pub trait MatrixInverse: Ring + Sized {
    fn invert_matrix(&self, m: &Matrix<Self>) -> Result<Matrix<Self>>;
}

impl MatrixInverse for crate::rings::PrimeField {
    fn invert_matrix(&self, m: &Matrix<Self>) -> Result<Matrix<Self>> {
        gauss_jordan_inverse(m)
    }
}

impl MatrixInverse for crate::rings::IntegerRing {
    fn invert_matrix(&self, m: &Matrix<Self>) -> Result<Matrix<Self>> {
        gauss_jordan_inverse(m)
    }
}

impl<R: MatrixInverse> MatrixInverse for SeriesRing<R> {
    /// X <- X(2I - M X), doubling the correct order each pass starting
    /// from the inverse of M at z = 0.
    fn invert_matrix(&self, m: &Matrix<Self>) -> Result<Matrix<Self>> {
        assert!(m.is_square());
        let n = m.rows();
        let base = self.base().clone();
        let at_zero = m.map(base.clone(), |s| self.coeff(s, 0).clone());
        let x0 = base.invert_matrix(&at_zero)?;
        let mut x = x0.map(self.clone(), |c| self.constant(c.clone()));
        let two_i = Matrix::identity(self.clone(), n).scale(&self.from_i64(2));
        let mut correct = 1usize;
        while correct < self.trunc() + 1 {
            let mx = m.mul(&x);
            x = x.mul(&two_i.sub(&mx));
            correct *= 2;
        }
        Ok(x)
    }
}
