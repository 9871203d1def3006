//! Hankel matrices of a projected Krylov sequence, anti-diagonal sums,
//! and the minimal polynomial of a linearly recurrent sequence.

use crate::error::{Error, Result};
use crate::linalg::{lin_solve, ColVector, Matrix};
use crate::rings::Ring;

/// The 2n projections h_0 .. h_{2n-1} of a Krylov sequence.
#[derive(Clone, PartialEq, Debug)]
pub struct ScalarSequence<R: Ring> {
    ring: R,
    terms: Vec<R::Elem>,
}

impl<R: Ring> ScalarSequence<R> {
    /// # Panics
    ///
    /// Panics unless the term count is even and positive.
    pub fn new(ring: R, terms: Vec<R::Elem>) -> Self {
        assert!(!terms.is_empty() && terms.len() % 2 == 0, "need 2n terms");
        ScalarSequence { ring, terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.terms.len() / 2
    }

    pub fn terms(&self) -> &[R::Elem] {
        &self.terms
    }

    pub fn at(&self, k: usize) -> &R::Elem {
        &self.terms[k]
    }
}

/// n x n Hankel matrix with entry (i, j) = h_{i+j-2+shift} in 1-based
/// indices; shift 0 reads h_0..h_{2n-2}, shift 1 reads h_1..h_{2n-1}.
pub fn build_hankel<R: Ring>(h: &ScalarSequence<R>, shift: usize) -> Matrix<R> {
    assert!(shift <= 1, "shift must be 0 or 1");
    let n = h.dim();
    let mut m = Matrix::zeros(h.ring().clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = h.at(i + j + shift).clone();
        }
    }
    m
}

/// The unshifted and shifted Hankel matrices of one sequence. Both are
/// symmetric by construction.
#[derive(Clone, PartialEq, Debug)]
pub struct HankelPair<R: Ring> {
    pub h: Matrix<R>,
    pub h_shifted: Matrix<R>,
}

impl<R: Ring> HankelPair<R> {
    pub fn from_sequence(seq: &ScalarSequence<R>) -> Self {
        HankelPair {
            h: build_hankel(seq, 0),
            h_shifted: build_hankel(seq, 1),
        }
    }
}

/// Anti-diagonal sums phi_k = sum of entries with i+j-2 = k (1-based),
/// for k = 0 .. 2n-2. Callers treat out-of-range indices as zero.
pub fn phi_sums<R: Ring>(m: &Matrix<R>) -> Vec<R::Elem> {
    assert!(m.is_square());
    let ring = m.ring().clone();
    let n = m.rows();
    let mut sums = vec![ring.zero(); 2 * n - 1];
    for i in 0..n {
        for j in 0..n {
            let k = i + j;
            sums[k] = ring.add(&sums[k], &m[(i, j)]);
        }
    }
    sums
}

/// Monic polynomial of degree n stored as ascending coefficients
/// `c_0 .. c_{n-1}, 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct MinimalPolynomial<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> MinimalPolynomial<R> {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &R::Elem {
        &self.coeffs[0]
    }
}

/// Minimal polynomial f of a sequence assumed to satisfy a unique
/// degree-n linear recurrence: solves H c = -(h_n .. h_{2n-1}) and
/// returns the monic f with those coefficients, so that
/// h_{k+n} = -sum_i c_i h_{k+i}.
///
/// A singular system reports `SingularHankel`: either the recurrence has
/// degree < n (a degenerate sequence, never silently deflated) or, over
/// a series ring, the leading structure is singular at z = 0.
pub fn minpoly_from_sequence<R: Ring>(h: &ScalarSequence<R>) -> Result<MinimalPolynomial<R>> {
    let ring = h.ring().clone();
    let n = h.dim();
    let hankel = build_hankel(h, 0);
    let rhs = ColVector::new(
        ring.clone(),
        (n..2 * n).map(|k| ring.neg(h.at(k))).collect(),
    );
    let c = lin_solve(&hankel, &rhs).map_err(|e| match e {
        Error::SingularMatrix | Error::NoUnitPivot => Error::SingularHankel,
        other => other,
    })?;
    let mut coeffs: Vec<R::Elem> = c.entries().to_vec();
    coeffs.push(ring.one());
    Ok(MinimalPolynomial { ring, coeffs })
}
