//! Truncated inverses of univariate polynomial matrices over GF(p).
//!
//! The pipeline route runs the division-free adjugate over the series
//! coefficient ring (so the embedding variable of that pass nests on
//! top of the polynomial variable) and divides by the determinant
//! series; the oracle route lifts the inverse of the constant matrix by
//! Newton iteration. Both return the unique inverse modulo z^{N+1}, so
//! they must agree exactly.

use crate::division_free::adjoint_division_free;
use crate::error::{Error, Result};
use crate::linalg::{gauss_jordan_inverse, Matrix};
use crate::rings::{PrimeField, Ring, SeriesRing};

/// Matrix of truncated series over GF(p); the truncation order is the
/// ring's, chosen by the caller.
pub type PolySeriesMatrix = Matrix<SeriesRing<PrimeField>>;

/// Inverse of `a` modulo z^{N+1} via the adjugate route: division-free
/// reverse pass for the adjugate and determinant series, then a single
/// reciprocal of the determinant.
///
/// `SingularLeadingMatrix` when the constant matrix a(0) is singular,
/// which is exactly when the determinant series has no reciprocal.
///
/// The run's series products are aggregated on
/// [`crate::counters::series_mul_stats`]; the reverse pass multiplies
/// low-degree step-1/2 data against high-degree gradients, and the
/// operand-degree statistics surface that asymmetry.
pub fn invert_series_matrix(a: &PolySeriesMatrix) -> Result<PolySeriesMatrix> {
    assert!(a.is_square());
    let series = a.ring().clone();
    let result = adjoint_division_free(a);
    if !series.is_unit(&result.det) {
        return Err(Error::SingularLeadingMatrix);
    }
    let det_inv = series
        .reciprocal(&result.det)
        .expect("constant term checked to be a unit");
    Ok(result.adjugate.scale(&det_inv))
}

/// Independent inverse oracle: X <- X(2I - A X) starting from the
/// elimination inverse of a(0), doubling the correct order until it
/// covers the truncation.
pub fn newton_inverse_oracle(a: &PolySeriesMatrix) -> Result<PolySeriesMatrix> {
    assert!(a.is_square());
    let n = a.rows();
    let series = a.ring().clone();
    let field = *series.base();
    let at_zero = a.map(field, |s| *series.coeff(s, 0));
    let x0 = gauss_jordan_inverse(&at_zero).map_err(|_| Error::SingularLeadingMatrix)?;
    let mut x = x0.map(series.clone(), |c| series.constant(*c));
    let two_i = Matrix::identity(series.clone(), n).scale(&series.from_i64(2));
    let mut correct = 1usize;
    while correct < series.trunc() + 1 {
        let ax = a.mul(&x);
        x = x.mul(&two_i.sub(&ax));
        correct *= 2;
    }
    Ok(x)
}
