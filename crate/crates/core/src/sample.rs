//! Seeded random fixtures. All randomness in the crate flows through a
//! caller-provided `Rng`, normally a `ChaCha12Rng` built via
//! [`seeded_rng`], so every randomized computation is reproducible from
//! its 64-bit seed.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::linalg::{ColVector, Matrix, RowVector};
use crate::rings::{IntegerRing, PrimeField, SeriesRing};

/// The fixed generator used for all seeded randomness: ChaCha12.
pub fn seeded_rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn gf(field: &PrimeField, rng: &mut impl Rng) -> u64 {
    rng.random_range(0..field.modulus())
}

pub fn gf_matrix(field: &PrimeField, n: usize, rng: &mut impl Rng) -> Matrix<PrimeField> {
    let data = (0..n * n).map(|_| gf(field, rng)).collect();
    Matrix::new(*field, n, n, data)
}

pub fn gf_row(field: &PrimeField, n: usize, rng: &mut impl Rng) -> RowVector<PrimeField> {
    RowVector::new(*field, (0..n).map(|_| gf(field, rng)).collect())
}

pub fn gf_col(field: &PrimeField, n: usize, rng: &mut impl Rng) -> ColVector<PrimeField> {
    ColVector::new(*field, (0..n).map(|_| gf(field, rng)).collect())
}

/// Integer matrix with entries drawn uniformly from `lo..=hi`.
pub fn int_matrix(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Matrix<IntegerRing> {
    let data = (0..n * n)
        .map(|_| BigInt::from(rng.random_range(lo..=hi)))
        .collect();
    Matrix::new(IntegerRing, n, n, data)
}

/// Series matrix whose entries have random coefficients up to the full
/// truncation order.
pub fn gf_series_matrix(
    ring: &SeriesRing<PrimeField>,
    n: usize,
    rng: &mut impl Rng,
) -> Matrix<SeriesRing<PrimeField>> {
    gf_series_matrix_deg(ring, n, ring.trunc(), rng)
}

/// Series matrix whose entries are polynomials of degree at most `deg`.
pub fn gf_series_matrix_deg(
    ring: &SeriesRing<PrimeField>,
    n: usize,
    deg: usize,
    rng: &mut impl Rng,
) -> Matrix<SeriesRing<PrimeField>> {
    assert!(deg <= ring.trunc());
    let field = *ring.base();
    let data = (0..n * n)
        .map(|_| ring.from_coeffs((0..=deg).map(|_| gf(&field, rng)).collect()))
        .collect();
    Matrix::new(ring.clone(), n, n, data)
}
