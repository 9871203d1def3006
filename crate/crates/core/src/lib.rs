//! Exact linear algebra kernels: determinants and adjugates over prime
//! fields, the integers, and truncated power series rings, plus
//! truncated inverses of polynomial matrices.
//!
//! The determinant is computed by a baby-steps/giant-steps Krylov
//! projection ([`krylov`]); transposing the derivative of that
//! computation with respect to the input entries gives the adjugate
//! ([`mod@adjoint`]). Running both passes on a series embedding of the input
//! eliminates every division ([`division_free`]) and, over series
//! coefficient rings, inverts polynomial matrices ([`polymatrix`]).
//! Everything is checked against independent brute-force oracles
//! ([`linalg`], [`gradcheck`]) with exact equality, never a tolerance.

pub mod adjoint;
pub mod counters;
pub mod division_free;
mod error;
pub mod gradcheck;
pub mod hankel;
pub mod krylov;
pub mod linalg;
pub mod polymatrix;
pub mod rings;
pub mod sample;
pub mod selftest;

pub use adjoint::{adjoint, AdjointResult, PipelineCounters};
pub use division_free::{
    adjoint_division_free, adjoint_division_free_scheduled, det_division_free, EvalSchedule,
};
pub use error::{Error, Result};
pub use krylov::{determinant, DetTrace};
pub use linalg::{adjugate_oracle, det_cofactor, det_gauss, ColVector, Matrix, RowVector};
pub use polymatrix::{invert_series_matrix, newton_inverse_oracle, PolySeriesMatrix};
pub use rings::{DualRing, IntegerRing, PrimeField, Ring, SeriesRing};
