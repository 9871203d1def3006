//! Exact coefficient arithmetic.
//!
//! A [`Ring`] value is a small context object (a modulus, a truncation
//! order, ...) whose methods operate on its element type. All element
//! values are immutable and all operations are pure, so rings and their
//! elements can be shared freely across threads. Dispatch is static:
//! every pipeline is monomorphic over one concrete ring per run.

use std::fmt;

use crate::error::Result;

mod dual;
mod integers;
mod prime_field;
mod series;

pub use dual::{Dual, DualRing};
pub use integers::IntegerRing;
pub use prime_field::PrimeField;
pub use series::{Series, SeriesRing};

/// A commutative ring with exact arithmetic.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// a += b * c, the workhorse of inner products.
    fn add_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        let p = self.mul(b, c);
        self.add_assign(a, &p);
    }

    /// Whether `a` has a multiplicative inverse. In a field this is
    /// simply `a != 0`; for truncated series it asks for a unit
    /// constant term.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Multiplicative inverse; `Err(NotInvertible)` (or
    /// `NonUnitConstantTerm` for series) when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// True for rings in which every nonzero element is a unit.
    fn is_field(&self) -> bool {
        false
    }
}
