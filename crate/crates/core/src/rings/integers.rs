use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counters;
use crate::error::{Error, Result};

use super::Ring;

/// The ring of arbitrary-precision signed integers. Arithmetic is exact;
/// the only units are 1 and -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        counters::tick_mul();
        a * b
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn inv(&self, a: &BigInt) -> Result<BigInt> {
        if self.is_unit(a) {
            Ok(a.clone())
        } else {
            Err(Error::NotInvertible)
        }
    }
}
