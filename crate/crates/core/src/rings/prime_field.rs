use crate::counters;
use crate::error::{Error, Result};

use super::Ring;

/// The prime field GF(p) for an odd prime modulus fitting a machine word.
///
/// Elements are `u64` values kept fully reduced into `[0, p)`. Products
/// go through a `u128` intermediate before reduction. No primality test
/// is performed; a composite modulus makes `inv` return wrong answers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// # Panics
    ///
    /// Panics if `p` is even, below 3, or too large for overflow-free
    /// double-width products.
    pub fn new(p: u64) -> Self {
        assert!(p >= 3 && p % 2 == 1, "modulus must be an odd prime >= 3");
        assert!(p < 1 << 62, "modulus must fit a machine word with headroom");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        debug_assert!(a < self.p);
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.p && *b < self.p);
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        debug_assert!(*a < self.p);
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        debug_assert!(*a < self.p && *b < self.p);
        counters::tick_mul();
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(self.pow(*a, self.p - 2))
    }

    fn is_field(&self) -> bool {
        true
    }
}
