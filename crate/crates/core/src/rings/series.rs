use crate::counters;
use crate::error::{Error, Result};

use super::Ring;

/// A truncated power series c_0 + c_1 z + ... + c_N z^N.
///
/// The truncation order N lives on the [`SeriesRing`], not the element;
/// every element of one ring carries exactly N+1 coefficients.
///
/// `poisoned_below` marks coefficients collapsed by a scheduled partial
/// evaluation: degrees below the mark no longer hold their true values
/// (their sum was folded into the marked slot). The mark is 0 for
/// ordinary elements.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T> {
    coeffs: Vec<T>,
    poisoned_below: usize,
}

impl<T> Series<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn poisoned_below(&self) -> usize {
        self.poisoned_below
    }
}

/// Truncated power series over an arbitrary base ring, with arithmetic
/// modulo z^{N+1}.
///
/// Division is available only for series with unit constant term, via a
/// Newton reciprocal that needs a single base-ring inversion of c_0;
/// everything else is additions and multiplications. Attempting to
/// invert a non-unit constant term fails with `NonUnitConstantTerm` and
/// increments the division-violation counter.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesRing<R: Ring> {
    base: R,
    trunc: usize,
}

impl<R: Ring> SeriesRing<R> {
    /// Series ring with truncation order `trunc` (elements keep
    /// `trunc + 1` coefficients).
    pub fn new(base: R, trunc: usize) -> Self {
        SeriesRing { base, trunc }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Builds a series from ascending coefficients, padding with zeros.
    ///
    /// # Panics
    ///
    /// Panics if more than `trunc + 1` coefficients are given.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Series<R::Elem> {
        assert!(
            coeffs.len() <= self.trunc + 1,
            "{} coefficients exceed truncation order {}",
            coeffs.len(),
            self.trunc
        );
        coeffs.resize(self.trunc + 1, self.base.zero());
        Series {
            coeffs,
            poisoned_below: 0,
        }
    }

    pub fn constant(&self, c: R::Elem) -> Series<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// Reads one coefficient. Reading below a collapse mark trips the
    /// watermark counter.
    pub fn coeff<'a>(&self, a: &'a Series<R::Elem>, k: usize) -> &'a R::Elem {
        if k < a.poisoned_below {
            counters::tick_watermark_violation();
        }
        &a.coeffs[k]
    }

    /// Index of the highest nonzero coefficient (0 for the zero series).
    pub fn degree(&self, a: &Series<R::Elem>) -> usize {
        a.coeffs
            .iter()
            .rposition(|c| !self.base.is_zero(c))
            .unwrap_or(0)
    }

    /// Reciprocal r with a*r = 1 (mod z^{N+1}), by Newton iteration
    /// doubling the correct order each step. The only base-ring division
    /// is the inversion of the constant term.
    pub fn reciprocal(&self, a: &Series<R::Elem>) -> Result<Series<R::Elem>> {
        if a.poisoned_below > 0 {
            counters::tick_watermark_violation();
        }
        let c0_inv = self.base.inv(&a.coeffs[0]).map_err(|_| {
            counters::tick_division_violation();
            Error::NonUnitConstantTerm
        })?;
        let two = self.constant(self.base.from_i64(2));
        let mut x = self.constant(c0_inv);
        let mut correct = 1usize;
        while correct < self.trunc + 1 {
            // x <- x * (2 - a*x); error term squares each pass
            let ax = self.mul(a, &x);
            let corr = self.sub(&two, &ax);
            x = self.mul(&x, &corr);
            correct *= 2;
        }
        Ok(x)
    }

    /// c_0 + c_1 + ... + c_N, the evaluation of the series at z = 1.
    /// Safe on collapsed series: partial evaluation preserves the sum.
    pub fn eval_at_one(&self, a: &Series<R::Elem>) -> R::Elem {
        let mut acc = a.coeffs[0].clone();
        for c in &a.coeffs[1..] {
            self.base.add_assign(&mut acc, c);
        }
        acc
    }

    /// Folds coefficients 0..=m into a single coefficient at degree m,
    /// zeroing the degrees below; degrees above m are untouched. The
    /// evaluation at z = 1 is preserved exactly.
    pub fn partial_evaluate(&self, a: &Series<R::Elem>, m: usize) -> Result<Series<R::Elem>> {
        if m > self.trunc {
            return Err(Error::IndexOutOfRange {
                index: m,
                trunc: self.trunc,
            });
        }
        if m < a.poisoned_below {
            // the prefix sum would read slots already collapsed higher up
            counters::tick_watermark_violation();
        }
        let mut coeffs = a.coeffs.clone();
        let mut sum = coeffs[0].clone();
        for c in &coeffs[1..=m] {
            self.base.add_assign(&mut sum, c);
        }
        for c in coeffs[..m].iter_mut() {
            *c = self.base.zero();
        }
        coeffs[m] = sum;
        Ok(Series {
            coeffs,
            poisoned_below: a.poisoned_below,
        })
    }

    /// [`partial_evaluate`](Self::partial_evaluate) plus a poison mark on
    /// the collapsed slots, so that any later coefficient-level read of
    /// them trips the watermark counter.
    pub fn collapse_below(&self, a: &Series<R::Elem>, m: usize) -> Result<Series<R::Elem>> {
        let mut r = self.partial_evaluate(a, m)?;
        r.poisoned_below = r.poisoned_below.max(m);
        Ok(r)
    }
}

impl<R: Ring> Ring for SeriesRing<R> {
    type Elem = Series<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.from_coeffs(vec![])
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        if a.poisoned_below > 0 {
            counters::tick_watermark_violation();
        }
        a.coeffs.iter().all(|c| self.base.is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        debug_assert_eq!(a.coeffs.len(), b.coeffs.len());
        Series {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.base.add(x, y))
                .collect(),
            poisoned_below: a.poisoned_below.max(b.poisoned_below),
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Series {
            coeffs: a.coeffs.iter().map(|x| self.base.neg(x)).collect(),
            poisoned_below: a.poisoned_below,
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        debug_assert_eq!(a.coeffs.len(), b.coeffs.len());
        // A product reads individual coefficients of both operands, which
        // is exactly what a collapse mark forbids.
        if a.poisoned_below > 0 || b.poisoned_below > 0 {
            counters::tick_watermark_violation();
        }
        let deg_a = self.degree(a);
        let deg_b = self.degree(b);
        counters::record_series_mul(deg_a, deg_b);
        let mut coeffs = vec![self.base.zero(); self.trunc + 1];
        for i in 0..=deg_a.min(self.trunc) {
            if self.base.is_zero(&a.coeffs[i]) {
                continue;
            }
            for j in 0..=deg_b.min(self.trunc - i) {
                let term = self.base.mul(&a.coeffs[i], &b.coeffs[j]);
                self.base.add_assign(&mut coeffs[i + j], &term);
            }
        }
        Series {
            coeffs,
            poisoned_below: a.poisoned_below.max(b.poisoned_below),
        }
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        if a.poisoned_below > 0 {
            counters::tick_watermark_violation();
        }
        self.base.is_unit(&a.coeffs[0])
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.reciprocal(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::PrimeField;

    fn gf7_series(trunc: usize) -> SeriesRing<PrimeField> {
        SeriesRing::new(PrimeField::new(7), trunc)
    }

    #[test]
    fn reciprocal_of_one_is_one() {
        let s = gf7_series(3);
        let one = s.one();
        assert_eq!(s.reciprocal(&one).unwrap(), one);
    }

    #[test]
    fn reciprocal_of_one_minus_z_is_geometric() {
        let s = gf7_series(3);
        let a = s.from_coeffs(vec![1, 6, 0, 0]); // 1 - z
        let r = s.reciprocal(&a).unwrap();
        assert_eq!(r.coeffs(), &[1, 1, 1, 1]);
    }

    #[test]
    fn reciprocal_verified_by_multiplying_back() {
        let s = gf7_series(2);
        let a = s.from_coeffs(vec![2, 1, 0]); // 2 + z
        let r = s.reciprocal(&a).unwrap();
        assert_eq!(s.mul(&a, &r), s.one());
        assert_eq!(r.coeffs(), &[4, 5, 1]);
    }

    #[test]
    fn reciprocal_of_non_unit_constant_term_is_a_division_violation() {
        let s = SeriesRing::new(crate::rings::IntegerRing, 2);
        let a = s.from_coeffs(vec![s.base().from_i64(2), s.base().from_i64(1)]);
        let before = counters::snapshot();
        assert_eq!(s.reciprocal(&a), Err(Error::NonUnitConstantTerm));
        assert_eq!(before.delta().division_violations, 1);
    }

    #[test]
    fn eval_at_one_sums_coefficients() {
        let s = gf7_series(2);
        assert_eq!(s.eval_at_one(&s.from_coeffs(vec![1, 1, 1])), 3);
        assert_eq!(s.eval_at_one(&s.zero()), 0);
        assert_eq!(s.eval_at_one(&s.from_coeffs(vec![4, 5, 4])), 6);
    }

    #[test]
    fn partial_evaluate_collapses_prefix() {
        let s = SeriesRing::new(PrimeField::new(101), 3);
        let a = s.from_coeffs(vec![1, 2, 3, 4]);
        let r = s.partial_evaluate(&a, 1).unwrap();
        assert_eq!(r.coeffs(), &[0, 3, 3, 4]);
        assert_eq!(s.eval_at_one(&r), s.eval_at_one(&a));
        // m = 0 is the identity
        assert_eq!(s.partial_evaluate(&a, 0).unwrap(), a);
        assert_eq!(
            s.partial_evaluate(&a, 7),
            Err(Error::IndexOutOfRange { index: 7, trunc: 3 })
        );
        // collapsing everything leaves a single slot holding the sum
        let b = s.from_coeffs(vec![1, 1, 1]);
        let r = s.partial_evaluate(&b, 2).unwrap();
        assert_eq!(r.coeffs(), &[0, 0, 3, 0]);
        assert_eq!(s.eval_at_one(&r), 3);
    }

    #[test]
    fn collapse_marks_poison_and_products_trip_it() {
        let s = gf7_series(3);
        let a = s.from_coeffs(vec![1, 2, 3, 4]);
        let c = s.collapse_below(&a, 2).unwrap();
        assert_eq!(c.poisoned_below(), 2);
        // evaluation at 1 stays safe
        let before = counters::snapshot();
        assert_eq!(s.eval_at_one(&c), s.eval_at_one(&a));
        assert_eq!(before.delta().watermark_violations, 0);
        // a product is a coefficient-level read
        let before = counters::snapshot();
        let _ = s.mul(&c, &s.one());
        assert_eq!(before.delta().watermark_violations, 1);
    }

    #[test]
    fn nested_series_rings_compose() {
        let inner = gf7_series(2);
        let outer = SeriesRing::new(inner.clone(), 1);
        // (1 + w*z) * (1 - w*z) = 1 mod w^2 over GF(7)[[z]]/z^3
        let z = inner.from_coeffs(vec![0, 1, 0]);
        let a = outer.from_coeffs(vec![inner.one(), z.clone()]);
        let b = outer.from_coeffs(vec![inner.one(), inner.neg(&z)]);
        assert_eq!(outer.mul(&a, &b), outer.one());
    }
}
