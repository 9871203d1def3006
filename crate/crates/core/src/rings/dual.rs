use crate::error::Result;

use super::Ring;

/// A dual number a + b*eps with eps^2 = 0.
///
/// The eps part of f(a + eps) is the derivative f'(a), which makes dual
/// arithmetic a forward-mode derivative oracle for any composite built
/// from ring operations.
#[derive(Clone, PartialEq, Debug)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

/// Dual numbers over a base ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DualRing<R: Ring> {
    base: R,
}

impl<R: Ring> DualRing<R> {
    pub fn new(base: R) -> Self {
        DualRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Embeds a base element as a constant (zero eps part).
    pub fn lift(&self, re: R::Elem) -> Dual<R::Elem> {
        Dual {
            re,
            eps: self.base.zero(),
        }
    }

    /// x + eps, the seed for differentiating with respect to x.
    pub fn perturbed(&self, re: R::Elem) -> Dual<R::Elem> {
        Dual {
            re,
            eps: self.base.one(),
        }
    }
}

impl<R: Ring> Ring for DualRing<R> {
    type Elem = Dual<R::Elem>;

    fn zero(&self) -> Self::Elem {
        self.lift(self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        self.lift(self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.lift(self.base.from_i64(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.re) && self.base.is_zero(&a.eps)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Dual {
            re: self.base.add(&a.re, &b.re),
            eps: self.base.add(&a.eps, &b.eps),
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Dual {
            re: self.base.neg(&a.re),
            eps: self.base.neg(&a.eps),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut eps = self.base.mul(&a.re, &b.eps);
        self.base.add_mul_assign(&mut eps, &a.eps, &b.re);
        Dual {
            re: self.base.mul(&a.re, &b.re),
            eps,
        }
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.base.is_unit(&a.re)
    }

    /// (a + b eps)^-1 = a^-1 - a^-2 b eps; defined exactly when the real
    /// part is a unit.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let re_inv = self.base.inv(&a.re)?;
        let sq = self.base.mul(&re_inv, &re_inv);
        let eps = self.base.neg(&self.base.mul(&sq, &a.eps));
        Ok(Dual { re: re_inv, eps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::PrimeField;

    #[test]
    fn product_rule() {
        let d = DualRing::new(PrimeField::new(7));
        let a = Dual { re: 2, eps: 3 };
        let b = Dual { re: 4, eps: 5 };
        let p = d.mul(&a, &b);
        assert_eq!(p.re, 1); // 8 mod 7
        assert_eq!(p.eps, (2 * 5 + 3 * 4) % 7);
    }

    #[test]
    fn inverse_requires_unit_real_part() {
        let d = DualRing::new(PrimeField::new(7));
        let a = Dual { re: 3, eps: 2 };
        let inv = d.inv(&a).unwrap();
        assert_eq!(d.mul(&a, &inv), d.one());
        assert!(d.inv(&Dual { re: 0, eps: 1 }).is_err());
    }

    #[test]
    fn derivative_of_polynomial_matches_symbolic() {
        // g(x) = 3x^4 + 2x^2 + 5 over GF(101); g'(x) = 12x^3 + 4x
        let f = PrimeField::new(101);
        let d = DualRing::new(f);
        for x in [0u64, 1, 2, 17, 63, 100] {
            let v = d.perturbed(x);
            let x2 = d.mul(&v, &v);
            let x4 = d.mul(&x2, &x2);
            let mut g = d.mul(&d.from_i64(3), &x4);
            g = d.add(&g, &d.mul(&d.from_i64(2), &x2));
            g = d.add(&g, &d.from_i64(5));
            let expected = f.add(
                &f.mul(&f.from_i64(12), &f.pow(x, 3)),
                &f.mul(&f.from_i64(4), &x),
            );
            assert_eq!(g.eps, expected);
        }
    }

    #[test]
    fn derivative_through_inversion() {
        // g(x) = 1/(x^2 + 1); g'(x) = -2x/(x^2+1)^2 over GF(101)
        let f = PrimeField::new(101);
        let d = DualRing::new(f);
        // avoid the square roots of -1 mod 101 (x = 10 and 91)
        for x in [0u64, 3, 7, 55] {
            let v = d.perturbed(x);
            let den = d.add(&d.mul(&v, &v), &d.one());
            let g = d.inv(&den).unwrap();
            let den_re = f.add(&f.mul(&x, &x), &1);
            let expected = f.mul(
                &f.neg(&f.mul(&2, &x)),
                &f.inv(&f.mul(&den_re, &den_re)).unwrap(),
            );
            assert_eq!(g.eps, expected);
        }
    }
}
