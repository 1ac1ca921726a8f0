use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A commutative unital ring, used as a context object: elements are plain
/// values and every operation goes through the ring.
///
/// Keeping the ring separate from its elements lets one element type serve
/// several rings (a monoid ring knows its monoid, a square-zero extension
/// knows its module) without storing that context in every value.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Human-readable rendering of an element.
    fn format(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `n · a`.
    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        let base = if n.is_negative() { self.neg(a) } else { a.clone() };
        let mut k = n.abs();
        let mut acc = self.zero();
        let mut pow = base;
        while !k.is_zero() {
            if k.is_odd() {
                acc = self.add(&acc, &pow);
            }
            k >>= 1;
            if !k.is_zero() {
                pow = self.add(&pow, &pow);
            }
        }
        acc
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.scale(&self.one(), n)
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of `a` if `a` is a unit that the ring can recognise.
    fn unit_inverse(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// The unique `b` with `n · b = a`, when it exists and the ring can
    /// decide it (torsion-free rings).
    fn div_int(&self, _a: &Self::Elem, _n: &BigInt) -> Option<Self::Elem> {
        None
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// The integers. Carries the binomial λ-structure (see [`crate::lambda`]).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn scale(&self, a: &BigInt, n: &BigInt) -> BigInt {
        a * n
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn pow(&self, a: &BigInt, k: u64) -> BigInt {
        num_traits::pow(a.clone(), k as usize)
    }
    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn div_int(&self, a: &BigInt, n: &BigInt) -> Option<BigInt> {
        if n.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(n);
        r.is_zero().then_some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_scale_matches_multiplication() {
        // Exercise the trait default through a wrapper that does not override it.
        struct Plain;
        impl Ring for Plain {
            type Elem = i64;
            fn zero(&self) -> i64 {
                0
            }
            fn one(&self) -> i64 {
                1
            }
            fn add(&self, a: &i64, b: &i64) -> i64 {
                a + b
            }
            fn neg(&self, a: &i64) -> i64 {
                -a
            }
            fn mul(&self, a: &i64, b: &i64) -> i64 {
                a * b
            }
            fn is_zero(&self, a: &i64) -> bool {
                *a == 0
            }
            fn format(&self, a: &i64) -> String {
                a.to_string()
            }
        }
        for n in -20i64..20 {
            assert_eq!(Plain.scale(&7, &BigInt::from(n)), 7 * n);
        }
        assert_eq!(Plain.pow(&3, 5), 243);
    }

    #[test]
    fn integer_units_and_division() {
        let z = Integers;
        assert_eq!(z.unit_inverse(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(z.unit_inverse(&BigInt::from(2)), None);
        assert_eq!(z.div_int(&BigInt::from(12), &BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(z.div_int(&BigInt::from(13), &BigInt::from(4)), None);
    }
}
