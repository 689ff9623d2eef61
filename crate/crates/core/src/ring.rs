//! The ring contract every generic construction in the crate is written against.
//!
//! A ring is a *descriptor* value (it may carry parameters such as a prime,
//! a precision or a truncation order) that knows how to combine its elements.
//! Elements do not need to know which ring they belong to.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_commutative(&self) -> bool;

    /// 0 for characteristic zero, otherwise the prime.
    fn characteristic(&self) -> u64;

    /// Image of an integer under the unique ring map from Z.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem {
        // double-and-add, valid in every ring
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n.abs();
        let two = BigInt::from(2);
        while !k.is_zero() {
            if (&k % &two).is_one() {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k /= &two;
        }
        if n.is_negative() {
            self.neg(&acc)
        } else {
            acc
        }
    }

    /// Image of a rational, when its denominator is invertible in the ring.
    #[allow(clippy::wrong_self_convention)]
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem> {
        let den = self.from_integer(q.denom());
        let inv = self.inverse(&den).ok()?;
        Some(self.mul(&self.from_integer(q.numer()), &inv))
    }

    /// Two-sided inverse. `NotInvertible` for non-units, `Unsupported` when
    /// the ring has no invertibility test.
    fn inverse(&self, _a: &Self::Elem) -> Result<Self::Elem> {
        Err(AlgebraError::Unsupported(format!("{self:?} has no invertibility test")))
    }

    fn is_integral_domain(&self) -> bool {
        false
    }

    /// Exact quotient `a / b` when it is known to exist, for fraction-free
    /// elimination. `None` means the ring cannot divide exactly.
    fn exact_div(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Canonical textual form of an element.
    fn format(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A ring with a distinguished involution `x ↦ x*`: additive, reverses
/// products, squares to the identity.
pub trait StarRing: Ring {
    fn star(&self, a: &Self::Elem) -> Self::Elem;
}

/// The rational numbers, the characteristic-zero base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn inverse(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        (!b.is_zero()).then(|| a / b)
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl StarRing for Rationals {
    fn star(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
}

/// The integers. Units are exactly ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
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
    fn is_commutative(&self) -> bool {
        true
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn inverse(&self, a: &BigInt) -> Result<BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else if a.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Err(AlgebraError::NotInvertible(a.to_string()))
        }
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() || !(a % b).is_zero() {
            None
        } else {
            Some(a / b)
        }
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl StarRing for Integers {
    fn star(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_integer_default_matches_repeated_addition() {
        #[derive(Debug, Clone, PartialEq)]
        struct Z5;
        impl Ring for Z5 {
            type Elem = u8;
            fn zero(&self) -> u8 {
                0
            }
            fn one(&self) -> u8 {
                1
            }
            fn add(&self, a: &u8, b: &u8) -> u8 {
                (a + b) % 5
            }
            fn neg(&self, a: &u8) -> u8 {
                (5 - a) % 5
            }
            fn mul(&self, a: &u8, b: &u8) -> u8 {
                (a * b) % 5
            }
            fn is_commutative(&self) -> bool {
                true
            }
            fn characteristic(&self) -> u64 {
                5
            }
            fn format(&self, a: &u8) -> String {
                a.to_string()
            }
        }
        for n in -20i64..20 {
            assert_eq!(Z5.from_integer(&BigInt::from(n)), n.rem_euclid(5) as u8);
        }
        assert_eq!(Z5.pow(&2, 4), 1);
    }

    #[test]
    fn integer_units() {
        assert!(Integers.inverse(&BigInt::from(-1)).is_ok());
        assert!(matches!(
            Integers.inverse(&BigInt::from(2)),
            Err(AlgebraError::NotInvertible(_))
        ));
        assert_eq!(
            Integers.exact_div(&BigInt::from(6), &BigInt::from(3)),
            Some(BigInt::from(2))
        );
        assert_eq!(Integers.exact_div(&BigInt::from(7), &BigInt::from(3)), None);
    }
}
