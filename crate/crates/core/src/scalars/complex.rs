//! Gaussian rationals Q(i) with complex conjugation.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::{Ring, StarRing};

pub type GaussianRational = Complex<BigRational>;

pub fn gaussian(re: BigRational, im: BigRational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn gaussian_int(re: i64, im: i64) -> GaussianRational {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GaussianRationals;

impl Ring for GaussianRationals {
    type Elem = GaussianRational;

    fn zero(&self) -> GaussianRational {
        Complex::zero()
    }
    fn one(&self) -> GaussianRational {
        gaussian_int(1, 0)
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a + b
    }
    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        -a.clone()
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a * b
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_integer(&self, n: &BigInt) -> GaussianRational {
        Complex::new(BigRational::from_integer(n.clone()), Zero::zero())
    }
    fn from_rational(&self, q: &BigRational) -> Option<GaussianRational> {
        Some(Complex::new(q.clone(), Zero::zero()))
    }
    fn inverse(&self, a: &GaussianRational) -> Result<GaussianRational> {
        let n = a.norm_sqr();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(a.conj() / n)
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn exact_div(&self, a: &GaussianRational, b: &GaussianRational) -> Option<GaussianRational> {
        self.inverse(b).ok().map(|inv| a * inv)
    }
    /// `a+bi` with both parts, e.g. `0-1/2i`.
    fn format(&self, a: &GaussianRational) -> String {
        if a.im.is_negative() {
            format!("{}-{}i", a.re, -&a.im)
        } else {
            format!("{}+{}i", a.re, a.im)
        }
    }
}

impl StarRing for GaussianRationals {
    fn star(&self, a: &GaussianRational) -> GaussianRational {
        a.conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_reverses_products() {
        let r = GaussianRationals;
        let a = gaussian_int(2, -3);
        let b = gaussian_int(-1, 5);
        assert_eq!(r.star(&r.mul(&a, &b)), r.mul(&r.star(&b), &r.star(&a)));
        assert_eq!(r.mul(&a, &r.inverse(&a).unwrap()), r.one());
        assert_eq!(r.format(&gaussian_int(0, -1)), "0-1i");
    }
}
