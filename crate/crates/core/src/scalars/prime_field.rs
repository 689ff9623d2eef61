use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::primes::check_prime;
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;

/// A residue class modulo a prime `p < 2^31`, kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    modulus: u64,
    residue: u64,
}

impl PrimeFieldElement {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// The field Z/p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self { p: check_prime(p)? })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, n: i64) -> PrimeFieldElement {
        PrimeFieldElement {
            modulus: self.p,
            residue: n.rem_euclid(self.p as i64) as u64,
        }
    }

    pub fn reduce_rational(&self, q: &BigRational) -> Result<PrimeFieldElement> {
        let p = BigInt::from(self.p);
        let den = q.denom().mod_floor(&p);
        if den == BigInt::from(0) {
            return Err(AlgebraError::NotInvertible(format!(
                "denominator of {q} vanishes mod {}",
                self.p
            )));
        }
        let num = q.numer().mod_floor(&p);
        let num = self.element(num.to_i64().expect("reduced below p"));
        let den = self.element(den.to_i64().expect("reduced below p"));
        Ok(self.mul(&num, &self.inverse(&den)?))
    }
}

impl Ring for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement {
            modulus: self.p,
            residue: (a.residue + b.residue) % self.p,
        }
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement {
            modulus: self.p,
            residue: (self.p - a.residue) % self.p,
        }
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        PrimeFieldElement {
            modulus: self.p,
            residue: (a.residue * b.residue) % self.p,
        }
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 0
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn from_integer(&self, n: &BigInt) -> PrimeFieldElement {
        let r = n.mod_floor(&BigInt::from(self.p));
        self.element(r.to_i64().expect("reduced below p"))
    }
    fn from_rational(&self, q: &BigRational) -> Option<PrimeFieldElement> {
        self.reduce_rational(q).ok()
    }
    fn inverse(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        if a.residue == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = (a.residue as i64).extended_gcd(&(self.p as i64));
        debug_assert_eq!(g.gcd.abs(), 1);
        Ok(self.element(g.x))
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn exact_div(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> Option<PrimeFieldElement> {
        self.inverse(b).ok().map(|inv| self.mul(a, &inv))
    }
    fn format(&self, a: &PrimeFieldElement) -> String {
        a.residue.to_string()
    }
}
