//! Multivariate formal power series truncated at a total degree `D`.
//!
//! Every coefficient a series reports (degree `<= D`) is the exact formal
//! coefficient; nothing above `D` is ever stored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::multi_index::MultiIndex;
use super::polynomial::{format_terms, Polynomial};
use crate::error::{AlgebraError, Result};
use crate::ring::{Ring, StarRing};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<R: Ring> {
    poly: Polynomial<R>,
    truncation: u32,
}

impl<R: Ring> PowerSeries<R> {
    pub fn new(poly: Polynomial<R>, truncation: u32) -> Self {
        Self {
            poly: poly.truncated(truncation),
            truncation,
        }
    }

    pub fn zero(ring: R, nvars: usize, truncation: u32) -> Self {
        Self::new(Polynomial::zero(ring, nvars), truncation)
    }

    pub fn one(ring: R, nvars: usize, truncation: u32) -> Self {
        Self::new(Polynomial::one(ring, nvars), truncation)
    }

    pub fn polynomial(&self) -> &Polynomial<R> {
        &self.poly
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn ring(&self) -> &R {
        self.poly.ring()
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn coeff(&self, index: &MultiIndex) -> R::Elem {
        self.poly.coeff(index)
    }

    pub fn constant_term(&self) -> R::Elem {
        self.poly.constant_term()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(AlgebraError::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        if self.ring() != other.ring() {
            return Err(AlgebraError::RingMismatch);
        }
        crate::error::check_dim(self.nvars(), other.nvars())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        Self {
            poly: self.poly.add_unchecked(&other.poly),
            truncation: self.truncation,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            poly: self.poly.neg(),
            truncation: self.truncation,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        Self {
            poly: self.poly.mul_bounded(&other.poly, Some(self.truncation)),
            truncation: self.truncation,
        }
    }

    pub fn scale_left(&self, c: &R::Elem) -> Self {
        Self {
            poly: self.poly.scale_left(c),
            truncation: self.truncation,
        }
    }

    /// Multiplicative inverse. Writing `f = c0 (1 - q)` with `q` free of a
    /// constant term, `f⁻¹ = (Σ_{j<=D} q^j) c0⁻¹`.
    pub fn inverse(&self) -> Result<Self> {
        let ring = self.ring().clone();
        let c0 = self.constant_term();
        let c0_inv = ring.inverse(&c0).map_err(|e| match e {
            AlgebraError::Unsupported(m) => AlgebraError::Unsupported(m),
            _ => AlgebraError::NotInvertible(format!("constant term {} is not a unit", ring.format(&c0))),
        })?;
        let one = Self::one(ring.clone(), self.nvars(), self.truncation);
        let normalized = self.scale_left(&c0_inv);
        let q = one.sub(&normalized)?;
        let mut sum = one.clone();
        let mut power = one;
        for _ in 0..self.truncation {
            power = power.mul_unchecked(&q);
            if power.is_zero() {
                break;
            }
            sum = sum.add_unchecked(&power);
        }
        Ok(Self {
            poly: sum.poly.scale_right(&c0_inv),
            truncation: self.truncation,
        })
    }

    /// Apply a coefficient involution termwise.
    pub fn star(&self, star: impl Fn(&R::Elem) -> R::Elem) -> Self {
        Self {
            poly: self.poly.map_coeffs(star),
            truncation: self.truncation,
        }
    }
}

pub fn series_mul<R: Ring>(f: &PowerSeries<R>, g: &PowerSeries<R>) -> Result<PowerSeries<R>> {
    f.mul(g)
}

pub fn series_inverse<R: Ring>(f: &PowerSeries<R>) -> Result<PowerSeries<R>> {
    f.inverse()
}

pub fn series_star<R: Ring>(f: &PowerSeries<R>, star: impl Fn(&R::Elem) -> R::Elem) -> PowerSeries<R> {
    f.star(star)
}

/// `1 + t1 + O(|t|^3)`: the O-term names the first omitted degree.
impl<R: Ring> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format_terms(self.ring(), self.poly.terms());
        let order = self.truncation + 1;
        if self.is_zero() {
            write!(f, "O(|t|^{order})")
        } else {
            write!(f, "{body} + O(|t|^{order})")
        }
    }
}

/// `A[[t_1, …, t_n]]` truncated at total degree `truncation`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesRing<R: Ring> {
    pub coeff: R,
    pub nvars: usize,
    pub truncation: u32,
}

impl<R: Ring> SeriesRing<R> {
    pub fn new(coeff: R, nvars: usize, truncation: u32) -> Self {
        Self {
            coeff,
            nvars,
            truncation,
        }
    }

    /// `t_j` as a series, 1-based.
    pub fn var(&self, j: usize) -> Result<PowerSeries<R>> {
        Ok(self.series(Polynomial::var(self.coeff.clone(), self.nvars, j)?))
    }

    pub fn constant(&self, c: R::Elem) -> PowerSeries<R> {
        self.series(Polynomial::constant(self.coeff.clone(), self.nvars, c))
    }

    pub fn series(&self, poly: Polynomial<R>) -> PowerSeries<R> {
        PowerSeries::new(poly, self.truncation)
    }
}

impl<R: Ring> Ring for SeriesRing<R> {
    type Elem = PowerSeries<R>;

    fn zero(&self) -> PowerSeries<R> {
        PowerSeries::zero(self.coeff.clone(), self.nvars, self.truncation)
    }
    fn one(&self) -> PowerSeries<R> {
        PowerSeries::one(self.coeff.clone(), self.nvars, self.truncation)
    }
    fn add(&self, a: &PowerSeries<R>, b: &PowerSeries<R>) -> PowerSeries<R> {
        a.add_unchecked(b)
    }
    fn neg(&self, a: &PowerSeries<R>) -> PowerSeries<R> {
        a.neg()
    }
    fn mul(&self, a: &PowerSeries<R>, b: &PowerSeries<R>) -> PowerSeries<R> {
        a.mul_unchecked(b)
    }
    fn is_zero(&self, a: &PowerSeries<R>) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        self.coeff.is_commutative()
    }
    fn characteristic(&self) -> u64 {
        self.coeff.characteristic()
    }
    fn from_integer(&self, n: &BigInt) -> PowerSeries<R> {
        self.constant(self.coeff.from_integer(n))
    }
    fn from_rational(&self, q: &BigRational) -> Option<PowerSeries<R>> {
        self.coeff.from_rational(q).map(|c| self.constant(c))
    }
    /// Units are exactly the series with a unit constant term.
    fn inverse(&self, a: &PowerSeries<R>) -> Result<PowerSeries<R>> {
        a.inverse()
    }
    fn format(&self, a: &PowerSeries<R>) -> String {
        a.to_string()
    }
}

impl<R: StarRing> StarRing for SeriesRing<R> {
    fn star(&self, a: &PowerSeries<R>) -> PowerSeries<R> {
        a.star(|c| self.coeff.star(c))
    }
}
