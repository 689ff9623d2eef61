//! Quaternions with exact rational coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::ring::{Ring, StarRing};

/// `c1 + ci·i + cj·j + ck·k` over Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub c1: BigRational,
    pub ci: BigRational,
    pub cj: BigRational,
    pub ck: BigRational,
}

impl Quaternion {
    pub fn new(c1: BigRational, ci: BigRational, cj: BigRational, ck: BigRational) -> Self {
        Self { c1, ci, cj, ck }
    }

    pub fn from_ints(c1: i64, ci: i64, cj: i64, ck: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Self::new(r(c1), r(ci), r(cj), r(ck))
    }

    pub fn real(c: BigRational) -> Self {
        Self::new(c, Zero::zero(), Zero::zero(), Zero::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.ci.is_zero() && self.cj.is_zero() && self.ck.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.ci.is_zero() && self.cj.is_zero() && self.ck.is_zero()
    }

    /// Real part vanishes.
    pub fn is_imaginary(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.c1.clone(), -&self.ci, -&self.cj, -&self.ck)
    }

    /// `x·x*`, the square of the modulus.
    pub fn norm_sq(&self) -> BigRational {
        &self.c1 * &self.c1 + &self.ci * &self.ci + &self.cj * &self.cj + &self.ck * &self.ck
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.c1 * s, &self.ci * s, &self.cj * s, &self.ck * s)
    }

    /// `x* / |x|²`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    fn components(&self) -> [&BigRational; 4] {
        [&self.c1, &self.ci, &self.cj, &self.ck]
    }
}

pub fn quat_mul(x: &Quaternion, y: &Quaternion) -> Quaternion {
    let (a1, b1, c1, d1) = (&x.c1, &x.ci, &x.cj, &x.ck);
    let (a2, b2, c2, d2) = (&y.c1, &y.ci, &y.cj, &y.ck);
    Quaternion::new(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )
}

pub fn quat_conj(x: &Quaternion) -> Quaternion {
    x.conj()
}

pub fn quat_norm_sq(x: &Quaternion) -> BigRational {
    x.norm_sq()
}

pub fn quat_inv(x: &Quaternion) -> Result<Quaternion> {
    x.inv()
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.c1 + &o.c1, &self.ci + &o.ci, &self.cj + &o.cj, &self.ck + &o.ck)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.c1 - &o.c1, &self.ci - &o.ci, &self.cj - &o.cj, &self.ck - &o.ck)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        quat_mul(self, o)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.c1, -&self.ci, -&self.cj, -&self.ck)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Quaternion {
            type Output = Quaternion;
            fn $m(self, o: Quaternion) -> Quaternion {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Prints `a+bi+cj+dk` with all four components, e.g. `1-2i+0j+3/4k`.
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.components();
        write!(f, "{a}")?;
        for (coef, unit) in [(b, 'i'), (c, 'j'), (d, 'k')] {
            if coef.is_negative() {
                write!(f, "-{}{unit}", -coef)?;
            } else {
                write!(f, "+{coef}{unit}")?;
            }
        }
        Ok(())
    }
}

/// Hamilton's quaternions over Q: a noncommutative division ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Quaternions;

impl Ring for Quaternions {
    type Elem = Quaternion;

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }
    fn one(&self) -> Quaternion {
        Quaternion::one()
    }
    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a + b
    }
    fn neg(&self, a: &Quaternion) -> Quaternion {
        -a
    }
    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        quat_mul(a, b)
    }
    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        false
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_integer(&self, n: &BigInt) -> Quaternion {
        Quaternion::real(BigRational::from_integer(n.clone()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<Quaternion> {
        Some(Quaternion::real(q.clone()))
    }
    fn inverse(&self, a: &Quaternion) -> Result<Quaternion> {
        a.inv()
    }
    fn format(&self, a: &Quaternion) -> String {
        a.to_string()
    }
    fn is_one(&self, a: &Quaternion) -> bool {
        a.is_real() && a.c1.is_one()
    }
}

impl StarRing for Quaternions {
    fn star(&self, a: &Quaternion) -> Quaternion {
        a.conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion::from_ints(a, b, c, d)
    }

    #[test]
    fn hamilton_table() {
        let (one, i, j, k) = (Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -&one;
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        for u in [&i, &j, &k] {
            assert_eq!(u * u, m1);
        }
        assert_eq!(&i * &j * k.clone(), m1);
    }

    // Oracle: expand (1+i)(1+j) term by term from the 16-entry table.
    #[test]
    fn product_of_one_plus_i_and_one_plus_j() {
        let table = |a: usize, b: usize| -> (i64, usize) {
            // (sign, unit) with units 0=1, 1=i, 2=j, 3=k
            const T: [[(i64, usize); 4]; 4] = [
                [(1, 0), (1, 1), (1, 2), (1, 3)],
                [(1, 1), (-1, 0), (1, 3), (-1, 2)],
                [(1, 2), (-1, 3), (-1, 0), (1, 1)],
                [(1, 3), (1, 2), (-1, 1), (-1, 0)],
            ];
            T[a][b]
        };
        let mut acc = [0i64; 4];
        for a in [0usize, 1] {
            for b in [0usize, 2] {
                let (s, u) = table(a, b);
                acc[u] += s;
            }
        }
        assert_eq!(acc, [1, 1, 1, 1]);
        assert_eq!(&q(1, 1, 0, 0) * &q(1, 0, 1, 0), q(acc[0], acc[1], acc[2], acc[3]));
        assert_eq!(
            (&q(1, 1, 0, 0) * &q(1, 0, 1, 0)).norm_sq(),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(Quaternion::i().conj(), -&Quaternion::i());
        assert_eq!(Quaternion::one().conj(), Quaternion::one());
        assert_eq!(q(1, 2, 3, 4).conj(), q(1, -2, -3, -4));
        assert_eq!(q(1, 1, 0, 0).norm_sq(), BigRational::from_integer(2.into()));
        assert!(Quaternion::zero().norm_sq().is_zero());
        let x = q(2, -1, 5, 3);
        assert_eq!(Quaternion::real(x.norm_sq()), &x * &x.conj());
    }

    #[test]
    fn inverses() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q(2, 0, 0, 0).inv().unwrap(), Quaternion::real(half.clone()));
        assert_eq!(Quaternion::i().inv().unwrap(), -&Quaternion::i());
        assert_eq!(q(1, 1, 0, 0).inv().unwrap(), q(1, -1, 0, 0).scale(&half));
        assert_eq!(Quaternion::zero().inv(), Err(AlgebraError::DivisionByZero));
        let x = q(3, -2, 7, 1);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Quaternion::one());
        assert_eq!(&y * &x, Quaternion::one());
    }

    #[test]
    fn imaginary_square_is_minus_modulus() {
        let w = q(0, 3, -4, 12);
        assert_eq!(&w * &w, Quaternion::real(-w.norm_sq()));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(q(1, 2, 0, 0).to_string(), "1+2i+0j+0k");
        assert_eq!(q(0, -1, 3, -4).to_string(), "0-1i+3j-4k");
        let x = Quaternion::new(
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
            Zero::zero(),
            BigRational::new((-5).into(), 3.into()),
        );
        assert_eq!(x.to_string(), "-1/2+3/4i+0j-5/3k");
    }
}
