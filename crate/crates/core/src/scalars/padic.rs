//! Elements of Q_p at fixed relative precision.
//!
//! A nonzero value is stored as `p^v · u` where `u` is a unit modulo `p^N`
//! (`0 < u < p^N`, `p ∤ u`). Every operation keeps `N` significant digits.
//! When two operands of different valuation are added, the digits of the
//! smaller one below `p^(v_min + N)` are dropped; a sum whose mantissa
//! cancels completely becomes *zero at precision*, which is not invertible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::primes::check_prime;
use super::ultranorm::UltraNorm;
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;

/// Upper bound on the number of significant digits.
pub const MAX_PRECISION: u32 = 4096;

#[derive(Debug, Clone)]
enum Repr {
    Zero,
    ZeroAtPrecision,
    Unit { valuation: i64, unit: BigInt },
}

#[derive(Debug, Clone)]
pub struct PadicScaled {
    p: u64,
    precision: u32,
    repr: Repr,
}

/// Exponent of `p` in a nonzero integer, and the cofactor.
pub(crate) fn split_valuation(n: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0i64;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.mod_floor(m).extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

fn modulus(p: u64, precision: u32) -> BigInt {
    BigInt::from(p).pow(precision)
}

fn check_precision(precision: u32) -> Result<u32> {
    if precision == 0 || precision > MAX_PRECISION {
        Err(AlgebraError::InvalidArgument(format!(
            "precision {precision} outside 1..={MAX_PRECISION}"
        )))
    } else {
        Ok(precision)
    }
}

impl PadicScaled {
    pub fn zero(p: u64, precision: u32) -> Self {
        Self {
            p,
            precision,
            repr: Repr::Zero,
        }
    }

    pub fn one(p: u64, precision: u32) -> Self {
        Self {
            p,
            precision,
            repr: Repr::Unit {
                valuation: 0,
                unit: BigInt::one(),
            },
        }
    }

    /// Build from a valuation and a unit mantissa; the mantissa is reduced mod `p^N`.
    pub fn from_parts(p: u64, precision: u32, valuation: i64, unit: BigInt) -> Result<Self> {
        check_prime(p)?;
        check_precision(precision)?;
        let unit = unit.mod_floor(&modulus(p, precision));
        if (&unit % BigInt::from(p)).is_zero() {
            return Err(AlgebraError::InvalidArgument(format!(
                "mantissa {unit} is divisible by {p}"
            )));
        }
        Ok(Self {
            p,
            precision,
            repr: Repr::Unit { valuation, unit },
        })
    }

    /// Embed a rational number: `x = p^v · a/b` with `p ∤ ab` maps to
    /// valuation `v` and mantissa `a · b⁻¹ mod p^N`.
    pub fn from_rational(x: &BigRational, p: u64, precision: u32) -> Result<Self> {
        check_prime(p)?;
        check_precision(precision)?;
        if x.is_zero() {
            return Ok(Self::zero(p, precision));
        }
        let (vn, a) = split_valuation(x.numer(), p);
        let (vd, b) = split_valuation(x.denom(), p);
        let m = modulus(p, precision);
        let b_inv = mod_inverse(&b, &m).expect("cofactor is coprime to p");
        let unit = (a * b_inv).mod_floor(&m);
        Ok(Self {
            p,
            precision,
            repr: Repr::Unit {
                valuation: vn - vd,
                unit,
            },
        })
    }

    pub fn from_integer(n: i64, p: u64, precision: u32) -> Result<Self> {
        Self::from_rational(&BigRational::from_integer(n.into()), p, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Exact zero or zero at precision.
    pub fn is_zero(&self) -> bool {
        !matches!(self.repr, Repr::Unit { .. })
    }

    pub fn is_zero_at_precision(&self) -> bool {
        matches!(self.repr, Repr::ZeroAtPrecision)
    }

    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Unit { valuation, .. } => Some(*valuation),
            _ => None,
        }
    }

    pub fn unit(&self) -> Option<&BigInt> {
        match &self.repr {
            Repr::Unit { unit, .. } => Some(unit),
            _ => None,
        }
    }

    /// The rational representative `p^v · u`.
    pub fn to_rational(&self) -> BigRational {
        match &self.repr {
            Repr::Unit { valuation, unit } => {
                let pv = BigInt::from(self.p).pow(valuation.unsigned_abs());
                if *valuation >= 0 {
                    BigRational::from_integer(unit * pv)
                } else {
                    BigRational::new(unit.clone(), pv)
                }
            }
            _ => BigRational::zero(),
        }
    }

    /// `|x|_p = p^(-v)`, or zero.
    pub fn abs(&self) -> UltraNorm {
        match &self.repr {
            Repr::Unit { valuation, .. } => UltraNorm::int_power(self.p, -valuation),
            _ => UltraNorm::Zero,
        }
    }

    fn check_same_prime(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    fn with_precision(mut self, precision: u32) -> Self {
        if precision < self.precision {
            if let Repr::Unit { unit, .. } = &mut self.repr {
                *unit = unit.mod_floor(&modulus(self.p, precision));
            }
            self.precision = precision;
        }
        self
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Unit { valuation, unit } => Self {
                p: self.p,
                precision: self.precision,
                repr: Repr::Unit {
                    valuation: *valuation,
                    unit: modulus(self.p, self.precision) - unit,
                },
            },
            _ => self.clone(),
        }
    }

    pub(crate) fn add_same_prime(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        let (a, b) = match (&self.repr, &other.repr) {
            (Repr::Zero, _) => return other.clone().with_precision(precision),
            (_, Repr::Zero) => return self.clone().with_precision(precision),
            (Repr::ZeroAtPrecision, _) => return other.clone().with_precision(precision),
            (_, Repr::ZeroAtPrecision) => return self.clone().with_precision(precision),
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                },
            ) => ((*va, ua), (*vb, ub)),
        };
        let m = modulus(self.p, precision);
        let pb = BigInt::from(self.p);
        let vmin = a.0.min(b.0);
        let shift = |v: i64| -> BigInt {
            let d = (v - vmin) as u64;
            if d >= precision as u64 {
                BigInt::zero()
            } else {
                pb.clone().pow(d as u32)
            }
        };
        let s = (a.1 * shift(a.0) + b.1 * shift(b.0)).mod_floor(&m);
        if s.is_zero() {
            return Self {
                p: self.p,
                precision,
                repr: Repr::ZeroAtPrecision,
            };
        }
        let (k, unit) = split_valuation(&s, self.p);
        Self {
            p: self.p,
            precision,
            repr: Repr::Unit {
                valuation: vmin + k,
                unit,
            },
        }
    }

    pub(crate) fn mul_same_prime(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        match (&self.repr, &other.repr) {
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                },
            ) => Self {
                p: self.p,
                precision,
                repr: Repr::Unit {
                    valuation: va + vb,
                    unit: (ua * ub).mod_floor(&modulus(self.p, precision)),
                },
            },
            (Repr::ZeroAtPrecision, _) | (_, Repr::ZeroAtPrecision) => Self {
                p: self.p,
                precision,
                repr: Repr::ZeroAtPrecision,
            },
            _ => Self::zero(self.p, precision),
        }
    }

    /// True when the two agree modulo `p^abs_precision`. A difference that
    /// cancels completely only certifies agreement down to the smallest
    /// operand valuation plus the precision.
    pub fn agrees_to(&self, other: &Self, abs_precision: i64) -> bool {
        if self.p != other.p {
            return false;
        }
        let diff = self.add_same_prime(&other.neg());
        match (&diff.repr, diff.valuation()) {
            (_, Some(v)) => v >= abs_precision,
            (Repr::ZeroAtPrecision, None) => {
                let floor = [self.valuation(), other.valuation()].into_iter().flatten().min();
                floor.is_none_or(|v| v + i64::from(diff.precision) >= abs_precision)
            }
            _ => true,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match &self.repr {
            Repr::Zero => Err(AlgebraError::DivisionByZero),
            Repr::ZeroAtPrecision => Err(AlgebraError::NotInvertible("zero at precision".to_string())),
            Repr::Unit { valuation, unit } => {
                let m = modulus(self.p, self.precision);
                let inv = mod_inverse(unit, &m).expect("mantissa is a unit");
                Ok(Self {
                    p: self.p,
                    precision: self.precision,
                    repr: Repr::Unit {
                        valuation: -valuation,
                        unit: inv,
                    },
                })
            }
        }
    }
}

/// Zero kinds compare equal to each other; nonzero values compare digitwise.
impl PartialEq for PadicScaled {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p || self.precision != other.precision {
            return false;
        }
        match (&self.repr, &other.repr) {
            (
                Repr::Unit {
                    valuation: va,
                    unit: ua,
                },
                Repr::Unit {
                    valuation: vb,
                    unit: ub,
                },
            ) => va == vb && ua == ub,
            (Repr::Unit { .. }, _) | (_, Repr::Unit { .. }) => false,
            _ => true,
        }
    }
}

impl Eq for PadicScaled {}

/// `padic(r; p, N)` where `r` is the rational representative.
impl fmt::Display for PadicScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "padic({}; {}, {})", self.to_rational(), self.p, self.precision)
    }
}

pub fn padic_abs(x: &BigRational, p: u64) -> Result<UltraNorm> {
    check_prime(p)?;
    if x.is_zero() {
        return Ok(UltraNorm::Zero);
    }
    let (vn, _) = split_valuation(x.numer(), p);
    let (vd, _) = split_valuation(x.denom(), p);
    Ok(UltraNorm::int_power(p, vd - vn))
}

pub fn padic_of_rational(x: &BigRational, p: u64, precision: u32) -> Result<PadicScaled> {
    PadicScaled::from_rational(x, p, precision)
}

pub fn padic_add(a: &PadicScaled, b: &PadicScaled) -> Result<PadicScaled> {
    a.check_same_prime(b)?;
    Ok(a.add_same_prime(b))
}

pub fn padic_mul(a: &PadicScaled, b: &PadicScaled) -> Result<PadicScaled> {
    a.check_same_prime(b)?;
    Ok(a.mul_same_prime(b))
}

pub fn padic_inv(a: &PadicScaled) -> Result<PadicScaled> {
    a.inv()
}

/// Q_p truncated to `precision` significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicField {
    p: u64,
    precision: u32,
}

impl PadicField {
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        check_prime(p)?;
        check_precision(precision)?;
        Ok(Self { p, precision })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn element(&self, x: &BigRational) -> PadicScaled {
        PadicScaled::from_rational(x, self.p, self.precision).expect("validated field")
    }

    pub fn int(&self, n: i64) -> PadicScaled {
        self.element(&BigRational::from_integer(n.into()))
    }
}

impl Ring for PadicField {
    type Elem = PadicScaled;

    fn zero(&self) -> PadicScaled {
        PadicScaled::zero(self.p, self.precision)
    }
    fn one(&self) -> PadicScaled {
        PadicScaled::one(self.p, self.precision)
    }
    fn add(&self, a: &PadicScaled, b: &PadicScaled) -> PadicScaled {
        debug_assert!(a.p == self.p && b.p == self.p);
        a.add_same_prime(b)
    }
    fn neg(&self, a: &PadicScaled) -> PadicScaled {
        a.neg()
    }
    fn mul(&self, a: &PadicScaled, b: &PadicScaled) -> PadicScaled {
        debug_assert!(a.p == self.p && b.p == self.p);
        a.mul_same_prime(b)
    }
    fn is_zero(&self, a: &PadicScaled) -> bool {
        a.is_zero()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn from_integer(&self, n: &BigInt) -> PadicScaled {
        self.element(&BigRational::from_integer(n.clone()))
    }
    fn from_rational(&self, q: &BigRational) -> Option<PadicScaled> {
        Some(self.element(q))
    }
    fn inverse(&self, a: &PadicScaled) -> Result<PadicScaled> {
        a.inv()
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn exact_div(&self, a: &PadicScaled, b: &PadicScaled) -> Option<PadicScaled> {
        b.inv().ok().map(|inv| self.mul(a, &inv))
    }
    fn format(&self, a: &PadicScaled) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qp(n: i64, d: i64, p: u64, prec: u32) -> PadicScaled {
        padic_of_rational(&r(n, d), p, prec).unwrap()
    }

    #[test]
    fn absolute_values() {
        assert_eq!(padic_abs(&r(0, 1), 5).unwrap(), UltraNorm::Zero);
        assert_eq!(padic_abs(&r(50, 1), 5).unwrap(), UltraNorm::int_power(5, -2));
        assert_eq!(padic_abs(&r(3, 10), 2).unwrap(), UltraNorm::int_power(2, 1));
        assert!(padic_abs(&r(1, 1), 6).is_err());
    }

    // Oracle: search u in [1, 625) with 3u ≡ 1 (mod 625) by brute force.
    #[test]
    fn embedding_of_one_third() {
        let oracle = (1..625i64).find(|u| (3 * u) % 625 == 1).unwrap();
        assert_eq!(oracle, 417);
        let x = qp(1, 3, 5, 4);
        assert_eq!(x.valuation(), Some(0));
        assert_eq!(x.unit(), Some(&BigInt::from(417)));
    }

    #[test]
    fn embedding_examples() {
        let ten = qp(10, 1, 5, 3);
        assert_eq!(ten.valuation(), Some(1));
        assert_eq!(ten.unit(), Some(&BigInt::from(2)));
        assert!(qp(0, 1, 5, 3).is_zero());
        assert!(!qp(0, 1, 5, 3).is_zero_at_precision());
    }

    #[test]
    fn addition_examples() {
        assert_eq!(padic_add(&qp(1, 1, 5, 4), &qp(1, 1, 5, 4)).unwrap(), qp(2, 1, 5, 4));
        let cancel = padic_add(&qp(1, 1, 5, 4), &qp(-1, 1, 5, 4)).unwrap();
        assert!(cancel.is_zero_at_precision());
        // 5 + 1/5 = 26/5 exactly; oracle is the rational sum
        let s = padic_add(&qp(5, 1, 5, 4), &qp(1, 5, 5, 4)).unwrap();
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s, qp(26, 5, 5, 4));
    }

    #[test]
    fn addition_drops_digits_below_the_leading_precision() {
        // 1 + 5^4 at N = 3: the second summand lies entirely below p^3.
        let s = padic_add(&qp(1, 1, 5, 3), &qp(625, 1, 5, 3)).unwrap();
        assert_eq!(s, qp(1, 1, 5, 3));
    }

    #[test]
    fn precision_aligns_to_minimum() {
        let s = padic_add(&qp(1, 3, 5, 6), &qp(1, 1, 5, 2)).unwrap();
        assert_eq!(s.precision(), 2);
        assert_eq!(s, qp(4, 3, 5, 2));
    }

    #[test]
    fn multiplication_examples() {
        let m = padic_mul(&qp(50, 1, 5, 4), &qp(1, 10, 5, 4)).unwrap();
        assert_eq!(m.valuation(), Some(1));
        assert_eq!(m, qp(5, 1, 5, 4));
        assert_eq!(m.abs(), UltraNorm::int_power(5, -1));
        assert!(padic_mul(&qp(3, 1, 5, 4), &qp(0, 1, 5, 4)).unwrap().is_zero());
        assert_eq!(padic_mul(&qp(2, 1, 7, 3), &qp(3, 1, 7, 3)).unwrap(), qp(6, 1, 7, 3));
        assert_eq!(
            padic_mul(&qp(1, 1, 5, 3), &qp(1, 1, 7, 3)),
            Err(AlgebraError::RingMismatch)
        );
    }

    #[test]
    fn inversion_examples() {
        let inv5 = padic_inv(&qp(5, 1, 5, 4)).unwrap();
        assert_eq!(inv5.valuation(), Some(-1));
        assert_eq!(inv5.unit(), Some(&BigInt::one()));
        assert_eq!(padic_inv(&qp(0, 1, 5, 4)), Err(AlgebraError::DivisionByZero));
        let third = PadicScaled::from_parts(5, 4, 0, BigInt::from(417)).unwrap();
        assert_eq!(padic_inv(&third).unwrap(), qp(3, 1, 5, 4));
        let vanished = padic_add(&qp(1, 1, 5, 4), &qp(-1, 1, 5, 4)).unwrap();
        assert!(matches!(padic_inv(&vanished), Err(AlgebraError::NotInvertible(_))));
    }

    #[test]
    fn from_parts_validates() {
        assert!(PadicScaled::from_parts(5, 4, 0, BigInt::from(10)).is_err());
        assert!(PadicScaled::from_parts(4, 4, 0, BigInt::from(1)).is_err());
        assert!(PadicScaled::from_parts(5, 0, 0, BigInt::from(1)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(qp(1, 3, 5, 4).to_string(), "padic(417; 5, 4)");
        assert_eq!(qp(26, 5, 5, 3).to_string(), "padic(26/5; 5, 3)");
        assert_eq!(qp(0, 1, 5, 3).to_string(), "padic(0; 5, 3)");
    }

    #[test]
    fn negation_round_trip() {
        let x = qp(-7, 3, 5, 5);
        assert_eq!(x.neg().neg(), x);
        assert!(padic_add(&x, &x.neg()).unwrap().is_zero());
        assert_eq!(x, qp(-7, 3, 5, 5));
    }

    #[test]
    fn agreement_at_absolute_precision() {
        let one = qp(1, 1, 5, 6);
        assert!(one.agrees_to(&qp(1 + 5i64.pow(8), 1, 5, 6), 6));
        assert!(!one.agrees_to(&qp(1 + 5i64.pow(4), 1, 5, 6), 6));
        // mantissas cancel, so only digits down to 5^(-3+6) are known
        let (a, b) = (qp(1, 125, 5, 6), qp(1 + 5i64.pow(6), 125, 5, 6));
        assert!(a.agrees_to(&b, 3));
        assert!(!a.agrees_to(&b, 6));
        assert!(!one.agrees_to(&qp(1, 1, 7, 6), 0));
    }
}
