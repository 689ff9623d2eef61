//! Exact values `p^q` (q rational) taken by ultrametric norms over Q_p.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{AlgebraError, Result};

/// Either zero or `p^exponent`. Comparison is exact on exponents and only
/// defined between values over the same prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum UltraNorm {
    #[default]
    Zero,
    Power {
        p: u64,
        exponent: BigRational,
    },
}

impl UltraNorm {
    pub fn power(p: u64, exponent: BigRational) -> Self {
        UltraNorm::Power { p, exponent }
    }

    pub fn int_power(p: u64, exponent: i64) -> Self {
        Self::power(p, BigRational::from_integer(BigInt::from(exponent)))
    }

    pub fn one(p: u64) -> Self {
        Self::int_power(p, 0)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, UltraNorm::Zero)
    }

    pub fn exponent(&self) -> Option<&BigRational> {
        match self {
            UltraNorm::Zero => None,
            UltraNorm::Power { exponent, .. } => Some(exponent),
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            UltraNorm::Zero => None,
            UltraNorm::Power { p, .. } => Some(*p),
        }
    }

    /// Product: exponents add.
    pub fn mul(&self, other: &UltraNorm) -> Result<UltraNorm> {
        match (self, other) {
            (UltraNorm::Zero, _) | (_, UltraNorm::Zero) => Ok(UltraNorm::Zero),
            (UltraNorm::Power { p, exponent: a }, UltraNorm::Power { p: q, exponent: b }) => {
                if p != q {
                    return Err(AlgebraError::RingMismatch);
                }
                Ok(UltraNorm::power(*p, a + b))
            }
        }
    }

    pub fn div(&self, other: &UltraNorm) -> Result<UltraNorm> {
        match (self, other) {
            (_, UltraNorm::Zero) => Err(AlgebraError::DivisionByZero),
            (UltraNorm::Zero, _) => Ok(UltraNorm::Zero),
            (UltraNorm::Power { p, exponent: a }, UltraNorm::Power { p: q, exponent: b }) => {
                if p != q {
                    return Err(AlgebraError::RingMismatch);
                }
                Ok(UltraNorm::power(*p, a - b))
            }
        }
    }

    pub fn max(&self, other: &UltraNorm) -> Result<UltraNorm> {
        match self.partial_cmp(other) {
            Some(Ordering::Less) => Ok(other.clone()),
            Some(_) => Ok(self.clone()),
            None => Err(AlgebraError::RingMismatch),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            UltraNorm::Zero => 0.0,
            UltraNorm::Power { p, exponent } => (*p as f64).powf(exponent.to_f64().unwrap_or(f64::NAN)),
        }
    }
}

impl PartialOrd for UltraNorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (UltraNorm::Zero, UltraNorm::Zero) => Some(Ordering::Equal),
            (UltraNorm::Zero, _) => Some(Ordering::Less),
            (_, UltraNorm::Zero) => Some(Ordering::Greater),
            (UltraNorm::Power { p, exponent: a }, UltraNorm::Power { p: q, exponent: b }) => (p == q).then(|| a.cmp(b)),
        }
    }
}

/// `0`, or `p^(q)` with the exponent as an exact rational, e.g. `5^(-1/3)`.
impl fmt::Display for UltraNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UltraNorm::Zero => write!(f, "0"),
            UltraNorm::Power { p, exponent } => write!(f, "{p}^({exponent})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ordering_and_arithmetic() {
        let a = UltraNorm::power(5, r(-1, 3));
        let b = UltraNorm::int_power(5, 0);
        assert!(a < b);
        assert!(UltraNorm::Zero < a);
        assert_eq!(a.mul(&a).unwrap(), UltraNorm::power(5, r(-2, 3)));
        assert_eq!(a.mul(&UltraNorm::Zero).unwrap(), UltraNorm::Zero);
        assert_eq!(a.max(&b).unwrap(), b);
        assert_eq!(b.div(&a).unwrap(), UltraNorm::power(5, r(1, 3)));
        assert!(UltraNorm::one(3).partial_cmp(&UltraNorm::one(5)).is_none());
        assert!(a.max(&UltraNorm::one(3)).is_err());
        assert_eq!(a.to_string(), "5^(-1/3)");
        assert_eq!(UltraNorm::Zero.to_string(), "0");
        assert!((UltraNorm::int_power(5, -2).to_f64() - 0.04).abs() < 1e-15);
    }
}
