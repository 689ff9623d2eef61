use serde::{Deserialize, Serialize};

use super::padic::{PadicField, PadicScaled};
use super::prime_field::PrimeField;
use crate::error::Result;

/// Which field the scalars of a structure-constant table live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rationals,
    Prime {
        p: u64,
    },
    Padic {
        p: u64,
        #[serde(rename = "N")]
        precision: u32,
    },
}

impl FieldDescriptor {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldDescriptor::Rationals => Ok(()),
            FieldDescriptor::Prime { p } => PrimeField::new(p).map(|_| ()),
            FieldDescriptor::Padic { p, precision } => PadicField::new(p, precision).map(|_| ()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        field_characteristic(self)
    }
}

pub fn field_characteristic(f: &FieldDescriptor) -> u64 {
    match f {
        FieldDescriptor::Rationals | FieldDescriptor::Padic { .. } => 0,
        FieldDescriptor::Prime { p } => *p,
    }
}

/// Smallest `n` in `1..=bound` with `n·1 = 0` in Q_p at the given precision.
/// Used as an independent check that the p-adic embedding has characteristic 0.
pub fn padic_additive_order(p: u64, precision: u32, bound: u64) -> Result<Option<u64>> {
    let one = PadicScaled::one(p, precision);
    let mut acc = PadicScaled::zero(p, precision);
    for n in 1..=bound {
        acc = super::padic::padic_add(&acc, &one)?;
        if acc.is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristics() {
        assert_eq!(field_characteristic(&FieldDescriptor::Rationals), 0);
        assert_eq!(field_characteristic(&FieldDescriptor::Prime { p: 7 }), 7);
        assert_eq!(field_characteristic(&FieldDescriptor::Padic { p: 5, precision: 3 }), 0);
    }

    // Sums of ones stay nonzero as long as p^N exceeds the count.
    #[test]
    fn padic_sums_of_one_never_vanish() {
        assert_eq!(padic_additive_order(5, 5, 1000).unwrap(), None);
        assert_eq!(padic_additive_order(2, 10, 1000).unwrap(), None);
        assert_eq!(padic_additive_order(997, 1, 996).unwrap(), None);
    }

    // With too few digits, n·1 becomes zero at precision once p^N divides n.
    #[test]
    fn low_precision_sums_vanish_at_precision() {
        assert_eq!(padic_additive_order(5, 3, 1000).unwrap(), Some(125));
        assert_eq!(padic_additive_order(2, 1, 10).unwrap(), Some(2));
    }

    #[test]
    fn json_shape() {
        let f: FieldDescriptor = serde_json::from_str(r#"{"tag":"padic","p":5,"N":4}"#).unwrap();
        assert_eq!(f, FieldDescriptor::Padic { p: 5, precision: 4 });
        let f: FieldDescriptor = serde_json::from_str(r#"{"tag":"prime","p":7}"#).unwrap();
        assert_eq!(f.characteristic(), 7);
        assert!(FieldDescriptor::Prime { p: 8 }.validate().is_err());
    }
}
