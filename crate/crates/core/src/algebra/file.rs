//! JSON form of a structure-constant table.
//!
//! ```json
//! {"field": {"tag": "rationals"}, "dim": 3, "basis": ["h", "e", "f"],
//!  "brackets": [{"j": 1, "l": 2, "coords": ["0", "2", "0"]}]}
//! ```
//!
//! Indices `j`, `l` are 1-based, omitted pairs are zero, and scalars are
//! strings in the field's literal grammar (plain integers are also accepted).

use serde::{Deserialize, Serialize};

use super::{center_basis, derivation_basis, derived_ideal_basis, verify_lie, Field, LieReport, StructureConstants};
use crate::error::{AlgebraError, Result};
use crate::ring::Rationals;
use crate::scalars::{FieldDescriptor, PadicField, PrimeField};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub field: FieldDescriptor,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub j: usize,
    pub l: usize,
    pub coords: Vec<ScalarLit>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Text(String),
}

impl ScalarLit {
    fn text(&self) -> String {
        match self {
            ScalarLit::Int(k) => k.to_string(),
            ScalarLit::Text(s) => s.clone(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::InvalidArgument(msg.into())
}

impl TableFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed structure-constant file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table files serialize")
    }

    fn build<F: Field>(&self, field: F) -> Result<StructureConstants<F>> {
        let n = self.dim;
        let names = if self.basis.is_empty() {
            StructureConstants::<F>::default_names(n)
        } else if self.basis.len() == n {
            self.basis.clone()
        } else {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: self.basis.len(),
            });
        };
        let mut sc = StructureConstants::zero(field.clone(), names)?;
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.brackets {
            if !(1..=n).contains(&b.j) || !(1..=n).contains(&b.l) {
                return Err(invalid(format!("bracket index ({}, {}) outside 1..={n}", b.j, b.l)));
            }
            if !seen.insert((b.j, b.l)) {
                return Err(invalid(format!("bracket ({}, {}) listed twice", b.j, b.l)));
            }
            let coords = b
                .coords
                .iter()
                .map(|c| field.parse_scalar(&c.text()))
                .collect::<Result<Vec<_>>>()?;
            sc.set_product(b.j - 1, b.l - 1, coords)?;
        }
        Ok(sc)
    }

    pub fn from_table<F: Field>(sc: &StructureConstants<F>) -> Self {
        let n = sc.dim();
        let f = sc.field();
        let mut brackets = Vec::new();
        for j in 0..n {
            for l in 0..n {
                let c = sc.product(j, l);
                if c.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                let coords = c.iter().map(|x| ScalarLit::Text(f.format(x))).collect();
                brackets.push(BracketEntry {
                    j: j + 1,
                    l: l + 1,
                    coords,
                });
            }
        }
        TableFile {
            field: f.descriptor(),
            dim: n,
            basis: sc.basis_names().to_vec(),
            brackets,
        }
    }
}

/// A table over whichever field its file declares.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyStructureConstants {
    Rational(StructureConstants<Rationals>),
    Prime(StructureConstants<PrimeField>),
    Padic(StructureConstants<PadicField>),
}

/// Dimensions of the standard subspaces plus the Lie check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSummary {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    pub lie: LieReport,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub derivations_dim: usize,
    pub table: String,
}

fn summarize<F: Field>(sc: &StructureConstants<F>) -> AlgebraSummary {
    AlgebraSummary {
        field: sc.field().descriptor(),
        dim: sc.dim(),
        basis: sc.basis_names().to_vec(),
        lie: verify_lie(sc),
        center_dim: center_basis(sc).dim(),
        derived_dim: derived_ideal_basis(sc).dim(),
        derivations_dim: derivation_basis(sc).len(),
        table: sc.to_string(),
    }
}

impl AnyStructureConstants {
    pub fn from_file(file: &TableFile) -> Result<Self> {
        file.field.validate()?;
        Ok(match file.field {
            FieldDescriptor::Rationals => Self::Rational(file.build(Rationals)?),
            FieldDescriptor::Prime { p } => Self::Prime(file.build(PrimeField::new(p)?)?),
            FieldDescriptor::Padic { p, precision } => Self::Padic(file.build(PadicField::new(p, precision)?)?),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&TableFile::from_json(text)?)
    }

    pub fn to_file(&self) -> TableFile {
        match self {
            Self::Rational(sc) => TableFile::from_table(sc),
            Self::Prime(sc) => TableFile::from_table(sc),
            Self::Padic(sc) => TableFile::from_table(sc),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Rational(sc) => sc.dim(),
            Self::Prime(sc) => sc.dim(),
            Self::Padic(sc) => sc.dim(),
        }
    }

    pub fn verify_lie(&self) -> LieReport {
        match self {
            Self::Rational(sc) => verify_lie(sc),
            Self::Prime(sc) => verify_lie(sc),
            Self::Padic(sc) => verify_lie(sc),
        }
    }

    pub fn summary(&self) -> AlgebraSummary {
        match self {
            Self::Rational(sc) => summarize(sc),
            Self::Prime(sc) => summarize(sc),
            Self::Padic(sc) => summarize(sc),
        }
    }

    /// Reduce a rational table into `F_p`, or re-embed it into `Q_p`.
    pub fn change_field(&self, target: FieldDescriptor) -> Result<Self> {
        let Self::Rational(sc) = self else {
            if self.to_file().field == target {
                return Ok(self.clone());
            }
            return Err(AlgebraError::Unsupported(
                "only rational tables can change field".into(),
            ));
        };
        target.validate()?;
        Ok(match target {
            FieldDescriptor::Rationals => self.clone(),
            FieldDescriptor::Prime { p } => {
                let fp = PrimeField::new(p)?;
                Self::Prime(sc.map_field(fp, |q| fp.reduce_rational(q))?)
            }
            FieldDescriptor::Padic { p, precision } => {
                let qp = PadicField::new(p, precision)?;
                Self::Padic(sc.map_field(qp, |q| Ok(qp.element(q)))?)
            }
        })
    }
}
