//! Exact computer-algebra kernel: scalar domains, Lie algebras presented by
//! structure constants, polynomial and power-series rings, matrices over
//! arbitrary rings, polynomial vector fields, exponentials over three kinds of
//! coefficient domain, and exact ultrametric norms.

pub mod algebra;
pub mod error;
pub mod exp;
pub mod linalg;
pub mod matrix;
pub mod norms;
pub mod parse;
pub mod poly;
pub mod random;
pub mod ring;
pub mod scalars;
pub mod suites;
pub mod vfields;

pub use error::{AlgebraError, Result};
pub use ring::{Integers, Rationals, Ring, StarRing};
