//! Polynomials and truncated formal power series in several commuting
//! indeterminates over a pluggable coefficient ring.

pub mod multi_index;
pub mod polynomial;
pub mod series;

pub use multi_index::MultiIndex;
pub use polynomial::{homogeneous_part, partial, poly_mul, PolyRing, Polynomial};
pub use series::{series_inverse, series_mul, series_star, PowerSeries, SeriesRing};
