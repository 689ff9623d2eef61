//! Exact scalar domains: rationals, prime fields, Gaussian rationals,
//! quaternions and p-adic numbers, plus the exact norm values of Q_p.

pub mod complex;
pub mod field;
pub mod padic;
pub mod prime_field;
pub mod primes;
pub mod quaternion;
pub mod ultranorm;

pub use complex::{gaussian, gaussian_int, GaussianRational, GaussianRationals};
pub use field::{field_characteristic, FieldDescriptor};
pub use padic::{mod_inverse, padic_abs, padic_add, padic_inv, padic_mul, padic_of_rational, PadicField, PadicScaled};
pub use prime_field::{PrimeField, PrimeFieldElement};
pub use primes::{check_prime, is_prime, primes_up_to};
pub use quaternion::{quat_conj, quat_inv, quat_mul, quat_norm_sq, Quaternion, Quaternions};
pub use ultranorm::UltraNorm;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
