//! Seeded generators for test data. Every trial draws from its own ChaCha8
//! stream, so results do not depend on scheduling.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exp::ComplexMatrix;
use crate::matrix::Matrix;
use crate::poly::{MultiIndex, Polynomial};
use crate::ring::{Rationals, Ring};
use crate::scalars::{PadicField, PadicScaled, Quaternion};
use crate::vfields::VectorFieldPoly;

/// Generator for trial `stream` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `a/b` with `|a| ≤ num_bound`, `1 ≤ b ≤ den_bound`.
pub fn rational<R: Rng>(rng: &mut R, num_bound: i64, den_bound: i64) -> BigRational {
    let a = rng.gen_range(-num_bound..=num_bound);
    let b = rng.gen_range(1..=den_bound);
    BigRational::new(a.into(), b.into())
}

pub fn rational_vec<R: Rng>(rng: &mut R, n: usize, num_bound: i64, den_bound: i64) -> Vec<BigRational> {
    (0..n).map(|_| rational(rng, num_bound, den_bound)).collect()
}

pub fn rational_matrix<R: Rng>(rng: &mut R, n: usize, num_bound: i64, den_bound: i64) -> Matrix<Rationals> {
    Matrix::from_fn(Rationals, n, |_, _| rational(rng, num_bound, den_bound))
}

pub fn quaternion<R: Rng>(rng: &mut R, num_bound: i64, den_bound: i64) -> Quaternion {
    Quaternion::new(
        rational(rng, num_bound, den_bound),
        rational(rng, num_bound, den_bound),
        rational(rng, num_bound, den_bound),
        rational(rng, num_bound, den_bound),
    )
}

/// Sparse polynomial with up to `max_terms` terms of degree at most `max_degree`.
pub fn polynomial<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32, max_terms: usize) -> Polynomial<Rationals> {
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<(MultiIndex, BigRational)> = (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            let mut e = vec![0u32; nvars];
            for _ in 0..degree {
                if nvars > 0 {
                    e[rng.gen_range(0..nvars)] += 1;
                }
            }
            (MultiIndex::new(e), rational(rng, 9, 4))
        })
        .collect();
    Polynomial::from_terms(Rationals, nvars, terms).expect("indices have length nvars")
}

pub fn vector_field<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> VectorFieldPoly<Rationals> {
    let comps = (0..nvars)
        .map(|_| polynomial(rng, nvars, max_degree, max_terms))
        .collect();
    VectorFieldPoly::new(comps).expect("components share nvars")
}

/// Nonzero p-adic number `p^v · u` with `min_val ≤ v ≤ max_val` and a random
/// unit mantissa.
pub fn padic<R: Rng>(rng: &mut R, field: &PadicField, min_val: i64, max_val: i64) -> PadicScaled {
    let p = field.prime();
    let modulus = BigInt::from(p).pow(field.precision());
    loop {
        let u: u64 = rng.gen();
        let unit = BigInt::from(u) % &modulus;
        if (&unit % p) != BigInt::from(0) {
            let v = rng.gen_range(min_val..=max_val);
            return PadicScaled::from_parts(p, field.precision(), v, unit).expect("mantissa is a unit");
        }
    }
}

/// Like [`padic`] but zero with probability `1/4`.
pub fn padic_or_zero<R: Rng>(rng: &mut R, field: &PadicField, min_val: i64, max_val: i64) -> PadicScaled {
    if rng.gen_range(0..4) == 0 {
        field.zero()
    } else {
        padic(rng, field, min_val, max_val)
    }
}

pub fn padic_matrix<R: Rng>(
    rng: &mut R,
    field: &PadicField,
    n: usize,
    min_val: i64,
    max_val: i64,
) -> Matrix<PadicField> {
    Matrix::from_fn(*field, n, |_, _| padic_or_zero(rng, field, min_val, max_val))
}

/// Uniform point of the closed unit disc.
pub fn unit_disc<R: Rng>(rng: &mut R) -> Complex64 {
    let r = rng.gen::<f64>().sqrt();
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

pub fn complex_matrix<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| unit_disc(rng))
}

/// Random matrix rescaled to operator norm `target` (or zero).
pub fn contraction<R: Rng>(rng: &mut R, n: usize, target: f64) -> ComplexMatrix {
    let m = complex_matrix(rng, n);
    let norm = m.opnorm();
    if norm == 0.0 {
        return m;
    }
    m.scale(Complex64::new(target / norm, 0.0))
}

/// Real vector with entries spread over several orders of magnitude.
pub fn real_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let mag = 10f64.powi(rng.gen_range(-3..=3));
            rng.gen_range(-1.0..1.0) * mag
        })
        .collect()
}

/// Random element of a ring built from small rationals.
pub fn ring_element<R: Rng, F: Ring>(rng: &mut R, field: &F) -> F::Elem {
    loop {
        if let Some(x) = field.from_rational(&rational(rng, 5, 3)) {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let (mut r1, mut r2) = (trial_rng(42, 3), trial_rng(42, 3));
        let a: Vec<u64> = (0..4).map(|_| r1.gen()).collect();
        let b: Vec<u64> = (0..4).map(|_| r2.gen()).collect();
        assert_eq!(a, b);
        let c: u64 = trial_rng(42, 4).gen();
        assert_ne!(a[0], c);
    }

    #[test]
    fn padic_draws_respect_valuation() {
        let f = PadicField::new(5, 6).unwrap();
        let mut rng = trial_rng(1, 0);
        for _ in 0..50 {
            let v = padic(&mut rng, &f, 1, 3).valuation().unwrap();
            assert!((1..=3).contains(&v));
        }
    }
}
