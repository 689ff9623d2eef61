use crate::error::{AlgebraError, Result};

/// Largest accepted prime (exclusive).
pub const PRIME_LIMIT: u64 = 1 << 31;

/// Deterministic trial-division primality test, adequate below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<u64> {
    if p < PRIME_LIMIT && is_prime(p) {
        Ok(p)
    } else {
        Err(AlgebraError::NotPrime(p))
    }
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}
